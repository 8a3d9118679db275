#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace starpath {

// Widest extended lattice we support (core plus both margin bands).
inline constexpr int kMaxLatticeSpan = 16;

// A lattice coordinate. Files and ranks are 1-based on the core; margin
// points use values outside [1, n].
struct Point {
    int file = 0;
    int rank = 0;
    auto operator<=>(const Point&) const = default;
};

// An n-by-n field of stars plus an optional star-free margin band where
// turning points may lie.
struct BoardSpec {
    int n = 8;
    int margin = 0;

    int lattice_lo() const { return 1 - margin; }
    int lattice_hi() const { return n + margin; }
    int span() const { return n + 2 * margin; }
    int core_cells() const { return n * n; }

    bool on_core(Point p) const {
        return p.file >= 1 && p.file <= n && p.rank >= 1 && p.rank <= n;
    }
    bool on_lattice(Point p) const {
        return p.file >= lattice_lo() && p.file <= lattice_hi() &&
               p.rank >= lattice_lo() && p.rank <= lattice_hi();
    }
};

// Validates the BoardSpec invariants (n >= 1, margin >= 0, span <= 16).
BoardSpec make_board(int n, int margin = 0);

// A directed straight segment between two distinct lattice points.
struct Stroke {
    Point from;
    Point to;
    Stroke(Point f, Point t);
};

enum class StrokeClass { QueenLine, GeneralLine };

// Which strokes a rule set admits.
enum class StrokePolicy { QueenOnly, GeneralWithinMargin };

// A chained sequence of strokes; waypoint i and i+1 bound stroke i+1.
struct Path {
    std::vector<Point> waypoints;

    int stroke_count() const { return static_cast<int>(waypoints.size()) - 1; }
    bool operator==(const Path&) const = default;
};

// Validates waypoints: at least one, all on the lattice, no consecutive
// duplicates.
Path make_path(std::vector<Point> waypoints, const BoardSpec& board);

// Square notation: "c5" (algebraic, core squares only) or "(f,r)" (any
// lattice point, required for the margin band).
Point parse_square(std::string_view text, const BoardSpec& board);
std::string format_square(Point p, const BoardSpec& board);

// Dash-joined squares, e.g. "c5-f8-c8". parse_path lives in verifier.hpp;
// formatting is shared.
std::string format_path(const Path& path, const BoardSpec& board);

StrokeClass stroke_class(const Stroke& s);

// All core stars on the closed segment [from, to]. With g = gcd(|df|,|dr|)
// the segment holds g+1 lattice points; margin points are dropped.
std::vector<Point> cells_on_stroke(const Stroke& s, const BoardSpec& board);

std::vector<Stroke> strokes_of(const Path& path);

// The 8 symmetries of the square lattice, indexed 0..7. Index 0 is the
// identity. They map the extended lattice onto itself.
inline constexpr int kSymmetryCount = 8;
Point transform_point(Point p, int sym, const BoardSpec& board);
Path transform_path(const Path& path, int sym, const BoardSpec& board);
Path reverse_path(const Path& path);

}  // namespace starpath
