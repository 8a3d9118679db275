#include "starpath/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace starpath {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

// Parses a full decimal integer out of [first, last); the whole range must
// be consumed.
bool parse_int(const char* first, const char* last, int& out) {
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

BoardSpec make_board(int n, int margin) {
    if (n < 1) fail("board side must be >= 1");
    if (margin < 0) fail("margin must be >= 0");
    if (n + 2 * margin > kMaxLatticeSpan)
        fail("extended lattice wider than " + std::to_string(kMaxLatticeSpan));
    return BoardSpec{n, margin};
}

Stroke::Stroke(Point f, Point t) : from(f), to(t) {
    if (f == t) fail("degenerate stroke");
}

Path make_path(std::vector<Point> waypoints, const BoardSpec& board) {
    if (waypoints.empty()) fail("path needs at least one waypoint");
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        if (!board.on_lattice(waypoints[i]))
            fail("waypoint " + std::to_string(i) + " off the lattice");
        if (i > 0 && waypoints[i] == waypoints[i - 1])
            fail("degenerate stroke at waypoint " + std::to_string(i));
    }
    return Path{std::move(waypoints)};
}

Point parse_square(std::string_view text, const BoardSpec& board) {
    if (text.empty()) fail("empty square");
    if (text.front() == '(') {
        if (text.back() != ')') fail("malformed pair square: " + std::string(text));
        std::string_view inner = text.substr(1, text.size() - 2);
        std::size_t comma = inner.find(',');
        if (comma == std::string_view::npos)
            fail("malformed pair square: " + std::string(text));
        int f = 0, r = 0;
        if (!parse_int(inner.data(), inner.data() + comma, f) ||
            !parse_int(inner.data() + comma + 1, inner.data() + inner.size(), r))
            fail("malformed pair square: " + std::string(text));
        Point p{f, r};
        if (!board.on_lattice(p))
            fail("square out of lattice: " + std::string(text));
        return p;
    }
    char c = text.front();
    if (c < 'a' || c > 'p') fail("malformed square: " + std::string(text));
    int rank = 0;
    if (!parse_int(text.data() + 1, text.data() + text.size(), rank))
        fail("malformed square: " + std::string(text));
    Point p{c - 'a' + 1, rank};
    // Algebraic names denote core stars only; margin points need pair form.
    if (!board.on_core(p)) fail("square out of lattice: " + std::string(text));
    return p;
}

std::string format_square(Point p, const BoardSpec& board) {
    if (board.on_core(p) && board.n <= kMaxLatticeSpan) {
        std::string s;
        s += static_cast<char>('a' + p.file - 1);
        s += std::to_string(p.rank);
        return s;
    }
    return "(" + std::to_string(p.file) + "," + std::to_string(p.rank) + ")";
}

std::string format_path(const Path& path, const BoardSpec& board) {
    std::string out;
    for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
        if (i) out += '-';
        out += format_square(path.waypoints[i], board);
    }
    return out;
}

StrokeClass stroke_class(const Stroke& s) {
    int df = std::abs(s.to.file - s.from.file);
    int dr = std::abs(s.to.rank - s.from.rank);
    return (df == 0 || dr == 0 || df == dr) ? StrokeClass::QueenLine
                                            : StrokeClass::GeneralLine;
}

std::vector<Point> cells_on_stroke(const Stroke& s, const BoardSpec& board) {
    if (!board.on_lattice(s.from) || !board.on_lattice(s.to))
        fail("stroke endpoint off the lattice");
    int df = s.to.file - s.from.file;
    int dr = s.to.rank - s.from.rank;
    int g = std::gcd(std::abs(df), std::abs(dr));
    int sf = df / g, sr = dr / g;
    std::vector<Point> cells;
    cells.reserve(g + 1);
    for (int k = 0; k <= g; ++k) {
        Point p{s.from.file + k * sf, s.from.rank + k * sr};
        if (board.on_core(p)) cells.push_back(p);
    }
    return cells;
}

std::vector<Stroke> strokes_of(const Path& path) {
    std::vector<Stroke> out;
    out.reserve(path.waypoints.size() > 0 ? path.waypoints.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        out.emplace_back(path.waypoints[i], path.waypoints[i + 1]);
    return out;
}

Point transform_point(Point p, int sym, const BoardSpec& board) {
    // Reflections use file+rank sums against lo+hi = n+1, which holds for
    // the margin band as well as the core.
    const int s = board.n + 1;
    int f = p.file, r = p.rank;
    if (sym & 4) std::swap(f, r);
    if (sym & 1) f = s - f;
    if (sym & 2) r = s - r;
    return Point{f, r};
}

Path transform_path(const Path& path, int sym, const BoardSpec& board) {
    Path out;
    out.waypoints.reserve(path.waypoints.size());
    for (Point p : path.waypoints)
        out.waypoints.push_back(transform_point(p, sym, board));
    return out;
}

Path reverse_path(const Path& path) {
    Path out = path;
    std::reverse(out.waypoints.begin(), out.waypoints.end());
    return out;
}

}  // namespace starpath
