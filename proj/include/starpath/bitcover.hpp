#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starpath/geometry.hpp"

namespace starpath {

// One bit per core star, rank-major from a1 = bit 0. A single 64-bit word
// caps the core at n <= 8; larger cores are rejected.
using CoverageMask = std::uint64_t;

inline constexpr int kMaxCoreSide = 8;

int bit_index(Point p, const BoardSpec& board);
Point point_of_bit(int index, const BoardSpec& board);
CoverageMask full_mask(const BoardSpec& board);

// Mask with exactly the given cells set; every cell must be a core star.
CoverageMask mask_of(std::span<const Point> cells, const BoardSpec& board);

// Precomputed legal destinations and per-stroke coverage masks for every
// point of the extended lattice. Built once, then read-only.
class LineTable {
public:
    struct Move {
        Point to;
        int to_index;          // lattice index of `to`
        CoverageMask covers;   // stars on the closed segment
        int length2;           // squared euclidean stroke length
    };

    static LineTable build(const BoardSpec& board, StrokePolicy policy);

    const BoardSpec& board() const { return board_; }
    StrokePolicy policy() const { return policy_; }

    int lattice_size() const { return span_ * span_; }
    int lattice_index(Point p) const {
        return (p.rank - lo_) * span_ + (p.file - lo_);
    }
    Point lattice_point(int index) const {
        return Point{index % span_ + lo_, index / span_ + lo_};
    }

    std::span<const Move> moves_from(Point p) const {
        return moves_[lattice_index(p)];
    }
    std::span<const Move> moves_from_index(int index) const {
        return moves_[index];
    }

    bool stroke_legal(Point from, Point to) const {
        return pair_legal_[lattice_index(from) * lattice_size() + lattice_index(to)] != 0;
    }
    CoverageMask stroke_mask(Point from, Point to) const;

private:
    BoardSpec board_;
    StrokePolicy policy_ = StrokePolicy::QueenOnly;
    int span_ = 0;
    int lo_ = 0;
    std::vector<std::vector<Move>> moves_;
    std::vector<CoverageMask> pair_mask_;
    std::vector<std::uint8_t> pair_legal_;
};

// Union of the path's stroke masks; a one-waypoint path covers exactly its
// own star (or nothing from the margin). Throws if a stroke is illegal
// under the table's policy.
CoverageMask coverage_of_path(const Path& path, const BoardSpec& board,
                              const LineTable& table);

}  // namespace starpath
