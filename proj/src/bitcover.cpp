#include "starpath/bitcover.hpp"

#include <stdexcept>

namespace starpath {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

void require_mask_capacity(const BoardSpec& board) {
    if (board.n > kMaxCoreSide)
        fail("core mask capped at n <= " + std::to_string(kMaxCoreSide));
}

}  // namespace

int bit_index(Point p, const BoardSpec& board) {
    require_mask_capacity(board);
    if (!board.on_core(p)) fail("bit index of a non-core point");
    return (p.rank - 1) * board.n + (p.file - 1);
}

Point point_of_bit(int index, const BoardSpec& board) {
    return Point{index % board.n + 1, index / board.n + 1};
}

CoverageMask full_mask(const BoardSpec& board) {
    require_mask_capacity(board);
    int cells = board.core_cells();
    return cells == 64 ? ~CoverageMask{0} : (CoverageMask{1} << cells) - 1;
}

CoverageMask mask_of(std::span<const Point> cells, const BoardSpec& board) {
    CoverageMask m = 0;
    for (Point p : cells) m |= CoverageMask{1} << bit_index(p, board);
    return m;
}

LineTable LineTable::build(const BoardSpec& board, StrokePolicy policy) {
    require_mask_capacity(board);
    LineTable t;
    t.board_ = board;
    t.policy_ = policy;
    t.span_ = board.span();
    t.lo_ = board.lattice_lo();

    const int total = t.lattice_size();
    t.moves_.resize(total);
    t.pair_mask_.assign(static_cast<std::size_t>(total) * total, 0);
    t.pair_legal_.assign(static_cast<std::size_t>(total) * total, 0);

    for (int fi = 0; fi < total; ++fi) {
        Point from = t.lattice_point(fi);
        for (int ti = 0; ti < total; ++ti) {
            if (ti == fi) continue;
            Point to = t.lattice_point(ti);
            Stroke s(from, to);
            if (policy == StrokePolicy::QueenOnly &&
                stroke_class(s) != StrokeClass::QueenLine)
                continue;
            auto cells = cells_on_stroke(s, board);
            CoverageMask covers = mask_of(cells, board);
            int df = to.file - from.file, dr = to.rank - from.rank;
            t.moves_[fi].push_back(Move{to, ti, covers, df * df + dr * dr});
            t.pair_mask_[static_cast<std::size_t>(fi) * total + ti] = covers;
            t.pair_legal_[static_cast<std::size_t>(fi) * total + ti] = 1;
        }
    }
    return t;
}

CoverageMask LineTable::stroke_mask(Point from, Point to) const {
    std::size_t idx =
        static_cast<std::size_t>(lattice_index(from)) * lattice_size() +
        lattice_index(to);
    if (!pair_legal_[idx])
        fail("stroke " + format_square(from, board_) + "-" +
             format_square(to, board_) + " illegal under policy");
    return pair_mask_[idx];
}

CoverageMask coverage_of_path(const Path& path, const BoardSpec& board,
                              const LineTable& table) {
    if (path.waypoints.size() == 1) {
        Point p = path.waypoints.front();
        return board.on_core(p) ? CoverageMask{1} << bit_index(p, board)
                                : CoverageMask{0};
    }
    CoverageMask covered = 0;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        covered |= table.stroke_mask(path.waypoints[i], path.waypoints[i + 1]);
    return covered;
}

}  // namespace starpath
