#include "starpath/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace starpath {

namespace {

struct OracleRun {
    const SearchConfig& cfg;
    const BoardSpec& board;
    std::vector<Point> lattice;
    std::vector<int> hits;  // per core star, how many strokes touch it
    int covered = 0;
    int total = 0;
    std::vector<Point> waypoints;
    std::vector<Path> found;
    std::uint64_t nodes = 0;

    explicit OracleRun(const SearchConfig& c) : cfg(c), board(c.rules.board) {
        for (int file = board.lattice_lo(); file <= board.lattice_hi(); ++file)
            for (int rank = board.lattice_lo(); rank <= board.lattice_hi(); ++rank)
                lattice.push_back(Point{file, rank});
        std::sort(lattice.begin(), lattice.end());
        hits.assign(static_cast<std::size_t>(board.core_cells()), 0);
        total = board.core_cells();
    }

    int star_index(Point p) const { return (p.rank - 1) * board.n + (p.file - 1); }

    int apply(const Stroke& s) {
        int gained = 0;
        for (const Point p : cells_on_stroke(s, board))
            if (++hits[star_index(p)] == 1) ++gained;
        covered += gained;
        return gained;
    }

    void undo(const Stroke& s) {
        for (const Point p : cells_on_stroke(s, board))
            if (--hits[star_index(p)] == 0) --covered;
    }

    bool stroke_ok(Point from, Point to) const {
        if (cfg.rules.policy == StrokePolicy::GeneralWithinMargin) return true;
        return stroke_class(Stroke{from, to}) == StrokeClass::QueenLine;
    }

    void dfs(Point current, int depth) {
        ++nodes;
        if (covered == total &&
            (!cfg.rules.required_end || current == *cfg.rules.required_end) &&
            (!cfg.rules.required_stroke_count ||
             *cfg.rules.required_stroke_count == depth)) {
            Path p;
            p.waypoints = waypoints;
            found.push_back(std::move(p));
        }
        if (depth == cfg.max_strokes) return;
        for (const Point to : lattice) {
            if (to == current || !stroke_ok(current, to)) continue;
            const Stroke s{current, to};
            const int gained = apply(s);
            if (!(cfg.progressive && gained == 0)) {
                waypoints.push_back(to);
                dfs(to, depth + 1);
                waypoints.pop_back();
            }
            undo(s);
        }
    }

    void run() {
        std::vector<Point> starts;
        if (cfg.rules.required_start)
            starts.push_back(*cfg.rules.required_start);
        else
            starts = lattice;
        for (const Point start : starts) {
            if (board.on_core(start)) {
                covered = 1;
                hits[star_index(start)] = 1;
            }
            waypoints.assign(1, start);
            dfs(start, 0);
            if (board.on_core(start)) {
                covered = 0;
                hits[star_index(start)] = 0;
            }
        }
    }
};

}  // namespace

SearchResult oracle_solve(const SearchConfig& config) {
    const BoardSpec& board = config.rules.board;
    if (board.n > 4 || board.margin > 1 || config.max_strokes > 6)
        throw std::invalid_argument(
            "oracle caps exceeded (needs n <= 4, margin <= 1, max_strokes <= 6)");
    if (config.max_strokes < 0) throw std::invalid_argument("max_strokes must be >= 0");
    if (config.rules.required_start && !board.on_core(*config.rules.required_start))
        throw std::invalid_argument("required start is not a core star");
    if (config.rules.required_end && !board.on_core(*config.rules.required_end))
        throw std::invalid_argument("required end is not a core star");

    const auto t0 = std::chrono::steady_clock::now();
    OracleRun run(config);
    run.run();
    SearchResult result;
    result.status = SearchStatus::Complete;
    result.solutions = std::move(run.found);
    result.solution_count = result.solutions.size();
    result.nodes_expanded = run.nodes;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

CanonicalPath canonicalize(const Path& path, bool free_endpoints, const BoardSpec& board) {
    Path best = path;
    const auto consider = [&best](Path cand) {
        if (cand.waypoints < best.waypoints) best = std::move(cand);
    };
    const int syms = free_endpoints ? kSymmetryCount : 1;
    for (int sym = 0; sym < syms; ++sym) {
        Path t = transform_path(path, sym, board);
        consider(reverse_path(t));
        consider(std::move(t));
    }
    return best;
}

std::vector<std::string> canonical_set(const std::vector<Path>& paths,
                                       bool free_endpoints, const BoardSpec& board) {
    std::vector<std::string> keys;
    keys.reserve(paths.size());
    for (const Path& p : paths)
        keys.push_back(format_path(canonicalize(p, free_endpoints, board), board));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace starpath
