#include "starpath/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace starpath {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Luby restart sequence (1, 1, 2, 1, 1, 2, 4, ...), 1-based.
std::uint64_t luby(std::uint64_t i) {
    for (;;) {
        std::uint64_t k = 1;
        while (((std::uint64_t{1} << k) - 1) < i) ++k;
        if (((std::uint64_t{1} << k) - 1) == i) return std::uint64_t{1} << (k - 1);
        i -= (std::uint64_t{1} << (k - 1)) - 1;
    }
}

constexpr std::uint64_t kRestartUnit = 200000;

// Lower-bound machinery. For queen strokes every stroke's coverage sits
// inside one maximal row/column/diagonal line, which gives two admissible
// bounds: a chained per-stroke supply bound over those lines, and a greedy
// set of uncovered stars no two of which share a line.
struct BoundContext {
    BoardSpec board;
    StrokePolicy policy = StrokePolicy::QueenOnly;
    CoverageMask full = 0;
    int lmax = 0;  // most core stars a single stroke can cover
    CoverageMask line_mask[64] = {};
    std::vector<CoverageMask> lines;
    CoverageMask through[64][4] = {};

    BoundContext(const BoardSpec& b, StrokePolicy p) : board(b), policy(p) {
        full = full_mask(board);
        lmax = board.n;
        if (policy == StrokePolicy::GeneralWithinMargin) return;
        const int n = board.n;
        const int cells = board.core_cells();
        const auto mask_line = [&](Point start, int df, int dr) {
            CoverageMask m = 0;
            for (Point p = start; board.on_core(p); p = Point{p.file + df, p.rank + dr})
                m |= CoverageMask{1} << bit_index(p, board);
            return m;
        };
        for (int r = 1; r <= n; ++r) lines.push_back(mask_line({1, r}, 1, 0));
        for (int f = 1; f <= n; ++f) lines.push_back(mask_line({f, 1}, 0, 1));
        for (int f = 1; f <= n; ++f) lines.push_back(mask_line({f, 1}, 1, 1));
        for (int r = 2; r <= n; ++r) lines.push_back(mask_line({1, r}, 1, 1));
        for (int f = 1; f <= n; ++f) lines.push_back(mask_line({f, 1}, -1, 1));
        for (int r = 2; r <= n; ++r) lines.push_back(mask_line({n, r}, -1, 1));
        for (int i = 0; i < cells; ++i) {
            const Point a = point_of_bit(i, board);
            for (const CoverageMask line : lines)
                if ((line >> i) & 1) line_mask[i] |= line;
            through[i][0] = mask_line({1, a.rank}, 1, 0);
            through[i][1] = mask_line({a.file, 1}, 0, 1);
            Point lo = a;
            while (board.on_core({lo.file - 1, lo.rank - 1})) lo = {lo.file - 1, lo.rank - 1};
            through[i][2] = mask_line(lo, 1, 1);
            lo = a;
            while (board.on_core({lo.file + 1, lo.rank - 1})) lo = {lo.file + 1, lo.rank - 1};
            through[i][3] = mask_line(lo, -1, 1);
        }
    }

    // Chained supply: the next stroke leaves the current point, later ones
    // leave points covered by then, so untouched lines lose one star of
    // yield (margin boards excepted: strokes may launch off-board).
    int chain_bound(Point current, CoverageMask covered) const {
        const CoverageMask unc = full & ~covered;
        const int u = std::popcount(unc);
        if (u == 0) return 0;
        if (lmax <= 1) return u;
        if (policy == StrokePolicy::GeneralWithinMargin) {
            const bool anchored = board.on_core(current) &&
                                  ((covered >> bit_index(current, board)) & 1) != 0;
            if (board.margin == 0)
                return anchored ? ceil_div(u, lmax - 1)
                                : 1 + ceil_div(std::max(0, u - lmax), lmax - 1);
            if (anchored) return 1 + ceil_div(std::max(0, u - (lmax - 1)), lmax);
            return ceil_div(u, lmax);
        }
        int later = 0;
        for (const CoverageMask line : lines) {
            int c = std::popcount(line & unc);
            if (c == 0) continue;
            if (board.margin == 0 && (line & covered) == 0) --c;
            later = std::max(later, c);
        }
        int first;
        if (board.on_core(current)) {
            const int idx = bit_index(current, board);
            first = 0;
            for (const CoverageMask line : through[idx])
                first = std::max(first, std::popcount(line & unc));
        } else {
            first = 0;
            for (const CoverageMask line : lines)
                first = std::max(first, std::popcount(line & unc));
        }
        if (u <= first) return 1;
        if (later == 0) return u + 1;  // unreachable supply, any big value works
        return 1 + ceil_div(u - first, later);
    }

    int independence_bound(CoverageMask covered) const {
        const CoverageMask uncovered = full & ~covered;
        if (policy == StrokePolicy::GeneralWithinMargin) return uncovered != 0 ? 1 : 0;
        int count = 0;
        CoverageMask blocked = 0;
        for (CoverageMask rest = uncovered; rest != 0; rest &= rest - 1) {
            const int b = std::countr_zero(rest);
            if ((blocked >> b) & 1) continue;
            ++count;
            blocked |= line_mask[b];
        }
        return count;
    }

    int bound(Point current, CoverageMask covered) const {
        return std::max(chain_bound(current, covered), independence_bound(covered));
    }
};

// Lockless fixed-capacity store, replace on collision. Each slot holds
// covered ^ data and data, so a probe reconstructs the stored mask exactly
// and a torn concurrent write almost surely fails the match; a wrong prune
// would need a 64-bit coincidence.
class TransTable {
  public:
    explicit TransTable(int bits)
        : mask_((std::size_t{1} << bits) - 1),
          words_(std::make_unique<std::atomic<std::uint64_t>[]>(2 * (mask_ + 1))) {
        clear();
    }

    void clear() {
        for (std::size_t i = 0; i < 2 * (mask_ + 1); ++i)
            words_[i].store(0, std::memory_order_relaxed);
    }

    // Entries are stored on entry, so a pass cut short by a restart quota
    // leaves half-explored states behind. Bumping the epoch salts the keys,
    // which retires every old entry without touching memory.
    void set_epoch(std::uint64_t salt) { salt_ = salt; }

    bool dominated(CoverageMask covered, int cur, int depth, int zerorun) const {
        const std::size_t s = 2 * slot(covered, cur);
        const std::uint64_t w0 = words_[s].load(std::memory_order_relaxed);
        const std::uint64_t w1 = words_[s + 1].load(std::memory_order_relaxed);
        if ((w1 >> 63) == 0 || (w0 ^ w1) != (covered ^ salt_)) return false;
        if (static_cast<int>(w1 & 0xFF) != cur) return false;
        const int stored_depth = static_cast<int>((w1 >> 8) & 0xFFFF);
        const int stored_zerorun = static_cast<int>((w1 >> 24) & 0x3);
        return stored_depth <= depth && stored_zerorun <= zerorun;
    }

    void store(CoverageMask covered, int cur, int depth, int zerorun) {
        const std::uint64_t w1 = (std::uint64_t{1} << 63) |
                                 (static_cast<std::uint64_t>(zerorun & 0x3) << 24) |
                                 (static_cast<std::uint64_t>(depth & 0xFFFF) << 8) |
                                 static_cast<std::uint64_t>(cur & 0xFF);
        const std::size_t s = 2 * slot(covered, cur);
        words_[s].store((covered ^ salt_) ^ w1, std::memory_order_relaxed);
        words_[s + 1].store(w1, std::memory_order_relaxed);
    }

  private:
    std::size_t slot(CoverageMask covered, int cur) const {
        return splitmix64(covered ^ salt_ ^ (0x9E3779B97F4A7C15ull * (cur + 1))) & mask_;
    }

    std::size_t mask_;
    std::uint64_t salt_ = 0;
    std::unique_ptr<std::atomic<std::uint64_t>[]> words_;
};

struct Candidate {
    const LineTable::Move* move = nullptr;
    CoverageMask add = 0;
    int newc = 0;
    int rank = 0;
    std::uint64_t tie = 0;
};

struct WorkerCtx {
    std::vector<Point> waypoints;
    std::vector<std::vector<Candidate>> bufs;
    std::uint64_t quota_nodes = 0;  // 0 = uncapped
    std::vector<Path> found;
    std::uint64_t count = 0;
};

class Engine {
  public:
    explicit Engine(const SearchConfig& config)
        : cfg_(config),
          board_(config.rules.board),
          table_(LineTable::build(board_, config.rules.policy)),
          bounds_(board_, config.rules.policy),
          full_(full_mask(board_)) {
        validate();
        if (cfg_.rules.required_end)
            req_end_idx_ = table_.lattice_index(*cfg_.rules.required_end);
        root_start_ = cfg_.rules.required_start;
        pass_end_idx_ = req_end_idx_;
        free_endpoints_ = !cfg_.rules.required_start && !cfg_.rules.required_end;
        expand_ = free_endpoints_ &&
                  (cfg_.mode == SearchMode::All || cfg_.mode == SearchMode::Count);
        use_tt_ = (cfg_.mode == SearchMode::First || cfg_.mode == SearchMode::Minimize) &&
                  cfg_.max_strokes <= 0xFFFF;
        if (use_tt_) tt_ = std::make_unique<TransTable>(board_.n <= 4 ? 15 : 21);
        restart_salt_ = cfg_.seed;
        if (cfg_.node_limit) deadline_nodes_ = *cfg_.node_limit;
        if (cfg_.time_limit_seconds)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(
                                               *cfg_.time_limit_seconds));
    }

    SearchResult run() {
        const auto t0 = Clock::now();
        SearchResult result;
        if (cfg_.mode == SearchMode::Minimize) {
            // A witness at k plus completed iterations below k pin the
            // minimum even if the budget runs dry inside iteration k.
            bool pinned = false;
            for (int k = 0; k <= cfg_.max_strokes && !pinned && !exhausted(); ++k) {
                k_ = k;
                stop_.store(false, std::memory_order_relaxed);
                if (tt_) tt_->clear();
                auto found = run_iteration();
                if (!found.empty()) {
                    result.best_k = k;
                    result.solutions = {std::move(found.front())};
                    pinned = true;
                }
            }
            result.status = pinned || !exhausted() ? SearchStatus::Complete
                                                   : SearchStatus::BudgetExhausted;
        } else if (cfg_.mode == SearchMode::First) {
            k_ = cfg_.max_strokes;
            // Restart portfolio: each pass re-breaks ordering ties under a
            // fresh salt and runs under a Luby-scheduled node quota, so the
            // search samples many greedy corridors instead of sinking the
            // whole budget into the first one. A pass that returns without
            // tripping its quota has exhausted the space, which keeps
            // First-mode "no solution" verdicts exact.
            // With both endpoints pinned the two search orientations explore
            // very different greedy landscapes, so alternate between them and
            // flip any witness found on a reversed pass back before recording.
            const bool can_flip = cfg_.rules.required_start &&
                                  cfg_.rules.required_end &&
                                  !(*cfg_.rules.required_start ==
                                    *cfg_.rules.required_end);
            std::vector<Path> found;
            for (std::uint64_t r = 0;; ++r) {
                restart_salt_ =
                    r == 0 ? cfg_.seed
                           : (splitmix64(cfg_.seed ^ (r * 0x9E3779B97F4A7C15ULL)) | 1);
                noise_amp_ = r == 0 ? 0 : 1 + static_cast<int>((r - 1) % 3);
                reversed_pass_ = can_flip && (r & 1) != 0;
                if (reversed_pass_) {
                    root_start_ = *cfg_.rules.required_end;
                    pass_end_idx_ = table_.lattice_index(*cfg_.rules.required_start);
                } else {
                    root_start_ = cfg_.rules.required_start;
                    pass_end_idx_ = req_end_idx_;
                }
                if (tt_) tt_->set_epoch(restart_salt_);
                stop_.store(false, std::memory_order_relaxed);
                quota_hit_.store(false, std::memory_order_relaxed);
                restart_quota_ = kRestartUnit * luby(r + 1);
                found = run_iteration();
                if (!found.empty() || exhausted() ||
                    !quota_hit_.load(std::memory_order_relaxed))
                    break;
            }
            restart_quota_ = 0;
            collect(result, std::move(found));
            result.status = exhausted() ? SearchStatus::BudgetExhausted
                                        : SearchStatus::Complete;
        } else {
            k_ = cfg_.max_strokes;
            auto found = run_iteration();
            collect(result, std::move(found));
            result.status = exhausted() ? SearchStatus::BudgetExhausted
                                        : SearchStatus::Complete;
        }
        result.solution_count = cfg_.mode == SearchMode::Count
                                    ? count_total_
                                    : result.solutions.size();
        result.nodes_expanded = nodes_.load(std::memory_order_relaxed);
        if (cfg_.on_solution && !streamed_)
            for (const Path& p : result.solutions) cfg_.on_solution(p);
        result.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - t0).count();
        return result;
    }

  private:
    void validate() const {
        if (board_.n < 1) throw std::invalid_argument("board side must be >= 1");
        if (board_.margin < 0) throw std::invalid_argument("margin must be >= 0");
        if (cfg_.max_strokes < 0) throw std::invalid_argument("max_strokes must be >= 0");
        if (cfg_.workers < 1) throw std::invalid_argument("workers must be >= 1");
        if (cfg_.rules.required_start && !board_.on_core(*cfg_.rules.required_start))
            throw std::invalid_argument("required start is not a core star");
        if (cfg_.rules.required_end && !board_.on_core(*cfg_.rules.required_end))
            throw std::invalid_argument("required end is not a core star");
        const bool exhaustive = cfg_.mode != SearchMode::First;
        if (exhaustive && !cfg_.progressive && board_.n > 4 && !cfg_.node_limit &&
            !cfg_.time_limit_seconds && !cfg_.override_guard)
            throw std::invalid_argument(
                "exhaustive search above n=4 needs progressive, a budget, or "
                "override_guard");
    }

    bool stop_requested() const { return stop_.load(std::memory_order_relaxed); }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

    // Returns true when the caller should unwind (budget hit or search over).
    bool charge_node() {
        const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (deadline_nodes_ && n > *deadline_nodes_) {
            exhausted_.store(true, std::memory_order_relaxed);
            stop_.store(true, std::memory_order_relaxed);
            return true;
        }
        if (deadline_ && (n & 0xFFF) == 0 && Clock::now() > *deadline_) {
            exhausted_.store(true, std::memory_order_relaxed);
            stop_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool record(WorkerCtx& ctx) {
        if (cfg_.mode == SearchMode::Count && !expand_) {
            ++ctx.count;
            return false;
        }
        Path path;
        path.waypoints = ctx.waypoints;
        if (reversed_pass_)
            std::reverse(path.waypoints.begin(), path.waypoints.end());
        check_sound(path);
        if (streamed_) cfg_.on_solution(path);
        ctx.found.push_back(std::move(path));
        if (cfg_.mode == SearchMode::First || cfg_.mode == SearchMode::Minimize) {
            stop_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void check_sound(const Path& path) const {
        if (!verify(path, cfg_.rules).valid)
            throw std::logic_error("solver emitted a path that fails verification");
    }

    void gather(WorkerCtx& ctx, int cur_idx, CoverageMask covered, int depth,
                int zerorun) const {
        auto& out = ctx.bufs[depth];
        out.clear();
        const bool last = depth + 1 == k_;
        if (last && cfg_.rules.required_stroke_count &&
            *cfg_.rules.required_stroke_count != k_)
            return;
        const CoverageMask missing = full_ & ~covered;
        for (const LineTable::Move& m : table_.moves_from_index(cur_idx)) {
            const CoverageMask add = m.covers & ~covered;
            const int newc = std::popcount(add);
            if (newc == 0) {
                if (cfg_.progressive || zerorun >= 2) continue;
            }
            if (last) {
                if ((missing & ~m.covers) != 0) continue;
                if (pass_end_idx_ >= 0 && m.to_index != pass_end_idx_) continue;
            }
            Candidate c;
            c.move = &m;
            c.add = add;
            c.newc = newc;
            c.rank = newc;
            if (cfg_.ordering == MoveOrdering::NewCoverageDesc) {
                c.tie = splitmix64(restart_salt_ ^
                                   (static_cast<std::uint64_t>(cur_idx) << 40) ^
                                   (static_cast<std::uint64_t>(m.to_index) << 16) ^
                                   static_cast<std::uint64_t>(depth));
                // Restart passes jitter the greedy key so successive passes
                // explore genuinely different corridors, not just tie swaps.
                // Only early strokes get jitter: good endgames are greedy,
                // while openings have to spend strokes on awkward stars.
                if (noise_amp_ > 0 && depth < 6)
                    c.rank += static_cast<int>(c.tie % (noise_amp_ + 1));
            }
            out.push_back(c);
        }
        if (cfg_.ordering == MoveOrdering::NewCoverageDesc) {
            // The first pass keeps the deterministic chain (length,
            // destination); restart passes re-break coverage ties by hash.
            const bool shuffled = restart_salt_ != 0;
            std::sort(out.begin(), out.end(),
                      [shuffled](const Candidate& a, const Candidate& b) {
                          if (a.rank != b.rank) return a.rank > b.rank;
                          if (shuffled && a.tie != b.tie) return a.tie < b.tie;
                          if (a.move->length2 != b.move->length2)
                              return a.move->length2 > b.move->length2;
                          if (a.tie != b.tie) return a.tie < b.tie;
                          return a.move->to_index < b.move->to_index;
                      });
        }
        // Lexicographic: the move table is already in destination order.
    }

    bool dfs(WorkerCtx& ctx, int cur_idx, CoverageMask covered, int depth, int zerorun) {
        if (stop_requested()) return true;
        if (charge_node()) return true;
        if (ctx.quota_nodes &&
            nodes_.load(std::memory_order_relaxed) > ctx.quota_nodes) {
            // Unwind this root task only; the work loop moves to the next.
            quota_hit_.store(true, std::memory_order_relaxed);
            return true;
        }
        if (covered == full_ && (pass_end_idx_ < 0 || cur_idx == pass_end_idx_) &&
            (!cfg_.rules.required_stroke_count ||
             *cfg_.rules.required_stroke_count == depth)) {
            if (record(ctx)) return true;
        }
        if (depth == k_) return false;
        if (cfg_.rules.required_stroke_count && depth >= *cfg_.rules.required_stroke_count)
            return false;
        if (depth + bounds_.bound(table_.lattice_point(cur_idx), covered) > k_)
            return false;
        if (use_tt_) {
            if (tt_->dominated(covered, cur_idx, depth, zerorun)) return false;
            tt_->store(covered, cur_idx, depth, zerorun);
        }
        gather(ctx, cur_idx, covered, depth, zerorun);
        // Candidate buffers are per depth, so recursion below never touches
        // this level's list.
        const auto& cands = ctx.bufs[depth];
        for (const Candidate& c : cands) {
            ctx.waypoints.push_back(c.move->to);
            const bool unwind = dfs(ctx, c.move->to_index, covered | c.add, depth + 1,
                                    c.newc != 0 ? 0 : zerorun + 1);
            ctx.waypoints.pop_back();
            if (unwind) return true;
        }
        return false;
    }

    std::vector<Point> start_points() const {
        if (root_start_) return {*root_start_};
        std::vector<Point> starts;
        const int lo = board_.lattice_lo();
        const int hi = board_.lattice_hi();
        for (int file = lo; file <= hi; ++file) {
            for (int rank = lo; rank <= hi; ++rank) {
                const Point p{file, rank};
                if (free_endpoints_ && orbit_rep(p) != p) continue;
                starts.push_back(p);
            }
        }
        return starts;
    }

    Point orbit_rep(Point p) const {
        Point best = p;
        for (int sym = 1; sym < kSymmetryCount; ++sym)
            best = std::min(best, transform_point(p, sym, board_));
        return best;
    }

    struct Task {
        Point start;
        CoverageMask covered = 0;
        Candidate cand;
    };

    // One depth-ceiling pass: handles the depth-0 roots inline, fans the
    // depth-1 alternatives out as tasks, and merges per-task finds in task
    // order so the result is independent of worker count.
    std::vector<Path> run_iteration() {
        streamed_ = cfg_.workers == 1 && !expand_ && cfg_.on_solution != nullptr &&
                    cfg_.mode != SearchMode::Count;
        WorkerCtx root_ctx;
        root_ctx.bufs.resize(k_ + 1);
        std::vector<Task> tasks;
        bool root_found = false;
        for (const Point start : start_points()) {
            if (charge_node() || stop_requested()) break;
            CoverageMask covered = 0;
            if (board_.on_core(start))
                covered |= CoverageMask{1} << bit_index(start, board_);
            const int start_idx = table_.lattice_index(start);
            root_ctx.waypoints = {start};
            if (covered == full_ && (pass_end_idx_ < 0 || start_idx == pass_end_idx_) &&
                (!cfg_.rules.required_stroke_count ||
                 *cfg_.rules.required_stroke_count == 0)) {
                if (record(root_ctx)) {
                    root_found = true;
                    break;
                }
            }
            if (k_ == 0) continue;
            if (bounds_.bound(start, covered) > k_) continue;
            gather(root_ctx, start_idx, covered, 0, 0);
            for (const Candidate& c : root_ctx.bufs[0])
                tasks.push_back(Task{start, covered, c});
        }
        count_total_ += root_ctx.count;
        std::vector<std::vector<Path>> task_found(tasks.size());
        std::vector<std::uint64_t> task_count(tasks.size(), 0);
        if (!root_found && !tasks.empty() && !stop_requested()) {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mu;
            const std::uint64_t mini_quota =
                restart_quota_ == 0
                    ? 0
                    : std::max<std::uint64_t>(2000, restart_quota_ / tasks.size());
            auto work = [&]() {
                WorkerCtx ctx;
                ctx.bufs.resize(k_ + 1);
                try {
                    for (;;) {
                        if (stop_requested()) break;
                        const std::size_t i =
                            next.fetch_add(1, std::memory_order_relaxed);
                        if (i >= tasks.size()) break;
                        const Task& t = tasks[i];
                        ctx.found.clear();
                        ctx.count = 0;
                        if (mini_quota)
                            ctx.quota_nodes =
                                nodes_.load(std::memory_order_relaxed) + mini_quota;
                        ctx.waypoints = {t.start, t.cand.move->to};
                        dfs(ctx, t.cand.move->to_index, t.covered | t.cand.add, 1,
                            t.cand.newc != 0 ? 0 : 1);
                        task_found[i] = std::move(ctx.found);
                        task_count[i] = ctx.count;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    stop_.store(true, std::memory_order_relaxed);
                }
            };
            if (cfg_.workers == 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                const std::size_t n_threads = std::min<std::size_t>(
                    static_cast<std::size_t>(cfg_.workers), tasks.size());
                pool.reserve(n_threads);
                for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(work);
                for (auto& th : pool) th.join();
            }
            if (failure) std::rethrow_exception(failure);
        }
        std::vector<Path> all_found = std::move(root_ctx.found);
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            count_total_ += task_count[i];
            for (Path& p : task_found[i]) all_found.push_back(std::move(p));
        }
        return all_found;
    }

    void collect(SearchResult& result, std::vector<Path> found) {
        if (cfg_.mode == SearchMode::First) {
            if (!found.empty()) result.solutions = {std::move(found.front())};
            return;
        }
        if (!expand_) {
            if (cfg_.mode == SearchMode::All) result.solutions = std::move(found);
            return;
        }
        // Free-endpoint searches ran from one start per symmetry orbit;
        // applying all board symmetries restores the exact raw set.
        std::set<std::string> seen;
        for (const Path& p : found) {
            for (int sym = 0; sym < kSymmetryCount; ++sym) {
                Path q = transform_path(p, sym, board_);
                if (!seen.insert(format_path(q, board_)).second) continue;
                check_sound(q);
                if (cfg_.mode == SearchMode::All) result.solutions.push_back(std::move(q));
            }
        }
        if (cfg_.mode == SearchMode::Count) count_total_ = seen.size();
    }

    SearchConfig cfg_;
    BoardSpec board_;
    LineTable table_;
    BoundContext bounds_;
    CoverageMask full_ = 0;
    int req_end_idx_ = -1;
    int pass_end_idx_ = -1;
    std::optional<Point> root_start_;
    bool reversed_pass_ = false;
    bool free_endpoints_ = false;
    bool expand_ = false;
    bool use_tt_ = false;
    bool streamed_ = false;
    int k_ = 0;
    std::unique_ptr<TransTable> tt_;
    std::uint64_t restart_salt_ = 0;
    int noise_amp_ = 0;
    std::uint64_t restart_quota_ = 0;
    std::optional<std::uint64_t> deadline_nodes_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> exhausted_{false};
    std::atomic<bool> quota_hit_{false};
    std::uint64_t count_total_ = 0;
};

}  // namespace

int lower_bound(const SearchState& state, const BoardSpec& board, StrokePolicy policy) {
    const BoundContext ctx(board, policy);
    return ctx.bound(state.current, state.covered);
}

SearchResult solve(const SearchConfig& config) { return Engine(config).run(); }

std::pair<int, Path> min_strokes(const SearchConfig& config) {
    SearchConfig c = config;
    c.mode = SearchMode::Minimize;
    SearchResult result = solve(c);
    if (result.status == SearchStatus::BudgetExhausted)
        throw std::runtime_error("budget exhausted before a minimum was established");
    if (!result.best_k)
        throw std::runtime_error("no covering path within the stroke ceiling");
    return {*result.best_k, result.solutions.front()};
}

}  // namespace starpath
