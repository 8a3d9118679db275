#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "starpath/oracle.hpp"

using namespace starpath;

namespace {

SearchConfig instance(const BoardSpec& board, int max_strokes) {
    SearchConfig cfg;
    cfg.rules.board = board;
    cfg.max_strokes = max_strokes;
    cfg.mode = SearchMode::All;
    return cfg;
}

Path random_walk(const BoardSpec& board, StrokePolicy policy, int strokes,
                 std::mt19937_64& rng) {
    const LineTable table = LineTable::build(board, policy);
    std::uniform_int_distribution<int> coord(1, board.n);
    Path p;
    p.waypoints.push_back({coord(rng), coord(rng)});
    for (int i = 0; i < strokes; ++i) {
        const auto moves = table.moves_from(p.waypoints.back());
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p.waypoints.push_back(moves[pick(rng)].to);
    }
    return p;
}

}  // namespace

TEST_CASE("oracle pins the 2x2 ground truth") {
    CHECK(oracle_solve(instance(make_board(2), 2)).solutions.empty());

    const SearchResult three = oracle_solve(instance(make_board(2), 3));
    CHECK(three.status == SearchStatus::Complete);
    CHECK_FALSE(three.solutions.empty());
    for (const Path& p : three.solutions) {
        CHECK(p.stroke_count() == 3);
        RuleSet rules;
        rules.board = make_board(2);
        CHECK(verify(p, rules).valid);
    }
}

TEST_CASE("the 1x1 board admits exactly the degenerate path") {
    const SearchResult result = oracle_solve(instance(make_board(1), 0));
    REQUIRE(result.solutions.size() == 1);
    CHECK(result.solutions.front().waypoints.size() == 1);
}

TEST_CASE("oracle caps are hard errors") {
    CHECK_THROWS_AS(oracle_solve(instance(make_board(5), 3)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_solve(instance(make_board(2, 2), 3)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_solve(instance(make_board(2), 7)), std::invalid_argument);
}

TEST_CASE("every oracle solution verifies under its own rules") {
    SearchConfig cfg = instance(make_board(3, 1), 4);
    cfg.rules.policy = StrokePolicy::GeneralWithinMargin;
    const SearchResult result = oracle_solve(cfg);
    CHECK_FALSE(result.solutions.empty());
    for (const Path& p : result.solutions) CHECK(verify(p, cfg.rules).valid);
}

TEST_CASE("canonicalize properties") {
    const BoardSpec board = make_board(3);
    std::mt19937_64 rng(41);

    for (int trial = 0; trial < 200; ++trial) {
        const Path p = random_walk(board, StrokePolicy::QueenOnly, 4, rng);
        for (bool free_endpoints : {false, true}) {
            const Path canon = canonicalize(p, free_endpoints, board);

            // Idempotent and no larger than its input.
            CHECK(canonicalize(canon, free_endpoints, board) == canon);
            CHECK(canon.waypoints <= p.waypoints);

            // Class-invariant: the reverse maps to the same form, and under
            // free endpoints so does every symmetry image.
            CHECK(canonicalize(reverse_path(p), free_endpoints, board) == canon);
            if (free_endpoints) {
                for (int sym = 0; sym < kSymmetryCount; ++sym)
                    CHECK(canonicalize(transform_path(p, sym, board), true, board) ==
                          canon);
            }
        }
    }
}

TEST_CASE("fixed-endpoint classes ignore board symmetries") {
    const BoardSpec board = make_board(3);
    const Path p = parse_path("a1-c3-a3", board);
    const Path mirrored = transform_path(p, 1, board);
    CHECK(canonicalize(p, false, board) != canonicalize(mirrored, false, board));
    CHECK(canonicalize(p, true, board) == canonicalize(mirrored, true, board));
}

TEST_CASE("canonical_set sorts and deduplicates") {
    const BoardSpec board = make_board(2);
    const Path a = parse_path("a2-a1-b1-b2", board);
    const std::vector<Path> paths = {a, reverse_path(a), a};
    const auto set = canonical_set(paths, false, board);
    CHECK(set.size() == 1);
    CHECK(std::is_sorted(set.begin(), set.end()));
}

TEST_CASE("solver matches the oracle on capped instances") {
    struct Family {
        const char* name;
        std::optional<Point> start;
        std::optional<Point> end;
    };

    for (int n : {2, 3}) {
        const BoardSpec board = make_board(n);
        const int k = n == 2 ? 4 : 4;
        const std::vector<Family> families = {
            {"free", {}, {}},
            {"fixed-start", Point{1, 1}, {}},
            {"fixed-both", Point{1, 1}, Point{n, n}},
        };
        for (const Family& fam : families) {
            CAPTURE(n);
            CAPTURE(fam.name);
            SearchConfig cfg = instance(board, k);
            cfg.rules.required_start = fam.start;
            cfg.rules.required_end = fam.end;

            const SearchResult fast = solve(cfg);
            const SearchResult slow = oracle_solve(cfg);
            CHECK(fast.status == SearchStatus::Complete);
            CHECK(fast.solution_count == slow.solution_count);

            const bool free_endpoints = !fam.start && !fam.end;
            CHECK(canonical_set(fast.solutions, free_endpoints, board) ==
                  canonical_set(slow.solutions, free_endpoints, board));
        }
    }
}

TEST_CASE("count mode agrees with the oracle's enumeration") {
    const BoardSpec board = make_board(3);
    SearchConfig cfg = instance(board, 5);
    cfg.rules.required_start = Point{2, 2};

    SearchConfig counting = cfg;
    counting.mode = SearchMode::Count;
    CHECK(solve(counting).solution_count == oracle_solve(cfg).solution_count);
}
