#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "starpath/bitcover.hpp"
#include "starpath/geometry.hpp"
#include "starpath/verifier.hpp"

namespace starpath {

enum class SearchMode { First, All, Count, Minimize };
enum class MoveOrdering { NewCoverageDesc, Lexicographic };
enum class SearchStatus { Complete, BudgetExhausted };

struct SearchConfig {
    RuleSet rules;
    int max_strokes = 14;
    SearchMode mode = SearchMode::First;
    bool progressive = false;  // every stroke must cover a new star
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit_seconds;
    MoveOrdering ordering = MoveOrdering::NewCoverageDesc;
    std::uint64_t seed = 0;
    int workers = 1;
    bool override_guard = false;
    // Fires exactly once per path in SearchResult::solutions, in result
    // order; with one worker and fixed endpoints it fires as paths are found.
    std::function<void(const Path&)> on_solution;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Complete;
    std::vector<Path> solutions;  // First/Minimize: witness; All: exact set; Count: empty
    std::uint64_t solution_count = 0;
    std::optional<int> best_k;  // Minimize only
    std::uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;
};

struct SearchState {
    Point current;
    CoverageMask covered = 0;
    int strokes_used = 0;
};

// Admissible: never exceeds the true number of strokes still needed.
// Max of a per-stroke coverage counting bound and a greedy set of
// uncovered stars no two of which share a stroke line.
int lower_bound(const SearchState& state, const BoardSpec& board, StrokePolicy policy);

SearchResult solve(const SearchConfig& config);

// Iterative deepening up to config.max_strokes; mode is forced to Minimize.
// Returns the smallest feasible stroke count and a witness at exactly that
// count. Throws if the budget runs out first or no path fits the ceiling.
std::pair<int, Path> min_strokes(const SearchConfig& config);

}  // namespace starpath
