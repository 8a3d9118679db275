#pragma once

#include <string>
#include <vector>

#include "starpath/solver.hpp"

namespace starpath {

using CanonicalPath = Path;

// Brute-force reference: plain depth-first enumeration over every lattice
// waypoint with no pruning beyond the stroke budget, and per-star hit
// counters instead of bitboards. Hard caps (n <= 4, margin <= 1,
// max_strokes <= 6) keep it obviously correct; mode, ordering, seed,
// workers, and budgets in the config are ignored.
SearchResult oracle_solve(const SearchConfig& config);

// Least waypoint sequence over {path, reversed path}, extended by the 8
// board symmetries when the instance had free endpoints.
CanonicalPath canonicalize(const Path& path, bool free_endpoints, const BoardSpec& board);

// Sorted, deduplicated canonical forms; equal sets mean two engines agree.
std::vector<std::string> canonical_set(const std::vector<Path>& paths,
                                       bool free_endpoints, const BoardSpec& board);

}  // namespace starpath
