#pragma once

#include "tripres/correspondence.hpp"
#include "tripres/io.hpp"
#include "tripres/presentation.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace tripres {

enum class SearchVariant { FULL_SCAN, WORST_POINTS };

struct SearchConfig {
    int target = 0;  // score goal; 0 means the full edge count of the plane
    SearchVariant variant = SearchVariant::FULL_SCAN;
    int worst_points = 5;                // pool size for WORST_POINTS
    long long max_steps = 1000;          // swap steps per run
    long long restart_after_stall = 100; // steps without a new best before giving up
    std::uint64_t rng_seed = 0;
    BadnessMode badness_mode = BadnessMode::BOTH_ENDPOINTS;
};

struct SearchState {
    PointLineCorrespondence current;
    CoverResult current_cover;
    std::set<std::vector<int>> visited;  // image arrays; exact, no collisions
    int best_score = 0;
    std::vector<std::pair<long long, int>> trace;  // (step, score)
};

SearchState make_search_state(const ProjectivePlane& pl,
                              const PointLineCorrespondence& start);

// One greedy tabu step: evaluate unvisited swap neighbors (all pairs, or
// pairs anchored at the worst-badness points), return the best by score with
// lexicographically-least (a,b) tie-break.  Covers that FAIL compare by
// their covered-edge count and are flagged by their status.
struct SwapStep {
    int a = -1, b = -1;
    PointLineCorrespondence lam;
    CoverResult cover;
};
// nullopt = EXHAUSTED (every neighbor already visited)
std::optional<SwapStep> best_swap_step(const ProjectivePlane& pl, const SearchState& state,
                                       const SearchConfig& config);

struct SearchOutcome {
    enum class Status { FOUND, STALLED } status = Status::STALLED;
    PointLineCorrespondence lam;  // found correspondence, or the last current
    TrianglePresentation tri;     // full presentation when FOUND
    int best_score = 0;
    std::size_t visited_count = 0;
    std::vector<std::pair<long long, int>> trace;
};

// Iterate best_swap_step from the start correspondence until the target is
// reached (FOUND, with the presentation extracted from the cover) or the
// step budget, a stall, or neighbor exhaustion ends the run (STALLED).
SearchOutcome run_search(const ProjectivePlane& pl, const PointLineCorrespondence& start,
                         const SearchConfig& config);

// Uniformly random bijection points -> lines via Fisher-Yates on the rng.
PointLineCorrespondence random_correspondence(const ProjectivePlane& pl, SplitMix64& rng);

// One row per (a, b) class of correlations.
struct CensusRow {
    int a = 0, b = 0;
    int exact = 0;            // closed-form maximum score of the class
    long long count = 0;      // correlations in the class
    double mean_estimated = 0.0;
    long long fails = 0;      // greedy covers that ended in FAIL
};

// Enumerate (up to limit) correlations, group them by (a, b), and aggregate
// exact and greedy scores.  Rows sorted by (a, b).
std::vector<CensusRow> correlation_census(const ProjectivePlane& pl,
                                          std::optional<std::size_t> limit = std::nullopt);

} // namespace tripres
