#pragma once

#include <unordered_map>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Exact minimum-length directed cycle through the selected vertices,
/// starting and ending at vertex 0, by dynamic programming over vertex
/// subsets (asymmetric distances supported). A single selected vertex yields
/// the no-movement convention: length 0, all-zero edge matrix, full budget.
/// When some required edge is missing the result is the unreachable sentinel
/// (length +inf). Throws std::length_error above 18 selected vertices.
TourSolution shortest_tour(const Selection& sel, const Matrix& dist, double speed,
                           double time_budget);

/// Communication time left after the shortest tour over the selection;
/// may be <= 0 (selection infeasible) or -inf (no tour exists).
double comm_time_left(const Selection& sel, const Scenario& sc);

/// Per-scenario memo of shortest tours keyed by selection bitmask. Entries
/// are write-once; lookups of an already-solved selection are free.
class TourCache {
  public:
    explicit TourCache(const Scenario& sc) : sc_(&sc) {}

    const TourSolution& get(const Selection& sel);
    const TourSolution& get_mask(uint32_t mask);

  private:
    const Scenario* sc_;
    std::unordered_map<uint32_t, TourSolution> memo_;
};

}  // namespace ugvplan
