#pragma once

#include <utility>
#include <vector>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Partially fixed selection: coordinate i < fixed.size() is pinned to
/// fixed[i], the remaining vertices are still free. The start vertex is
/// always pinned to 1.
struct Prefix {
    std::vector<uint8_t> fixed;

    Prefix() = default;
    explicit Prefix(std::vector<uint8_t> f) : fixed(std::move(f)) {}

    int depth() const { return static_cast<int>(fixed.size()); }
    void validate() const;
};

/// Minimum-cost perfect matching (rows to columns) of a square cost matrix;
/// +inf marks a forbidden pair. Deterministic: among equal-cost optima the
/// augmenting scan prefers lower column indices. Returns the matching and
/// its total cost. Throws std::runtime_error when no finite perfect matching
/// exists.
std::pair<std::vector<int>, double> min_cost_assignment(const Matrix& cost);

/// Optimistic communication time over all completions of the prefix: the
/// time budget minus the cheapest relaxed edge set in which every
/// fixed-selected vertex has exactly one outgoing and one incoming edge,
/// fixed-unselected vertices carry no edges, and free vertices may carry at
/// most one of each. Encoded as a 2M x 2M assignment with dummy suppliers
/// and absorbers. With fewer than two fixed-selected vertices no edge is
/// forced and the result is the full budget. Returns -inf when the forced
/// edges cannot be completed (every completion unreachable). May be <= 0,
/// meaning every completion overruns the budget.
double relaxed_comm_time(const Prefix& prefix, const Scenario& sc);

/// Lower bound on the objective over every completion of the prefix:
/// optimistic motion energy from relaxed_comm_time plus the water-filling
/// communication energy computed with every free vertex treated as selected.
/// +inf when no completion is feasible.
double completion_lower_bound(const Prefix& prefix, const Scenario& sc);

}  // namespace ugvplan
