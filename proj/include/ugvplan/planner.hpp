#pragma once

#include <unordered_map>

#include "ugvplan/tour.hpp"
#include "ugvplan/types.hpp"

namespace ugvplan {

/// Exact evaluation of one selection: shortest tour, optimal allocation, and
/// the weighted objective. Infeasible selections (tour missing or consuming
/// the whole budget) come back with objective +inf and feasible = false.
struct PlanDetail {
    double objective = kInf;
    double motion_energy = 0.0;  // unweighted joules
    double comm_energy = 0.0;    // unweighted joules, sum of s_k * q_k
    bool feasible = false;
    TourSolution tour;
    Allocation alloc;
};
PlanDetail evaluate_selection(const Selection& sel, const Scenario& sc, TourCache& tours);

/// Shared evaluation context for one scenario: memoizes tours and exact
/// objective values by selection bitmask so that warm starts, search, and
/// branch-and-bound never recompute a selection. fresh_evals counts actual
/// objective computations (cache misses).
class PlanEvaluator {
  public:
    explicit PlanEvaluator(const Scenario& sc) : sc_(&sc), tours_(sc) {}

    double objective(uint32_t mask);
    double objective(const Selection& sel) { return objective(sel.mask()); }
    PlanDetail detail(const Selection& sel) { return evaluate_selection(sel, *sc_, tours_); }

    const Scenario& scenario() const { return *sc_; }
    TourCache& tours() { return tours_; }
    long fresh_evals() const { return fresh_evals_; }

  private:
    const Scenario* sc_;
    TourCache tours_;
    std::unordered_map<uint32_t, double> value_;
    long fresh_evals_ = 0;
};

}  // namespace ugvplan
