#pragma once

#include "ugvplan/gen.hpp"
#include "ugvplan/planner.hpp"
#include "ugvplan/types.hpp"

namespace ugvplan {

/// Uniform random neighbor of a selection: flips d distinct non-start
/// coordinates with d drawn uniformly from {1, ..., min(radius, M-1)}. The
/// result always keeps the start vertex and always differs from the input.
/// Throws std::invalid_argument when the selection has no neighbors (M = 1)
/// or radius < 1.
Selection sample_neighbor(const Selection& sel, int radius, Rng& rng);

struct SearchResult {
    double value = kInf;
    Selection selection;
    long evals = 0;  // candidate evaluations performed (equals max_iters)
};

/// Successive local search from the no-movement selection: each iteration
/// samples one neighbor of the current point and accepts it when not worse.
/// Runs exactly max_iters candidate evaluations and returns the best value
/// seen. Useful as a warm-start incumbent for the exact solver.
SearchResult local_search(const Scenario& sc, int max_iters, int radius, uint64_t seed);

/// Same search sharing an existing evaluator (and its memo) with the caller.
SearchResult local_search(PlanEvaluator& eval, int max_iters, int radius, Rng& rng);

}  // namespace ugvplan
