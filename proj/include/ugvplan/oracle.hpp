#pragma once

#include <utility>
#include <vector>

#include "ugvplan/bound.hpp"
#include "ugvplan/types.hpp"

namespace ugvplan::oracle {

/// Best plan found by a direct multi-vertex grid search. time_split(k, m) is
/// the seconds user k spends served from vertex m and data_split(k, m) the
/// target bits collected there; both are zero outside the winning selection.
struct GridPlan {
    double value = kInf;
    Selection selection;
    Matrix time_split;
    Matrix data_split;
};

/// Exact optimum by evaluating every selection that keeps the start vertex.
/// Cross-checks the branch-and-bound search while sharing the inner and tour
/// solvers. Guard: at most 16 vertices.
std::pair<double, Selection> exhaustive_best(const Scenario& sc);

/// Shortest cycle through the selected vertices by permutation enumeration,
/// summed in the same source-vertex order as the dynamic-programming solver
/// so optimal values compare bit for bit. Guard: at most 9 selected.
double brute_tour_length(const Selection& sel, const Matrix& dist);

/// Minimum-cost perfect matching by permutation enumeration, totals summed
/// in row order. Returns an empty matching and +inf when every permutation
/// hits a forbidden (+inf) entry. Guard: at most 8 rows.
std::pair<std::vector<int>, double> brute_assignment(const Matrix& cost);

/// Optimistic communication time of a prefix by direct enumeration of
/// relaxed edge sets: every fixed-selected vertex picks one outgoing edge
/// (targets pairwise distinct), uncovered fixed-selected vertices each draw
/// an incoming edge from a distinct free vertex, fixed-unselected vertices
/// carry nothing. Mirrors relaxed_comm_time's conventions, including the
/// full-budget result below two fixed-selected vertices and -inf when the
/// forced edges cannot be placed. Guard: at most 7 vertices.
double brute_relaxed_comm_time(const Prefix& prefix, const Scenario& sc);

/// Grid search over plans that may split one user's service across several
/// vertices, certifying that single-vertex concentration is optimal. For
/// each selection and each tour over it, the remaining time is divided among
/// users on a time_steps grid; each user's share is then split across the
/// selected vertices on a time_steps grid while its data target is split on
/// a power_steps grid, with the per-cell power pinned by making the cell's
/// data constraint tight (hence the parameter name). Every candidate is a
/// feasible plan, so the exact solver can never be beaten by more than
/// floating-point noise. Guards: at most 3 users, 4 vertices, both step
/// counts at least 2.
GridPlan direct_p1_grid(const Scenario& sc, int time_steps, int power_steps);

}  // namespace ugvplan::oracle
