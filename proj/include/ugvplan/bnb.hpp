#pragma once

#include <optional>
#include <utility>

#include "ugvplan/bound.hpp"
#include "ugvplan/types.hpp"

namespace ugvplan {

/// How the exact solver obtains its initial incumbent.
enum class WarmStart {
    Naive,        // objective of the no-movement selection
    LocalSearch,  // successive local search (ls_iters, ls_radius, seed)
    Provided,     // caller-supplied (value, selection)
};

struct SolveOptions {
    WarmStart warm_start = WarmStart::Naive;
    int ls_iters = 20;
    int ls_radius = 3;
    uint64_t seed = 0;
    std::optional<std::pair<double, Selection>> provided;
    bool record_trace = true;
};

/// Splits a prefix into its two one-coordinate extensions (next free vertex
/// excluded, then included). Throws when the prefix already fixes every
/// vertex.
std::pair<Prefix, Prefix> branch(const Prefix& prefix, int vertex_count);

/// Globally optimal joint plan: best-first branch-and-bound over vertex
/// selections with completion_lower_bound pruning against the incumbent,
/// exact leaf evaluation, and final plan reassembly. Deterministic for a
/// fixed scenario and options.
SolveReport solve(const Scenario& sc, const SolveOptions& options = {});

}  // namespace ugvplan
