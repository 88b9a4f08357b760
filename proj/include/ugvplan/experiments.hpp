#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Reference schemes: "no-move" pins the vehicle at the start vertex,
/// "full-path" tours every vertex. An unreachable or over-budget full path
/// comes back with feasible = false and objective +inf rather than throwing.
SolveReport baseline_plan(const Scenario& sc, const std::string& scheme);

/// One experiment sweep. Each run draws a fresh instance from a seed derived
/// from (master seed, run index); grid points reuse the same draws so curves
/// differ only in the swept quantity. Desk-scale instance sizes by default.
struct SweepConfig {
    std::string kind;          // noise | qos | mu | vertices | pool-trace
    std::vector<double> grid;  // swept values; ignored by pool-trace
    int runs = 20;
    uint64_t seed = 0;
    int users = 12;
    int vertices = 8;
    int ls_iters = 20;
    bool full_scale = false;  // 50 users, 12 vertices, 100 runs
};

/// Runs the sweep and returns the CSV text: header row, one record per
/// (grid point, run), then an "aggregate" row of arithmetic means per grid
/// point. Byte-identical for equal configs.
std::string run_sweep(const SweepConfig& cfg);

}  // namespace ugvplan
