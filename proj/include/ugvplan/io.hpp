#pragma once

#include <string>
#include <vector>

#include "ugvplan/types.hpp"

namespace ugvplan::io {

/// Shortest decimal text that round-trips the double exactly; infinities
/// become "inf"/"-inf". Used for every number the tool writes so that equal
/// inputs give byte-equal files.
std::string format_double(double x);

/// Scenario document: {"M", "K", "D" (row-major, "inf" for missing edges),
/// "A" (row-major K x M), "gamma", "T", "a", "alpha1", "alpha2", "mu",
/// "N0_dbm", "beta", "eta", optional "positions"}.
std::string scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const std::string& text);

/// Plan document: objective, energy split, selection, tour order, per-user
/// (serve vertex, seconds, watts), multiplier, search statistics.
std::string report_to_json(const SolveReport& report);

/// Frontier trace as CSV: iteration, pool_nodes, pool_candidates,
/// incumbent_j.
std::string trace_to_csv(const std::vector<TraceRow>& trace);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace ugvplan::io
