#include "ugvplan/experiments.hpp"

#include <algorithm>
#include <stdexcept>

#include "ugvplan/bnb.hpp"
#include "ugvplan/gen.hpp"
#include "ugvplan/io.hpp"
#include "ugvplan/planner.hpp"

namespace ugvplan {

namespace {

GenParams desk_params(const SweepConfig& cfg, int users, int vertices, int run) {
    GenParams gp;
    gp.users = users;
    gp.vertices = vertices;
    gp.seed = derive_seed(cfg.seed, 0, static_cast<uint64_t>(run));
    return gp;
}

Scenario instance_for(const SweepConfig& cfg, double value, int run, int users, int vertices,
                      int max_vertices) {
    GenParams gp = desk_params(cfg, users, vertices, run);
    if (cfg.kind == "noise") {
        gp.noise_dbm = value;
    } else if (cfg.kind == "qos") {
        gp.qos_min = value;
        gp.qos_max = value;
    } else if (cfg.kind == "mu") {
        gp.mu = value;
    } else if (cfg.kind == "vertices") {
        // Draw once at the largest vertex count so the sets are nested.
        gp.vertices = max_vertices;
        return restrict_vertices(generate_scenario(gp), static_cast<int>(value));
    }
    return generate_scenario(gp);
}

SolveOptions proposed_options(const SweepConfig& cfg, int run, bool trace) {
    SolveOptions opt;
    opt.warm_start = WarmStart::LocalSearch;
    opt.ls_iters = cfg.ls_iters;
    opt.seed = derive_seed(cfg.seed, 1, static_cast<uint64_t>(run));
    opt.record_trace = trace;
    return opt;
}

double max_power(const SolveReport& report) {
    double best = 0.0;
    for (double q : report.alloc.q) best = std::max(best, q);
    return best;
}

std::string pool_trace_csv(const SweepConfig& cfg, int users, int vertices, int runs) {
    std::string out = "init,run,iteration,pool_nodes,pool_candidates,incumbent_j\n";
    for (const char* init : {"naive", "local-search"}) {
        double sums[4] = {0, 0, 0, 0};
        long rows = 0;
        for (int run = 0; run < runs; ++run) {
            const Scenario sc = generate_scenario(desk_params(cfg, users, vertices, run));
            SolveOptions opt = proposed_options(cfg, run, true);
            opt.warm_start = std::string(init) == "naive" ? WarmStart::Naive : WarmStart::LocalSearch;
            const SolveReport report = solve(sc, opt);
            for (const TraceRow& row : report.stats.trace) {
                out += init;
                out += ',';
                out += std::to_string(run);
                out += ',';
                out += std::to_string(row.iteration);
                out += ',';
                out += std::to_string(row.pool_nodes);
                out += ',';
                out += io::format_double(row.pool_candidates);
                out += ',';
                out += io::format_double(row.incumbent);
                out += '\n';
                sums[0] += static_cast<double>(row.iteration);
                sums[1] += static_cast<double>(row.pool_nodes);
                sums[2] += row.pool_candidates;
                sums[3] += row.incumbent;
                ++rows;
            }
        }
        out += init;
        out += ",aggregate";
        for (double s : sums) {
            out += ',';
            out += io::format_double(rows ? s / static_cast<double>(rows) : 0.0);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

SolveReport baseline_plan(const Scenario& sc, const std::string& scheme) {
    sc.validate();
    Selection sel;
    if (scheme == "no-move")
        sel = Selection::start_only(sc.vertex_count);
    else if (scheme == "full-path")
        sel = Selection::all(sc.vertex_count);
    else
        throw std::invalid_argument("baseline_plan: unknown scheme " + scheme);

    TourCache tours(sc);
    const PlanDetail d = evaluate_selection(sel, sc, tours);
    SolveReport report;
    report.objective = d.objective;
    report.motion_energy = d.motion_energy;
    report.comm_energy = d.comm_energy;
    report.feasible = d.feasible;
    report.selection = sel;
    report.tour = d.tour;
    report.alloc = d.alloc;
    return report;
}

std::string run_sweep(const SweepConfig& cfg) {
    const bool pool = cfg.kind == "pool-trace";
    if (cfg.kind != "noise" && cfg.kind != "qos" && cfg.kind != "mu" && cfg.kind != "vertices" && !pool)
        throw std::invalid_argument("run_sweep: unknown kind " + cfg.kind);
    if (!pool && cfg.grid.empty()) throw std::invalid_argument("run_sweep: empty grid");

    const int users = cfg.full_scale ? 50 : cfg.users;
    const int vertices = cfg.full_scale ? 12 : cfg.vertices;
    const int runs = cfg.full_scale ? 100 : cfg.runs;
    if (runs < 1) throw std::invalid_argument("run_sweep: need at least one run");

    if (pool) return pool_trace_csv(cfg, users, vertices, runs);

    int max_vertices = vertices;
    if (cfg.kind == "vertices")
        for (double v : cfg.grid) max_vertices = std::max(max_vertices, static_cast<int>(v));

    const char* axis = cfg.kind == "noise"  ? "n0_dbm"
                     : cfg.kind == "qos"    ? "qos_target"
                     : cfg.kind == "mu"     ? "mu"
                                            : "vertices";
    std::string out = std::string(axis) +
                      ",run,proposed_j,proposed_motion_j,proposed_comm_j"
                      ",no_move_j,no_move_motion_j,no_move_comm_j"
                      ",full_path_j,full_path_motion_j,full_path_comm_j,max_power_w\n";

    for (double value : cfg.grid) {
        double sums[10] = {};
        for (int run = 0; run < runs; ++run) {
            const Scenario sc = instance_for(cfg, value, run, users, vertices, max_vertices);
            const SolveReport prop = solve(sc, proposed_options(cfg, run, false));
            const SolveReport no_move = baseline_plan(sc, "no-move");
            const SolveReport full_path = baseline_plan(sc, "full-path");
            const double cells[10] = {prop.objective,      prop.motion_energy,      prop.comm_energy,
                                      no_move.objective,   no_move.motion_energy,   no_move.comm_energy,
                                      full_path.objective, full_path.motion_energy, full_path.comm_energy,
                                      max_power(prop)};
            out += io::format_double(value);
            out += ',';
            out += std::to_string(run);
            for (int c = 0; c < 10; ++c) {
                out += ',';
                out += io::format_double(cells[c]);
                sums[c] += cells[c];
            }
            out += '\n';
        }
        out += io::format_double(value);
        out += ",aggregate";
        for (double s : sums) {
            out += ',';
            out += io::format_double(s / static_cast<double>(runs));
        }
        out += '\n';
    }
    return out;
}

}  // namespace ugvplan
