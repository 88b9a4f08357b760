#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ugvplan/bnb.hpp"
#include "ugvplan/experiments.hpp"
#include "ugvplan/gen.hpp"
#include "ugvplan/io.hpp"
#include "ugvplan/model.hpp"
#include "ugvplan/oracle.hpp"

namespace {

using namespace ugvplan;

int run_gen(const GenParams& params, const std::string& out) {
    const Scenario sc = generate_scenario(params);
    const std::string text = io::scenario_to_json(sc);
    if (out.empty())
        std::fputs(text.c_str(), stdout);
    else
        io::write_text(out, text);
    return 0;
}

int run_solve(const std::string& path, const std::string& init, int ls_iters, uint64_t seed,
              const std::string& out, const std::string& trace) {
    const Scenario sc = io::load_scenario(path);
    SolveOptions opt;
    opt.warm_start = init == "local-search" ? WarmStart::LocalSearch : WarmStart::Naive;
    opt.ls_iters = ls_iters;
    opt.seed = seed;
    const SolveReport report = solve(sc, opt);
    const std::string text = io::report_to_json(report);
    if (out.empty())
        std::fputs(text.c_str(), stdout);
    else
        io::write_text(out, text);
    if (!trace.empty()) io::write_text(trace, io::trace_to_csv(report.stats.trace));
    std::fprintf(stderr, "objective %s J (motion %s, comm %s), %ld bound and %ld exact evaluations\n",
                 io::format_double(report.objective).c_str(),
                 io::format_double(report.motion_energy).c_str(),
                 io::format_double(report.comm_energy).c_str(), report.stats.bound_evals,
                 report.stats.leaf_evals);
    return 0;
}

int run_baseline(const std::string& path, const std::string& scheme) {
    const Scenario sc = io::load_scenario(path);
    const SolveReport report = baseline_plan(sc, scheme);
    std::fputs(io::report_to_json(report).c_str(), stdout);
    return report.feasible ? 0 : 2;
}

int run_sweep_cmd(const SweepConfig& cfg, const std::string& out) {
    const std::string csv = run_sweep(cfg);
    if (out.empty())
        std::fputs(csv.c_str(), stdout);
    else
        io::write_text(out, csv);
    return 0;
}

int run_verify(int max_m, int cases, uint64_t seed) {
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        Rng pick(derive_seed(seed, 2, static_cast<uint64_t>(c)));
        GenParams gp;
        gp.vertices = 2 + static_cast<int>(pick.below(static_cast<uint32_t>(max_m - 1)));
        gp.users = 2 + static_cast<int>(pick.below(7));
        gp.seed = derive_seed(seed, 3, static_cast<uint64_t>(c));
        const Scenario sc = generate_scenario(gp);

        SolveOptions opt;
        opt.warm_start = WarmStart::LocalSearch;
        opt.seed = derive_seed(seed, 4, static_cast<uint64_t>(c));
        const SolveReport report = solve(sc, opt);
        const auto [oracle_value, oracle_sel] = oracle::exhaustive_best(sc);

        const double gap = std::abs(report.objective - oracle_value);
        const bool ok = gap <= 1e-9 * std::abs(oracle_value);
        if (!ok) ++failures;
        std::printf("case %d: M=%d K=%d solver=%s oracle=%s %s\n", c, gp.vertices, gp.users,
                    io::format_double(report.objective).c_str(),
                    io::format_double(oracle_value).c_str(), ok ? "ok" : "MISMATCH");
    }
    std::printf("verified %d/%d cases\n", cases - failures, cases);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-energy data collection planner"};
    app.require_subcommand(1);

    GenParams gen_params;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a scenario JSON");
    gen->add_option("--out", gen_out, "output path (stdout if omitted)");
    gen->add_option("--seed", gen_params.seed, "master seed");
    gen->add_option("--users", gen_params.users, "number of users");
    gen->add_option("--vertices", gen_params.vertices, "number of stopping vertices");
    gen->add_option("--map-side", gen_params.map_side, "square side, meters");
    gen->add_option("--noise-dbm", gen_params.noise_dbm, "receiver noise power, dBm");
    gen->add_option("--time-budget", gen_params.time_budget, "operation time, seconds");
    gen->add_option("--qos-min", gen_params.qos_min, "QoS draw lower bound");
    gen->add_option("--qos-max", gen_params.qos_max, "QoS draw upper bound");
    gen->add_option("--mu", gen_params.mu, "motion weight in [0,1]");
    gen->add_option("--speed", gen_params.speed, "vehicle speed, m/s");
    gen->add_option("--alpha1", gen_params.alpha1, "motion power coefficient");
    gen->add_option("--alpha2", gen_params.alpha2, "motion energy coefficient");
    gen->add_option("--eta", gen_params.eta, "scattering efficiency");
    gen->add_option("--beta", gen_params.beta, "modulation loss");
    gen->add_option("--pathloss-exp", gen_params.pathloss_exp, "path-loss exponent");

    std::string solve_path, solve_init = "naive", solve_out, solve_trace;
    int solve_ls_iters = 20;
    uint64_t solve_seed = 0;
    auto* solve_cmd = app.add_subcommand("solve", "compute the optimal plan for a scenario");
    solve_cmd->add_option("scenario", solve_path, "scenario JSON path")->required();
    solve_cmd->add_option("--init", solve_init, "warm start: naive or local-search")
        ->check(CLI::IsMember({"naive", "local-search"}));
    solve_cmd->add_option("--ls-iters", solve_ls_iters, "local-search iterations");
    solve_cmd->add_option("--seed", solve_seed, "local-search seed");
    solve_cmd->add_option("--out", solve_out, "report JSON path (stdout if omitted)");
    solve_cmd->add_option("--trace", solve_trace, "frontier trace CSV path");

    std::string base_path, base_scheme;
    auto* base = app.add_subcommand("baseline", "evaluate a reference scheme");
    base->add_option("scenario", base_path, "scenario JSON path")->required();
    base->add_option("--scheme", base_scheme, "no-move or full-path")
        ->required()
        ->check(CLI::IsMember({"no-move", "full-path"}));

    SweepConfig sweep_cfg;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "run an averaged experiment sweep to CSV");
    sweep_cmd->add_option("--kind", sweep_cfg.kind, "noise, qos, mu, vertices, or pool-trace")
        ->required()
        ->check(CLI::IsMember({"noise", "qos", "mu", "vertices", "pool-trace"}));
    sweep_cmd->add_option("--grid", sweep_cfg.grid, "swept values")->delimiter(',');
    sweep_cmd->add_option("--runs", sweep_cfg.runs, "instances per grid point");
    sweep_cmd->add_option("--seed", sweep_cfg.seed, "master seed");
    sweep_cmd->add_option("--users", sweep_cfg.users, "users per instance");
    sweep_cmd->add_option("--vertices", sweep_cfg.vertices, "vertices per instance");
    sweep_cmd->add_option("--ls-iters", sweep_cfg.ls_iters, "warm-start iterations");
    sweep_cmd->add_flag("--full-scale", sweep_cfg.full_scale, "50 users, 12 vertices, 100 runs");
    sweep_cmd->add_option("--out", sweep_out, "CSV path (stdout if omitted)");

    int verify_max_m = 8, verify_cases = 20;
    uint64_t verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "certify the solver against exhaustive search");
    verify->add_option("--max-m", verify_max_m, "largest vertex count")->check(CLI::Range(2, 16));
    verify->add_option("--cases", verify_cases, "number of random cases");
    verify->add_option("--seed", verify_seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(gen_params, gen_out);
        if (solve_cmd->parsed()) return run_solve(solve_path, solve_init, solve_ls_iters, solve_seed, solve_out, solve_trace);
        if (base->parsed()) return run_baseline(base_path, base_scheme);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_cfg, sweep_out);
        if (verify->parsed()) return run_verify(verify_max_m, verify_cases, verify_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
