// Release gate: ten numbered checks, one verdict line each. Exit code 0 only
// when every check passes. Tolerances are pinned next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ugvplan/bnb.hpp"
#include "ugvplan/bound.hpp"
#include "ugvplan/experiments.hpp"
#include "ugvplan/gen.hpp"
#include "ugvplan/inner.hpp"
#include "ugvplan/io.hpp"
#include "ugvplan/oracle.hpp"
#include "ugvplan/planner.hpp"
#include "ugvplan/tour.hpp"

using namespace ugvplan;

namespace {

struct Verdict {
    int num;
    std::string name;
    bool ok;
    std::string detail;
};
std::vector<Verdict> verdicts;

void verdict(int num, const std::string& name, bool ok, const std::string& detail) {
    verdicts.push_back({num, name, ok, detail});
}

std::string fmt(double x) { return io::format_double(x); }

double rel_gap(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// 1. The search must reproduce the exhaustive optimum on realistic instances,
//    quickly. 3. While doing so it must visit far fewer nodes than the
//    selection lattice holds and drain its frontier completely.
void check_exactness_and_pruning() {
    const double kRelTol = 1e-9;
    const double kBudgetSeconds = 60.0;
    const int kCases = 50;

    double max_gap = 0.0;
    int within = 0, pruned = 0;
    bool drained = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < kCases; ++i) {
        Rng meta(derive_seed(1001, 0, static_cast<uint64_t>(i)));
        GenParams gp;
        gp.vertices = 4 + static_cast<int>(meta.below(5));
        gp.users = 3 + static_cast<int>(meta.below(6));
        gp.seed = derive_seed(1001, 1, static_cast<uint64_t>(i));
        const Scenario sc = generate_scenario(gp);

        const SolveReport rep = solve(sc);
        const double best = oracle::exhaustive_best(sc).first;
        const double gap = rel_gap(rep.objective, best);
        max_gap = std::max(max_gap, gap);
        if (gap <= kRelTol) ++within;

        const long nodes = rep.stats.bound_evals + rep.stats.leaf_evals;
        if (nodes < (1l << (gp.vertices - 1))) ++pruned;
        if (rep.stats.trace.empty() || rep.stats.trace.back().pool_nodes != 0) drained = false;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream d1;
    d1 << within << "/" << kCases << " within " << fmt(kRelTol) << " rel, max gap " << fmt(max_gap)
       << ", " << fmt(elapsed) << " s";
    verdict(1, "exact solver matches exhaustive search", within == kCases && elapsed < kBudgetSeconds,
            d1.str());

    std::ostringstream d3;
    d3 << pruned << "/" << kCases << " below the 2^(M-1) node budget, every pool drained: "
       << (drained ? "yes" : "no");
    verdict(3, "pruning visits a shrinking frontier", pruned * 10 >= kCases * 9 && drained, d3.str());
}

// 2. The prefix bound must never exceed the objective of any completion.
void check_bound_validity() {
    const double kRelSlack = 1e-9;
    long pairs = 0, completions = 0;
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        Rng meta(derive_seed(1002, 0, static_cast<uint64_t>(i)));
        GenParams gp;
        gp.vertices = 2 + static_cast<int>(meta.below(7));
        gp.users = 2 + static_cast<int>(meta.below(5));
        gp.seed = derive_seed(1002, 1, static_cast<uint64_t>(i));
        const Scenario sc = generate_scenario(gp);
        PlanEvaluator eval(sc);
        const int m = gp.vertices;
        for (int p = 0; p < 10; ++p) {
            const int depth = 1 + static_cast<int>(meta.below(static_cast<uint32_t>(m)));
            std::vector<uint8_t> fixed(static_cast<size_t>(depth), 0);
            fixed[0] = 1;
            uint32_t base = 1;
            for (int j = 1; j < depth; ++j) {
                fixed[j] = static_cast<uint8_t>(meta.below(2));
                base |= static_cast<uint32_t>(fixed[j]) << j;
            }
            const double psi = completion_lower_bound(Prefix(fixed), sc);
            ++pairs;
            for (uint32_t rest = 0; rest < (1u << (m - depth)); ++rest) {
                const double xi = eval.objective(base | (rest << depth));
                ++completions;
                if (!(psi <= xi + kRelSlack * std::abs(xi) + 1e-12)) ok = false;
            }
        }
    }
    std::ostringstream d;
    d << pairs << " prefixes, " << completions << " completions dominated at " << fmt(kRelSlack)
      << " rel";
    verdict(2, "prefix bound is a true lower bound", ok, d.str());
}

// 4. The allocation must satisfy its optimality system on random tuples.
void check_allocation_system() {
    const double kSpreadTol = 1e-8;
    const double kBudgetTol = 1e-9;
    const double kQosTol = 1e-9;
    Rng rng(derive_seed(1004, 0, 0));
    bool ok = true;
    double worst_spread = 0.0, worst_budget = 0.0, worst_qos = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int users = 1 + static_cast<int>(rng.below(8));
        std::vector<double> gain(users), qos(users);
        for (auto& g : gain) g = std::exp(rng.uniform(std::log(0.01), std::log(20.0)));
        for (auto& q : qos) q = rng.uniform(0.5, 3.0);
        const double budget = rng.uniform(5.0, 500.0);
        const double mu = rng.uniform(0.0, 1.0);

        const Waterfill wf = waterfill(gain, qos, budget, mu);
        double total = 0.0, lo_m = kInf, hi_m = 0.0;
        for (int k = 0; k < users; ++k) {
            total += wf.s[k];
            const double data = wf.s[k] * std::log2(1.0 + gain[k] * wf.q[k]);
            worst_qos = std::max(worst_qos, std::abs(data - qos[k]) / qos[k]);
            const double marginal = (2.0 - mu) * unit_energy_saving(wf.s[k] / qos[k]) / gain[k];
            lo_m = std::min(lo_m, marginal);
            hi_m = std::max(hi_m, marginal);
        }
        worst_budget = std::max(worst_budget, std::abs(total - budget) / budget);
        const double spread = (hi_m - lo_m) / (0.5 * (hi_m + lo_m));
        worst_spread = std::max(worst_spread, spread);

        const auto [lo, hi] = multiplier_bracket(gain, qos, budget, mu);
        if (!(wf.rho >= lo * (1.0 - 1e-12) && wf.rho <= hi * (1.0 + 1e-12))) ok = false;
        auto residual = [&](double rho) {
            double t = 0.0;
            for (int k = 0; k < users; ++k)
                t += qos[k] * time_for_saving(gain[k] * rho / (2.0 - mu));
            return t - budget;
        };
        if (!(residual(lo) >= -1e-8 * budget && residual(hi) <= 1e-8 * budget)) ok = false;
    }
    ok = ok && worst_spread <= kSpreadTol && worst_budget <= kBudgetTol && worst_qos <= kQosTol;
    std::ostringstream d;
    d << "1000 tuples: marginal spread " << fmt(worst_spread) << ", budget residual "
      << fmt(worst_budget) << ", target residual " << fmt(worst_qos);
    verdict(4, "allocation optimality system", ok, d.str());
}

// 5. Inverting the marginal-saving curve and its analytic slope.
void check_curve_inversion() {
    const double kInvTol = 1e-10;
    const double kGradTol = 1e-6;
    double worst_inv = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double y = 1e-6 * std::pow(1e12, i / 999.0);
        const double x = time_for_saving(y);
        worst_inv = std::max(worst_inv, std::abs(unit_energy_saving(x) - y) / y);
    }
    double worst_grad = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = 0.05 * std::pow(2000.0, i / 99.0);
        const double h = 1e-6 * x;
        const double numeric = (unit_energy(x - h) - unit_energy(x + h)) / (2.0 * h);
        worst_grad = std::max(worst_grad, rel_gap(unit_energy_saving(x), numeric));
    }
    std::ostringstream d;
    d << "inversion residual " << fmt(worst_inv) << " (tol " << fmt(kInvTol)
      << "), slope vs central difference " << fmt(worst_grad) << " (tol " << fmt(kGradTol) << ")";
    verdict(5, "marginal-saving inversion", worst_inv <= kInvTol && worst_grad <= kGradTol, d.str());
}

// 6. Subset-DP tours must equal permutation enumeration bit for bit.
void check_tour_exactness() {
    Rng rng(derive_seed(1006, 0, 0));
    int agree = 0;
    const int kCases = 100;
    for (int i = 0; i < kCases; ++i) {
        const int m = 2 + static_cast<int>(rng.below(7));
        Matrix dist(m, m, 0.0);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if (r != c) dist(r, c) = rng.uniform(0.5, 25.0);
        const uint32_t mask = 1u | (rng.below(1u << (m - 1)) << 1);
        const Selection sel = Selection::from_mask(m, mask);
        const double fast = shortest_tour(sel, dist, 1.0, 500.0).length;
        if (fast == oracle::brute_tour_length(sel, dist)) ++agree;
    }
    std::ostringstream d;
    d << agree << "/" << kCases << " bitwise equal";
    verdict(6, "exact tours", agree == kCases, d.str());
}

// 7. The assignment solver must equal permutation enumeration bit for bit,
//    forbidden pairs included.
void check_assignment_exactness() {
    Rng rng(derive_seed(1007, 0, 0));
    int agree = 0;
    const int kCases = 100;
    for (int i = 0; i < kCases; ++i) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const double inf_prob = (i % 2) ? 0.3 : 0.0;
        Matrix cost(n, n, 0.0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                cost(r, c) = rng.uniform() < inf_prob ? kInf : rng.uniform(0.1, 10.0);
        const double btotal = oracle::brute_assignment(cost).second;
        if (std::isinf(btotal)) {
            try {
                min_cost_assignment(cost);
            } catch (const std::runtime_error&) {
                ++agree;
            }
        } else if (min_cost_assignment(cost).second == btotal) {
            ++agree;
        }
    }
    std::ostringstream d;
    d << agree << "/" << kCases << " bitwise equal (unsolvable cases must throw)";
    verdict(7, "exact assignments", agree == kCases, d.str());
}

// 8. A dense grid over plans that may split one user across several vertices
//    can never undercut the solver: every grid candidate is itself a feasible
//    plan (its data shares sum to the full target and its times fit the
//    budget), and the solver is exact over all plans, so in exact arithmetic
//    grid >= solver outright. The only room left is floating-point noise in
//    evaluating the two objectives, bounded below independent of the grid
//    resolution.
void check_concentration() {
    const double kFloatSlack = 1e-9;  // resolution-independent, see above
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        Rng meta(derive_seed(1008, 0, static_cast<uint64_t>(i)));
        GenParams gp;
        gp.users = 1 + static_cast<int>(meta.below(2));
        gp.vertices = 2 + static_cast<int>(meta.below(2));
        gp.seed = derive_seed(1008, 1, static_cast<uint64_t>(i));
        const Scenario sc = generate_scenario(gp);
        const SolveReport rep = solve(sc);
        const oracle::GridPlan grid = oracle::direct_p1_grid(sc, 12, 12);
        const double margin = (rep.objective - grid.value) / std::abs(rep.objective);
        worst = std::max(worst, margin);
        if (!(grid.value >= rep.objective - kFloatSlack * std::abs(rep.objective))) ok = false;
    }
    std::ostringstream d;
    d << "20 instances, worst solver-minus-grid margin " << fmt(worst) << " (allowed "
      << fmt(kFloatSlack) << ")";
    verdict(8, "single-vertex service is optimal", ok, d.str());
}

// 9. Qualitative behavior on seeded instances: vanishing noise makes staying
//    optimal; with motion free the full path is matched within a percent;
//    the solver dominates both reference schemes; adding vertices to a nested
//    set never hurts while the no-movement curve stays flat.
void check_reference_behavior() {
    bool ok_noise = true, ok_mu = true, ok_dom = true, ok_flat = true, ok_mono = true;
    for (int i = 0; i < 20; ++i) {
        {
            GenParams gp;
            gp.users = 12;
            gp.vertices = 8;
            gp.noise_dbm = -120.0;
            gp.seed = derive_seed(1009, 0, static_cast<uint64_t>(i));
            const Scenario sc = generate_scenario(gp);
            const SolveReport prop = solve(sc);
            const SolveReport stay = baseline_plan(sc, "no-move");
            if (!(std::abs(prop.objective - stay.objective) <= 1e-9 * stay.objective))
                ok_noise = false;
        }
        {
            GenParams gp;
            gp.users = 50;
            gp.vertices = 8;
            gp.mu = 0.0;
            gp.seed = derive_seed(1009, 1, static_cast<uint64_t>(i));
            const Scenario sc = generate_scenario(gp);
            const SolveReport prop = solve(sc);
            const SolveReport full = baseline_plan(sc, "full-path");
            if (!full.feasible || !(std::abs(prop.objective - full.objective) <= 1e-2 * full.objective))
                ok_mu = false;
        }
        {
            GenParams gp;
            gp.users = 12;
            gp.vertices = 8;
            gp.seed = derive_seed(1009, 2, static_cast<uint64_t>(i));
            const Scenario sc = generate_scenario(gp);
            const SolveReport prop = solve(sc);
            const SolveReport stay = baseline_plan(sc, "no-move");
            const SolveReport full = baseline_plan(sc, "full-path");
            if (!(prop.objective <= stay.objective + 1e-12 * std::abs(stay.objective))) ok_dom = false;
            if (full.feasible &&
                !(prop.objective <= full.objective + 1e-12 * std::abs(full.objective)))
                ok_dom = false;
        }
        {
            GenParams gp;
            gp.users = 12;
            gp.vertices = 8;
            gp.seed = derive_seed(1009, 3, static_cast<uint64_t>(i));
            const Scenario big = generate_scenario(gp);
            double prev_prop = kInf, prev_stay = -1.0;
            for (int m : {4, 6, 8}) {
                const Scenario sc = restrict_vertices(big, m);
                const double prop = solve(sc).objective;
                const double stay = baseline_plan(sc, "no-move").objective;
                if (prev_stay >= 0.0 && stay != prev_stay) ok_flat = false;
                if (!(prop <= prev_prop * (1.0 + 1e-12))) ok_mono = false;
                prev_stay = stay;
                prev_prop = prop;
            }
        }
    }
    std::ostringstream d;
    d << "deep-noise equality " << (ok_noise ? "ok" : "BROKEN") << ", free-motion match "
      << (ok_mu ? "ok" : "BROKEN") << ", dominance " << (ok_dom ? "ok" : "BROKEN")
      << ", flat no-move curve " << (ok_flat ? "ok" : "BROKEN") << ", monotone in vertex count "
      << (ok_mono ? "ok" : "BROKEN");
    verdict(9, "reference-scheme behavior", ok_noise && ok_mu && ok_dom && ok_flat && ok_mono,
            d.str());
}

// 10. Equal seeds must give byte-equal experiment output.
void check_determinism() {
    SweepConfig cfg;
    cfg.kind = "noise";
    cfg.grid = {-95.0, -105.0};
    cfg.runs = 3;
    cfg.seed = 77;
    cfg.users = 6;
    cfg.vertices = 6;
    cfg.ls_iters = 10;
    const std::string a = run_sweep(cfg);
    const std::string b = run_sweep(cfg);
    std::ostringstream d;
    d << a.size() << " bytes, reruns identical: " << (a == b ? "yes" : "no");
    verdict(10, "byte-deterministic experiments", a == b && !a.empty(), d.str());
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    check_exactness_and_pruning();
    check_bound_validity();
    check_allocation_system();
    check_curve_inversion();
    check_tour_exactness();
    check_assignment_exactness();
    check_concentration();
    check_reference_behavior();
    check_determinism();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::sort(verdicts.begin(), verdicts.end(),
              [](const Verdict& a, const Verdict& b) { return a.num < b.num; });
    int failures = 0;
    for (const Verdict& v : verdicts) {
        std::cout << "criterion " << v.num << " (" << v.name << "): " << (v.ok ? "PASS" : "FAIL");
        if (!v.detail.empty()) std::cout << " [" << v.detail << "]";
        std::cout << std::endl;
        if (!v.ok) ++failures;
    }
    std::cout << (10 - failures) << "/10 criteria passed in " << fmt(elapsed) << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
