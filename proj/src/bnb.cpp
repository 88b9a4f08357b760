#include "ugvplan/bnb.hpp"

#include <chrono>
#include <cmath>
#include <queue>

#include "ugvplan/local_search.hpp"
#include "ugvplan/planner.hpp"

namespace ugvplan {

namespace {

// Absolute slack for incumbent comparisons, guarding against float-order
// sensitivity without letting the incumbent trace increase.
constexpr double kSlack = 1e-12;

struct Node {
    double bound = 0;
    long seq = 0;
    int depth = 0;
    uint32_t bits = 0;  // fixed coordinates, bit i valid for i < depth
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.seq > b.seq;
    }
};

Prefix make_prefix(uint32_t bits, int depth) {
    std::vector<uint8_t> fixed(static_cast<size_t>(depth));
    for (int i = 0; i < depth; ++i) fixed[i] = (bits >> i) & 1u;
    return Prefix(std::move(fixed));
}

SolveReport assemble(PlanEvaluator& eval, const Selection& sel) {
    const PlanDetail detail = eval.detail(sel);
    SolveReport report;
    report.objective = detail.objective;
    report.motion_energy = detail.motion_energy;
    report.comm_energy = detail.comm_energy;
    report.feasible = detail.feasible;
    report.selection = sel;
    report.tour = detail.tour;
    report.alloc = detail.alloc;
    return report;
}

}  // namespace

std::pair<Prefix, Prefix> branch(const Prefix& prefix, int vertex_count) {
    prefix.validate();
    if (prefix.depth() >= vertex_count) throw std::invalid_argument("branch: prefix already fixes every vertex");
    Prefix off = prefix, on = prefix;
    off.fixed.push_back(0);
    on.fixed.push_back(1);
    return {off, on};
}

SolveReport solve(const Scenario& sc, const SolveOptions& options) {
    sc.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int m = sc.vertex_count;
    PlanEvaluator eval(sc);

    Selection best_sel = Selection::start_only(m);
    double incumbent;
    switch (options.warm_start) {
        case WarmStart::LocalSearch: {
            Rng rng(options.seed);
            const SearchResult ls = local_search(eval, options.ls_iters, options.ls_radius, rng);
            best_sel = ls.selection;
            incumbent = ls.value;
            break;
        }
        case WarmStart::Provided: {
            if (!options.provided) throw std::invalid_argument("solve: provided warm start missing");
            best_sel = options.provided->second;
            best_sel.validate();
            if (best_sel.size() != m) throw std::invalid_argument("solve: provided selection size mismatch");
            // The supplied value is advisory; pruning safety needs the exact
            // objective of the supplied selection.
            incumbent = eval.objective(best_sel);
            break;
        }
        case WarmStart::Naive:
        default:
            incumbent = eval.objective(best_sel);
            break;
    }

    SolveReport report;
    if (m == 1) {
        report = assemble(eval, best_sel);
        report.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }

    std::priority_queue<Node, std::vector<Node>, NodeOrder> pool;
    long x1 = 0;
    long seq = 0;
    double candidates = 0.0;  // full selections covered by pooled nodes
    const long fresh_before = eval.fresh_evals();
    std::vector<TraceRow> trace;

    auto offer = [&](uint32_t bits, int depth, double bound) {
        if (bound > incumbent + kSlack) return;
        pool.push(Node{bound, seq++, depth, bits});
        candidates += std::ldexp(1.0, m - depth);
    };
    auto record = [&](long iteration) {
        if (!options.record_trace) return;
        trace.push_back(TraceRow{iteration, static_cast<long>(pool.size()), candidates, incumbent});
    };

    for (uint32_t b : {0u, 1u}) {
        const uint32_t bits = 1u | (b << 1);
        double bound = -kInf;
        if (m > 2) {
            bound = completion_lower_bound(make_prefix(bits, 2), sc);
            ++x1;
        }
        offer(bits, 2, bound);
    }
    record(0);

    long iterations = 0;
    while (!pool.empty()) {
        const Node node = pool.top();
        pool.pop();
        candidates -= std::ldexp(1.0, m - node.depth);
        ++iterations;

        if (node.bound > incumbent + kSlack) {
            record(iterations);  // bound went stale after insertion
            continue;
        }
        if (node.depth == m) {
            const double value = eval.objective(node.bits);
            if (value <= incumbent + kSlack) {
                best_sel = Selection::from_mask(m, node.bits);
                incumbent = std::min(incumbent, value);
            }
            record(iterations);
            continue;
        }
        for (uint32_t b : {0u, 1u}) {
            const uint32_t bits = node.bits | (b << node.depth);
            const int depth = node.depth + 1;
            // Leaves inherit the parent bound; interior children get their
            // own, tighter bound.
            double bound = node.bound;
            if (depth < m) {
                bound = completion_lower_bound(make_prefix(bits, depth), sc);
                ++x1;
            }
            offer(bits, depth, bound);
        }
        record(iterations);
    }

    report = assemble(eval, best_sel);
    report.stats.bound_evals = x1;
    report.stats.leaf_evals = eval.fresh_evals() - fresh_before;
    report.stats.iterations = iterations;
    report.stats.trace = std::move(trace);
    report.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ugvplan
