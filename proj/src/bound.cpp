#include "ugvplan/bound.hpp"

#include <algorithm>
#include <cmath>

#include "ugvplan/inner.hpp"
#include "ugvplan/model.hpp"

namespace ugvplan {

void Prefix::validate() const {
    if (fixed.empty()) throw std::invalid_argument("prefix: empty");
    if (fixed[0] != 1) throw std::invalid_argument("prefix: start vertex must be fixed selected");
    for (uint8_t b : fixed)
        if (b != 0 && b != 1) throw std::invalid_argument("prefix: entries must be 0 or 1");
}

std::pair<std::vector<int>, double> min_cost_assignment(const Matrix& cost) {
    const int n = cost.rows;
    if (n < 1 || cost.cols != n) throw std::invalid_argument("min_cost_assignment: matrix must be square and nonempty");

    // Shortest-augmenting-path assignment with dual potentials, 1-based
    // internally; row_of[j] is the row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        row_of[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = row_of[j0];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 < 0 || delta == kInf)
                throw std::runtime_error("min_cost_assignment: no finite perfect matching");
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of[j0] != 0);
        while (j0 != 0) {
            const int j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        }
    }

    std::vector<int> match(n, -1);
    for (int j = 1; j <= n; ++j)
        if (row_of[j] != 0) match[row_of[j] - 1] = j - 1;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += cost(i, match[i]);
    if (std::isinf(total)) throw std::runtime_error("min_cost_assignment: no finite perfect matching");
    return {std::move(match), total};
}

namespace {

enum class VertexState { FixedSelected, FixedUnselected, Free };

VertexState state_of(const Prefix& prefix, int vertex) {
    if (vertex >= prefix.depth()) return VertexState::Free;
    return prefix.fixed[vertex] ? VertexState::FixedSelected : VertexState::FixedUnselected;
}

}  // namespace

double relaxed_comm_time(const Prefix& prefix, const Scenario& sc) {
    prefix.validate();
    const int m = sc.vertex_count;
    if (prefix.depth() > m) throw std::invalid_argument("relaxed_comm_time: prefix longer than vertex count");

    int forced = 0;
    for (int i = 0; i < prefix.depth(); ++i) forced += prefix.fixed[i];
    if (forced < 2) return sc.time_budget;

    // Rows: M out-slots then M dummy suppliers. Columns: M in-slots then M
    // dummy absorbers. A fixed-selected vertex must ship its out-slot to a
    // real in-slot (absorber forbidden) and receive a real edge (supplier
    // forbidden); everyone else may opt out through the dummies.
    const int n = 2 * m;
    Matrix cost(n, n, kInf);
    for (int i = 0; i < m; ++i) {
        const VertexState si = state_of(prefix, i);
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const VertexState sj = state_of(prefix, j);
            if (si == VertexState::FixedUnselected || sj == VertexState::FixedUnselected) continue;
            cost(i, j) = sc.dist(i, j);
        }
        if (si != VertexState::FixedSelected) cost(i, m + i) = 0.0;          // out-slot idles
        if (si != VertexState::FixedSelected) cost(m + i, i) = 0.0;          // in-slot idles
        for (int j = 0; j < m; ++j) cost(m + i, m + j) = 0.0;                // dummy meets dummy
    }

    double forced_cost = 0.0;
    try {
        forced_cost = min_cost_assignment(cost).second;
    } catch (const std::runtime_error&) {
        return -kInf;
    }
    return sc.time_budget - forced_cost / sc.speed;
}

double completion_lower_bound(const Prefix& prefix, const Scenario& sc) {
    const double budget = relaxed_comm_time(prefix, sc);
    if (!(budget > 0.0)) return kInf;

    // Optimistic gains: every still-free vertex counts as selected.
    std::vector<double> gain(sc.user_count, 0.0);
    for (int k = 0; k < sc.user_count; ++k)
        for (int v = 0; v < sc.vertex_count; ++v)
            if (state_of(prefix, v) != VertexState::FixedUnselected)
                gain[k] = std::max(gain[k], sc.gains(k, v));

    const Waterfill wf = waterfill(gain, sc.qos, budget, sc.mu);
    const double motion = sc.mu * (sc.alpha1 + sc.alpha2 * sc.speed) * (sc.time_budget - budget);
    return motion + (2.0 - sc.mu) * wf.energy;
}

}  // namespace ugvplan
