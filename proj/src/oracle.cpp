#include "ugvplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ugvplan/model.hpp"
#include "ugvplan/planner.hpp"

namespace ugvplan::oracle {

namespace {

// Enumerates every way to place `units` indistinguishable units into
// buf.size() slots, lexicographically by slot, invoking fn(buf) per
// placement.
template <typename F>
void compositions(int units, std::vector<int>& buf, size_t slot, F&& fn) {
    if (slot + 1 == buf.size()) {
        buf[slot] = units;
        fn(buf);
        return;
    }
    for (int c = 0; c <= units; ++c) {
        buf[slot] = c;
        compositions(units - c, buf, slot + 1, fn);
    }
}

// Minimum energy serving one user for `total` seconds across the selected
// vertices, splitting time on a tsteps grid and the data target on a dsteps
// grid. The per-cell power is pinned by making the cell's collected data
// equal its share, so each grid candidate meets the user's target exactly.
struct UserSplit {
    double energy = kInf;
    std::vector<int> time_units, data_units;
};

UserSplit best_user_split(const Scenario& sc, int user, const std::vector<int>& verts,
                          double total, int tsteps, int dsteps) {
    const size_t n = verts.size();
    const double target = sc.qos[user];
    const double ln2 = std::log(2.0);
    UserSplit best;
    std::vector<int> tbuf(n), dbuf(n);
    std::vector<double> seconds(n);
    compositions(tsteps - 1, tbuf, 0, [&](const std::vector<int>& tc) {
        for (size_t i = 0; i < n; ++i) seconds[i] = total * tc[i] / (tsteps - 1);
        compositions(dsteps - 1, dbuf, 0, [&](const std::vector<int>& dc) {
            double energy = 0.0;
            for (size_t i = 0; i < n; ++i) {
                if (dc[i] == 0) continue;
                const double bits = target * dc[i] / (dsteps - 1);
                const double u = ln2 * bits / seconds[i];  // +inf when no time
                if (u > 700.0) {
                    energy = kInf;
                    break;
                }
                energy += seconds[i] * std::expm1(u) / sc.gains(user, verts[i]);
            }
            if (energy < best.energy) {
                best.energy = energy;
                best.time_units = tc;
                best.data_units = dc;
            }
        });
    });
    return best;
}

}  // namespace

std::pair<double, Selection> exhaustive_best(const Scenario& sc) {
    sc.validate();
    const int m = sc.vertex_count;
    if (m > 16) throw std::length_error("exhaustive_best: more than 16 vertices");
    TourCache tours(sc);
    double best = kInf;
    uint32_t best_mask = 1;
    const uint32_t count = uint32_t{1} << (m - 1);
    for (uint32_t f = 0; f < count; ++f) {
        const uint32_t mask = 1u | (f << 1);
        const PlanDetail d = evaluate_selection(Selection::from_mask(m, mask), sc, tours);
        if (d.objective < best) {
            best = d.objective;
            best_mask = mask;
        }
    }
    return {best, Selection::from_mask(m, best_mask)};
}

double brute_tour_length(const Selection& sel, const Matrix& dist) {
    sel.validate();
    const int m = sel.size();
    if (dist.rows != m || dist.cols != m) throw std::invalid_argument("brute_tour_length: distance matrix shape mismatch");
    std::vector<int> rest;
    for (int i = 1; i < m; ++i)
        if (sel.selected(i)) rest.push_back(i);
    if (rest.size() + 1 > 9) throw std::length_error("brute_tour_length: more than 9 selected vertices");
    if (rest.empty()) return 0.0;

    double best = kInf;
    ByteMatrix edges(m, m, 0);
    do {
        std::fill(edges.data.begin(), edges.data.end(), uint8_t{0});
        int prev = 0;
        for (int v : rest) {
            edges(prev, v) = 1;
            prev = v;
        }
        edges(prev, 0) = 1;
        // Same source-vertex summation order as the subset-DP solver, so
        // equal-length optima agree bit for bit.
        double total = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (edges(i, j)) total += dist(i, j);
        if (total < best) best = total;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

std::pair<std::vector<int>, double> brute_assignment(const Matrix& cost) {
    const int n = cost.rows;
    if (cost.cols != n) throw std::invalid_argument("brute_assignment: matrix not square");
    if (n > 8) throw std::length_error("brute_assignment: more than 8 rows");
    if (n == 0) return {{}, 0.0};

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm;
    double best = kInf;
    do {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += cost(i, perm[i]);
        if (total < best) {
            best = total;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best_perm, best};
}

double brute_relaxed_comm_time(const Prefix& prefix, const Scenario& sc) {
    prefix.validate();
    sc.validate();
    const int m = sc.vertex_count;
    if (m > 7) throw std::length_error("brute_relaxed_comm_time: more than 7 vertices");
    if (prefix.depth() > m) throw std::invalid_argument("brute_relaxed_comm_time: prefix longer than vertex count");

    std::vector<int> forced, open;
    for (int i = 0; i < m; ++i) {
        if (i < prefix.depth()) {
            if (prefix.fixed[i]) forced.push_back(i);
        } else {
            open.push_back(i);
        }
    }
    if (forced.size() < 2) return sc.time_budget;

    const size_t ns = forced.size();
    double best = kInf;
    std::vector<char> taken(static_cast<size_t>(m), 0);
    std::vector<char> supplied(open.size(), 0);

    // Uncovered forced vertices each draw an incoming edge from a distinct
    // open vertex.
    auto cover_in = [&](auto&& self, const std::vector<int>& uncovered, size_t di, double cost) -> void {
        if (di == uncovered.size()) {
            if (cost < best) best = cost;
            return;
        }
        for (size_t fi = 0; fi < open.size(); ++fi) {
            if (supplied[fi]) continue;
            supplied[fi] = 1;
            self(self, uncovered, di + 1, cost + sc.dist(open[fi], uncovered[di]));
            supplied[fi] = 0;
        }
    };
    // Every forced vertex picks one outgoing edge; targets are pairwise
    // distinct since each vertex absorbs at most one incoming edge.
    auto pick_out = [&](auto&& self, size_t si, double cost) -> void {
        if (si == ns) {
            std::vector<int> uncovered;
            for (int v : forced)
                if (!taken[v]) uncovered.push_back(v);
            if (uncovered.size() > open.size()) return;
            cover_in(cover_in, uncovered, 0, cost);
            return;
        }
        const int s = forced[si];
        for (int v = 0; v < m; ++v) {
            if (v == s || taken[v]) continue;
            if (v < prefix.depth() && !prefix.fixed[v]) continue;
            taken[v] = 1;
            self(self, si + 1, cost + sc.dist(s, v));
            taken[v] = 0;
        }
    };
    pick_out(pick_out, 0, 0.0);

    if (best == kInf) return -kInf;
    return sc.time_budget - best / sc.speed;
}

GridPlan direct_p1_grid(const Scenario& sc, int time_steps, int power_steps) {
    sc.validate();
    if (sc.user_count > 3) throw std::length_error("direct_p1_grid: more than 3 users");
    if (sc.vertex_count > 4) throw std::length_error("direct_p1_grid: more than 4 vertices");
    if (time_steps < 2 || power_steps < 2) throw std::invalid_argument("direct_p1_grid: need at least 2 steps per grid axis");

    const int m = sc.vertex_count;
    const int users = sc.user_count;
    const int g = time_steps;
    GridPlan best;
    best.selection = Selection::start_only(m);
    best.time_split = Matrix(users, m, 0.0);
    best.data_split = Matrix(users, m, 0.0);

    const uint32_t count = uint32_t{1} << (m - 1);
    std::vector<int> cbuf(static_cast<size_t>(users));
    for (uint32_t f = 0; f < count; ++f) {
        const uint32_t mask = 1u | (f << 1);
        std::vector<int> verts;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) verts.push_back(i);

        std::vector<std::vector<int>> orders;
        std::vector<int> rest(verts.begin() + 1, verts.end());
        if (rest.empty()) {
            orders.push_back({});
        } else {
            do orders.push_back(rest);
            while (std::next_permutation(rest.begin(), rest.end()));
        }

        for (const auto& ord : orders) {
            double length = 0.0;
            int prev = 0;
            for (int v : ord) {
                length += sc.dist(prev, v);
                prev = v;
            }
            if (!ord.empty()) length += sc.dist(prev, 0);
            const double comm = sc.time_budget - length / sc.speed;
            if (!(comm > 0)) continue;
            const double motion = motion_energy(length, sc.alpha1, sc.alpha2, sc.speed);

            // Per-user minima at every gridded time total. A zero total can
            // never meet a positive target, so index 0 stays +inf; a single
            // user always takes the whole budget.
            std::vector<std::vector<UserSplit>> table(
                static_cast<size_t>(users), std::vector<UserSplit>(static_cast<size_t>(g)));
            for (int k = 0; k < users; ++k) {
                const int lo = (users == 1) ? g - 1 : 1;
                for (int i = lo; i < g; ++i)
                    table[k][i] = best_user_split(sc, k, verts, comm * i / (g - 1), time_steps, power_steps);
            }

            // Split the communication budget among users on the same grid.
            // Burning less than the whole budget is dominated: every user's
            // energy falls as its time grows.
            compositions(g - 1, cbuf, 0, [&](const std::vector<int>& c) {
                double e = 0.0;
                for (int k = 0; k < users; ++k) e += table[k][c[k]].energy;
                const double value = sc.mu * motion + (2.0 - sc.mu) * e;
                if (value >= best.value) return;
                best.value = value;
                best.selection = Selection::from_mask(m, mask);
                best.time_split = Matrix(users, m, 0.0);
                best.data_split = Matrix(users, m, 0.0);
                for (int k = 0; k < users; ++k) {
                    const UserSplit& us = table[k][c[k]];
                    const double total = comm * c[k] / (g - 1);
                    for (size_t i = 0; i < verts.size(); ++i) {
                        best.time_split(k, verts[i]) = total * us.time_units[i] / (time_steps - 1);
                        best.data_split(k, verts[i]) = sc.qos[k] * us.data_units[i] / (power_steps - 1);
                    }
                }
            });
        }
    }
    return best;
}

}  // namespace ugvplan::oracle
