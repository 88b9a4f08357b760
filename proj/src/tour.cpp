#include "ugvplan/tour.hpp"

#include <algorithm>
#include <cmath>

namespace ugvplan {

namespace {

// Edge-set length summed in source-vertex order, so that the trace identity
// sum_ij dist(i,j) * edges(i,j) reproduces the reported length bit for bit.
double canonical_length(const ByteMatrix& edges, const Matrix& dist) {
    double total = 0.0;
    for (int i = 0; i < edges.rows; ++i)
        for (int j = 0; j < edges.cols; ++j)
            if (edges(i, j)) total += dist(i, j);
    return total;
}

TourSolution unreachable_sentinel(int m, double time_budget) {
    TourSolution t;
    t.edges = ByteMatrix(m, m, 0);
    t.length = kInf;
    t.comm_time = time_budget - kInf;  // -inf
    return t;
}

}  // namespace

TourSolution shortest_tour(const Selection& sel, const Matrix& dist, double speed,
                           double time_budget) {
    sel.validate();
    const int m = sel.size();
    if (dist.rows != m || dist.cols != m) throw std::invalid_argument("shortest_tour: distance matrix shape mismatch");

    std::vector<int> verts;
    for (int i = 0; i < m; ++i)
        if (sel.selected(i)) verts.push_back(i);
    const int n = static_cast<int>(verts.size());
    if (n > 18) throw std::length_error("shortest_tour: more than 18 selected vertices");

    TourSolution out;
    out.edges = ByteMatrix(m, m, 0);
    if (n == 1) {
        out.order = {0};
        out.length = 0.0;
        out.comm_time = time_budget;
        return out;
    }

    // Subset DP over the n-1 non-start vertices: best[mask][j] is the
    // shortest path from the start visiting exactly `mask`, ending at j.
    const int free_count = n - 1;
    const size_t masks = size_t{1} << free_count;
    std::vector<double> best(masks * free_count, kInf);
    std::vector<int16_t> parent(masks * free_count, -1);
    auto idx = [free_count](size_t mask, int j) { return mask * free_count + j; };

    for (int j = 0; j < free_count; ++j)
        best[idx(size_t{1} << j, j)] = dist(verts[0], verts[j + 1]);

    for (size_t mask = 1; mask < masks; ++mask)
        for (int j = 0; j < free_count; ++j) {
            if (!(mask >> j & 1)) continue;
            const double here = best[idx(mask, j)];
            if (here == kInf) continue;
            for (int t = 0; t < free_count; ++t) {
                if (mask >> t & 1) continue;
                const double step = dist(verts[j + 1], verts[t + 1]);
                if (step == kInf) continue;
                const size_t next = mask | size_t{1} << t;
                if (here + step < best[idx(next, t)]) {
                    best[idx(next, t)] = here + step;
                    parent[idx(next, t)] = static_cast<int16_t>(j);
                }
            }
        }

    const size_t full = masks - 1;
    double best_total = kInf;
    int best_end = -1;
    for (int j = 0; j < free_count; ++j) {
        const double back = dist(verts[j + 1], verts[0]);
        if (best[idx(full, j)] == kInf || back == kInf) continue;
        const double total = best[idx(full, j)] + back;
        if (total < best_total) {
            best_total = total;
            best_end = j;
        }
    }
    if (best_end < 0) return unreachable_sentinel(m, time_budget);

    std::vector<int> rev;
    size_t mask = full;
    for (int j = best_end; j >= 0;) {
        rev.push_back(j);
        const int p = parent[idx(mask, j)];
        mask &= ~(size_t{1} << j);
        j = p;
    }
    out.order.push_back(verts[0]);
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.order.push_back(verts[*it + 1]);
    out.order.push_back(verts[0]);
    for (size_t i = 0; i + 1 < out.order.size(); ++i) out.edges(out.order[i], out.order[i + 1]) = 1;
    out.length = canonical_length(out.edges, dist);
    out.comm_time = time_budget - out.length / speed;
    return out;
}

double comm_time_left(const Selection& sel, const Scenario& sc) {
    return shortest_tour(sel, sc.dist, sc.speed, sc.time_budget).comm_time;
}

const TourSolution& TourCache::get(const Selection& sel) {
    return get_mask(sel.mask());
}

const TourSolution& TourCache::get_mask(uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const Selection sel = Selection::from_mask(sc_->vertex_count, mask);
    auto [pos, inserted] =
        memo_.emplace(mask, shortest_tour(sel, sc_->dist, sc_->speed, sc_->time_budget));
    return pos->second;
}

}  // namespace ugvplan
