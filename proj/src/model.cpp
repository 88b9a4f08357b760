#include "ugvplan/model.hpp"

#include <cmath>

namespace ugvplan {

void Scenario::validate() const {
    if (vertex_count < 1) throw std::invalid_argument("scenario: vertex_count must be >= 1");
    if (vertex_count > 30) throw std::invalid_argument("scenario: vertex_count above supported limit (30)");
    if (user_count < 1) throw std::invalid_argument("scenario: user_count must be >= 1");
    if (dist.rows != vertex_count || dist.cols != vertex_count)
        throw std::invalid_argument("scenario: dist must be vertex_count x vertex_count");
    if (gains.rows != user_count || gains.cols != vertex_count)
        throw std::invalid_argument("scenario: gains must be user_count x vertex_count");
    if (static_cast<int>(qos.size()) != user_count)
        throw std::invalid_argument("scenario: qos must have one entry per user");
    for (int i = 0; i < vertex_count; ++i) {
        if (dist(i, i) != 0.0) throw std::invalid_argument("scenario: dist diagonal must be zero");
        for (int j = 0; j < vertex_count; ++j) {
            const double d = dist(i, j);
            if (std::isnan(d) || d < 0.0) throw std::invalid_argument("scenario: dist entries must be >= 0 or +inf");
        }
    }
    for (int k = 0; k < user_count; ++k) {
        if (!(gains(k, 0) > 0.0))
            throw std::invalid_argument("scenario: every user needs a positive gain at the start vertex");
        for (int m = 0; m < vertex_count; ++m) {
            const double g = gains(k, m);
            if (std::isnan(g) || g < 0.0 || std::isinf(g))
                throw std::invalid_argument("scenario: gains must be finite and >= 0");
        }
        if (!(qos[k] > 0.0)) throw std::invalid_argument("scenario: qos targets must be > 0");
    }
    if (!(time_budget > 0.0)) throw std::invalid_argument("scenario: time_budget must be > 0");
    if (!(speed > 0.0)) throw std::invalid_argument("scenario: speed must be > 0");
    if (alpha1 < 0.0 || alpha2 < 0.0) throw std::invalid_argument("scenario: motion coefficients must be >= 0");
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("scenario: mu must lie in [0, 1]");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("scenario: beta must lie in (0, 1]");
    if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("scenario: eta must lie in (0, 1]");
}

Selection Selection::start_only(int m) {
    Selection sel(std::vector<uint8_t>(static_cast<size_t>(m), 0));
    sel.bits[0] = 1;
    return sel;
}

Selection Selection::all(int m) {
    return Selection(std::vector<uint8_t>(static_cast<size_t>(m), 1));
}

Selection Selection::from_mask(int m, uint32_t mask) {
    Selection sel(std::vector<uint8_t>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i) sel.bits[i] = (mask >> i) & 1u;
    return sel;
}

int Selection::count() const {
    int n = 0;
    for (uint8_t b : bits) n += b;
    return n;
}

uint32_t Selection::mask() const {
    uint32_t m = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) m |= 1u << i;
    return m;
}

void Selection::validate() const {
    if (bits.empty()) throw std::invalid_argument("selection: empty");
    if (bits.size() > 30) throw std::invalid_argument("selection: above supported vertex limit (30)");
    if (bits[0] != 1) throw std::invalid_argument("selection: start vertex must be selected");
    for (uint8_t b : bits)
        if (b != 0 && b != 1) throw std::invalid_argument("selection: entries must be 0 or 1");
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double link_gain(std::complex<double> g, std::complex<double> h, double beta, double eta, double n0) {
    if (!(n0 > 0.0)) throw std::invalid_argument("link_gain: noise power must be > 0");
    return beta * eta * std::norm(g) * std::norm(h) / n0;
}

double collected_data(double t, int v_bit, double a, double p) {
    if (t == 0.0) return 0.0;
    return t * std::log2(1.0 + v_bit * a * p);
}

double motion_energy(double tour_length, double alpha1, double alpha2, double speed) {
    return (alpha1 / speed + alpha2) * tour_length;
}

namespace {

// Walks the successor map from the start vertex and reports whether the edge
// matrix forms one cycle covering exactly the selected set.
bool single_cycle_covers(const Selection& sel, const ByteMatrix& edges) {
    const int m = sel.size();
    std::vector<int> succ(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (edges(i, j)) {
                if (succ[i] != -1) return false;
                succ[i] = j;
            }
    const int selected = sel.count();
    int at = 0;
    int steps = 0;
    do {
        if (at < 0 || succ[at] < 0) return false;
        at = succ[at];
        if (++steps > m) return false;
    } while (at != 0);
    return steps == selected;
}

}  // namespace

FeasibilityResult check_plan_feasible(const Scenario& sc, const Selection& sel,
                                      const ByteMatrix& edges, const Matrix& times,
                                      const Matrix& powers, double tol) {
    sc.validate();
    const int m = sc.vertex_count;
    const int k_users = sc.user_count;
    if (sel.size() != m) throw std::invalid_argument("check_plan_feasible: selection size mismatch");
    if (edges.rows != m || edges.cols != m) throw std::invalid_argument("check_plan_feasible: edge matrix shape mismatch");
    if (times.rows != k_users || times.cols != m) throw std::invalid_argument("check_plan_feasible: time matrix shape mismatch");
    if (powers.rows != k_users || powers.cols != m) throw std::invalid_argument("check_plan_feasible: power matrix shape mismatch");

    FeasibilityResult res;
    auto flag = [&res](const std::string& what) {
        res.ok = false;
        res.violations.push_back(what);
    };

    if (sel.bits[0] != 1) flag("start_vertex");

    bool binary_ok = true, diag_ok = true;
    for (int i = 0; i < m; ++i) {
        if (edges(i, i) != 0) diag_ok = false;
        for (int j = 0; j < m; ++j)
            if (edges(i, j) != 0 && edges(i, j) != 1) binary_ok = false;
    }
    if (!binary_ok) flag("binary_edge");
    if (!diag_ok) flag("zero_diagonal");

    // Degree and connectivity. A single selected vertex means no movement and
    // an all-zero edge matrix.
    const int selected = sel.count();
    bool degree_ok = true;
    for (int i = 0; i < m; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < m; ++j) {
            row += edges(i, j);
            col += edges(j, i);
        }
        const int want = (selected >= 2 && sel.selected(i)) ? 1 : 0;
        if (row != want || col != want) degree_ok = false;
    }
    if (!degree_ok) flag("degree");
    if (degree_ok && binary_ok && selected >= 2 && !single_cycle_covers(sel, edges)) flag("subtour");

    double tour_len = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (edges(i, j)) tour_len += sc.dist(i, j);
    if (std::isinf(tour_len)) flag("missing_edge");

    bool nonneg_ok = true, unvisited_ok = true;
    double total_time = 0.0;
    for (int k = 0; k < k_users; ++k)
        for (int v = 0; v < m; ++v) {
            const double t = times(k, v);
            const double p = powers(k, v);
            if (t < 0.0 || p < 0.0) nonneg_ok = false;
            if (!sel.selected(v) && t != 0.0) unvisited_ok = false;
            total_time += t;
        }
    if (!nonneg_ok) flag("nonnegativity");
    if (!unvisited_ok) flag("unvisited_time");

    if (tour_len / sc.speed + total_time > sc.time_budget * (1.0 + tol)) flag("time_budget");

    for (int k = 0; k < k_users; ++k) {
        double data = 0.0;
        for (int v = 0; v < m; ++v)
            data += collected_data(times(k, v), sel.bits[v], sc.gains(k, v), powers(k, v));
        if (data < sc.qos[k] * (1.0 - tol)) {
            flag("qos");
            break;
        }
    }
    return res;
}

}  // namespace ugvplan
