#include "ugvplan/inner.hpp"

#include <algorithm>
#include <cmath>

namespace ugvplan {

namespace {

// exp(u) overflows past ~709; the curve is numerically +inf well before that.
constexpr double kExpOverflow = 700.0;

}  // namespace

double unit_energy(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("unit_energy: x must be > 0");
    const double u = M_LN2 / x;
    if (u > kExpOverflow) return kInf;
    return x * std::expm1(u);
}

double unit_energy_saving(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("unit_energy_saving: x must be > 0");
    // With u = ln2/x the expression 1 + ln2*2^(1/x)/x - 2^(1/x) rearranges to
    // u*e^u - (e^u - 1), which stays accurate for small u where the direct
    // form loses all significant digits.
    const double u = M_LN2 / x;
    if (u > kExpOverflow) return kInf;
    return u * std::exp(u) - std::expm1(u);
}

double time_for_saving(double y) {
    if (!(y > 0.0) || std::isinf(y)) throw std::invalid_argument("time_for_saving: y must be positive and finite");
    double lo = 1e-9;
    double hi = 1e9;
    int guard = 0;
    while (unit_energy_saving(hi) > y) {
        hi *= 10.0;
        if (++guard > 300) throw std::runtime_error("time_for_saving: bracket expansion failed (y too small)");
    }
    guard = 0;
    while (unit_energy_saving(lo) < y) {
        lo *= 0.1;
        if (++guard > 300) throw std::runtime_error("time_for_saving: bracket expansion failed (y too large)");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * lo; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (unit_energy_saving(mid) >= y)
            lo = mid;
        else
            hi = mid;
    }
    return std::sqrt(lo * hi);
}

namespace {

void check_fill_inputs(const std::vector<double>& best_gain, const std::vector<double>& qos,
                       double budget, double mu, const char* who) {
    if (best_gain.empty() || best_gain.size() != qos.size())
        throw std::invalid_argument(std::string(who) + ": gain/qos size mismatch");
    if (!(budget > 0.0)) throw std::invalid_argument(std::string(who) + ": budget must be > 0");
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument(std::string(who) + ": mu must lie in [0, 1]");
    for (size_t k = 0; k < best_gain.size(); ++k) {
        if (!(best_gain[k] > 0.0)) throw std::invalid_argument(std::string(who) + ": gains must be > 0");
        if (!(qos[k] > 0.0)) throw std::invalid_argument(std::string(who) + ": qos must be > 0");
    }
}

double budget_residual(const std::vector<double>& best_gain, const std::vector<double>& qos,
                       double budget, double mu, double rho) {
    double total = 0.0;
    for (size_t k = 0; k < best_gain.size(); ++k)
        total += qos[k] * time_for_saving(best_gain[k] * rho / (2.0 - mu));
    return total - budget;
}

}  // namespace

std::pair<double, double> multiplier_bracket(const std::vector<double>& best_gain,
                                             const std::vector<double>& qos,
                                             double budget, double mu) {
    check_fill_inputs(best_gain, qos, budget, mu, "multiplier_bracket");
    double qos_sum = 0.0, weighted = 0.0, min_gain = kInf;
    for (size_t k = 0; k < best_gain.size(); ++k) {
        qos_sum += qos[k];
        weighted += qos[k] * best_gain[k];
        min_gain = std::min(min_gain, best_gain[k]);
    }
    const double slope = unit_energy_saving(budget / qos_sum);
    const double lo = (2.0 - mu) * qos_sum / weighted * slope;
    const double hi = (2.0 - mu) / min_gain * slope;
    return {lo, hi};
}

double solve_multiplier(const std::vector<double>& best_gain, const std::vector<double>& qos,
                        double budget, double mu) {
    check_fill_inputs(best_gain, qos, budget, mu, "solve_multiplier");
    auto [lo, hi] = multiplier_bracket(best_gain, qos, budget, mu);
    // The residual is decreasing in rho and brackets to [>= 0, <= 0]; float
    // noise at a degenerate bracket (single user) can flip an endpoint sign.
    if (budget_residual(best_gain, qos, budget, mu, lo) <= 0.0) return lo;
    if (budget_residual(best_gain, qos, budget, mu, hi) >= 0.0) return hi;
    double rho = std::sqrt(lo * hi);
    for (int it = 0; it < 200; ++it) {
        rho = std::sqrt(lo * hi);
        const double r = budget_residual(best_gain, qos, budget, mu, rho);
        if (std::abs(r) <= 1e-10 * budget) return rho;
        if (r > 0.0)
            lo = rho;
        else
            hi = rho;
    }
    return rho;
}

BestGains best_gains(const Selection& sel, const Matrix& gains) {
    sel.validate();
    if (gains.cols != sel.size()) throw std::invalid_argument("best_gains: selection/gain size mismatch");
    BestGains out;
    out.value.resize(gains.rows);
    out.vertex.resize(gains.rows);
    for (int k = 0; k < gains.rows; ++k) {
        double best = -1.0;
        int at = -1;
        for (int m = 0; m < gains.cols; ++m)
            if (sel.selected(m) && gains(k, m) > best) {
                best = gains(k, m);
                at = m;
            }
        out.value[k] = best;
        out.vertex[k] = at;
    }
    return out;
}

Waterfill waterfill(const std::vector<double>& best_gain, const std::vector<double>& qos,
                    double budget, double mu) {
    Waterfill out;
    out.rho = solve_multiplier(best_gain, qos, budget, mu);
    const size_t n = best_gain.size();
    out.s.resize(n);
    out.q.resize(n);
    out.energy = 0.0;
    for (size_t k = 0; k < n; ++k) {
        out.s[k] = qos[k] * time_for_saving(best_gain[k] * out.rho / (2.0 - mu));
        out.q[k] = std::expm1(M_LN2 * qos[k] / out.s[k]) / best_gain[k];
        out.energy += out.s[k] * out.q[k];
    }
    return out;
}

Allocation allocate(const Selection& sel, const Scenario& sc, double comm_time) {
    if (!(comm_time > 0.0)) throw std::invalid_argument("allocate: no communication time left");
    const BestGains bg = best_gains(sel, sc.gains);
    const Waterfill wf = waterfill(bg.value, sc.qos, comm_time, sc.mu);
    Allocation out;
    out.serve = bg.vertex;
    out.s = wf.s;
    out.q = wf.q;
    out.rho = wf.rho;
    return out;
}

}  // namespace ugvplan
