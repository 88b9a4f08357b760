#pragma once

#include <utility>
#include <vector>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Energy-time trade-off curve: energy per unit gain and unit data target
/// when a user transmits for x seconds per unit target, x * (2^(1/x) - 1).
/// Strictly decreasing and convex on x > 0. Throws on x <= 0.
double unit_energy(double x);

/// Negated slope of unit_energy: the marginal energy saved per extra second
/// of transmit time, 1 + ln2 * 2^(1/x) / x - 2^(1/x). Strictly positive,
/// strictly decreasing, convex on x > 0. Throws on x <= 0.
double unit_energy_saving(double x);

/// Inverse of unit_energy_saving: the unique x > 0 whose marginal saving
/// equals y, found by bracketed bisection (geometric expansion from
/// [1e-9, 1e9], relative tolerance 1e-12). Throws on y <= 0 or when the
/// bracket cannot be expanded to cover y.
double time_for_saving(double y);

/// Bisection bracket for the budget multiplier: at the returned (lo, hi) the
/// time-budget residual changes sign.
std::pair<double, double> multiplier_bracket(const std::vector<double>& best_gain,
                                             const std::vector<double>& qos,
                                             double budget, double mu);

/// Multiplier rho >= 0 at which the water-filling times exactly exhaust the
/// communication budget: sum_k qos_k * time_for_saving(gain_k * rho / (2 - mu))
/// = budget, to relative residual 1e-10 (at most 200 bisection steps).
/// Throws std::invalid_argument when budget <= 0 or any input is nonpositive.
double solve_multiplier(const std::vector<double>& best_gain, const std::vector<double>& qos,
                        double budget, double mu);

/// Best gain each user sees among the selected vertices, with the serving
/// vertex (lowest index on ties).
struct BestGains {
    std::vector<double> value;
    std::vector<int> vertex;
};
BestGains best_gains(const Selection& sel, const Matrix& gains);

/// Optimal times and powers for one communication budget: s_k from the
/// multiplier, q_k QoS-tight. energy is the unweighted sum of s_k * q_k.
struct Waterfill {
    std::vector<double> s;
    std::vector<double> q;
    double rho = 0;
    double energy = 0;
};
Waterfill waterfill(const std::vector<double>& best_gain, const std::vector<double>& qos,
                    double budget, double mu);

/// Full allocation for a selection given its available communication time.
/// Throws std::invalid_argument when comm_time <= 0.
Allocation allocate(const Selection& sel, const Scenario& sc, double comm_time);

}  // namespace ugvplan
