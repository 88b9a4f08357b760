#pragma once

#include <complex>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Converts a power level in dBm to watts.
double dbm_to_watts(double dbm);

/// Effective SNR-per-watt of one user at one vertex from its downlink channel
/// g, uplink channel h, modulation loss beta, scattering efficiency eta, and
/// noise power n0 in watts. Throws std::invalid_argument when n0 <= 0.
double link_gain(std::complex<double> g, std::complex<double> h, double beta, double eta, double n0);

/// Data collected (bit/Hz) over t seconds at a vertex with selection bit
/// v_bit, gain a, and transmit power p watts. Zero time yields zero data.
double collected_data(double t, int v_bit, double a, double p);

/// Energy spent driving tour_length meters at constant speed with motion
/// coefficients alpha1 (J/m*s) and alpha2 (J/m).
double motion_energy(double tour_length, double alpha1, double alpha2, double speed);

/// Checks a complete plan (selection, edge matrix, per-user-per-vertex times
/// and powers) against every constraint of the planning problem: QoS targets,
/// the time budget, tour degree and single-cycle structure, binary edges with
/// zero diagonal, mandatory start vertex, no service at unvisited vertices,
/// and nonnegativity. `tol` is the relative slack applied to the metric
/// constraints so that solver output checked against itself passes.
/// Throws std::invalid_argument on shape mismatch.
FeasibilityResult check_plan_feasible(const Scenario& sc, const Selection& sel,
                                      const ByteMatrix& edges, const Matrix& times,
                                      const Matrix& powers, double tol = 1e-8);

}  // namespace ugvplan
