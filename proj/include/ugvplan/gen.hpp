#pragma once

#include <cstdint>
#include <random>

#include "ugvplan/types.hpp"

namespace ugvplan {

/// Deterministic random stream with explicit bit-to-double conversions, so
/// identical seeds reproduce identical scenarios on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller on two uniform draws (pairs cached).
    double normal();

    /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    uint32_t below(uint32_t n);

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Decorrelated child seed for (stream, index) under one master seed.
uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index);

/// Scenario generator parameters. Defaults reproduce the reference setup:
/// a 20 m x 20 m field, 50 users, 12 stopping vertices, path-loss exponent
/// 2.5 anchored at 1e-3 per meter, Rayleigh-faded down- and uplinks.
struct GenParams {
    double map_side = 20.0;
    int users = 50;
    int vertices = 12;
    double pathloss_exp = 2.5;
    double ref_loss = 1e-3;
    double ref_dist = 1.0;
    double eta = 0.78;
    double beta = 0.5;
    double noise_dbm = -95.0;
    double time_budget = 500.0;
    double qos_min = 1.0;
    double qos_max = 2.0;
    double alpha1 = 0.29;
    double alpha2 = 7.4;
    double speed = 1.0;
    double mu = 1.0;
    uint64_t seed = 0;
};

/// Draws a scenario: vertex and user positions uniform in the square,
/// Euclidean distances, per-link Rayleigh channels with distance-dependent
/// variance, uniform QoS targets. Fully determined by params.seed.
Scenario generate_scenario(const GenParams& params);

/// The same scenario restricted to its first `vertices` stopping vertices
/// (used by nested sweeps over the vertex count).
Scenario restrict_vertices(const Scenario& sc, int vertices);

}  // namespace ugvplan
