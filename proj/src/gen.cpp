#include "ugvplan/gen.hpp"

#include <cmath>

#include "ugvplan/model.hpp"

namespace ugvplan {

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

uint32_t Rng::below(uint32_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be >= 1");
    const uint64_t limit = (~uint64_t{0} / n) * n;
    uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return static_cast<uint32_t>(x % n);
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
    uint64_t state = master;
    uint64_t out = splitmix64(state);
    state ^= stream * 0xD6E8FEB86659FD93ull;
    out ^= splitmix64(state);
    state ^= index * 0xCA5A826395121157ull;
    out ^= splitmix64(state);
    return out;
}

Scenario generate_scenario(const GenParams& params) {
    if (params.vertices < 1 || params.users < 1) throw std::invalid_argument("generate_scenario: need at least one vertex and one user");
    if (!(params.map_side > 0.0) || !(params.ref_loss > 0.0) || !(params.ref_dist > 0.0))
        throw std::invalid_argument("generate_scenario: geometry parameters must be > 0");
    if (!(params.qos_min > 0.0) || params.qos_max < params.qos_min)
        throw std::invalid_argument("generate_scenario: invalid qos bounds");

    Rng rng(params.seed);
    const int m = params.vertices;
    const int k_users = params.users;

    Scenario sc;
    sc.vertex_count = m;
    sc.user_count = k_users;
    sc.time_budget = params.time_budget;
    sc.speed = params.speed;
    sc.alpha1 = params.alpha1;
    sc.alpha2 = params.alpha2;
    sc.mu = params.mu;
    sc.noise_dbm = params.noise_dbm;
    sc.beta = params.beta;
    sc.eta = params.eta;

    sc.vertex_pos.resize(m);
    for (auto& p : sc.vertex_pos) {
        p[0] = rng.uniform(0.0, params.map_side);
        p[1] = rng.uniform(0.0, params.map_side);
    }
    sc.user_pos.resize(k_users);
    for (auto& p : sc.user_pos) {
        p[0] = rng.uniform(0.0, params.map_side);
        p[1] = rng.uniform(0.0, params.map_side);
    }

    sc.qos.resize(k_users);
    for (auto& g : sc.qos) g = rng.uniform(params.qos_min, params.qos_max);

    sc.dist = Matrix(m, m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j)
                sc.dist(i, j) = std::hypot(sc.vertex_pos[i][0] - sc.vertex_pos[j][0],
                                           sc.vertex_pos[i][1] - sc.vertex_pos[j][1]);

    const double n0 = dbm_to_watts(params.noise_dbm);
    sc.gains = Matrix(k_users, m, 0.0);
    for (int k = 0; k < k_users; ++k)
        for (int v = 0; v < m; ++v) {
            const double d = std::hypot(sc.user_pos[k][0] - sc.vertex_pos[v][0],
                                        sc.user_pos[k][1] - sc.vertex_pos[v][1]);
            const double loss = params.ref_loss * std::pow(d / params.ref_dist, -params.pathloss_exp);
            const double scale = std::sqrt(loss / 2.0);
            const std::complex<double> g(scale * rng.normal(), scale * rng.normal());
            const std::complex<double> h(scale * rng.normal(), scale * rng.normal());
            sc.gains(k, v) = link_gain(g, h, params.beta, params.eta, n0);
        }

    sc.validate();
    return sc;
}

Scenario restrict_vertices(const Scenario& sc, int vertices) {
    if (vertices < 1 || vertices > sc.vertex_count)
        throw std::invalid_argument("restrict_vertices: vertex count out of range");
    Scenario out = sc;
    out.vertex_count = vertices;
    out.dist = Matrix(vertices, vertices, 0.0);
    for (int i = 0; i < vertices; ++i)
        for (int j = 0; j < vertices; ++j) out.dist(i, j) = sc.dist(i, j);
    out.gains = Matrix(sc.user_count, vertices, 0.0);
    for (int k = 0; k < sc.user_count; ++k)
        for (int v = 0; v < vertices; ++v) out.gains(k, v) = sc.gains(k, v);
    if (!sc.vertex_pos.empty())
        out.vertex_pos.assign(sc.vertex_pos.begin(), sc.vertex_pos.begin() + vertices);
    out.validate();
    return out;
}

}  // namespace ugvplan
