#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugvplan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dense row-major matrix, sized once at construction.
template <typename T>
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int r, int c, T fill = T{}) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

using Matrix = Grid<double>;
using ByteMatrix = Grid<uint8_t>;

/// Immutable problem instance: geometry, link gains, and energy/time/QoS
/// parameters. Vertex 0 is the start/end of every tour.
struct Scenario {
    int vertex_count = 0;               // stopping vertices, start vertex included
    int user_count = 0;                 // IoT users
    Matrix dist;                        // vertex-to-vertex distance, meters; +inf = no edge
    Matrix gains;                       // per (user, vertex) SNR per watt
    std::vector<double> qos;            // per-user data target, bit/Hz
    double time_budget = 0;             // total operation time, seconds
    double speed = 1;                   // vehicle velocity, m/s
    double alpha1 = 0;                  // motion power coefficient, J/m * s
    double alpha2 = 0;                  // motion energy coefficient, J/m
    double mu = 1;                      // motion-vs-communication weight in [0, 1]
    double noise_dbm = 0;               // receiver noise power, dBm (provenance)
    double beta = 1;                    // modulation loss in (0, 1]
    double eta = 1;                     // scattering efficiency in (0, 1]
    std::vector<std::array<double, 2>> vertex_pos;  // provenance only, may be empty
    std::vector<std::array<double, 2>> user_pos;    // provenance only, may be empty

    /// Throws std::invalid_argument when a structural invariant is broken.
    void validate() const;
};

/// Binary vertex selection; the start vertex is always selected.
struct Selection {
    std::vector<uint8_t> bits;

    Selection() = default;
    explicit Selection(std::vector<uint8_t> b) : bits(std::move(b)) {}

    static Selection start_only(int m);
    static Selection all(int m);
    static Selection from_mask(int m, uint32_t mask);

    int size() const { return static_cast<int>(bits.size()); }
    int count() const;
    uint32_t mask() const;
    bool selected(int vertex) const { return bits[vertex] != 0; }

    /// Throws std::invalid_argument unless bits is nonempty 0/1 with bits[0] = 1.
    void validate() const;

    bool operator==(const Selection& other) const { return bits == other.bits; }
};

/// Shortest closed tour over a selected vertex set.
struct TourSolution {
    std::vector<int> order;   // cycle starting and ending at vertex 0; {0} if no movement
    ByteMatrix edges;         // binary edge matrix, edges(i, j) = 1 iff the tour drives i -> j
    double length = 0;        // meters; +inf when no finite tour exists
    double comm_time = 0;     // seconds left for communication: time_budget - length/speed

    bool reachable() const { return length != kInf; }
};

/// Optimal per-user service plan for a fixed selection.
struct Allocation {
    std::vector<int> serve;   // serving vertex per user
    std::vector<double> s;    // transmit seconds per user
    std::vector<double> q;    // transmit watts per user
    double rho = 0;           // budget multiplier from the water-filling system
};

/// One record of the branch-and-bound frontier trace.
struct TraceRow {
    long iteration = 0;       // pop count so far
    long pool_nodes = 0;      // nodes currently stored
    double pool_candidates = 0;  // full selections covered by stored nodes
    double incumbent = 0;     // best objective so far
};

struct SolveStats {
    long bound_evals = 0;     // lower-bound computations (X1)
    long leaf_evals = 0;      // exact objective computations (X2)
    long iterations = 0;      // pool pops
    double wall_seconds = 0;
    std::vector<TraceRow> trace;
};

/// Full solver output: the plan plus its energy split and search statistics.
struct SolveReport {
    double objective = 0;     // weighted energy, joules
    double motion_energy = 0; // joules
    double comm_energy = 0;   // joules (unweighted sum of s_k * q_k)
    bool feasible = true;     // false only for an infeasible forced selection
    Selection selection;
    TourSolution tour;
    Allocation alloc;
    SolveStats stats;
};

/// Verdict of the full constraint checker.
struct FeasibilityResult {
    bool ok = true;
    std::vector<std::string> violations;
};

}  // namespace ugvplan
