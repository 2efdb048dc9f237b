#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvgraph/errors.hpp"
#include "cvgraph/gaussian.hpp"
#include "cvgraph/graph.hpp"
#include "cvgraph/hamiltonian.hpp"

namespace cvgraph {

/// PT symplectic eigenvalues within this distance of 1/2 count as PPT.
inline constexpr double ppt_tolerance = 1e-9;

struct NegativityResult {
    double value;      ///< log-negativity in bits
    double min_pt_eig; ///< smallest symplectic eigenvalue after partial transposition
};

/// sum_k max(0, -log2(2 nu_k)) over the symplectic spectrum of the partially
/// transposed covariance, with nu_k >= 1/2 - ppt_tolerance treated as PPT.
/// `subset` must be a non-empty proper subset of the modes.
NegativityResult log_negativity(const GaussianState &state, std::span<const std::size_t> subset);
/// Bipartitions only; finer partitions are rejected.
NegativityResult log_negativity(const GaussianState &state, const Partition &bipartition);

/// Negativity of the full thermal state of (G, params) at absolute temperature T.
NegativityResult thermal_negativity(const Graph &g, const ModelParams &params, double temperature,
                                    const Partition &bipartition);

struct BoundaryNegativity {
    NegativityResult negativity;
    std::size_t boundary_modes; ///< size of the only state that was built
    std::size_t crossing_edges;
};

/// Negativity from the boundary subgraph alone: thermal state of
/// sum_{i in Y} omega_i/2 (q_i^2/s_i^4 + N_{Y,i}^2) at the same T with the
/// induced bipartition of Y. An empty boundary gives value 0 and
/// min_pt_eig = +inf.
BoundaryNegativity boundary_negativity(const Graph &g, const ModelParams &params, double temperature,
                                       const Partition &bipartition);

/// Absolute temperature at which the smallest PT symplectic eigenvalue
/// crosses 1/2, by bracketed bisection to absolute tolerance `tol`.
///
/// The bracket starts at [gap/100, 100 gap] and is grown geometrically (at
/// most 60 doublings per side, NoTransitionError otherwise); monotonicity of
/// the criterion is checked on every sampled temperature.
double critical_temperature(const Graph &g, const ModelParams &params, const Partition &bipartition,
                            double tol = 1e-9);

/// 1 / (2 arccoth(sqrt(1 + s^4) + s^2)), two-mode cluster, gap-rescaled.
double closed_form_t2c(double s);
/// 1 / (2 arccoth(1 / sqrt(1 + 4 s^4 - 2 sqrt2 sqrt(2 s^8 + s^4)))), three-mode
/// cluster centre vs ends, gap-rescaled.
double closed_form_t3c(double s);

/// Temperatures in units of the gap omega / s^2.
struct PhaseDiagramRow {
    double s;
    double inv_s;
    double t2c;
    double t3c;
    double t2c_closed;
    double t3c_closed;
    double inv_t2c;
    double inv_t3c;
};

/// One row per squeezing value. `tol` is the bisection tolerance in
/// gap-rescaled units; rows are evaluated on up to `threads` workers
/// (0 = hardware concurrency) and returned in grid order.
std::vector<PhaseDiagramRow> phase_diagram(std::span<const double> s_grid, double omega = 1.0, double tol = 1e-9,
                                           unsigned threads = 0);

/// Same row with temperatures converted to absolute units T = tau * omega / s^2.
PhaseDiagramRow in_absolute_units(const PhaseDiagramRow &row, double omega);

enum class Distillability { npt_two_block, bound_band, separable_boundary };

std::string to_string(Distillability d);

struct DistillabilityReport {
    Distillability verdict;
    double max_two_block;       ///< witness (a)
    double min_one_vs_rest;     ///< witness (b), interior modes
    double min_two_block_pt_eig;
    std::vector<NegativityResult> two_block;  ///< cut after vertex k, k = 0..n-2
    std::vector<NegativityResult> one_vs_rest; ///< every mode j
};

/// Open chains with uniform parameters only (UnsupportedError otherwise).
///
/// Witness (b) runs over interior modes: an end mode's boundary is a single
/// edge, so its one-vs-rest negativity dies at T2c together with the block
/// cuts. For n = 2 there are no interior modes and all modes are used.
DistillabilityReport classify_distillability(const Graph &g, const ModelParams &params, double temperature);

struct AreaLawRow {
    std::size_t cut_id;
    std::size_t boundary_modes;
    std::size_t crossing_edges;
    double log_negativity;
};

std::vector<AreaLawRow> area_law_scan(const Graph &g, const ModelParams &params, double temperature,
                                      std::span<const Partition> cuts, unsigned threads = 0);

/// Columns 0..c versus the rest of an nx x ny lattice, c = 0..nx-2.
std::vector<Partition> vertical_cuts(std::size_t nx, std::size_t ny);
/// Rows 0..r versus the rest, r = 0..ny-2.
std::vector<Partition> horizontal_cuts(std::size_t nx, std::size_t ny);
/// Vertices 0..k versus the rest, k = 0..n-2.
std::vector<Partition> prefix_cuts(std::size_t n);

} // namespace cvgraph
