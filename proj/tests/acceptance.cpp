// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cvgraph/entanglement.hpp"
#include "cvgraph/gaussian.hpp"
#include "cvgraph/hamiltonian.hpp"
#include "cvgraph/verify.hpp"
#include "oracles.hpp"

using namespace cvgraph;

namespace {

constexpr std::uint64_t seed = 20240611;

// Tolerances.
constexpr double tc_rel_tol = 1e-6;
constexpr double bisection_tol = 1e-10;
constexpr double boundary_tol = 1e-9;
constexpr double energy_rel_tol = 1e-10;
constexpr double nullifier_tol = 1e-12;
constexpr double gap_rel_tol = 1e-9;
constexpr double normal_mode_tol = 1e-12;
constexpr double commutator_tol = 1e-12;
constexpr double fock_tol = 1e-8;
constexpr double diffusion_tol = 1e-12;
constexpr double witness_floor = 1e-3;

// Runtime limits in seconds.
constexpr double fig_curve_seconds = 1.0;
constexpr double boundary_seconds = 10.0;

const std::vector<double> s_grid{0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};

int failures = 0;

void report(int id, bool ok, const std::string &detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    failures += ok ? 0 : 1;
}

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void fig_curves() {
    auto start = std::chrono::steady_clock::now();
    double worst2 = 0.0;
    std::vector<double> t2(s_grid.size());
    for(std::size_t k = 0; k < s_grid.size(); ++k) {
        const auto params = ModelParams::uniform(2, s_grid[k]);
        t2[k] = critical_temperature(chain(2), params, Partition::bipartition(2, {0}), bisection_tol * params.gap()) /
                params.gap();
        worst2 = std::max(worst2, rel(t2[k], closed_form_t2c(s_grid[k])));
    }
    double elapsed = seconds_since(start);
    report(1, worst2 <= tc_rel_tol && elapsed < fig_curve_seconds,
           fmt("T2c max rel error %.3g (limit %.0e), %.3f s", worst2, tc_rel_tol, elapsed));

    start = std::chrono::steady_clock::now();
    double worst3 = 0.0;
    bool ordered = true;
    for(std::size_t k = 0; k < s_grid.size(); ++k) {
        const auto params = ModelParams::uniform(3, s_grid[k]);
        const double t3 = critical_temperature(chain(3), params, Partition::bipartition(3, {1}),
                                               bisection_tol * params.gap()) /
                          params.gap();
        worst3 = std::max(worst3, rel(t3, closed_form_t3c(s_grid[k])));
        ordered = ordered && t2[k] < t3;
    }
    elapsed = seconds_since(start);
    report(2, worst3 <= tc_rel_tol && ordered && elapsed < fig_curve_seconds,
           fmt("T3c max rel error %.3g (limit %.0e), T2c < T3c everywhere: ", worst3, tc_rel_tol) +
               (ordered ? "yes" : "no") + fmt(", %.3f s", elapsed));
}

void boundary_theorem() {
    Rng rng(seed);
    const auto start = std::chrono::steady_clock::now();
    std::uniform_real_distribution<double> squeeze(0.5, 4.0);
    std::uniform_real_distribution<double> tau(0.0, 3.0);
    std::uniform_int_distribution<std::size_t> length(3, 12);
    double worst = 0.0;
    for(int trial = 0; trial < 50; ++trial) {
        Graph g;
        switch(trial % 3) {
            case 0: g = chain(length(rng)); break;
            case 1: g = ring(length(rng)); break;
            default: g = lattice2d(4, 4); break;
        }
        std::vector<double> s(g.n());
        for(auto &x : s) x = squeeze(rng);
        const ModelParams params(s, std::vector<double>(g.n(), 1.0));
        const double t = tau(rng) * params.gap();
        const auto p = random_bipartition(g.n(), rng, trial % 2 == 0);
        const double full = thermal_negativity(g, params, t, p).value;
        const double reduced = boundary_negativity(g, params, t, p).negativity.value;
        worst = std::max(worst, std::abs(full - reduced));
    }
    const double elapsed = seconds_since(start);
    report(3, worst <= boundary_tol && elapsed < boundary_seconds,
           fmt("50 instances, max |full - boundary| = %.3g (limit %.0e), %.3f s", worst, boundary_tol, elapsed));
}

void ground_state_identities() {
    Rng rng(seed + 4);
    double energy = 0.0, gaussian_null = 0.0, variance = 0.0;
    for(int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto g = random_graph(n, 0.4, seed + trial);
        const auto params = random_params(n, rng);
        const auto state = graph_state(g, params);
        double e0 = 0.0;
        for(std::size_t i = 0; i < n; ++i) e0 += params.omega()[i] / (2.0 * params.squeeze()[i] * params.squeeze()[i]);
        energy = std::max(energy, rel(expectation_quadratic(state, hamiltonian_matrix(g, params)), e0));
        for(std::size_t i = 0; i < n; ++i) {
            const double s2 = params.squeeze()[i] * params.squeeze()[i];
            gaussian_null = std::max(gaussian_null, std::abs(operator_norm_expectation(state, gaussian_nullifier(g, i, params))));
            variance = std::max(variance, std::abs(linear_variance(state, nullifier(g, i)) - 1.0 / (2.0 * s2)));
        }
    }
    report(4, energy <= energy_rel_tol && gaussian_null <= nullifier_tol && variance <= nullifier_tol,
           fmt("energy rel %.3g, gaussian nullifier %.3g, nullifier variance %.3g", energy, gaussian_null, variance));
}

void gap_and_spectrum() {
    Rng rng(seed + 5);
    double worst = 0.0;
    for(int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto g = random_graph(n, 0.4, seed + 100 + trial);
        const auto params = random_params(n, rng);
        worst = std::max(worst, rel(energy_gap(hamiltonian_matrix(g, params)), params.gap()));
    }
    const double g4 = energy_gap(hamiltonian_matrix(chain(4), ModelParams::uniform(4, 1.5)));
    const double g40 = energy_gap(hamiltonian_matrix(chain(40), ModelParams::uniform(40, 1.5)));
    report(5, worst <= gap_rel_tol && std::abs(g4 - g40) <= gap_rel_tol,
           fmt("gap rel error %.3g, |gap(chain4) - gap(chain40)| = %.3g", worst, std::abs(g4 - g40)));
}

void normal_mode_map() {
    Rng rng(seed + 6);
    double worst = 0.0;
    for(int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const auto g = random_graph(n, 0.5, seed + 200 + trial);
        const auto params = random_params(n, rng);
        const Matrix su = graph_symplectic(g, params).matrix();
        std::vector<double> freq(n);
        for(std::size_t i = 0; i < n; ++i) freq[i] = params.omega()[i] / std::pow(params.squeeze()[i], 2);
        worst = std::max(worst, max_abs(su.transpose() * hamiltonian_matrix(g, params).matrix() * su - block_diagonal(freq)));
    }
    report(6, worst <= normal_mode_tol, fmt("max residual %.3g (limit %.0e)", worst, normal_mode_tol));
}

void frustration_free() {
    Rng rng(seed + 7);
    double worst = 0.0;
    for(int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const auto g = random_graph(n, 0.5, seed + 300 + trial);
        worst = std::max(worst, frustration_free_check(g, random_params(n, rng)).max_violation);
    }
    report(7, worst <= commutator_tol, fmt("max commutator residual %.3g (limit %.0e)", worst, commutator_tol));
}

void thermal_oracle() {
    double worst = 0.0;
    for(double ratio = 0.5; ratio <= 10.0 + 1e-12; ratio += 0.5) {
        const double omega = 1.0;
        const double t = omega / ratio;
        const auto state = thermal_state(QuadraticForm(omega * Matrix::Identity(2, 2)), t);
        const auto ref = oracle::fock_thermal_moments(omega, t);
        worst = std::max({worst, std::abs(state.covariance()(0, 0) - ref[0]), std::abs(state.covariance()(0, 1) - ref[1]),
                          std::abs(state.covariance()(1, 1) - ref[2])});
    }
    report(8, worst <= fock_tol, fmt("max deviation from number-basis sum %.3g (limit %.0e)", worst, fock_tol));
}

void thermal_diffusion() {
    double residual = 0.0, ratio = 0.0;
    // Beyond s ~ 2 at T ~ 3 the entries of V reach 1e3 and the rounding of M
    // alone moves them by more than 1e-12.
    for(double s : {0.5, 1.0, 1.5, 2.0})
        for(std::size_t n : {3u, 6u, 10u})
            for(double t : {0.05, 0.5, 1.0, 2.0, 3.0})
                for(int kind = 0; kind < 2; ++kind) {
                    const auto g = kind == 0 ? chain(n) : ring(n);
                    const auto d = thermal_diffusion_decomposition(g, ModelParams::uniform(n, s, 1.0), t);
                    residual = std::max(residual, d.residual);
                    ratio = std::max(ratio, std::abs(d.c_p / d.c_q - std::pow(s, -4)));
                }
    report(9, residual <= diffusion_tol && ratio <= diffusion_tol,
           fmt("max residual %.3g, max |c_p/c_q - s^-4| = %.3g", residual, ratio));
}

void bound_band() {
    const std::size_t n = 8;
    const auto g = chain(n);
    const auto params = ModelParams::uniform(n, 1.0);
    auto block = [&](double tau, std::size_t k) {
        VertexSet left(k + 1);
        std::iota(left.begin(), left.end(), 0);
        return thermal_negativity(g, params, tau * params.gap(), Partition::bipartition(n, left));
    };
    auto single = [&](double tau, std::size_t j) {
        return thermal_negativity(g, params, tau * params.gap(), Partition::bipartition(n, {j}));
    };

    bool blocks_zero = true;
    double min_block_eig = 1.0;
    for(std::size_t k = 0; k + 1 < n; ++k) {
        const auto r = block(1.3, k);
        blocks_zero = blocks_zero && r.value == 0.0 && r.min_pt_eig >= 0.5 - ppt_tolerance;
        min_block_eig = std::min(min_block_eig, r.min_pt_eig);
    }
    std::vector<double> singles(n);
    bool singles_positive = true;
    for(std::size_t j = 0; j < n; ++j) {
        singles[j] = single(1.3, j).value;
        singles_positive = singles_positive && singles[j] > witness_floor;
    }
    bool cold_npt = false;
    for(std::size_t k = 0; k + 1 < n; ++k) cold_npt = cold_npt || block(0.5, k).value > 0.0;
    bool hot_zero = true;
    for(std::size_t k = 0; k + 1 < n; ++k) hot_zero = hot_zero && block(2.0, k).value == 0.0;
    for(std::size_t j = 0; j < n; ++j) hot_zero = hot_zero && single(2.0, j).value == 0.0;

    const double interior = *std::min_element(singles.begin() + 1, singles.end() - 1);
    const std::string detail = std::string("tau=1.3 blocks PPT: ") + (blocks_zero ? "yes" : "no") +
             fmt(" (min PT eig %.6g); one-vs-rest ends %.3g, %.3g", min_block_eig, singles.front(), singles.back()) +
             fmt(", interior min %.4g; tau=0.5 some block NPT: ", interior) + (cold_npt ? "yes" : "no") +
             "; tau=2.0 all zero: " + (hot_zero ? "yes" : "no");
    report(10, blocks_zero && singles_positive && cold_npt && hot_zero, detail);
    if(!singles_positive) {
        std::printf("  note: an end mode's crossing edges form a single two-mode cluster, whose negativity is\n"
                    "  already zero above T2c = %.5f; only interior modes stay NPT up to T3c = %.5f.\n",
                    closed_form_t2c(1.0), closed_form_t3c(1.0));
    }
}

void area_law() {
    const std::size_t nx = 5, ny = 5;
    const auto g = lattice2d(nx, ny);
    const auto params = ModelParams::uniform(nx * ny, 1.0);
    auto cuts = vertical_cuts(nx, ny);
    const auto horizontal = horizontal_cuts(nx, ny);
    cuts.insert(cuts.end(), horizontal.begin(), horizontal.end());
    double worst = 0.0;
    bool small_boundaries = true;
    for(double tau : {0.0, 0.3, 1.0}) {
        const auto rows = area_law_scan(g, params, tau * params.gap(), cuts, 0);
        for(const auto &r : rows) {
            worst = std::max(worst, std::abs(r.log_negativity - thermal_negativity(g, params, tau * params.gap(), cuts[r.cut_id]).value));
            small_boundaries = small_boundaries && r.boundary_modes == 2 * nx;
        }
    }
    double spread = 0.0;
    for(double tau : {0.0, 0.3, 1.0}) {
        std::vector<double> values;
        for(std::size_t n : {4u, 8u, 16u}) {
            VertexSet left(n / 2);
            std::iota(left.begin(), left.end(), 0);
            values.push_back(thermal_negativity(chain(n), ModelParams::uniform(n, 1.0), tau, Partition::bipartition(n, left)).value);
        }
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        spread = std::max(spread, *hi - *lo);
    }
    report(11, worst <= boundary_tol && small_boundaries && spread <= boundary_tol,
           fmt("5x5 straight cuts |boundary - full| max %.3g, chain N in {4,8,16} spread %.3g", worst, spread));
}

} // namespace

int main() {
    fig_curves();
    boundary_theorem();
    ground_state_identities();
    gap_and_spectrum();
    normal_mode_map();
    frustration_free();
    thermal_oracle();
    thermal_diffusion();
    bound_band();
    area_law();
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
