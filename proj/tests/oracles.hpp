#pragma once

// Reference computations used only by the tests. Each one takes a route that
// does not go through the code it checks.

#include <algorithm>
#include <array>
#include <complex>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cvgraph/graph.hpp"
#include "cvgraph/hamiltonian.hpp"

namespace oracle {

using cvgraph::Matrix;
using cvgraph::Vector;

/// Moduli of the eigenvalues of i Omega M from a dense non-symmetric
/// eigensolver, one per +/- pair, ascending.
inline std::vector<double> symplectic_spectrum_general(const Matrix &m) {
    const auto n = m.rows() / 2;
    Matrix omega = Matrix::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n).setIdentity();
    omega.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    Eigen::EigenSolver<Matrix> es(omega * m, false);
    std::vector<double> moduli;
    for(Eigen::Index k = 0; k < 2 * n; ++k) moduli.push_back(std::abs(es.eigenvalues()(k)));
    std::sort(moduli.begin(), moduli.end());
    std::vector<double> out;
    for(std::size_t k = 0; k < moduli.size(); k += 2) out.push_back(0.5 * (moduli[k] + moduli[k + 1]));
    return out;
}

/// Thermal second moments of a single oscillator omega (q^2 + p^2) / 2 from a
/// truncated number basis: returns {<q^2>, <(qp + pq)/2>, <p^2>}.
inline std::array<double, 3> fock_thermal_moments(double omega, double temperature, int levels = 400) {
    using CMatrix = Eigen::MatrixXcd;
    CMatrix a = CMatrix::Zero(levels, levels);
    for(int k = 1; k < levels; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    const CMatrix ad = a.adjoint();
    const CMatrix q = (a + ad) / std::sqrt(2.0);
    const CMatrix p = std::complex<double>(0.0, -1.0) * (a - ad) / std::sqrt(2.0);

    Eigen::VectorXd weight(levels);
    for(int k = 0; k < levels; ++k) weight(k) = std::exp(-omega * k / temperature);
    weight /= weight.sum();
    // Drop the top level, where q^2 and p^2 feel the truncation.
    weight(levels - 1) = 0.0;

    // Tr(rho X Y) needs only the diagonal of X Y.
    auto expect = [&](const CMatrix &x, const CMatrix &y) {
        std::complex<double> acc = 0.0;
        for(int k = 0; k < levels; ++k) acc += weight(k) * x.row(k).transpose().cwiseProduct(y.col(k)).sum();
        return acc.real();
    };
    return {expect(q, q), 0.5 * (expect(q, p) + expect(p, q)), expect(p, p)};
}

/// Expands sum_i omega_i/2 (q_i^2/s_i^4 + (p_i - sum_{j~i} q_j)^2) monomial by
/// monomial and reads off M from H = 1/2 r^T M r.
inline Matrix symbolic_hamiltonian(const cvgraph::Graph &g, const cvgraph::ModelParams &params) {
    const std::size_t n = g.n();
    std::map<std::pair<std::size_t, std::size_t>, double> poly;
    auto add_square = [&](const std::vector<std::pair<std::size_t, double>> &linear, double weight) {
        for(const auto &[a, ca] : linear)
            for(const auto &[b, cb] : linear) poly[{std::min(a, b), std::max(a, b)}] += weight * ca * cb;
    };
    for(std::size_t i = 0; i < n; ++i) {
        const double w = params.omega()[i];
        const double s = params.squeeze()[i];
        add_square({{i, 1.0 / (s * s)}}, w / 2.0);
        std::vector<std::pair<std::size_t, double>> nullifier{{n + i, 1.0}};
        for(std::size_t j : g.neighbors(i)) nullifier.emplace_back(j, -1.0);
        add_square(nullifier, w / 2.0);
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(2 * n));
    for(const auto &[key, c] : poly) {
        const auto a = static_cast<Eigen::Index>(key.first);
        const auto b = static_cast<Eigen::Index>(key.second);
        // 1/2 r^T M r has coefficient M_ab on r_a r_b (a < b) and M_aa / 2 on r_a^2.
        if(a == b)
            m(a, a) = 2.0 * c;
        else
            m(a, b) = m(b, a) = c;
    }
    return m;
}

/// Thermal covariance of the graph Hamiltonian written directly in its normal
/// modes x = S_U^{-1} r, each a free oscillator of frequency omega_i / s_i^2:
/// V = S_U diag(nu) (+) diag(nu) S_U^T with S_U built by hand.
inline Matrix thermal_covariance_normal_modes(const cvgraph::Graph &g, const cvgraph::ModelParams &params,
                                              double temperature) {
    const auto n = static_cast<Eigen::Index>(g.n());
    Matrix su = Matrix::Zero(2 * n, 2 * n);
    for(Eigen::Index i = 0; i < n; ++i) {
        const double s = params.squeeze()[static_cast<std::size_t>(i)];
        su(i, i) = s;
        su(n + i, n + i) = 1.0 / s;
    }
    for(const auto &[i, j] : g.edges()) {
        const auto a = static_cast<Eigen::Index>(i);
        const auto b = static_cast<Eigen::Index>(j);
        su(n + a, b) = params.squeeze()[j];
        su(n + b, a) = params.squeeze()[i];
    }
    Vector nu(2 * n);
    for(Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double freq = params.omega()[k] / (params.squeeze()[k] * params.squeeze()[k]);
        nu(i) = nu(n + i) = temperature == 0.0 ? 0.5 : 0.5 / std::tanh(freq / (2.0 * temperature));
    }
    return su * nu.asDiagonal() * su.transpose();
}

/// Log-negativity from the general-eigensolver spectrum of the p-flipped
/// covariance.
inline double log_negativity(const Matrix &v, const std::vector<std::size_t> &subset) {
    const auto n = v.rows() / 2;
    Vector sign = Vector::Ones(2 * n);
    for(std::size_t j : subset) sign(n + static_cast<Eigen::Index>(j)) = -1.0;
    const Matrix pt = sign.asDiagonal() * v * sign.asDiagonal();
    double total = 0.0;
    for(double nu : symplectic_spectrum_general(pt))
        if(nu < 0.5 - 1e-9) total -= std::log2(2.0 * nu);
    return total;
}

/// Crossing edges by checking every vertex pair.
inline std::vector<cvgraph::Edge> crossing_edges_brute_force(const cvgraph::Graph &g, const cvgraph::Partition &p) {
    std::vector<cvgraph::Edge> out;
    for(std::size_t i = 0; i < g.n(); ++i)
        for(std::size_t j = i + 1; j < g.n(); ++j)
            if(g.has_edge(i, j) && p.block_of(i) != p.block_of(j)) out.emplace_back(i, j);
    return out;
}

} // namespace oracle
