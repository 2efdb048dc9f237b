#pragma once

#include <cstddef>

#include "cvgraph/errors.hpp"
#include "cvgraph/graph.hpp"
#include "cvgraph/hamiltonian.hpp"
#include "cvgraph/symplectic.hpp"

namespace cvgraph {

/// Gaussian state of n modes: covariance V_jk = 1/2 <{dr_j, dr_k}> and mean.
///
/// Construction checks symmetry and the uncertainty relation
/// V + (i/2) Omega >= 0 through the symplectic spectrum (min >= 1/2 - 1e-9).
class GaussianState {
  public:
    static constexpr double uncertainty_tolerance = 1e-9;

    explicit GaussianState(Matrix covariance);
    GaussianState(Matrix covariance, Vector mean);

    [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(v_.rows() / 2); }
    [[nodiscard]] const Matrix &covariance() const { return v_; }
    [[nodiscard]] const Vector &mean() const { return mean_; }
    [[nodiscard]] Spectrum symplectic_spectrum() const { return symplectic_eigenvalues(v_); }

  private:
    Matrix v_;
    Vector mean_;
};

/// Added second moments Y; must be symmetric and PSD within 1e-12.
class NoiseMatrix {
  public:
    explicit NoiseMatrix(Matrix y);
    [[nodiscard]] const Matrix &matrix() const { return y_; }

  private:
    Matrix y_;
};

GaussianState vacuum(std::size_t n);

GaussianState apply_symplectic(const GaussianState &state, const SymplecticMatrix &s);
/// q_j -> s q_j, p_j -> p_j / s.
GaussianState apply_squeeze(const GaussianState &state, std::size_t mode, double s);
/// exp(i q_j q_k): p_j -> p_j + q_k, p_k -> p_k + q_j.
GaussianState apply_cz(const GaussianState &state, std::size_t j, std::size_t k);

/// CZ S(s) |0>, V = 1/2 S_U S_U^T.
GaussianState graph_state(const Graph &g, const ModelParams &params);

/// exp(-H/T) / Z for H = 1/2 r^T M r, built from the Williamson form
/// M = S^{-1} (D (+) D) S^{-T}: V = S^T (nu (+) nu) S with
/// nu_k = coth(d_k / 2T) / 2. T = 0 gives the ground state.
GaussianState thermal_state(const QuadraticForm &h, double temperature);

/// <H> = 1/2 Tr(M V) + 1/2 mu^T M mu.
double expectation_quadratic(const GaussianState &state, const QuadraticForm &h);
double expectation_quadratic(const GaussianState &state, const Matrix &m);

/// <X^dagger X> for X = u . r, i.e. u^dagger (V + i Omega / 2) u + |u . mu|^2.
double operator_norm_expectation(const GaussianState &state, const ComplexVector &u);

/// Variance u^T V u of the real linear combination u . r.
double linear_variance(const GaussianState &state, const Vector &u);

/// V -> V + Y.
GaussianState add_noise(const GaussianState &state, const NoiseMatrix &y);

/// Normal-mode occupation 1/2 coth(d / 2T) with the T = 0 limit 1/2.
double thermal_occupation(double frequency, double temperature);

/// Exact finite-squeezing form of the thermal/diffusion correspondence for
/// uniform (s, omega):
///
///     V_T = V_G + c_q sum_j w_j w_j^T + c_p sum_j Pi_{p_j},
///
/// w_j = e_{q_j} + sum_{k ~ j} e_{p_k} the displacement generated by N_j,
/// c_q = (nu - 1/2) s^2, c_p = (nu - 1/2) / s^2, nu = coth(omega / 2 s^2 T) / 2.
struct DiffusionDecomposition {
    double c_q;
    double c_p;
    double occupation; ///< nu
    double residual;   ///< max-norm mismatch between both sides
};

/// Throws UnsupportedError for non-uniform parameters.
DiffusionDecomposition thermal_diffusion_decomposition(const Graph &g, const ModelParams &params, double temperature);

/// sum_j w_j w_j^T.
Matrix nullifier_conjugate_noise(const Graph &g);

} // namespace cvgraph
