#include "cvgraph/gaussian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cvgraph {

namespace {

    void require_mode(const GaussianState &state, std::size_t j, const char *what) {
        if(j >= state.n()) {
            std::ostringstream msg;
            msg << what << ": mode " << j << " out of range for " << state.n() << " modes";
            throw std::invalid_argument(msg.str());
        }
    }

    Matrix symmetrized(const Matrix &m) { return 0.5 * (m + m.transpose()); }

} // namespace

GaussianState::GaussianState(Matrix covariance) : GaussianState(covariance, Vector::Zero(covariance.rows())) {}

GaussianState::GaussianState(Matrix covariance, Vector mean) : v_(std::move(covariance)), mean_(std::move(mean)) {
    if(v_.rows() != v_.cols() || v_.rows() == 0 || v_.rows() % 2 != 0)
        throw std::invalid_argument("GaussianState: covariance must be a non-empty 2n x 2n matrix");
    if(mean_.size() != v_.rows()) throw std::invalid_argument("GaussianState: mean vector has the wrong length");
    const double nu_min = symplectic_eigenvalues(v_).min();
    if(nu_min < 0.5 - uncertainty_tolerance) {
        std::ostringstream msg;
        msg << "GaussianState: covariance violates the uncertainty relation (min symplectic eigenvalue " << nu_min << ")";
        throw std::invalid_argument(msg.str());
    }
}

NoiseMatrix::NoiseMatrix(Matrix y) : y_(std::move(y)) {
    if(y_.rows() != y_.cols() || y_.rows() % 2 != 0) throw std::invalid_argument("NoiseMatrix: expected a 2n x 2n matrix");
    if(max_abs(y_ - y_.transpose()) > 1e-12 * std::max(1.0, max_abs(y_)))
        throw std::invalid_argument("NoiseMatrix: matrix is not symmetric");
    if(y_.size() > 0) {
        const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(symmetrized(y_), Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
        if(lmin < -1e-12) {
            std::ostringstream msg;
            msg << "NoiseMatrix: matrix is not positive semidefinite (eigenvalue " << lmin << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

GaussianState vacuum(std::size_t n) {
    if(n == 0) throw std::invalid_argument("vacuum: mode count must be >= 1");
    return GaussianState(0.5 * Matrix::Identity(2 * static_cast<Eigen::Index>(n), 2 * static_cast<Eigen::Index>(n)));
}

GaussianState apply_symplectic(const GaussianState &state, const SymplecticMatrix &s) {
    if(s.n() != state.n()) throw std::invalid_argument("apply_symplectic: size mismatch");
    const Matrix &sm = s.matrix();
    return GaussianState(symmetrized(sm * state.covariance() * sm.transpose()), sm * state.mean());
}

GaussianState apply_squeeze(const GaussianState &state, std::size_t mode, double s) {
    require_mode(state, mode, "apply_squeeze");
    if(!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("apply_squeeze: squeezing must be finite and > 0");
    const auto n = static_cast<Eigen::Index>(state.n());
    const auto j = static_cast<Eigen::Index>(mode);
    Matrix sm = Matrix::Identity(2 * n, 2 * n);
    sm(j, j) = s;
    sm(n + j, n + j) = 1.0 / s;
    return apply_symplectic(state, SymplecticMatrix(std::move(sm)));
}

GaussianState apply_cz(const GaussianState &state, std::size_t j, std::size_t k) {
    require_mode(state, j, "apply_cz");
    require_mode(state, k, "apply_cz");
    if(j == k) throw std::invalid_argument("apply_cz: needs two distinct modes");
    const auto n = static_cast<Eigen::Index>(state.n());
    Matrix sm = Matrix::Identity(2 * n, 2 * n);
    sm(n + static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = 1.0;
    sm(n + static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = 1.0;
    return apply_symplectic(state, SymplecticMatrix(std::move(sm)));
}

GaussianState graph_state(const Graph &g, const ModelParams &params) {
    const SymplecticMatrix su = graph_symplectic(g, params);
    return GaussianState(symmetrized(0.5 * su.matrix() * su.matrix().transpose()));
}

double thermal_occupation(double frequency, double temperature) {
    if(temperature < 0.0 || !std::isfinite(temperature)) throw std::invalid_argument("temperature must be finite and >= 0");
    if(temperature == 0.0) return 0.5;
    return 0.5 / std::tanh(frequency / (2.0 * temperature));
}

GaussianState thermal_state(const QuadraticForm &h, double temperature) {
    if(temperature < 0.0 || !std::isfinite(temperature))
        throw std::invalid_argument("thermal_state: temperature must be finite and >= 0");
    if(h.is_critical())
        throw std::invalid_argument("thermal_state: critical (positive-semidefinite) Hamiltonian has no thermal state");
    const auto wd = williamson(h.matrix());
    std::vector<double> nu;
    nu.reserve(wd.d.size());
    for(double d : wd.d) nu.push_back(thermal_occupation(d, temperature));
    const Matrix &s = wd.S.matrix();
    return GaussianState(symmetrized(s.transpose() * block_diagonal(nu) * s));
}

double expectation_quadratic(const GaussianState &state, const Matrix &m) {
    if(m.rows() != state.covariance().rows() || m.cols() != state.covariance().cols())
        throw std::invalid_argument("expectation_quadratic: size mismatch");
    return 0.5 * (m.cwiseProduct(state.covariance())).sum() + 0.5 * state.mean().dot(m * state.mean());
}

double expectation_quadratic(const GaussianState &state, const QuadraticForm &h) {
    return expectation_quadratic(state, h.matrix());
}

double operator_norm_expectation(const GaussianState &state, const ComplexVector &u) {
    if(u.size() != state.covariance().rows()) throw std::invalid_argument("operator_norm_expectation: size mismatch");
    const SymplecticForm omega(state.n());
    const ComplexMatrix second = state.covariance().cast<std::complex<double>>() +
                                 std::complex<double>(0.0, 0.5) * omega.matrix().cast<std::complex<double>>();
    const std::complex<double> fluct = u.dot(second * u); // dot conjugates the left operand
    const std::complex<double> shift = u.transpose() * state.mean().cast<std::complex<double>>();
    return fluct.real() + std::norm(shift);
}

double linear_variance(const GaussianState &state, const Vector &u) {
    if(u.size() != state.covariance().rows()) throw std::invalid_argument("linear_variance: size mismatch");
    return u.dot(state.covariance() * u);
}

GaussianState add_noise(const GaussianState &state, const NoiseMatrix &y) {
    if(y.matrix().rows() != state.covariance().rows()) throw std::invalid_argument("add_noise: size mismatch");
    return GaussianState(state.covariance() + y.matrix(), state.mean());
}

Matrix nullifier_conjugate_noise(const Graph &g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    Matrix sum = Matrix::Zero(2 * n, 2 * n);
    for(std::size_t j = 0; j < g.n(); ++j) {
        Vector w = Vector::Zero(2 * n);
        w(static_cast<Eigen::Index>(j)) = 1.0;
        for(std::size_t k : g.neighbors(j)) w(n + static_cast<Eigen::Index>(k)) = 1.0;
        sum += w * w.transpose();
    }
    return sum;
}

DiffusionDecomposition thermal_diffusion_decomposition(const Graph &g, const ModelParams &params, double temperature) {
    if(params.size() != g.n()) throw std::invalid_argument("thermal_diffusion_decomposition: parameters sized wrongly");
    if(!params.is_uniform())
        throw UnsupportedError("thermal_diffusion_decomposition: requires uniform squeezing and frequency");
    const double s = params.squeeze().front();
    const double omega = params.omega().front();
    const double nu = thermal_occupation(omega / (s * s), temperature);
    const double excess = nu - 0.5;

    DiffusionDecomposition out{};
    out.occupation = nu;
    out.c_q = excess * s * s;
    out.c_p = excess / (s * s);

    const auto n = static_cast<Eigen::Index>(g.n());
    Matrix p_projector = Matrix::Zero(2 * n, 2 * n);
    p_projector.bottomRightCorner(n, n).setIdentity();

    const Matrix lhs = thermal_state(hamiltonian_matrix(g, params), temperature).covariance();
    const Matrix rhs = graph_state(g, params).covariance() + out.c_q * nullifier_conjugate_noise(g) + out.c_p * p_projector;
    out.residual = max_abs(lhs - rhs);
    return out;
}

} // namespace cvgraph
