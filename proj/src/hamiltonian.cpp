#include "cvgraph/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cvgraph {

namespace {

    void require_sized(const Graph &g, std::size_t count, const char *what) {
        if(count != g.n()) {
            std::ostringstream msg;
            msg << what << ": parameters sized " << count << " for a graph with " << g.n() << " vertices";
            throw std::invalid_argument(msg.str());
        }
    }

    void require_vertex(const Graph &g, std::size_t i, const char *what) {
        if(i >= g.n()) {
            std::ostringstream msg;
            msg << what << ": vertex " << i << " out of range for " << g.n() << " vertices";
            throw std::invalid_argument(msg.str());
        }
    }

    template<class Vec>
    Vector to_vector(const Vec &v) {
        Vector out(static_cast<Eigen::Index>(v.size()));
        for(std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
        return out;
    }

    // Nullifier-part blocks [[A W A, -A W], [-W A, W]] with W = diag(omega).
    Matrix nullifier_blocks(const Graph &g, const Vector &omega) {
        const auto n = static_cast<Eigen::Index>(g.n());
        const Matrix a = adjacency_matrix(g);
        const Matrix aw = a * omega.asDiagonal();
        Matrix m(2 * n, 2 * n);
        m.topLeftCorner(n, n) = aw * a;
        m.topRightCorner(n, n) = -aw;
        m.bottomLeftCorner(n, n) = -aw.transpose();
        m.bottomRightCorner(n, n) = omega.asDiagonal();
        return m;
    }

} // namespace

ModelParams::ModelParams(std::vector<double> squeeze, std::vector<double> omega)
    : squeeze_(std::move(squeeze)), omega_(std::move(omega)) {
    if(squeeze_.size() != omega_.size())
        throw std::invalid_argument("ModelParams: squeeze and omega must have the same length");
    for(double s : squeeze_)
        if(!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("ModelParams: squeezing must be finite and > 0");
    for(double w : omega_)
        if(!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("ModelParams: frequencies must be finite and > 0");
}

ModelParams ModelParams::uniform(std::size_t n, double squeeze, double omega) {
    return ModelParams(std::vector<double>(n, squeeze), std::vector<double>(n, omega));
}

bool ModelParams::is_uniform() const {
    return std::adjacent_find(squeeze_.begin(), squeeze_.end(), std::not_equal_to<>()) == squeeze_.end() &&
           std::adjacent_find(omega_.begin(), omega_.end(), std::not_equal_to<>()) == omega_.end();
}

double ModelParams::gap() const {
    if(squeeze_.empty()) throw std::logic_error("ModelParams::gap on empty parameters");
    double g = omega_[0] / (squeeze_[0] * squeeze_[0]);
    for(std::size_t i = 1; i < size(); ++i) g = std::min(g, omega_[i] / (squeeze_[i] * squeeze_[i]));
    return g;
}

ModelParams ModelParams::restricted_to(const VertexSet &modes) const {
    std::vector<double> s, w;
    for(std::size_t v : modes) {
        s.push_back(squeeze_.at(v));
        w.push_back(omega_.at(v));
    }
    return ModelParams(std::move(s), std::move(w));
}

QuadraticForm::QuadraticForm(Matrix m, Definiteness kind) : m_(std::move(m)), kind_(kind) {
    if(m_.rows() != m_.cols() || m_.rows() == 0 || m_.rows() % 2 != 0)
        throw std::invalid_argument("QuadraticForm: expected a non-empty 2n x 2n matrix");
    if(max_abs(m_ - m_.transpose()) > 1e-12 * std::max(1.0, max_abs(m_)))
        throw std::invalid_argument("QuadraticForm: matrix is not symmetric");
}

QuadraticForm hamiltonian_matrix(const Graph &g, const ModelParams &params) {
    require_sized(g, params.size(), "hamiltonian_matrix");
    const auto n = static_cast<Eigen::Index>(g.n());
    const Vector omega = to_vector(params.omega());
    Matrix m = nullifier_blocks(g, omega);
    for(Eigen::Index i = 0; i < n; ++i) {
        const double s2 = params.squeeze()[static_cast<std::size_t>(i)] * params.squeeze()[static_cast<std::size_t>(i)];
        m(i, i) += omega(i) / (s2 * s2);
    }
    return QuadraticForm(std::move(m));
}

QuadraticForm critical_hamiltonian(const Graph &g, std::span<const double> omega) {
    require_sized(g, omega.size(), "critical_hamiltonian");
    for(double w : omega)
        if(!(w > 0.0)) throw std::invalid_argument("critical_hamiltonian: frequencies must be > 0");
    return QuadraticForm(nullifier_blocks(g, to_vector(omega)), Definiteness::positive_semidefinite);
}

Matrix local_term(const Graph &g, const ModelParams &params, std::size_t i) {
    require_sized(g, params.size(), "local_term");
    require_vertex(g, i, "local_term");
    const auto qi = static_cast<Eigen::Index>(i);
    const double s2 = params.squeeze()[i] * params.squeeze()[i];
    const Vector u = nullifier(g, i);
    Matrix m = u * u.transpose();
    m(qi, qi) += 1.0 / (s2 * s2);
    return params.omega()[i] * m;
}

std::vector<Matrix> local_terms(const Graph &g, const ModelParams &params) {
    std::vector<Matrix> terms;
    terms.reserve(g.n());
    for(std::size_t i = 0; i < g.n(); ++i) terms.push_back(local_term(g, params, i));
    return terms;
}

double energy_gap(const QuadraticForm &h) {
    if(h.is_critical()) throw std::invalid_argument("energy_gap: critical Hamiltonian is gapless");
    return williamson(h.matrix()).d.min();
}

double ground_energy(const QuadraticForm &h) {
    if(h.is_critical()) throw std::invalid_argument("ground_energy: critical Hamiltonian has no normalizable ground state");
    return 0.5 * williamson(h.matrix()).d.sum();
}

NullifierCoefficients nullifier(const Graph &g, std::size_t i) {
    require_vertex(g, i, "nullifier");
    const auto n = static_cast<Eigen::Index>(g.n());
    Vector u = Vector::Zero(2 * n);
    u(n + static_cast<Eigen::Index>(i)) = 1.0;
    for(std::size_t j : g.neighbors(i)) u(static_cast<Eigen::Index>(j)) = -1.0;
    return u;
}

GaussianNullifierCoefficients gaussian_nullifier(const Graph &g, std::size_t i, const ModelParams &params) {
    require_sized(g, params.size(), "gaussian_nullifier");
    ComplexVector u = nullifier(g, i).cast<std::complex<double>>();
    const double s2 = params.squeeze()[i] * params.squeeze()[i];
    u(static_cast<Eigen::Index>(i)) += std::complex<double>(0.0, -1.0 / s2);
    return u;
}

SymplecticMatrix graph_symplectic(const Graph &g, const ModelParams &params) {
    require_sized(g, params.size(), "graph_symplectic");
    const auto n = static_cast<Eigen::Index>(g.n());
    const Vector s = to_vector(params.squeeze());
    const Matrix a = adjacency_matrix(g);
    Matrix su = Matrix::Zero(2 * n, 2 * n);
    su.topLeftCorner(n, n) = s.asDiagonal();
    su.bottomLeftCorner(n, n) = a * s.asDiagonal();
    su.bottomRightCorner(n, n) = s.cwiseInverse().asDiagonal();
    return SymplecticMatrix(std::move(su));
}

FrustrationReport commutator_check(std::span<const Matrix> terms, double tol) {
    double worst = 0.0;
    if(!terms.empty()) {
        const SymplecticForm omega(static_cast<std::size_t>(terms.front().rows() / 2));
        for(std::size_t i = 0; i < terms.size(); ++i) {
            const Matrix left = terms[i] * omega.matrix();
            for(std::size_t j = i + 1; j < terms.size(); ++j) {
                const Matrix right = terms[j] * omega.matrix();
                worst = std::max(worst, max_abs(left * terms[j] - right * terms[i]));
            }
        }
    }
    return {worst <= tol, worst};
}

FrustrationReport frustration_free_check(const Graph &g, const ModelParams &params) {
    const auto terms = local_terms(g, params);
    return commutator_check(terms);
}

} // namespace cvgraph
