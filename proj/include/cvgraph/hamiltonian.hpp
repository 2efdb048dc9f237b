#pragma once

// Graph Hamiltonians as quadratic forms H = 1/2 r^T M r over r = (q, p):
//
//     H_G(s) = sum_i omega_i / 2 (q_i^2 / s_i^4 + N_i^2),   N_i = p_i - sum_{j ~ i} q_j.
//
// The map S_U = S_CZ diag(s, 1/s), S_CZ = [[I, 0], [A, I]], brings M to
// diag(omega_i / s_i^2) (+) diag(omega_i / s_i^2) by congruence, which fixes
// the spectrum, the gap and the ground energy in closed form.

#include <cstddef>
#include <span>
#include <vector>

#include "cvgraph/graph.hpp"
#include "cvgraph/symplectic.hpp"

namespace cvgraph {

/// Per-mode squeezing s_i > 0 and frequency omega_i > 0.
class ModelParams {
  public:
    ModelParams(std::vector<double> squeeze, std::vector<double> omega);
    static ModelParams uniform(std::size_t n, double squeeze, double omega = 1.0);

    [[nodiscard]] std::size_t size() const { return squeeze_.size(); }
    [[nodiscard]] const std::vector<double> &squeeze() const { return squeeze_; }
    [[nodiscard]] const std::vector<double> &omega() const { return omega_; }
    [[nodiscard]] bool is_uniform() const;

    /// min_i omega_i / s_i^2.
    [[nodiscard]] double gap() const;

    /// Parameters of the listed modes, in list order.
    [[nodiscard]] ModelParams restricted_to(const VertexSet &modes) const;

  private:
    std::vector<double> squeeze_;
    std::vector<double> omega_;
};

enum class Definiteness { positive_definite, positive_semidefinite };

class QuadraticForm {
  public:
    /// Throws if `m` is not 2n x 2n or asymmetric beyond 1e-12 * max(1, max|M|).
    explicit QuadraticForm(Matrix m, Definiteness kind = Definiteness::positive_definite);

    [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(m_.rows() / 2); }
    [[nodiscard]] const Matrix &matrix() const { return m_; }
    [[nodiscard]] Definiteness kind() const { return kind_; }
    [[nodiscard]] bool is_critical() const { return kind_ == Definiteness::positive_semidefinite; }

  private:
    Matrix m_;
    Definiteness kind_;
};

using NullifierCoefficients = Vector;                ///< u with N = u . r
using GaussianNullifierCoefficients = ComplexVector; ///< u with N(s) = u . r

QuadraticForm hamiltonian_matrix(const Graph &g, const ModelParams &params);

/// Nullifier-only limit s -> infinity; positive semidefinite of rank n.
QuadraticForm critical_hamiltonian(const Graph &g, std::span<const double> omega);

/// The single term omega_i / 2 (q_i^2 / s_i^4 + N_i^2) as a 2n x 2n matrix.
Matrix local_term(const Graph &g, const ModelParams &params, std::size_t i);
std::vector<Matrix> local_terms(const Graph &g, const ModelParams &params);

/// Smallest normal-mode frequency. Rejects critical forms.
double energy_gap(const QuadraticForm &h);
/// 1/2 of the sum of normal-mode frequencies.
double ground_energy(const QuadraticForm &h);

NullifierCoefficients nullifier(const Graph &g, std::size_t i);
/// -i q_i / s_i^2 + N_i.
GaussianNullifierCoefficients gaussian_nullifier(const Graph &g, std::size_t i, const ModelParams &params);

/// S_CZ diag(s_1..s_n, 1/s_1..1/s_n), the phase-space action of CZ S(s).
SymplecticMatrix graph_symplectic(const Graph &g, const ModelParams &params);

struct FrustrationReport {
    bool frustration_free;
    double max_violation; ///< max over pairs of |M_i Omega M_j - M_j Omega M_i|_max
};

/// Pairwise commutation of quadratic-form terms; frustration free iff the
/// violation is <= tol.
FrustrationReport commutator_check(std::span<const Matrix> terms, double tol = 1e-12);
FrustrationReport frustration_free_check(const Graph &g, const ModelParams &params);

} // namespace cvgraph
