#pragma once

// Phase-space linear algebra for n bosonic modes.
//
// Quadratures are ordered in block form r = (q_1..q_n, p_1..p_n) with
// [q_j, p_k] = i delta_jk, so the symplectic form is
//
//     Omega = [[0, I], [-I, 0]].
//
// Covariance matrices use V_jk = 1/2 <{dr_j, dr_k}>, the vacuum is V = I/2 and
// every physical state has symplectic eigenvalues >= 1/2.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cvgraph {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix &m);

class SymplecticForm {
  public:
    explicit SymplecticForm(std::size_t n);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const Matrix &matrix() const { return omega_; }

  private:
    std::size_t n_;
    Matrix omega_;
};

/// Throws std::invalid_argument for n = 0.
SymplecticForm symplectic_form(std::size_t n);

/// A 2n x 2n real matrix S with S Omega S^T = Omega.
///
/// The constructor checks the symplectic condition to within
/// `tol * max(1, max|S|^2)`; the scale factor keeps the check meaningful for
/// strongly squeezing maps whose entries grow like s.
class SymplecticMatrix {
  public:
    static constexpr double default_tolerance = 1e-10;

    explicit SymplecticMatrix(Matrix s, double tol = default_tolerance);

    [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(s_.rows() / 2); }
    [[nodiscard]] const Matrix &matrix() const { return s_; }

    /// max|S Omega S^T - Omega|.
    [[nodiscard]] double symplectic_residual() const;

    /// S^{-1} = -Omega S^T Omega, exact for a symplectic S.
    [[nodiscard]] Matrix inverse() const;

  private:
    Matrix s_;
};

/// Sorted ascending list of strictly positive reals.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    [[nodiscard]] const std::vector<double> &values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] bool empty() const { return values_.empty(); }
    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;
    [[nodiscard]] double sum() const;
    double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] auto begin() const { return values_.begin(); }
    [[nodiscard]] auto end() const { return values_.end(); }

  private:
    std::vector<double> values_;
};

/// Symplectic eigenvalues of a symmetric positive-definite 2n x 2n matrix: the
/// moduli of the eigenvalues of i Omega M, one per +/- pair, ascending.
///
/// Rejects matrices that are asymmetric beyond 1e-10 * max(1, max|M|) or have
/// an eigenvalue <= 1e-13 * max|M| (the message reports the eigenvalue).
Spectrum symplectic_eigenvalues(const Matrix &m);

struct WilliamsonDecomposition {
    SymplecticMatrix S; ///< S M S^T = diag(d) (+) diag(d)
    Spectrum d;
};

/// Williamson normal form of a symmetric positive-definite matrix.
///
/// Works through B = M^{1/2} Omega M^{1/2}: the Hermitian matrix iB has
/// eigenvalues +/- d_k, and an eigenvector x = a + ib for +d_k satisfies
/// B a = d b, B b = -d a with a, b orthogonal and of equal norm. Degenerate
/// d_k are fine because the Hermitian eigensolver returns an orthonormal basis
/// of each eigenspace, which makes the real vectors {a_k, b_k} orthonormal
/// as well. With O = sqrt(2) [b_1..b_n | a_1..a_n] one gets
/// O^T B O = [[0, D], [-D, 0]] and S = D^{1/2} O^T M^{-1/2}.
WilliamsonDecomposition williamson(const Matrix &m);

/// P V P with P = diag(1,..,1, p-signs) flipping p_j for every mode j in
/// `subset`. Throws std::invalid_argument for out-of-range indices.
Matrix partial_transpose(const Matrix &v, std::span<const std::size_t> subset);

/// diag(values) (+) diag(values).
Matrix block_diagonal(std::span<const double> values);

} // namespace cvgraph
