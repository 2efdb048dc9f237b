#include "cvgraph/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvgraph {

namespace {

    void require_even_square(const Matrix &m, const char *what) {
        if(m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
            std::ostringstream msg;
            msg << what << ": expected a non-empty 2n x 2n matrix, got " << m.rows() << " x " << m.cols();
            throw std::invalid_argument(msg.str());
        }
    }

    template<class Real>
    using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    template<class Real>
    using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

    template<class Real>
    struct SpectralData {
        RealVector<Real> eigenvalues;
        RealMatrix<Real> eigenvectors;
    };

    // Symmetric positive-definite check shared by the symplectic spectrum and
    // Williamson routines.
    template<class Real>
    SpectralData<Real> checked_spectral_data(const Matrix &m, const char *what) {
        require_even_square(m, what);
        const double scale = std::max(1.0, max_abs(m));
        const double asym = max_abs(m - m.transpose());
        if(asym > 1e-10 * scale) {
            std::ostringstream msg;
            msg << what << ": matrix is not symmetric (max asymmetry " << asym << ")";
            throw std::invalid_argument(msg.str());
        }
        const RealMatrix<Real> sym = (Real(0.5) * (m + m.transpose())).template cast<Real>();
        Eigen::SelfAdjointEigenSolver<RealMatrix<Real>> es(sym);
        if(es.info() != Eigen::Success) throw std::invalid_argument(std::string(what) + ": eigensolver failed");
        const auto lmin = static_cast<double>(es.eigenvalues().minCoeff());
        const auto lmax = static_cast<double>(es.eigenvalues().cwiseAbs().maxCoeff());
        if(!(lmin > 1e-13 * lmax)) {
            std::ostringstream msg;
            msg << what << ": matrix is not positive definite (eigenvalue " << lmin << ")";
            throw std::invalid_argument(msg.str());
        }
        return {es.eigenvalues(), es.eigenvectors()};
    }

    template<class Real>
    RealMatrix<Real> spectral_power(const SpectralData<Real> &sd, Real power) {
        const RealVector<Real> f = sd.eigenvalues.array().pow(power).matrix();
        return sd.eigenvectors * f.asDiagonal() * sd.eigenvectors.transpose();
    }

    // Eigen decomposition of the Hermitian matrix i M^{1/2} Omega M^{1/2}.
    template<class Real>
    auto normal_mode_solver(const RealMatrix<Real> &sqrt_m) {
        using Complex = std::complex<Real>;
        using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
        const auto n = static_cast<std::size_t>(sqrt_m.rows() / 2);
        const RealMatrix<Real> omega = SymplecticForm(n).matrix().cast<Real>();
        RealMatrix<Real> b = sqrt_m * omega * sqrt_m;
        b = (Real(0.5) * (b - b.transpose())).eval();
        const CMatrix h = Complex(0, 1) * b.template cast<Complex>();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        if(es.info() != Eigen::Success) throw std::invalid_argument("symplectic spectrum: eigensolver failed");
        return es;
    }

} // namespace

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

SymplecticForm::SymplecticForm(std::size_t n) : n_(n) {
    if(n == 0) throw std::invalid_argument("symplectic_form: mode count must be >= 1");
    const auto k = static_cast<Eigen::Index>(n);
    omega_ = Matrix::Zero(2 * k, 2 * k);
    omega_.topRightCorner(k, k).setIdentity();
    omega_.bottomLeftCorner(k, k) = -Matrix::Identity(k, k);
}

SymplecticForm symplectic_form(std::size_t n) { return SymplecticForm(n); }

SymplecticMatrix::SymplecticMatrix(Matrix s, double tol) : s_(std::move(s)) {
    require_even_square(s_, "SymplecticMatrix");
    const double scale = std::max(1.0, max_abs(s_) * max_abs(s_));
    const double residual = symplectic_residual();
    if(!(residual <= tol * scale)) {
        std::ostringstream msg;
        msg << "SymplecticMatrix: |S Omega S^T - Omega|_max = " << residual << " exceeds tolerance";
        throw std::invalid_argument(msg.str());
    }
}

double SymplecticMatrix::symplectic_residual() const {
    const SymplecticForm omega(n());
    return max_abs(s_ * omega.matrix() * s_.transpose() - omega.matrix());
}

Matrix SymplecticMatrix::inverse() const {
    const SymplecticForm omega(n());
    return -omega.matrix() * s_.transpose() * omega.matrix();
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    for(std::size_t i = 0; i < values_.size(); ++i) {
        if(!(values_[i] > 0.0)) throw std::invalid_argument("Spectrum: entries must be strictly positive");
        if(i > 0 && values_[i] < values_[i - 1]) throw std::invalid_argument("Spectrum: entries must be sorted ascending");
    }
}

double Spectrum::min() const {
    if(values_.empty()) throw std::logic_error("Spectrum::min on empty spectrum");
    return values_.front();
}

double Spectrum::max() const {
    if(values_.empty()) throw std::logic_error("Spectrum::max on empty spectrum");
    return values_.back();
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

Spectrum symplectic_eigenvalues(const Matrix &m) {
    const auto sd = checked_spectral_data<double>(m, "symplectic_eigenvalues");
    const auto es = normal_mode_solver<double>(spectral_power(sd, 0.5));
    const auto n = static_cast<Eigen::Index>(m.rows() / 2);
    std::vector<double> d(static_cast<std::size_t>(n));
    for(Eigen::Index k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = es.eigenvalues()(n + k);
    std::sort(d.begin(), d.end());
    return Spectrum(std::move(d));
}

WilliamsonDecomposition williamson(const Matrix &m) {
    // Extended precision keeps S accurate for the badly conditioned forms
    // that strong squeezing produces.
    using Real = long double;
    using Complex = std::complex<Real>;
    const auto sd = checked_spectral_data<Real>(m, "williamson");
    const RealMatrix<Real> sqrt_m = spectral_power(sd, Real(0.5));
    const RealMatrix<Real> inv_sqrt_m = spectral_power(sd, Real(-0.5));
    const auto es = normal_mode_solver<Real>(sqrt_m);

    const auto n = static_cast<Eigen::Index>(m.rows() / 2);
    RealMatrix<Real> o(2 * n, 2 * n);
    RealVector<Real> root_d(2 * n);
    std::vector<double> d(static_cast<std::size_t>(n));
    // The solver sorts ascending, so columns n..2n-1 hold the +d_k eigenvectors
    // in ascending order of d_k.
    for(Eigen::Index k = 0; k < n; ++k) {
        Eigen::Matrix<Complex, Eigen::Dynamic, 1> x = es.eigenvectors().col(n + k);
        // Fix the free phase so the largest q-component of x is +i|x_j|; this
        // makes S = I for matrices already in normal form.
        Eigen::Index j = 0;
        x.head(n).cwiseAbs().maxCoeff(&j);
        if(std::abs(x(j)) > Real(1e-8)) x *= Complex(0, 1) * std::abs(x(j)) / x(j);
        const Real dk = es.eigenvalues()(n + k);
        d[static_cast<std::size_t>(k)] = static_cast<double>(dk);
        root_d(k) = root_d(n + k) = std::sqrt(dk);
        o.col(k) = std::sqrt(Real(2)) * x.imag();
        o.col(n + k) = std::sqrt(Real(2)) * x.real();
    }

    const RealMatrix<Real> s = root_d.asDiagonal() * o.transpose() * inv_sqrt_m;
    return {SymplecticMatrix(s.cast<double>()), Spectrum(std::move(d))};
}

Matrix partial_transpose(const Matrix &v, std::span<const std::size_t> subset) {
    require_even_square(v, "partial_transpose");
    const auto n = static_cast<std::size_t>(v.rows() / 2);
    Vector sign = Vector::Ones(v.rows());
    for(std::size_t j : subset) {
        if(j >= n) {
            std::ostringstream msg;
            msg << "partial_transpose: mode index " << j << " out of range for " << n << " modes";
            throw std::invalid_argument(msg.str());
        }
        sign(static_cast<Eigen::Index>(n + j)) = -1.0;
    }
    return sign.asDiagonal() * v * sign.asDiagonal();
}

Matrix block_diagonal(std::span<const double> values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    Vector diag(2 * n);
    for(Eigen::Index k = 0; k < n; ++k) diag(k) = diag(n + k) = values[static_cast<std::size_t>(k)];
    return diag.asDiagonal();
}

} // namespace cvgraph
