#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "riemax/core/errors.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

namespace detail {

/// U diag(h(lambda)) U^T for a symmetric matrix given by value.
template <typename Fn>
Eigen::MatrixXd sym_matrix_function(const Eigen::MatrixXd& s, Fn&& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    if (es.info() != Eigen::Success) throw numeric_error("symmetric eigendecomposition failed");
    Eigen::VectorXd lam = es.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = h(lam[i]);
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

inline Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

} // namespace detail

/// A symmetric positive definite matrix together with its eigendecomposition.
///
/// Construction symmetrizes the input as (M + M^T)/2, rejects matrices whose
/// asymmetry exceeds 1e-12 relative Frobenius error, and rejects non-positive
/// spectra. The decomposition, square root and inverse square root are
/// computed eagerly so that distance scans against a fixed point reuse them.
class spd_matrix {
public:
    static constexpr double symmetry_tolerance = 1e-12;

    explicit spd_matrix(const Eigen::MatrixXd& m) {
        if (m.rows() == 0 || m.rows() != m.cols())
            throw domain_error("spd matrix: expected a non-empty square matrix");
        if (!m.allFinite()) throw domain_error("spd matrix: non-finite entry");
        const double asym = (m - m.transpose()).norm();
        if (asym > symmetry_tolerance * std::max(1e-300, m.norm()))
            throw domain_error("spd matrix: asymmetry " + std::to_string(asym) +
                               " exceeds 1e-12 relative Frobenius tolerance");
        mat_ = detail::symmetrized(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat_);
        if (es.info() != Eigen::Success) throw numeric_error("spd matrix: eigendecomposition failed");
        vals_ = es.eigenvalues();
        vecs_ = es.eigenvectors();
        if (vals_.minCoeff() <= 0.0)
            throw domain_error("spd matrix: smallest eigenvalue " + std::to_string(vals_.minCoeff()) +
                               " is not positive");
        Eigen::VectorXd root = vals_.cwiseSqrt();
        sqrt_ = vecs_ * root.asDiagonal() * vecs_.transpose();
        inv_sqrt_ = vecs_ * root.cwiseInverse().asDiagonal() * vecs_.transpose();
    }

    const Eigen::MatrixXd& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::VectorXd& eigenvalues() const { return vals_; }
    const Eigen::MatrixXd& eigenvectors() const { return vecs_; }
    const Eigen::MatrixXd& sqrt() const { return sqrt_; }
    const Eigen::MatrixXd& inv_sqrt() const { return inv_sqrt_; }

    spd_matrix inverse() const {
        return spd_matrix(vecs_ * vals_.cwiseInverse().asDiagonal() * vecs_.transpose());
    }

private:
    Eigen::MatrixXd mat_;
    Eigen::VectorXd vals_;
    Eigen::MatrixXd vecs_;
    Eigen::MatrixXd sqrt_;
    Eigen::MatrixXd inv_sqrt_;
};

/// U diag(h(lambda)) U^T from the cached symmetric eigendecomposition of M.
template <typename Fn>
Eigen::MatrixXd spd_matrix_function(const spd_matrix& m, Fn&& h) {
    Eigen::VectorXd lam = m.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = h(lam[i]);
    return m.eigenvectors() * lam.asDiagonal() * m.eigenvectors().transpose();
}

/// SPD matrices under the affine-invariant metric
///
///     rho(P,Q) = || log(P^{-1} Q) ||_F = sqrt( sum_i log^2 lambda_i ).
///
/// All spectra are taken from the symmetric congruence P^{-1/2} Q P^{-1/2},
/// which has the same eigenvalues as P^{-1} Q but keeps the eigensolve on a
/// symmetric matrix. Geodesics have the closed form
/// gamma_t = P^{1/2} (P^{-1/2} Q P^{-1/2})^t P^{1/2}, and the interpolation
/// parameter equals the distance fraction, so no root-finding is needed.
struct spd_manifold {
    using Point = spd_matrix;
    using Tangent = Eigen::MatrixXd; // symmetric, carried in the congruence frame at I

    static constexpr double geodesic_tolerance = 1e-10;

    static std::string_view name() { return "spd"; }

    static extended_real injectivity_radius() { return extended_real::infinity(); }

    void validate(const Point& p) const {
        if (p.dim() == 0) throw domain_error("spd point: empty matrix");
    }

    double distance(const Point& p, const Point& q) const {
        const Eigen::MatrixXd b = congruence(p, q);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw numeric_error("spd distance: eigensolver failed");
        double sum = 0.0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double lam = es.eigenvalues()[i];
            if (lam <= 0.0) throw numeric_error("spd distance: congruence lost positive definiteness");
            const double l = std::log(lam);
            sum += l * l;
        }
        return std::sqrt(sum);
    }

    Point interpolate(const Point& p, const Point& q, double t) const {
        if (t == 0.0) return p;
        if (t == 1.0) return q;
        const Eigen::MatrixXd s = congruence(p, q);
        const Eigen::MatrixXd st = detail::sym_matrix_function(s, [t](double lam) { return std::pow(lam, t); });
        return Point(detail::symmetrized(p.sqrt() * st * p.sqrt()));
    }

    std::size_t tangent_dimension(const Point& p) const {
        const auto d = static_cast<std::size_t>(p.dim());
        return d * (d + 1) / 2;
    }

    /// Frobenius-unit direction at `base` toward `target`: the normalized
    /// matrix logarithm of the symmetric congruence. The congruence by
    /// P^{-1/2} is an isometry onto the frame at I, where the metric is the
    /// Frobenius inner product.
    Tangent log_direction(const Point& base, const Point& target) const {
        Eigen::MatrixXd w = detail::sym_matrix_function(congruence(base, target),
                                                        [](double lam) { return std::log(lam); });
        const double n = w.norm();
        if (n == 0.0) throw domain_error("log_direction: coincident points have no direction");
        return w / n;
    }

    /// Point at arclength s from `base` along the Frobenius-unit symmetric
    /// tangent `dir`: P^{1/2} exp(s dir) P^{1/2}.
    Point exp_point(const Point& base, const Tangent& dir, double arclength) const {
        if (arclength < 0.0) throw domain_error("exp_point: negative arclength");
        const Eigen::MatrixXd e =
            detail::sym_matrix_function(detail::symmetrized(arclength * dir),
                                        [](double lam) { return std::exp(lam); });
        return Point(detail::symmetrized(base.sqrt() * e * base.sqrt()));
    }

    double tangent_inner(const Tangent& a, const Tangent& b) const {
        return (a.array() * b.array()).sum();
    }

    template <typename Rng>
    Tangent random_unit_tangent(const Point& base, Rng& rng) const {
        std::normal_distribution<double> gauss(0.0, 1.0);
        const Eigen::Index d = base.dim();
        Tangent a(d, d);
        double n = 0.0;
        do {
            for (Eigen::Index i = 0; i < d; ++i) {
                a(i, i) = gauss(rng);
                for (Eigen::Index j = i + 1; j < d; ++j) a(i, j) = a(j, i) = gauss(rng);
            }
            n = a.norm();
        } while (n < 1e-12);
        return a / n;
    }

private:
    static Eigen::MatrixXd congruence(const Point& p, const Point& q) {
        if (p.dim() != q.dim())
            throw domain_error("spd: dimension mismatch (" + std::to_string(p.dim()) + " vs " +
                               std::to_string(q.dim()) + ")");
        return detail::symmetrized(p.inv_sqrt() * q.matrix() * p.inv_sqrt());
    }
};

} // namespace riemax
