#pragma once

#include <Eigen/Core>
#include <cmath>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "riemax/core/errors.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

/// A point of the Klein ball model of hyperbolic space: coordinates with
/// Euclidean norm strictly below 1. Points within `boundary_margin` of the
/// ideal boundary are rejected on construction.
class klein_point {
public:
    static constexpr double boundary_margin = 1e-12;

    explicit klein_point(Eigen::VectorXd coords) : coords_(std::move(coords)) {
        if (coords_.size() == 0) throw domain_error("klein point: zero-dimensional vector");
        if (!coords_.allFinite()) throw domain_error("klein point: non-finite coordinate");
        const double n = coords_.norm();
        if (n > 1.0 - boundary_margin)
            throw domain_error("klein point: norm " + std::to_string(n) + " violates ||x|| <= 1 - 1e-12");
    }

    const Eigen::VectorXd& coords() const { return coords_; }
    Eigen::Index size() const { return coords_.size(); }

private:
    Eigen::VectorXd coords_;
};

/// Hyperbolic space of curvature -1 in the Klein (Beltrami-Klein) model.
///
/// Geodesics are straight chords of the unit ball, which makes interpolation a
/// one-dimensional monotone root-finding problem solved here by bisection.
/// The distance is evaluated through a cancellation-free rearrangement of
///
///     rho(p,q) = arccosh( (1 - p.q) / sqrt((1 - p.p)(1 - q.q)) )
///
/// so that nearby points get full relative accuracy instead of the sqrt(eps)
/// noise floor of the textbook expression.
struct klein_manifold {
    using Point = klein_point;
    using Tangent = Eigen::VectorXd;

    static constexpr double geodesic_tolerance = 1e-12;
    static constexpr double clamp_slack = 1e-12;
    static constexpr int bisection_cap = 200;

    static std::string_view name() { return "klein"; }

    static extended_real injectivity_radius() { return extended_real::infinity(); }

    void validate(const Point& p) const {
        if (p.coords().norm() > 1.0 - klein_point::boundary_margin)
            throw domain_error("klein point: norm violates ||x|| <= 1 - 1e-12");
    }

    double distance(const Point& p, const Point& q) const {
        check_dims(p, q);
        return distance_raw(p.coords(), q.coords());
    }

    /// Point m on the chord from p to q with rho(p,m) = t rho(p,q), found by
    /// bisection on the chord parameter. The residual is driven below
    /// 1e-12 * max(1, rho(p,q)).
    Point interpolate(const Point& p, const Point& q, double t) const {
        check_dims(p, q);
        if (t == 0.0) return p;
        if (t == 1.0) return q;
        const Eigen::VectorXd& a = p.coords();
        const Eigen::VectorXd& b = q.coords();
        const double total = distance_raw(a, b);
        if (total == 0.0) return p;
        const double target = t * total;
        const double tol = geodesic_tolerance * std::max(1.0, total);

        double lo = 0.0, hi = 1.0;
        for (int iter = 0; iter < bisection_cap; ++iter) {
            const double u = 0.5 * (lo + hi);
            Eigen::VectorXd m = a + u * (b - a);
            const double dm = distance_raw(a, m);
            if (std::abs(dm - target) <= tol) return Point(std::move(m));
            (dm < target ? lo : hi) = u;
        }
        throw numeric_error("klein interpolate: bisection did not reach the residual tolerance");
    }

    std::size_t tangent_dimension(const Point& p) const { return static_cast<std::size_t>(p.size()); }

    /// Hyperbolic translation taking `center` to the origin, applied to `x`.
    /// Realized as a Lorentz boost on the projective lift (1, x); an isometry
    /// of the Klein metric.
    Eigen::VectorXd translate_to_origin(const Point& center, const Point& x) const {
        check_dims(center, x);
        return boost_apply(center.coords(), x.coords());
    }

    /// Inverse of translate_to_origin: moves the origin back to `center`.
    Point translate_from_origin(const Point& center, const Eigen::VectorXd& y) const {
        return Point(boost_apply(-center.coords(), y));
    }

    /// Unit tangent at `base` toward `target`, carried in the frame obtained
    /// by translating `base` to the origin (where the Klein metric is the
    /// Euclidean one, so tangent inner products are plain dot products).
    Tangent log_direction(const Point& base, const Point& target) const {
        Eigen::VectorXd u = translate_to_origin(base, target);
        const double n = u.norm();
        if (n == 0.0) throw domain_error("log_direction: coincident points have no direction");
        return u / n;
    }

    /// Point at hyperbolic arclength s from `base` along the unit tangent
    /// `dir` (same frame convention as log_direction). A point at distance s
    /// from the origin has coordinate norm tanh(s).
    Point exp_point(const Point& base, const Tangent& dir, double arclength) const {
        if (arclength < 0.0) throw domain_error("exp_point: negative arclength");
        Eigen::VectorXd y = std::tanh(arclength) * dir;
        return translate_from_origin(base, y);
    }

    double tangent_inner(const Tangent& a, const Tangent& b) const { return a.dot(b); }

    template <typename Rng>
    Tangent random_unit_tangent(const Point& base, Rng& rng) const {
        std::normal_distribution<double> gauss(0.0, 1.0);
        Tangent v(base.size());
        double n = 0.0;
        do {
            for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
            n = v.norm();
        } while (n < 1e-12);
        return v / n;
    }

private:
    static void check_dims(const Point& p, const Point& q) {
        if (p.size() != q.size())
            throw domain_error("klein: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                               std::to_string(q.size()) + ")");
    }

    // arccosh(1 + h) with h computed free of cancellation:
    //   h = (|p-q|^2 - G) / (den (num + den)),   G = |p|^2 |q-p|^2 - (p.(q-p))^2
    // where num = 1 - p.q and den = sqrt((1 - p.p)(1 - q.q)). G is the Gram
    // determinant |p ^ q|^2 rewritten so every term scales with |p-q|^2.
    static double distance_raw(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
        const double pp = p.squaredNorm();
        const double qq = q.squaredNorm();
        const double pq = p.dot(q);
        const double num = 1.0 - pq;
        const double den = std::sqrt((1.0 - pp) * (1.0 - qq));
        const Eigen::VectorXd diff = q - p;
        const double d2 = diff.squaredNorm();
        const double pd = p.dot(diff);
        const double gram = pp * d2 - pd * pd;
        double h = (d2 - gram) / (den * (num + den));
        if (h < 0.0) {
            if (1.0 + h < 1.0 - clamp_slack)
                throw numeric_error("klein distance: arccosh argument below 1 - 1e-12; inputs are not valid Klein points");
            h = 0.0;
        }
        // arccosh(1+h) = log1p(h + sqrt(h (2 + h)))
        return std::log1p(h + std::sqrt(h * (2.0 + h)));
    }

    // Lorentz boost taking the lift of c to (1, 0): applied projectively to
    // (1, x). Uses (gamma-1)/|c|^2 = gamma^2/(gamma+1) to stay stable as c -> 0.
    static Eigen::VectorXd boost_apply(const Eigen::VectorXd& c, const Eigen::VectorXd& x) {
        const double cc = c.squaredNorm();
        const double gamma = 1.0 / std::sqrt(1.0 - cc);
        const double k = gamma * gamma / (gamma + 1.0);
        const double cx = c.dot(x);
        const double time = gamma * (1.0 - cx);
        Eigen::VectorXd spatial = x + (k * cx - gamma) * c;
        return spatial / time;
    }
};

} // namespace riemax
