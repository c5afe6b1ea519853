#pragma once

#include <Eigen/Core>
#include <random>
#include <string>
#include <string_view>

#include "riemax/core/errors.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

/// Flat R^d with the standard metric. Geodesics are straight segments, so the
/// fraction update m = p + t(q - p) reproduces the classic barycentric
/// recentering rule verbatim when t = 1/(i+1).
///
/// The dimension is a runtime property of the points, not of the manifold.
struct euclidean_manifold {
    using Point = Eigen::VectorXd;
    using Tangent = Eigen::VectorXd;

    static constexpr double geodesic_tolerance = 1e-12;

    static std::string_view name() { return "euclidean"; }

    static extended_real injectivity_radius() { return extended_real::infinity(); }

    void validate(const Point& p) const {
        if (p.size() == 0) throw domain_error("euclidean point: zero-dimensional vector");
        if (!p.allFinite()) throw domain_error("euclidean point: non-finite coordinate");
    }

    double distance(const Point& p, const Point& q) const {
        check_dims(p, q);
        return (p - q).norm();
    }

    Point interpolate(const Point& p, const Point& q, double t) const {
        check_dims(p, q);
        return p + t * (q - p);
    }

    std::size_t tangent_dimension(const Point& p) const { return static_cast<std::size_t>(p.size()); }

    /// Unit vector at `base` pointing toward `target`.
    Tangent log_direction(const Point& base, const Point& target) const {
        check_dims(base, target);
        Tangent d = target - base;
        const double n = d.norm();
        if (n == 0.0) throw domain_error("log_direction: coincident points have no direction");
        return d / n;
    }

    /// Point at the given arclength from `base` along the unit tangent `dir`.
    Point exp_point(const Point& base, const Tangent& dir, double arclength) const {
        return base + arclength * dir;
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
            throw domain_error("euclidean: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                               std::to_string(q.size()) + ")");
    }
};

} // namespace riemax
