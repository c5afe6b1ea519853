#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "riemax/core/errors.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

/// The contract every geometry instantiation satisfies. Distances obey the
/// metric axioms on valid points, `interpolate(p, q, t)` returns the point m
/// on the minimal geodesic with rho(p,m) = t rho(p,q) up to the manifold's
/// geodesic_tolerance, and all operations are pure.
template <typename M>
concept Manifold = requires(const M& m, const typename M::Point& p, const typename M::Point& q, double t) {
    typename M::Point;
    typename M::Tangent;
    { M::name() } -> std::convertible_to<std::string_view>;
    { M::injectivity_radius() } -> std::same_as<extended_real>;
    { M::geodesic_tolerance } -> std::convertible_to<double>;
    { m.validate(p) };
    { m.distance(p, q) } -> std::same_as<double>;
    { m.interpolate(p, q, t) } -> std::same_as<typename M::Point>;
    { m.tangent_dimension(p) } -> std::same_as<std::size_t>;
};

/// Riemannian distance with point validation. Solver hot loops call the
/// manifold's distance directly on points validated once at cloud
/// construction.
template <Manifold M>
double distance(const M& m, const typename M::Point& p, const typename M::Point& q) {
    m.validate(p);
    m.validate(q);
    return m.distance(p, q);
}

/// Point m on the minimal geodesic from p to q with rho(p,m) = t rho(p,q).
/// t outside [0,1] is a domain error; extrapolation is not supported.
template <Manifold M>
typename M::Point geodesic_interpolate(const M& m, const typename M::Point& p, const typename M::Point& q,
                                       double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw domain_error("geodesic_interpolate: parameter t = " + std::to_string(t) + " outside [0,1]");
    m.validate(p);
    m.validate(q);
    if (t == 0.0) return p;
    if (t == 1.0) return q;
    return m.interpolate(p, q, t);
}

/// Below this distance a step direction is considered undefined and the step
/// becomes a flagged no-op.
inline constexpr double degenerate_step_distance = 1e-14;

template <Manifold M>
struct step_result {
    typename M::Point point;
    bool degenerate;   // x and target coincide, direction undefined
    double arclength;  // distance actually travelled (clamped at the target)
};

/// Point at arclength s from x along the unit-speed geodesic toward `target`.
/// Steps past the target are clamped to the target.
template <Manifold M>
step_result<M> geodesic_step(const M& m, const typename M::Point& x, const typename M::Point& target,
                             double s) {
    if (s < 0.0) throw domain_error("geodesic_step: negative arclength");
    m.validate(x);
    m.validate(target);
    if (s == 0.0) return {x, false, 0.0};
    const double rho = m.distance(x, target);
    if (rho <= degenerate_step_distance) return {x, true, 0.0};
    if (s >= rho) return {target, false, rho};
    return {m.interpolate(x, target, s / rho), false, s};
}

} // namespace riemax
