#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "riemax/core/errors.hpp"

namespace riemax {

namespace detail {

inline void check_triangle_sides(double x1, double x2, double x3) {
    if (!(x1 > 0.0 && x2 > 0.0))
        throw domain_error("cosine law: the two adjacent sides must have positive length");
    if (!(x3 >= 0.0)) throw domain_error("cosine law: negative side length");
    const double slack = 1e-12 * (x1 + x2 + x3);
    if (x3 > x1 + x2 + slack || x3 < std::abs(x1 - x2) - slack)
        throw domain_error("cosine law: sides violate the triangle inequality");
}

inline double clamp_cosine(double v) {
    if (v > 1.0 + 1e-9 || v < -1.0 - 1e-9)
        throw numeric_error("cosine law: value " + std::to_string(v) + " exceeds [-1,1] beyond the 1e-9 slack");
    return std::min(1.0, std::max(-1.0, v));
}

} // namespace detail

/// First law of cosines on the sphere of curvature alpha^2: the cosine of the
/// angle opposite side x3,
///
///   cos theta_3 = ( cos(a x3) - cos(a x1) cos(a x2) ) / ( sin(a x1) sin(a x2) ).
///
/// The numerator is evaluated through a product-to-sum rearrangement so the
/// flat limit alpha -> 0 keeps full accuracy instead of cancelling.
inline double cos_law_spherical(double alpha, double x1, double x2, double x3) {
    if (!(alpha > 0.0)) throw domain_error("cos_law_spherical: alpha must be positive");
    detail::check_triangle_sides(x1, x2, x3);
    const double a = alpha * x1, b = alpha * x2, c = alpha * x3;
    if (!(a < std::numbers::pi && b < std::numbers::pi && c <= std::numbers::pi))
        throw domain_error("cos_law_spherical: scaled sides must stay inside (0, pi)");
    const double sa = std::sin(a), sb = std::sin(b);
    if (sa == 0.0 || sb == 0.0) throw domain_error("cos_law_spherical: degenerate side (sin(alpha x) = 0)");
    // cos c - cos a cos b = -sin((c+a-b)/2) sin((c-a+b)/2) - sin((c+a+b)/2) sin((c-a-b)/2)
    const double num = -std::sin(0.5 * (c + a - b)) * std::sin(0.5 * (c - a + b)) -
                       std::sin(0.5 * (c + a + b)) * std::sin(0.5 * (c - a - b));
    return detail::clamp_cosine(num / (sa * sb));
}

/// First law of cosines in the hyperbolic plane of curvature -beta^2:
///
///   cos theta_3 = ( cosh(b x1) cosh(b x2) - cosh(b x3) ) / ( sinh(b x1) sinh(b x2) ),
///
/// with the same stable numerator treatment as the spherical law.
inline double cos_law_hyperbolic(double beta, double x1, double x2, double x3) {
    if (!(beta > 0.0)) throw domain_error("cos_law_hyperbolic: beta must be positive");
    detail::check_triangle_sides(x1, x2, x3);
    const double a = beta * x1, b = beta * x2, c = beta * x3;
    const double sa = std::sinh(a), sb = std::sinh(b);
    if (sa == 0.0 || sb == 0.0) throw domain_error("cos_law_hyperbolic: degenerate side (sinh(beta x) = 0)");
    // cosh a cosh b - cosh c = -sinh((c+a-b)/2) sinh((c-a+b)/2) - sinh((c+a+b)/2) sinh((c-a-b)/2)
    const double num = -std::sinh(0.5 * (c + a - b)) * std::sinh(0.5 * (c - a + b)) -
                       std::sinh(0.5 * (c + a + b)) * std::sinh(0.5 * (c - a - b));
    return detail::clamp_cosine(num / (sa * sb));
}

/// Planar law of cosines, the common flat limit of the two laws above.
inline double cos_law_planar(double x1, double x2, double x3) {
    detail::check_triangle_sides(x1, x2, x3);
    return detail::clamp_cosine((x1 * x1 + x2 * x2 - x3 * x3) / (2.0 * x1 * x2));
}

} // namespace riemax
