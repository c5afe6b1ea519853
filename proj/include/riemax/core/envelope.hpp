#pragma once

#include <string>
#include <utility>

#include "riemax/core/errors.hpp"
#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

/// Curvature and enclosure data for a solver run: alpha^2 bounds the
/// sectional curvature above, -beta^2 bounds it below, and the support of the
/// measure lies in the ball B(center, radius).
template <Manifold M>
struct geometry_envelope {
    double alpha;
    double beta;
    typename M::Point center;
    double radius;
    extended_real injectivity;

    geometry_envelope(double alpha_, double beta_, typename M::Point center_, double radius_,
                      extended_real injectivity_ = M::injectivity_radius())
        : alpha(alpha_), beta(beta_), center(std::move(center_)), radius(radius_),
          injectivity(injectivity_) {
        if (!(alpha > 0.0)) throw domain_error("geometry envelope: alpha must be positive");
        if (!(beta > 0.0)) throw domain_error("geometry envelope: beta must be positive");
        if (!(radius > 0.0)) throw domain_error("geometry envelope: radius must be positive");
    }
};

/// Envelope anchored at a support point: center = cloud[anchor], radius = the
/// maximal distance from the anchor to another support point. Needs at least
/// two distinct points.
template <Manifold M>
geometry_envelope<M> envelope_around(const M& m, const point_cloud<M>& cloud, double alpha, double beta,
                                     std::size_t anchor = 0) {
    if (anchor >= cloud.size())
        throw domain_error("envelope_around: anchor index " + std::to_string(anchor) + " out of range");
    const auto& o = cloud.point(anchor);
    double radius = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) radius = std::max(radius, m.distance(o, cloud.point(i)));
    if (radius == 0.0) throw domain_error("envelope_around: all points coincide; the envelope radius would be 0");
    return geometry_envelope<M>(alpha, beta, o, radius, M::injectivity_radius());
}

} // namespace riemax
