#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "riemax/core/envelope.hpp"
#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/oracle/welzl.hpp"
#include "riemax/theory/constants.hpp"

namespace riemax {

/// Empirical quadratic-growth constant of the cost around a solved center:
///
///     tau_hat = min over sampled x in B(center, radius_cap) of
///               ( H(x) - H(center) ) / rho^2(x, center),
///
/// excluding samples within 1e-6 of the center. Samples take a uniform random
/// unit tangent and a uniform arclength in (0, radius_cap]. A positive return
/// is the empirically testable face of quadratic growth; a nonpositive one
/// indicts the reference center.
template <Manifold M>
double growth_estimate(const M& m, const point_cloud<M>& cloud, const oracle_result<M>& reference,
                       std::size_t samples, double radius_cap, std::uint64_t seed = 0x9e0eull) {
    if (samples < 100) throw domain_error("growth_estimate: need at least 100 samples");
    if (!(radius_cap > 0.0)) throw domain_error("growth_estimate: radius_cap must be positive");
    m.validate(reference.center);

    const double h_center = radius_at(m, reference.center, cloud);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    double tau = std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto v = m.random_unit_tangent(reference.center, rng);
        const double r = radius_cap * (1.0 - uniform(rng)); // (0, radius_cap]
        const auto x = m.exp_point(reference.center, v, r);
        const double rho = m.distance(reference.center, x);
        if (rho <= 1e-6) continue;
        const double ratio = (radius_at(m, x, cloud) - h_center) / (rho * rho);
        if (ratio < tau) tau = ratio;
        ++used;
    }
    if (used == 0) throw numeric_error("growth_estimate: every sample fell inside the exclusion zone");
    return tau;
}

/// Same estimator with the sampling cap defaulted to the capture radius R_0
/// derived from the envelope, the ball on which quadratic growth is used.
template <Manifold M>
double growth_estimate(const M& m, const point_cloud<M>& cloud, const oracle_result<M>& reference,
                       std::size_t samples, const geometry_envelope<M>& envelope,
                       std::uint64_t seed = 0x9e0eull) {
    return growth_estimate(m, cloud, reference, samples, derive_constants(envelope).r_zero, seed);
}

} // namespace riemax
