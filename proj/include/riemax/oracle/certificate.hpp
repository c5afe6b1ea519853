#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"

namespace riemax {

/// Outcome of the first-order optimality check at a candidate center: for
/// every sampled unit tangent v there must be a near-farthest support point y
/// whose direction u_y satisfies <u_y, v> <= tolerance. `worst_margin` is
/// max over v of min over y of <u_y, v>.
struct certificate_report {
    bool pass = false;
    double worst_margin = 0.0;
    std::vector<std::size_t> support; // indices within the band of the max distance
    double band = 0.0;
    double tolerance = 0.0;
    std::size_t directions = 0;
};

/// Directional optimality certificate at `center`.
///
/// Support points within `band` (relative) of the farthest distance are
/// collected; their unit tangent directions are computed in the isometric
/// frame the manifold provides (translation to the origin for the Klein ball,
/// congruence to the identity for SPD, the identity frame for Euclidean
/// space), where inner products are the flat ones. `directions` random unit
/// tangents then probe the sphere of directions; 0 picks max(256, 64 * dim).
///
/// The sampling replaces the universal quantifier over directions, so a PASS
/// is evidence at the documented sampling density, while a FAIL (some v has
/// positive margin against every near-farthest point) is conclusive.
template <Manifold M>
certificate_report optimality_certificate(const M& m, const typename M::Point& center,
                                          const point_cloud<M>& cloud, double band = 1e-6,
                                          std::size_t directions = 0, double tolerance = 1e-3,
                                          std::uint64_t seed = 0xce27ull) {
    if (!(band >= 0.0)) throw domain_error("optimality_certificate: band must be nonnegative");
    m.validate(center);

    certificate_report report;
    report.band = band;
    report.tolerance = tolerance;

    const double h = radius_at(m, center, cloud);
    if (h <= degenerate_step_distance) {
        // every support point coincides with the center; nothing to certify
        report.pass = true;
        report.worst_margin = -1.0;
        report.directions = 0;
        return report;
    }

    std::vector<typename M::Tangent> dirs;
    const double cut = h * (1.0 - band);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (cloud.weight(i) == 0.0) continue;
        if (m.distance(center, cloud.point(i)) >= cut) {
            report.support.push_back(i);
            dirs.push_back(m.log_direction(center, cloud.point(i)));
        }
    }
    if (dirs.empty()) throw domain_error("optimality_certificate: no near-farthest point inside the band");

    if (directions == 0) directions = std::max<std::size_t>(256, 64 * m.tangent_dimension(center));
    report.directions = directions;

    std::mt19937_64 rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < directions; ++s) {
        const auto v = m.random_unit_tangent(center, rng);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& u : dirs) best = std::min(best, m.tangent_inner(u, v));
        worst = std::max(worst, best);
    }
    report.worst_margin = worst;
    report.pass = worst <= tolerance;
    return report;
}

} // namespace riemax
