#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "riemax/core/errors.hpp"
#include "riemax/core/manifold.hpp"

namespace riemax {

/// Finite support of the input measure: an ordered list of points with
/// nonnegative weights summing to 1 (uniform when omitted). Under the L-inf
/// cost only the zero/nonzero distinction of a weight matters: zero-weight
/// points are excluded from farthest-point scans.
template <Manifold M>
class point_cloud {
public:
    static constexpr double weight_sum_tolerance = 1e-12;

    point_cloud(const M& m, std::vector<typename M::Point> points)
        : point_cloud(m, std::move(points), std::vector<double>{}) {}

    point_cloud(const M& m, std::vector<typename M::Point> points, std::vector<double> weights)
        : points_(std::move(points)), weights_(std::move(weights)) {
        if (points_.empty()) throw domain_error("point cloud: empty");
        for (const auto& p : points_) m.validate(p);
        if (!weights_.empty()) {
            if (weights_.size() != points_.size())
                throw domain_error("point cloud: " + std::to_string(weights_.size()) + " weights for " +
                                   std::to_string(points_.size()) + " points");
            double sum = 0.0;
            for (double w : weights_) {
                if (!(w >= 0.0)) throw domain_error("point cloud: negative or non-finite weight");
                sum += w;
            }
            if (std::abs(sum - 1.0) > weight_sum_tolerance)
                throw domain_error("point cloud: weights sum to " + std::to_string(sum) + ", expected 1");
        }
    }

    std::size_t size() const { return points_.size(); }
    const typename M::Point& point(std::size_t i) const { return points_[i]; }
    const std::vector<typename M::Point>& points() const { return points_; }

    bool uniform() const { return weights_.empty(); }
    double weight(std::size_t i) const { return weights_.empty() ? 1.0 / points_.size() : weights_[i]; }

private:
    std::vector<typename M::Point> points_;
    std::vector<double> weights_;
};

enum class tie_break { deterministic, seeded_random };

struct farthest_result {
    std::size_t index;
    double distance;
};

/// Indices within this relative tolerance of the maximum distance count as
/// attaining it.
inline constexpr double farthest_tie_rel_tol = 1e-12;

namespace detail {

/// One scan over the positive-weight support. Under the deterministic policy
/// the lowest attaining index wins regardless of scan order; under the random
/// policy a uniform choice is made among indices within the tie tolerance.
/// `scratch` avoids reallocating the distance buffer across solver iterations.
template <Manifold M>
farthest_result farthest_scan(const M& m, const typename M::Point& x, const point_cloud<M>& cloud,
                              tie_break policy, std::mt19937_64* rng, std::vector<double>* scratch) {
    std::vector<double> local;
    std::vector<double>& d = scratch ? *scratch : local;
    d.assign(cloud.size(), -1.0);

    double dmax = -1.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (cloud.weight(i) == 0.0) continue;
        d[i] = m.distance(x, cloud.point(i));
        if (d[i] > dmax) dmax = d[i];
    }
    if (dmax < 0.0) throw domain_error("farthest_point: no positive-weight point in the cloud");

    const double threshold = dmax - farthest_tie_rel_tol * dmax;
    if (policy == tie_break::deterministic) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] >= threshold) return {i, dmax};
        return {0, dmax}; // unreachable
    }
    if (rng == nullptr) throw config_error("farthest_point: seeded_random policy needs a generator");
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] >= threshold) ties.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
    return {ties[pick(*rng)], dmax};
}

} // namespace detail

/// Index of a point attaining the maximum distance from x, with the attained
/// distance. Lowest index under the deterministic policy.
template <Manifold M>
farthest_result farthest_point(const M& m, const typename M::Point& x, const point_cloud<M>& cloud) {
    m.validate(x);
    return detail::farthest_scan(m, x, cloud, tie_break::deterministic, nullptr, nullptr);
}

/// Seeded-random tie breaking: a uniform choice among the indices within the
/// tie tolerance of the maximum.
template <Manifold M>
farthest_result farthest_point(const M& m, const typename M::Point& x, const point_cloud<M>& cloud,
                               std::mt19937_64& rng) {
    m.validate(x);
    return detail::farthest_scan(m, x, cloud, tie_break::seeded_random, &rng, nullptr);
}

/// H(x): the farthest distance from x to a positive-weight support point.
template <Manifold M>
double radius_at(const M& m, const typename M::Point& x, const point_cloud<M>& cloud) {
    m.validate(x);
    return detail::farthest_scan(m, x, cloud, tie_break::deterministic, nullptr, nullptr).distance;
}

} // namespace riemax
