#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "riemax/core/errors.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/manifold/euclidean.hpp"

namespace riemax {

enum class oracle_method { welzl_exact, long_run_reference };

template <Manifold M>
struct oracle_result {
    typename M::Point center;
    double radius;
    oracle_method method;
    std::vector<std::size_t> support; // exact method only; at most d+1 indices
};

namespace detail {

struct welzl_entry {
    const Eigen::VectorXd* point;
    std::size_t index;
};

struct welzl_ball {
    Eigen::VectorXd center;
    double radius = -1.0; // negative marks the empty ball
    std::vector<std::size_t> support;

    bool contains(const Eigen::VectorXd& p) const {
        if (radius < 0.0) return false;
        const double slack = 1e-12 * std::max(1.0, radius);
        return (p - center).norm() <= radius + slack;
    }
};

/// Circumsphere of 1..d+1 affinely independent boundary points: the center
/// lies in their affine hull, equidistant from all of them. Solved through
/// the Gram system 2 (b_i - b_0).(c - b_0) = |b_i - b_0|^2.
inline welzl_ball ball_through(const std::vector<welzl_entry>& boundary) {
    welzl_ball b;
    const std::size_t m = boundary.size();
    if (m == 0) return b;
    for (const auto& e : boundary) b.support.push_back(e.index);
    const Eigen::VectorXd& q0 = *boundary[0].point;
    if (m == 1) {
        b.center = q0;
        b.radius = 0.0;
        return b;
    }
    const auto k = static_cast<Eigen::Index>(m - 1);
    Eigen::MatrixXd gram(k, k);
    Eigen::VectorXd rhs(k);
    std::vector<Eigen::VectorXd> edges;
    edges.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) edges.push_back(*boundary[i].point - q0);
    for (Eigen::Index i = 0; i < k; ++i) {
        rhs[i] = edges[i].squaredNorm();
        for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = 2.0 * edges[i].dot(edges[j]);
    }
    Eigen::VectorXd coef = gram.colPivHouseholderQr().solve(rhs);
    b.center = q0;
    for (Eigen::Index i = 0; i < k; ++i) b.center += coef[i] * edges[i];
    b.radius = 0.0;
    for (const auto& e : boundary) b.radius = std::max(b.radius, (*e.point - b.center).norm());
    return b;
}

/// Move-to-front recursion: the smallest ball of the points before `stop`
/// with `boundary` forced onto the sphere.
inline welzl_ball welzl_mtf(std::list<welzl_entry>& pts, std::list<welzl_entry>::iterator stop,
                            std::vector<welzl_entry>& boundary, std::size_t dim) {
    welzl_ball ball = ball_through(boundary);
    if (boundary.size() == dim + 1) return ball;

    for (auto it = pts.begin(); it != stop;) {
        auto cur = it++;
        if (!ball.contains(*cur->point)) {
            boundary.push_back(*cur);
            ball = welzl_mtf(pts, cur, boundary, dim);
            boundary.pop_back();
            pts.splice(pts.begin(), pts, cur); // move-to-front
        }
    }
    return ball;
}

} // namespace detail

/// Exact Euclidean smallest enclosing ball by the randomized move-to-front
/// recursion, with a fixed shuffle seed for reproducible runs. Supports
/// dimensions up to 10; larger inputs should use a long-run reference solve.
inline oracle_result<euclidean_manifold> welzl_exact(const std::vector<Eigen::VectorXd>& points,
                                                     std::uint64_t seed = 0x5eb5eb5eULL) {
    if (points.empty()) throw domain_error("welzl_exact: empty point set");
    const auto d = static_cast<std::size_t>(points[0].size());
    if (d == 0) throw domain_error("welzl_exact: zero-dimensional points");
    if (d > 10)
        throw domain_error("welzl_exact: dimension " + std::to_string(d) +
                           " unsupported (limit 10); use a long-run reference solve instead");
    for (const auto& p : points)
        if (static_cast<std::size_t>(p.size()) != d) throw domain_error("welzl_exact: mixed dimensions");

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::list<detail::welzl_entry> pts;
    for (std::size_t i : order) pts.push_back({&points[i], i});

    std::vector<detail::welzl_entry> boundary;
    detail::welzl_ball ball = detail::welzl_mtf(pts, pts.end(), boundary, d);

    if (ball.radius < 0.0) throw numeric_error("welzl_exact: no ball produced");
    std::sort(ball.support.begin(), ball.support.end());
    return {std::move(ball.center), ball.radius, oracle_method::welzl_exact, std::move(ball.support)};
}

/// Smallest enclosing ball of the positive-weight support of a Euclidean
/// cloud; support indices refer to the cloud.
inline oracle_result<euclidean_manifold> welzl_exact(const point_cloud<euclidean_manifold>& cloud,
                                                     std::uint64_t seed = 0x5eb5eb5eULL) {
    std::vector<Eigen::VectorXd> pts;
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (cloud.weight(i) == 0.0) continue;
        pts.push_back(cloud.point(i));
        map.push_back(i);
    }
    if (pts.empty()) throw domain_error("welzl_exact: no positive-weight point in the cloud");
    auto res = welzl_exact(pts, seed);
    for (auto& s : res.support) s = map[s];
    return res;
}

} // namespace riemax
