#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "riemax/core/point_cloud.hpp"
#include "riemax/manifold/euclidean.hpp"
#include "riemax/manifold/klein.hpp"
#include "riemax/manifold/spd.hpp"

namespace riemax {

namespace detail {

template <typename Rng>
Eigen::VectorXd uniform_ball_point(std::size_t dim, double radius, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
    double n = 0.0;
    do {
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
        n = v.norm();
    } while (n < 1e-12);
    return v * (radius * std::pow(uniform(rng), 1.0 / static_cast<double>(dim)) / n);
}

} // namespace detail

/// n points uniform in the unit ball of R^dim.
inline std::vector<Eigen::VectorXd> random_euclidean_points(std::size_t n, std::size_t dim,
                                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(detail::uniform_ball_point(dim, 1.0, rng));
    return pts;
}

inline point_cloud<euclidean_manifold> random_euclidean_cloud(std::size_t n, std::size_t dim,
                                                              std::uint64_t seed) {
    return point_cloud<euclidean_manifold>(euclidean_manifold{}, random_euclidean_points(n, dim, seed));
}

/// n Klein points within hyperbolic distance `klein_radius` of the origin,
/// sampled uniformly in the model coordinates (a Euclidean ball of radius
/// tanh(klein_radius)).
inline std::vector<klein_point> random_klein_points(std::size_t n, std::size_t dim, std::uint64_t seed,
                                                    double klein_radius = 0.8) {
    std::mt19937_64 rng(seed);
    const double coord_radius = std::tanh(klein_radius);
    std::vector<klein_point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.emplace_back(detail::uniform_ball_point(dim, coord_radius, rng));
    return pts;
}

inline point_cloud<klein_manifold> random_klein_cloud(std::size_t n, std::size_t dim, std::uint64_t seed,
                                                      double klein_radius = 0.8) {
    return point_cloud<klein_manifold>(klein_manifold{}, random_klein_points(n, dim, seed, klein_radius));
}

/// n SPD matrices exp(A) for random symmetric A with spectral norm at most 1.
inline std::vector<spd_matrix> random_spd_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<spd_matrix> pts;
    pts.reserve(n);
    const auto d = static_cast<Eigen::Index>(dim);
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::MatrixXd a(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            a(r, r) = gauss(rng);
            for (Eigen::Index c = r + 1; c < d; ++c) a(r, c) = a(c, r) = gauss(rng);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        const double spectral = es.eigenvalues().cwiseAbs().maxCoeff();
        if (spectral > 1.0) a /= spectral;
        pts.emplace_back(detail::sym_matrix_function(a, [](double lam) { return std::exp(lam); }));
    }
    return pts;
}

inline point_cloud<spd_manifold> random_spd_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
    return point_cloud<spd_manifold>(spd_manifold{}, random_spd_points(n, dim, seed));
}

} // namespace riemax
