#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "riemax/core/envelope.hpp"
#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/io/log.hpp"
#include "riemax/solver/schedule.hpp"
#include "riemax/solver/trace.hpp"
#include "riemax/theory/constants.hpp"

namespace riemax {

template <Manifold M>
struct solver_config {
    step_schedule schedule = step_schedule::harmonic();
    std::size_t max_iterations = 100;
    std::size_t start_index = 0;
    /// When set, overrides start_index (a start that is not a support point).
    std::optional<typename M::Point> start_point;
    tie_break tie = tie_break::deterministic;
    std::uint64_t seed = 0;
    /// Stop once a step's arclength falls below this.
    std::optional<double> stop_tolerance;
    /// Keep only records k = 0, powers of two, and the final one.
    bool thin_trace = false;
    /// Skip the step-cap validation against the theory bound (logged).
    bool force_delta = false;
};

namespace detail {

inline bool is_power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

/// Shared iteration engine. `apply_step(x, target, t, rho)` moves the center
/// and reports the arclength travelled; the two public algorithms differ only
/// in how the schedule value is interpreted (fraction vs arclength).
template <Manifold M, typename StepFn>
iteration_trace<M> run_engine(const M& m, const point_cloud<M>& cloud, const solver_config<M>& config,
                              StepFn&& apply_step) {
    if (config.max_iterations < 1) throw config_error("solver: max_iterations must be at least 1");
    typename M::Point x = [&] {
        if (config.start_point) {
            m.validate(*config.start_point);
            return *config.start_point;
        }
        if (config.start_index >= cloud.size())
            throw config_error("solver: start index " + std::to_string(config.start_index) +
                               " out of range for a cloud of " + std::to_string(cloud.size()) + " points");
        return cloud.point(config.start_index);
    }();

    std::mt19937_64 rng(config.seed);
    std::mt19937_64* rng_ptr = config.tie == tie_break::seeded_random ? &rng : nullptr;
    std::vector<double> scratch;
    std::vector<char> in_coreset(cloud.size(), 0);

    iteration_trace<M> trace(x);
    const auto keep = [&](std::size_t k, bool last) {
        return !config.thin_trace || k == 0 || last || is_power_of_two(k);
    };
    trace.thinned = config.thin_trace;

    farthest_result far = farthest_scan(m, x, cloud, config.tie, rng_ptr, &scratch);
    trace.records.push_back({0, x, far.distance, far.index, 0.0});

    if (far.distance <= degenerate_step_distance) { // single-support cloud: already the center
        trace.final_center = x;
        trace.final_radius = far.distance;
        return trace;
    }

    for (std::size_t k = 1; k <= config.max_iterations; ++k) {
        const double t = config.schedule.step(k);
        if (in_coreset[far.index] == 0) {
            in_coreset[far.index] = 1;
            trace.coreset.push_back(far.index);
        }
        auto [next, moved] = apply_step(x, cloud.point(far.index), t, far.distance);
        x = std::move(next);
        far = farthest_scan(m, x, cloud, config.tie, rng_ptr, &scratch);
        trace.iterations = k;

        const bool stopping = (config.stop_tolerance && moved < *config.stop_tolerance) ||
                              k == config.max_iterations;
        if (keep(k, stopping)) trace.records.push_back({k, x, far.distance, far.index, moved});
        if (stopping) break;
    }

    trace.final_center = x;
    trace.final_radius = far.distance;
    return trace;
}

} // namespace detail

/// Fraction-step iteration: from the current center, move to the point a
/// fraction t_k = 1/(k+1) of the way along the geodesic to the farthest
/// support point. On the Euclidean manifold this is exactly the barycentric
/// recentering rule c + (f - c)/(k+1).
template <Manifold M>
iteration_trace<M> run_geo_alg(const M& m, const point_cloud<M>& cloud, const solver_config<M>& config) {
    const auto kind = config.schedule.kind();
    if (kind != schedule_kind::harmonic && kind != schedule_kind::clamped_harmonic)
        throw config_error("run_geo_alg: fraction stepping expects a harmonic or clamped harmonic schedule");
    return detail::run_engine(m, cloud, config,
                              [&m](const typename M::Point& x, const typename M::Point& f, double t,
                                   double rho) -> std::pair<typename M::Point, double> {
                                  return {m.interpolate(x, f, t), t * rho};
                              });
}

/// Arclength-step iteration: walk t_{k+1} in (0, delta] along the unit-speed
/// geodesic toward the farthest support point. The schedule must carry a step
/// cap delta; unless `force_delta` is set, the cap is validated against the
/// theory bound derived from the envelope.
template <Manifold M>
iteration_trace<M> run_rie_alg(const M& m, const point_cloud<M>& cloud, const geometry_envelope<M>& env,
                               const solver_config<M>& config) {
    const auto delta = config.schedule.delta();
    if (!delta) throw config_error("run_rie_alg: the schedule needs an arclength cap delta");
    const theory_constants tc = derive_constants(env);
    if (*delta > tc.delta_max) {
        if (!config.force_delta)
            throw config_error("run_rie_alg: delta = " + std::to_string(*delta) +
                               " exceeds the admissible cap " + std::to_string(tc.delta_max) +
                               " for this envelope (set force_delta to override)");
        log_info("run_rie_alg: delta " + std::to_string(*delta) + " overrides the admissible cap " +
                 std::to_string(tc.delta_max));
    }
    return detail::run_engine(m, cloud, config,
                              [&m](const typename M::Point& x, const typename M::Point& f, double t,
                                   double /*rho*/) -> std::pair<typename M::Point, double> {
                                  auto step = geodesic_step(m, x, f, t);
                                  return {std::move(step.point), step.arclength};
                              });
}

} // namespace riemax
