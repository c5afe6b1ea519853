#pragma once

#include <cstdint>

#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/oracle/welzl.hpp"
#include "riemax/solver/minimax.hpp"

namespace riemax {

/// Long-run reference center: the final iterate of a fraction-step solve with
/// a thin trace. With 1e5..1e6 iterations the result is accurate enough to
/// serve as ground truth for curved manifolds, where no exact solver is
/// implemented.
template <Manifold M>
oracle_result<M> reference_solve(const M& m, const point_cloud<M>& cloud, std::size_t iterations,
                                 std::size_t start_index = 0) {
    if (iterations < 1) throw config_error("reference_solve: need at least one iteration");
    solver_config<M> cfg;
    cfg.schedule = step_schedule::harmonic(); // t_k = 1/(k+1), the scaled rule with r = 1
    cfg.max_iterations = iterations;
    cfg.start_index = start_index;
    cfg.thin_trace = true;
    auto trace = run_geo_alg(m, cloud, cfg);
    return {trace.final_center, trace.final_radius, oracle_method::long_run_reference, {}};
}

} // namespace riemax
