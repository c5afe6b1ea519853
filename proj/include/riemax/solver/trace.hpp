#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "riemax/core/manifold.hpp"

namespace riemax {

/// State snapshot after update k (k = 0 is the start point): the center, its
/// cost H, the farthest index at that center, and the arclength of the step
/// that produced it.
template <Manifold M>
struct trace_record {
    std::size_t k;
    typename M::Point center;
    double radius;
    std::size_t farthest_index;
    double step_arclength;
};

/// Full record of a solver run. `coreset` lists the farthest-point indices
/// actually stepped toward, deduplicated in order of first appearance; it is
/// accumulated during the run so trace thinning does not lose it.
template <Manifold M>
struct iteration_trace {
    explicit iteration_trace(typename M::Point start)
        : final_center(std::move(start)) {}

    std::vector<trace_record<M>> records;
    typename M::Point final_center;
    double final_radius = 0.0;
    std::size_t iterations = 0; // update steps executed
    std::vector<std::size_t> coreset;
    bool thinned = false;
};

/// Distinct farthest-point indices in order of first appearance.
template <Manifold M>
const std::vector<std::size_t>& coreset_indices(const iteration_trace<M>& trace) {
    return trace.coreset;
}

} // namespace riemax
