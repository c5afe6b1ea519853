#pragma once

#include <cmath>
#include <cstddef>

#include "riemax/core/errors.hpp"

namespace riemax {

/// Closed-form upper bound for u_{k+1} where the nonnegative sequence obeys
///
///     u_{k+1} <= (1 - lambda/(k+1)) u_k + xi/(k+1)^2 :
///
///     lambda < 1 :  ( u_0 + 2^lambda xi (2 - lambda)/(1 - lambda) ) / (k+1)^lambda
///     lambda = 1 :  xi (1 + ln(k+1)) / (k+1)
///     lambda > 1 :  ( xi + ((lambda-1) u_0 - xi)/(k+2)^{lambda-1} ) / ( (lambda-1)(k+2) )
///
/// The lambda = 1 case is selected by exact comparison, not as a limit of the
/// other two.
inline double rate_bound(std::size_t k, double lambda, double xi, double u0) {
    if (!(lambda > 0.0)) throw domain_error("rate_bound: lambda must be positive");
    if (!(xi > 0.0)) throw domain_error("rate_bound: xi must be positive");
    if (!(u0 >= 0.0)) throw domain_error("rate_bound: u0 must be nonnegative");
    const double kp1 = static_cast<double>(k) + 1.0;
    if (lambda < 1.0)
        return (u0 + std::pow(2.0, lambda) * xi * (2.0 - lambda) / (1.0 - lambda)) / std::pow(kp1, lambda);
    if (lambda == 1.0) return xi * (1.0 + std::log(kp1)) / kp1;
    const double kp2 = static_cast<double>(k) + 2.0;
    return (xi + ((lambda - 1.0) * u0 - xi) / std::pow(kp2, lambda - 1.0)) / ((lambda - 1.0) * kp2);
}

} // namespace riemax
