#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "riemax/core/envelope.hpp"
#include "riemax/core/errors.hpp"
#include "riemax/core/scalar.hpp"

namespace riemax {

/// R_alpha = (1/2) min{ inj(M), pi/alpha }.
inline extended_real r_alpha(double alpha, extended_real injectivity) {
    if (!(alpha > 0.0)) throw domain_error("r_alpha: alpha must be positive");
    const extended_real curv = extended_real::finite(std::numbers::pi / alpha);
    const extended_real m = min(injectivity, curv);
    return m.is_finite() ? extended_real::finite(0.5 * m.value()) : extended_real::infinity();
}

/// R_0 = min( (R_alpha - R)/2, R/2 ), defined under the standing assumption
/// R < R_alpha.
inline double r_zero(double R, extended_real R_alpha_value) {
    if (!(R > 0.0)) throw domain_error("r_zero: R must be positive");
    if (!(R < R_alpha_value))
        throw domain_error("r_zero: R = " + std::to_string(R) +
                           " does not satisfy R < R_alpha; the enclosing ball is too large for this curvature bound");
    if (!R_alpha_value.is_finite()) return 0.5 * R;
    return std::min(0.5 * (R_alpha_value.value() - R), 0.5 * R);
}

/// Step-size cap
///   delta <= R_0/2  and  delta <= (2/beta) arctanh( tanh(beta R_0/2) cos(alpha R) tan(alpha R_0/4) ),
/// returned as the minimum of the two branches.
inline double delta_max(double alpha, double beta, double R, double R0) {
    if (!(alpha > 0.0 && beta > 0.0 && R > 0.0 && R0 > 0.0))
        throw domain_error("delta_max: all parameters must be positive");
    const double c = std::cos(alpha * R);
    if (c <= 0.0)
        throw domain_error("delta_max: cos(alpha R) <= 0; the geometry envelope is too large for this bound");
    if (0.25 * alpha * R0 >= 0.5 * std::numbers::pi)
        throw domain_error("delta_max: alpha R_0 / 4 must stay below pi/2");
    const double first = 0.5 * R0;
    const double inner = std::tanh(0.5 * beta * R0) * c * std::tan(0.25 * alpha * R0);
    const double second = (2.0 / beta) * std::atanh(inner);
    return std::min(first, second);
}

/// Hessian bound C(r, beta) = 2 r beta coth(2 beta r).
inline double hessian_constant(double r, double beta) {
    if (!(r > 0.0 && beta > 0.0)) throw domain_error("hessian_constant: r and beta must be positive");
    const double x = 2.0 * beta * r;
    return x / std::tanh(x);
}

/// Contraction coefficient
///   eta = beta cos(alpha R) tan(alpha R_0/4) ( tanh(beta R_0) - tanh(beta R_0/2) ),
/// positive whenever alpha R < pi/2; the per-step factor in
/// cosh(beta rho_{k+1}) / cosh(beta rho_k) <= 1 - eta t_{k+1} outside B(c, R_0).
inline double contraction_eta(double alpha, double beta, double R, double R0) {
    if (!(alpha > 0.0 && beta > 0.0 && R > 0.0 && R0 > 0.0))
        throw domain_error("contraction_eta: all parameters must be positive");
    const double c = std::cos(alpha * R);
    if (c <= 0.0)
        throw domain_error("contraction_eta: cos(alpha R) <= 0; the geometry envelope is too large for this bound");
    if (0.25 * alpha * R0 >= 0.5 * std::numbers::pi)
        throw domain_error("contraction_eta: alpha R_0 / 4 must stay below pi/2");
    return beta * c * std::tan(0.25 * alpha * R0) * (std::tanh(beta * R0) - std::tanh(0.5 * beta * R0));
}

/// Heuristic growth constant (alpha/2) cot(alpha R_alpha). A hint only; never
/// used in assertions about data.
inline double tau_hint(double alpha, double r_alpha_value) {
    if (!(alpha > 0.0 && r_alpha_value > 0.0)) throw domain_error("tau_hint: parameters must be positive");
    return 0.5 * alpha / std::tan(alpha * r_alpha_value);
}

struct theory_constants {
    extended_real r_alpha;
    double r_zero;
    double delta_max;
    double c_hessian; // C((R_alpha + R)/2, beta)
    double eta;
    double tau_hint;
};

/// Every derived constant for one geometry envelope.
template <Manifold M>
theory_constants derive_constants(const geometry_envelope<M>& env) {
    const extended_real ra = r_alpha(env.alpha, env.injectivity);
    const double r0 = r_zero(env.radius, ra);
    return theory_constants{
        ra,
        r0,
        delta_max(env.alpha, env.beta, env.radius, r0),
        hessian_constant(0.5 * (ra.value() + env.radius), env.beta),
        contraction_eta(env.alpha, env.beta, env.radius, r0),
        tau_hint(env.alpha, ra.value()),
    };
}

struct delta_sweep_result {
    double alpha;
    double r_zero;
    double delta;
};

/// On a manifold of nonpositive curvature any alpha > 0 is a valid upper
/// bound, so the step cap can be maximized over alpha. Plain grid sweep over
/// (0, pi/(2R)); goes beyond the literal cap formula, which vanishes as
/// alpha -> 0 with R_0 fixed.
inline delta_sweep_result best_delta_nonpositive(double beta, double R, int grid_points = 512) {
    if (!(beta > 0.0 && R > 0.0)) throw domain_error("best_delta_nonpositive: beta and R must be positive");
    if (grid_points < 2) throw domain_error("best_delta_nonpositive: need at least 2 grid points");
    const double alpha_hi = 0.999 * 0.5 * std::numbers::pi / R;
    delta_sweep_result best{alpha_hi, 0.0, 0.0};
    for (int i = 1; i <= grid_points; ++i) {
        const double a = alpha_hi * static_cast<double>(i) / grid_points;
        const extended_real ra = r_alpha(a, extended_real::infinity());
        if (!(R < ra)) continue;
        const double r0 = r_zero(R, ra);
        const double d = delta_max(a, beta, R, r0);
        if (d > best.delta) best = {a, r0, d};
    }
    if (best.delta == 0.0) throw numeric_error("best_delta_nonpositive: sweep found no admissible alpha");
    return best;
}

} // namespace riemax
