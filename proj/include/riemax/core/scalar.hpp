#pragma once

#include <algorithm>
#include <cmath>

#include "riemax/core/errors.hpp"

namespace riemax {

/// A nonnegative extended real: either a finite value or +infinity.
///
/// Kept as an explicit two-state type rather than a sentinel double so that
/// minima and comparisons stay exact.
class extended_real {
public:
    static extended_real infinity() { return extended_real(true, 0.0); }

    static extended_real finite(double v) {
        if (!std::isfinite(v)) throw domain_error("extended_real: finite() called with a non-finite value");
        return extended_real(false, v);
    }

    bool is_finite() const { return !infinite_; }

    /// The finite value; throws when infinite.
    double value() const {
        if (infinite_) throw domain_error("extended_real: value() called on infinity");
        return value_;
    }

    /// The finite value, or `fallback` when infinite.
    double value_or(double fallback) const { return infinite_ ? fallback : value_; }

    friend extended_real min(extended_real a, extended_real b) {
        if (!a.is_finite()) return b;
        if (!b.is_finite()) return a;
        return finite(std::min(a.value_, b.value_));
    }

    friend bool operator<(double x, const extended_real& e) { return !e.is_finite() || x < e.value_; }
    friend bool operator>=(double x, const extended_real& e) { return !(x < e); }
    friend bool operator<(const extended_real& e, double x) { return e.is_finite() && e.value_ < x; }

private:
    extended_real(bool inf, double v) : infinite_(inf), value_(v) {}

    bool infinite_;
    double value_;
};

} // namespace riemax
