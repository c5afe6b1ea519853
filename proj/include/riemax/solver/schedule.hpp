#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riemax/core/errors.hpp"

namespace riemax {

enum class schedule_kind { harmonic, scaled, clamped_harmonic, custom };

/// Step-size rule t_k for the k-th update (k >= 1):
///   harmonic          t_k = 1/(k+1)
///   scaled            t_k = r/(k+1)
///   clamped_harmonic  t_k = min(1/(k+1), delta)
///   custom            an explicit positive sequence
/// An optional cap delta bounds every emitted step; harmonic and scaled
/// schedules satisfy sum t_k = inf and sum t_k^2 < inf by construction.
class step_schedule {
public:
    static step_schedule harmonic() { return step_schedule(schedule_kind::harmonic, 1.0, std::nullopt, {}); }

    static step_schedule scaled(double r) {
        if (!(r > 0.0)) throw config_error("step schedule: scale must be positive");
        return step_schedule(schedule_kind::scaled, r, std::nullopt, {});
    }

    static step_schedule clamped_harmonic(double delta) {
        if (!(delta > 0.0)) throw config_error("step schedule: delta must be positive");
        return step_schedule(schedule_kind::clamped_harmonic, 1.0, delta, {});
    }

    static step_schedule custom(std::vector<double> steps) {
        if (steps.empty()) throw config_error("step schedule: custom sequence is empty");
        for (double t : steps)
            if (!(t > 0.0)) throw config_error("step schedule: custom steps must be positive");
        return step_schedule(schedule_kind::custom, 1.0, std::nullopt, std::move(steps));
    }

    /// Same rule with every emitted step additionally capped at delta.
    step_schedule with_delta(double delta) const {
        if (!(delta > 0.0)) throw config_error("step schedule: delta must be positive");
        step_schedule s = *this;
        s.delta_ = delta;
        return s;
    }

    schedule_kind kind() const { return kind_; }
    double scale() const { return scale_; }
    std::optional<double> delta() const { return delta_; }

    /// Step for the k-th update, k >= 1.
    double step(std::size_t k) const {
        if (k == 0) throw config_error("step schedule: update index k starts at 1");
        double raw = 0.0;
        switch (kind_) {
        case schedule_kind::harmonic:
        case schedule_kind::clamped_harmonic:
            raw = 1.0 / (static_cast<double>(k) + 1.0);
            break;
        case schedule_kind::scaled:
            raw = scale_ / (static_cast<double>(k) + 1.0);
            break;
        case schedule_kind::custom:
            if (k > custom_.size()) throw config_error("step schedule: custom sequence exhausted at k = " + std::to_string(k));
            raw = custom_[k - 1];
            break;
        }
        if (delta_ && raw > *delta_) raw = *delta_;
        return raw;
    }

private:
    step_schedule(schedule_kind kind, double scale, std::optional<double> delta, std::vector<double> custom)
        : kind_(kind), scale_(scale), delta_(delta), custom_(std::move(custom)) {}

    schedule_kind kind_;
    double scale_;
    std::optional<double> delta_;
    std::vector<double> custom_;
};

} // namespace riemax
