#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "riemax/core/errors.hpp"

namespace riemax {

/// Everything needed to reproduce a solve run: the config block of the
/// summary echoes these values verbatim.
struct run_config_echo {
    std::string manifold;
    std::string input;
    std::uint64_t iters = 0;
    std::string schedule; // flag syntax: harmonic | clamped | scaled:<r>
    std::optional<double> delta;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> envelope_radius;
    bool force_delta = false;
    std::uint64_t start = 0;
    std::uint64_t seed = 0;
    std::string tie = "deterministic";
    std::string oracle = "none";
    bool thin_trace = false;
    bool relative = false;
};

struct run_summary {
    std::string manifold;
    std::uint64_t n_points = 0;
    std::uint64_t dimension = 0;
    std::uint64_t iterations = 0;
    double final_radius = 0.0;
    std::optional<double> oracle_radius;
    std::optional<double> oracle_center_distance;
    std::uint64_t coreset_size = 0;
    double wall_clock_seconds = 0.0;
    run_config_echo config;
};

inline nlohmann::json to_json(const run_config_echo& c) {
    nlohmann::json j{{"manifold", c.manifold}, {"input", c.input},           {"iters", c.iters},
                     {"schedule", c.schedule}, {"force_delta", c.force_delta}, {"start", c.start},
                     {"seed", c.seed},         {"tie", c.tie},               {"oracle", c.oracle},
                     {"thin_trace", c.thin_trace}, {"relative", c.relative}};
    if (c.delta) j["delta"] = *c.delta;
    if (c.alpha) j["alpha"] = *c.alpha;
    if (c.beta) j["beta"] = *c.beta;
    if (c.envelope_radius) j["envelope_radius"] = *c.envelope_radius;
    return j;
}

inline nlohmann::json to_json(const run_summary& s) {
    const auto finite = [](double v, const char* what) {
        if (!std::isfinite(v)) throw numeric_error(std::string("run summary: non-finite ") + what);
        return v;
    };
    nlohmann::json j{{"manifold", s.manifold},
                     {"n_points", s.n_points},
                     {"dimension", s.dimension},
                     {"iterations", s.iterations},
                     {"final_radius", finite(s.final_radius, "final_radius")},
                     {"coreset_size", s.coreset_size},
                     {"wall_clock_seconds", finite(s.wall_clock_seconds, "wall_clock_seconds")},
                     {"config", to_json(s.config)}};
    if (s.oracle_radius) j["oracle_radius"] = finite(*s.oracle_radius, "oracle_radius");
    if (s.oracle_center_distance)
        j["oracle_center_distance"] = finite(*s.oracle_center_distance, "oracle_center_distance");
    return j;
}

inline run_config_echo config_echo_from_json(const nlohmann::json& j) {
    run_config_echo c;
    c.manifold = j.at("manifold").get<std::string>();
    c.input = j.at("input").get<std::string>();
    c.iters = j.at("iters").get<std::uint64_t>();
    c.schedule = j.at("schedule").get<std::string>();
    if (j.contains("delta")) c.delta = j["delta"].get<double>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) c.beta = j["beta"].get<double>();
    if (j.contains("envelope_radius")) c.envelope_radius = j["envelope_radius"].get<double>();
    c.force_delta = j.at("force_delta").get<bool>();
    c.start = j.at("start").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.tie = j.at("tie").get<std::string>();
    c.oracle = j.at("oracle").get<std::string>();
    c.thin_trace = j.at("thin_trace").get<bool>();
    c.relative = j.at("relative").get<bool>();
    return c;
}

inline void write_summary_file(const std::string& path, const run_summary& s) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open summary file '" + path + "' for writing");
    out << to_json(s).dump(1) << '\n';
}

} // namespace riemax
