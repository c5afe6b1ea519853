// riemax: Riemannian minimax-center solver.
//
// Subcommands:
//   solve     run the iteration on a point cloud and emit trace/summary files
//   generate  write a reproducible random cloud
//
// Exit codes: 0 success, 1 configuration/input error, 2 numeric failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "riemax/riemax.hpp"

namespace {

using namespace riemax;

struct solve_options {
    std::string manifold;
    std::string input;
    std::uint64_t iters = 100;
    std::string schedule = "harmonic";
    std::optional<double> delta;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> envelope_radius;
    bool force_delta = false;
    std::uint64_t start = 0;
    std::uint64_t seed = 0;
    std::string tie = "deterministic";
    std::string oracle = "none";
    std::string trace_path;
    std::string summary_path;
    bool thin_trace = false;
    bool relative = false;
    std::uint64_t spd_dim = 0;
};

run_config_echo echo_of(const solve_options& opt) {
    run_config_echo echo;
    echo.manifold = opt.manifold;
    echo.input = opt.input;
    echo.iters = opt.iters;
    echo.schedule = opt.schedule;
    echo.delta = opt.delta;
    echo.alpha = opt.alpha;
    echo.beta = opt.beta;
    echo.envelope_radius = opt.envelope_radius;
    echo.force_delta = opt.force_delta;
    echo.start = opt.start;
    echo.seed = opt.seed;
    echo.tie = opt.tie;
    echo.oracle = opt.oracle;
    echo.thin_trace = opt.thin_trace;
    echo.relative = opt.relative;
    return echo;
}

struct parsed_schedule {
    step_schedule schedule = step_schedule::harmonic();
    bool arclength = false; // scaled:<r> selects arclength stepping
};

parsed_schedule parse_schedule(const solve_options& opt, double delta_for_cap) {
    if (opt.schedule == "harmonic") {
        auto s = step_schedule::harmonic();
        if (opt.delta) s = s.with_delta(*opt.delta);
        return {s, false};
    }
    if (opt.schedule == "clamped") {
        if (!opt.delta) throw config_error("--schedule clamped needs --delta");
        return {step_schedule::clamped_harmonic(*opt.delta), false};
    }
    if (opt.schedule.rfind("scaled:", 0) == 0) {
        double r = 0.0;
        try {
            r = std::stod(opt.schedule.substr(7));
        } catch (const std::exception&) {
            throw config_error("cannot parse scale in '" + opt.schedule + "'");
        }
        if (delta_for_cap <= 0.0)
            throw config_error("--schedule scaled:<r> runs arclength steps and needs a cap: pass "
                               "--delta or --alpha/--beta (and optionally --R) to derive one");
        return {step_schedule::scaled(r).with_delta(delta_for_cap), true};
    }
    throw config_error("unknown schedule '" + opt.schedule + "' (harmonic | clamped | scaled:<r>)");
}

/// Eq-cap validation when the envelope flags are present; returns the derived
/// cap so scaled runs can default to it.
template <Manifold M>
std::optional<double> validate_delta(const M& m, const point_cloud<M>& cloud, const solve_options& opt) {
    if (!opt.alpha && !opt.beta) return std::nullopt;
    if (!opt.alpha || !opt.beta)
        throw config_error("--alpha and --beta must be given together");
    auto env = envelope_around(m, cloud, *opt.alpha, *opt.beta);
    if (opt.envelope_radius) {
        if (*opt.envelope_radius < env.radius)
            throw config_error("--R " + std::to_string(*opt.envelope_radius) +
                               " does not enclose the support (needs at least " +
                               std::to_string(env.radius) + ")");
        env.radius = *opt.envelope_radius;
    }
    const auto tc = derive_constants(env);
    if (opt.delta && *opt.delta > tc.delta_max) {
        if (!opt.force_delta)
            throw config_error("--delta " + std::to_string(*opt.delta) + " exceeds the admissible cap " +
                               std::to_string(tc.delta_max) + " (use --force-delta to override)");
        log_info("delta " + std::to_string(*opt.delta) + " overrides the admissible cap " +
                 std::to_string(tc.delta_max));
    }
    return tc.delta_max;
}

template <Manifold M>
int run_solve(const M& m, point_cloud<M> cloud, const solve_options& opt, std::uint64_t dimension) {
    const auto derived_cap = validate_delta(m, cloud, opt);
    const double cap_for_scaled = opt.delta ? *opt.delta : derived_cap.value_or(0.0);
    const auto [schedule, arclength] = parse_schedule(opt, cap_for_scaled);

    solver_config<M> cfg;
    cfg.schedule = schedule;
    cfg.max_iterations = opt.iters;
    cfg.start_index = opt.start;
    cfg.seed = opt.seed;
    cfg.thin_trace = opt.thin_trace;
    cfg.force_delta = opt.force_delta;
    if (opt.tie == "random")
        cfg.tie = tie_break::seeded_random;
    else if (opt.tie != "deterministic")
        throw config_error("unknown tie policy '" + opt.tie + "' (deterministic | random)");

    const auto t0 = std::chrono::steady_clock::now();
    iteration_trace<M> trace = [&] {
        if (!arclength) return run_geo_alg(m, cloud, cfg);
        if (!opt.alpha || !opt.beta)
            throw config_error("arclength stepping needs --alpha and --beta for the envelope");
        auto env = envelope_around(m, cloud, *opt.alpha, *opt.beta);
        if (opt.envelope_radius) env.radius = *opt.envelope_radius;
        return run_rie_alg(m, cloud, env, cfg);
    }();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // oracle
    std::optional<typename M::Point> oracle_center;
    std::optional<double> oracle_radius;
    if (opt.oracle == "welzl") {
        if constexpr (std::is_same_v<M, euclidean_manifold>) {
            const auto w = welzl_exact(cloud);
            oracle_center = w.center;
            oracle_radius = w.radius;
        } else {
            throw config_error("--oracle welzl is only available on the euclidean manifold");
        }
    } else if (opt.oracle.rfind("reference:", 0) == 0) {
        std::size_t n = 0;
        try {
            n = std::stoull(opt.oracle.substr(10));
        } catch (const std::exception&) {
            throw config_error("cannot parse iteration count in '" + opt.oracle + "'");
        }
        const auto ref = reference_solve(m, cloud, n);
        oracle_center = ref.center;
        oracle_radius = ref.radius;
    } else if (opt.oracle != "none") {
        throw config_error("unknown oracle '" + opt.oracle + "' (welzl | reference:<N> | none)");
    }

    std::optional<std::vector<double>> oracle_dist;
    if (oracle_center) {
        oracle_dist.emplace();
        const double scale = opt.relative ? *oracle_radius : 1.0;
        for (const auto& rec : trace.records)
            oracle_dist->push_back(m.distance(rec.center, *oracle_center) / scale);
    }

    if (!opt.trace_path.empty())
        write_trace_csv_file(opt.trace_path, trace, oracle_dist ? &*oracle_dist : nullptr);

    if (!opt.summary_path.empty()) {
        run_summary summary;
        summary.manifold = std::string(M::name());
        summary.n_points = cloud.size();
        summary.dimension = dimension;
        summary.iterations = trace.iterations;
        summary.final_radius = trace.final_radius;
        summary.oracle_radius = oracle_radius;
        if (oracle_center)
            summary.oracle_center_distance = m.distance(trace.final_center, *oracle_center);
        summary.coreset_size = coreset_indices(trace).size();
        summary.wall_clock_seconds = seconds;
        summary.config = echo_of(opt);
        write_summary_file(opt.summary_path, summary);
    }

    log_info("solved " + std::string(M::name()) + ": n=" + std::to_string(cloud.size()) +
             " iterations=" + std::to_string(trace.iterations) +
             " final_radius=" + format_double(trace.final_radius));
    return 0;
}

int run_solve_dispatch(const solve_options& opt) {
    if (opt.manifold == "euclidean") {
        euclidean_manifold m;
        auto rows = read_points_csv_file(opt.input);
        const auto dim = static_cast<std::uint64_t>(rows[0].size());
        return run_solve(m, point_cloud<euclidean_manifold>(m, std::move(rows)), opt, dim);
    }
    if (opt.manifold == "klein") {
        klein_manifold m;
        auto rows = read_points_csv_file(opt.input);
        const auto dim = static_cast<std::uint64_t>(rows[0].size());
        std::vector<klein_point> pts;
        pts.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            try {
                pts.emplace_back(rows[i]);
            } catch (const domain_error& e) {
                throw config_error(opt.input + " row " + std::to_string(i + 1) + ": " + e.what());
            }
        }
        return run_solve(m, point_cloud<klein_manifold>(m, std::move(pts)), opt, dim);
    }
    if (opt.manifold == "spd") {
        if (opt.spd_dim == 0) throw config_error("--dim is required for the spd manifold");
        spd_manifold m;
        auto mats = read_spd_json_file(opt.input, static_cast<Eigen::Index>(opt.spd_dim));
        return run_solve(m, point_cloud<spd_manifold>(m, std::move(mats)), opt, opt.spd_dim);
    }
    throw config_error("unknown manifold '" + opt.manifold + "' (euclidean | klein | spd)");
}

int run_generate(const std::string& manifold, std::uint64_t n, std::uint64_t dim, std::uint64_t seed,
                 const std::string& out_path) {
    if (n == 0) throw config_error("--n must be positive");
    std::ofstream out(out_path);
    if (!out) throw config_error("cannot open output file '" + out_path + "'");
    if (manifold == "euclidean") {
        write_points_csv(out, random_euclidean_points(n, dim, seed));
    } else if (manifold == "klein") {
        std::vector<Eigen::VectorXd> rows;
        for (const auto& p : random_klein_points(n, dim, seed)) rows.push_back(p.coords());
        write_points_csv(out, rows);
    } else if (manifold == "spd") {
        write_spd_json(out, random_spd_points(n, dim, seed));
    } else {
        throw config_error("unknown manifold '" + manifold + "' (euclidean | klein | spd)");
    }
    log_info("generated " + std::to_string(n) + " " + manifold + " points into " + out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemannian minimax-center solver"};
    app.require_subcommand(1);

    solve_options opt;
    auto* solve = app.add_subcommand("solve", "run the solver on a point cloud");
    solve->add_option("--manifold", opt.manifold, "euclidean | klein | spd")->required();
    solve->add_option("--input", opt.input, "point CSV (euclidean, klein) or SPD JSON")->required();
    solve->add_option("--iters", opt.iters, "iteration budget");
    solve->add_option("--schedule", opt.schedule, "harmonic | clamped | scaled:<r>");
    double delta_val = 0.0, alpha_val = 0.0, beta_val = 0.0, big_r_val = 0.0;
    auto* delta_opt = solve->add_option("--delta", delta_val, "arclength step cap");
    auto* alpha_opt = solve->add_option("--alpha", alpha_val, "upper curvature bound root");
    auto* beta_opt = solve->add_option("--beta", beta_val, "lower curvature bound root");
    auto* big_r_opt = solve->add_option("--R", big_r_val, "enclosing ball radius override");
    solve->add_flag("--force-delta", opt.force_delta, "run even if --delta exceeds the derived cap");
    solve->add_option("--start", opt.start, "starting support index");
    solve->add_option("--seed", opt.seed, "tie-break seed");
    solve->add_option("--tie", opt.tie, "deterministic | random");
    solve->add_option("--oracle", opt.oracle, "welzl | reference:<N> | none");
    solve->add_option("--trace", opt.trace_path, "trace CSV output path");
    solve->add_option("--summary", opt.summary_path, "summary JSON output path");
    solve->add_flag("--thin-trace", opt.thin_trace, "keep only dyadic trace records");
    solve->add_flag("--relative", opt.relative, "oracle distance column divided by the oracle radius");
    solve->add_option("--dim", opt.spd_dim, "matrix dimension (spd input validation)");

    std::string gen_manifold;
    std::uint64_t gen_n = 0, gen_dim = 2, gen_seed = 0;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "write a reproducible random cloud");
    generate->add_option("--manifold", gen_manifold, "euclidean | klein | spd")->required();
    generate->add_option("--n", gen_n, "number of points")->required();
    generate->add_option("--dim", gen_dim, "dimension");
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", gen_out, "output path")->required();

    try {
        app.parse(argc, argv);
        if (delta_opt->count() > 0) opt.delta = delta_val;
        if (alpha_opt->count() > 0) opt.alpha = alpha_val;
        if (beta_opt->count() > 0) opt.beta = beta_val;
        if (big_r_opt->count() > 0) opt.envelope_radius = big_r_val;

        if (solve->parsed()) return run_solve_dispatch(opt);
        return run_generate(gen_manifold, gen_n, gen_dim, gen_seed, gen_out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    }
}
