#include <catch2/catch.hpp>

#include <sstream>

#include "riemax/gen/generators.hpp"
#include "riemax/io/csv.hpp"
#include "riemax/io/spd_json.hpp"
#include "riemax/io/summary.hpp"
#include "riemax/solver/minimax.hpp"

#include "test_support.hpp"

using namespace riemax;

TEST_CASE("point csv: comments, dimension inference, and row-numbered errors") {
    SECTION("well-formed input with a comment header") {
        std::istringstream in("# x,y\n0.5,1.5\n-1,2e-3\n");
        const auto rows = read_points_csv(in);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0][0] == 0.5);
        CHECK(rows[1][1] == 2e-3);
    }

    SECTION("dimension mismatch names the row") {
        std::istringstream in("1,2\n3,4,5\n");
        CHECK_THROWS_WITH(read_points_csv(in), Catch::Contains("row 2"));
    }

    SECTION("garbage cells name the row") {
        std::istringstream in("1,2\n3,x4\n");
        CHECK_THROWS_WITH(read_points_csv(in), Catch::Contains("row 2"));
    }

    SECTION("empty input is rejected") {
        std::istringstream in("# only a comment\n");
        CHECK_THROWS_AS(read_points_csv(in), config_error);
    }
}

TEST_CASE("csv round trip at 17 significant digits") {
    const auto pts = random_euclidean_points(25, 3, 321);
    std::ostringstream out;
    write_points_csv(out, pts);
    std::istringstream in(out.str());
    const auto back = read_points_csv(in);
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) REQUIRE((back[i] - pts[i]).norm() == 0.0);
}

TEST_CASE("trace csv has the fixed column set and one row per record") {
    euclidean_manifold m;
    const auto cloud = random_euclidean_cloud(20, 2, 999);
    solver_config<euclidean_manifold> cfg;
    cfg.max_iterations = 10;
    const auto trace = run_geo_alg(m, cloud, cfg);

    std::ostringstream out;
    write_trace_csv(out, trace);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "k,radius,step,farthest_index,dist_to_oracle");

    std::size_t count = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        CHECK(line.back() == ','); // no oracle: the last column stays empty
        ++count;
    }
    CHECK(count == trace.records.size());

    // iteration numbers strictly increase from 0
    CHECK(trace.records.front().k == 0);
    for (std::size_t i = 1; i < trace.records.size(); ++i)
        CHECK(trace.records[i].k > trace.records[i - 1].k);
}

TEST_CASE("spd json round trip and validation") {
    const auto mats = random_spd_points(5, 3, 555);
    std::ostringstream out;
    write_spd_json(out, mats);

    SECTION("round trip") {
        std::istringstream in(out.str());
        const auto back = read_spd_json(in, 3);
        REQUIRE(back.size() == 5);
        for (std::size_t i = 0; i < 5; ++i)
            REQUIRE((back[i].matrix() - mats[i].matrix()).norm() <= 1e-12);
    }

    SECTION("wrong declared dimension is a config error naming the matrix") {
        std::istringstream in(out.str());
        CHECK_THROWS_WITH(read_spd_json(in, 4), Catch::Contains("matrix 1"));
    }

    SECTION("non-spd entries are rejected with their index") {
        std::istringstream in("[[[1, 0], [0, -2]]]");
        CHECK_THROWS_WITH(read_spd_json(in, 2), Catch::Contains("matrix 1"));
    }

    SECTION("invalid json is a config error") {
        std::istringstream in("not json");
        CHECK_THROWS_AS(read_spd_json(in, 2), config_error);
    }
}

TEST_CASE("run summary serializes snake_case keys and round-trips its config") {
    run_summary s;
    s.manifold = "euclidean";
    s.n_points = 100;
    s.dimension = 2;
    s.iterations = 50;
    s.final_radius = 0.75;
    s.oracle_radius = 0.74;
    s.oracle_center_distance = 0.01;
    s.coreset_size = 9;
    s.wall_clock_seconds = 0.125;
    s.config.manifold = "euclidean";
    s.config.input = "pts.csv";
    s.config.iters = 50;
    s.config.schedule = "scaled:0.5";
    s.config.delta = 0.01;
    s.config.seed = 42;
    s.config.oracle = "welzl";

    const auto j = to_json(s);
    CHECK(j.at("final_radius") == 0.75);
    CHECK(j.at("n_points") == 100);
    CHECK(j.at("oracle_center_distance") == 0.01);
    CHECK(j.at("config").at("schedule") == "scaled:0.5");

    const auto echo = config_echo_from_json(j.at("config"));
    CHECK(echo.schedule == "scaled:0.5");
    CHECK(echo.delta.has_value());
    CHECK(*echo.delta == 0.01);
    CHECK(echo.seed == 42);
    CHECK(echo.oracle == "welzl");
    CHECK_FALSE(echo.alpha.has_value());

    SECTION("non-finite numeric fields are refused") {
        s.final_radius = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(to_json(s), numeric_error);
    }
}

TEST_CASE("format_double keeps 17 significant digits") {
    CHECK(format_double(1.0) == "1");
    const double v = 0.1234567890123456789;
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
}
