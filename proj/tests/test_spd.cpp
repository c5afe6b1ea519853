#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "riemax/core/manifold.hpp"
#include "riemax/manifold/spd.hpp"

#include "test_support.hpp"

using namespace riemax;
using riemax::testing::random_spd;

namespace {

Eigen::MatrixXd diag2(double a, double b) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

TEST_CASE("spd construction symmetrizes and validates") {
    CHECK_NOTHROW(spd_matrix(Eigen::MatrixXd::Identity(3, 3)));
    CHECK_THROWS_AS(spd_matrix(diag2(1.0, -0.5)), domain_error);
    CHECK_THROWS_AS(spd_matrix(diag2(1.0, 0.0)), domain_error);

    Eigen::MatrixXd skewed = Eigen::MatrixXd::Identity(2, 2);
    skewed(0, 1) = 1e-14; // inside the symmetry tolerance: accepted and symmetrized
    const spd_matrix s(skewed);
    CHECK(s.matrix()(0, 1) == Approx(5e-15).margin(1e-16));
    CHECK(s.matrix()(0, 1) == s.matrix()(1, 0));

    skewed(0, 1) = 1e-3; // far outside
    CHECK_THROWS_AS(spd_matrix(skewed), domain_error);

    Eigen::MatrixXd rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(spd_matrix(rect), domain_error);
}

TEST_CASE("spd_matrix_function applies h to the spectrum") {
    const spd_matrix eye(Eigen::MatrixXd::Identity(3, 3));
    CHECK((spd_matrix_function(eye, [](double l) { return std::sqrt(l); }) -
           Eigen::MatrixXd::Identity(3, 3))
              .norm() <= 1e-14);

    const spd_matrix m(diag2(4.0, 1.0));
    CHECK((spd_matrix_function(m, [](double l) { return std::sqrt(l); }) - diag2(2.0, 1.0)).norm() <=
          1e-13);

    const spd_matrix e2(diag2(std::exp(2.0), 1.0));
    CHECK((spd_matrix_function(e2, [](double l) { return std::log(l); }) - diag2(2.0, 0.0)).norm() <=
          1e-13);
}

TEST_CASE("spd distance closed-form values") {
    spd_manifold m;
    std::mt19937_64 rng(31);
    const auto p = random_spd(4, rng);
    CHECK(m.distance(p, p) <= 1e-12);

    Eigen::MatrixXd q5 = Eigen::MatrixXd::Identity(5, 5);
    q5(0, 0) = std::exp(2.0);
    CHECK(m.distance(spd_matrix(Eigen::MatrixXd::Identity(5, 5)), spd_matrix(q5)) ==
          Approx(2.0).epsilon(1e-12));

    const spd_matrix two(2.0 * Eigen::MatrixXd::Identity(2, 2));
    const spd_matrix eight(8.0 * Eigen::MatrixXd::Identity(2, 2));
    CHECK(m.distance(two, eight) == Approx(std::sqrt(2.0) * std::log(4.0)).epsilon(1e-13));

    CHECK_THROWS_AS(m.distance(two, spd_matrix(Eigen::MatrixXd::Identity(3, 3))), domain_error);
}

TEST_CASE("spd interpolation: endpoints, the diag midpoint, and the fraction contract") {
    spd_manifold m;
    const spd_matrix eye(Eigen::MatrixXd::Identity(2, 2));
    const spd_matrix q(diag2(4.0, 1.0));

    CHECK((m.interpolate(eye, q, 0.0).matrix() - eye.matrix()).norm() == 0.0);
    CHECK((m.interpolate(eye, q, 1.0).matrix() - q.matrix()).norm() == 0.0);
    CHECK((m.interpolate(eye, q, 0.5).matrix() - diag2(2.0, 1.0)).norm() <= 1e-13);

    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_spd(3, rng);
        const auto r = random_spd(3, rng);
        const double t = uniform(rng);
        const double rho = m.distance(p, r);
        const auto mid = geodesic_interpolate(m, p, r, t);
        REQUIRE(std::abs(m.distance(p, mid) - t * rho) <= 1e-10 * std::max(1.0, rho));
    }
}

TEST_CASE("congruence invariance of the metric") {
    spd_manifold m;
    std::mt19937_64 rng(33);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_spd(3, rng);
        const auto q = random_spd(3, rng);
        Eigen::MatrixXd a(3, 3);
        do {
            for (Eigen::Index r = 0; r < 3; ++r)
                for (Eigen::Index c = 0; c < 3; ++c) a(r, c) = gauss(rng);
        } while (std::abs(a.determinant()) < 0.1);
        const spd_matrix pa(a.transpose() * p.matrix() * a);
        const spd_matrix qa(a.transpose() * q.matrix() * a);
        const double d = m.distance(p, q);
        REQUIRE(std::abs(m.distance(pa, qa) - d) <= 1e-9 * std::max(1.0, d));
    }
}

TEST_CASE("inversion invariance of the metric") {
    spd_manifold m;
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_spd(3, rng);
        const auto q = random_spd(3, rng);
        const double d = m.distance(p, q);
        REQUIRE(std::abs(m.distance(p.inverse(), q.inverse()) - d) <= 1e-9 * std::max(1.0, d));
    }
}

TEST_CASE("commuting pairs follow the scalar power closed form") {
    spd_manifold m;
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> lam(0.3, 3.0), tt(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double a1 = lam(rng), a2 = lam(rng), b1 = lam(rng), b2 = lam(rng);
        const double t = tt(rng);
        const spd_matrix p(diag2(a1, a2)), q(diag2(b1, b2));
        const auto g = m.interpolate(p, q, t);
        const Eigen::MatrixXd expect =
            diag2(std::pow(a1, 1 - t) * std::pow(b1, t), std::pow(a2, 1 - t) * std::pow(b2, t));
        REQUIRE((g.matrix() - expect).norm() <= 1e-12 * std::max(1.0, expect.norm()));
    }
}

TEST_CASE("spd tangent helpers: exp arclength and log direction round trip") {
    spd_manifold m;
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> uniform(0.05, 1.2);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_spd(4, rng);
        const auto v = m.random_unit_tangent(p, rng);
        REQUIRE(v.norm() == Approx(1.0).epsilon(1e-13));
        REQUIRE((v - v.transpose()).norm() <= 1e-15);
        const double s = uniform(rng);
        const auto x = m.exp_point(p, v, s);
        REQUIRE(std::abs(m.distance(p, x) - s) <= 1e-10 * std::max(1.0, s));
        const auto u = m.log_direction(p, x);
        REQUIRE((u - v).norm() <= 1e-8);
    }
}
