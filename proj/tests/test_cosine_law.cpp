#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "riemax/manifold/klein.hpp"
#include "riemax/theory/cosine_law.hpp"

#include "test_support.hpp"

using namespace riemax;

namespace {

struct triangle {
    double x1, x2, x3;
};

template <typename Rng>
triangle random_triangle(Rng& rng) {
    std::uniform_real_distribution<double> side(0.1, 1.0);
    const double x1 = side(rng), x2 = side(rng);
    std::uniform_real_distribution<double> third(std::abs(x1 - x2) + 0.01, x1 + x2 - 0.01);
    return {x1, x2, third(rng)};
}

} // namespace

TEST_CASE("spherical law: the octant triangle has right angles") {
    const double p2 = std::numbers::pi / 2;
    CHECK(cos_law_spherical(1.0, p2, p2, p2) == Approx(0.0).margin(1e-12));
}

TEST_CASE("spherical law: collinear degenerate triangle folds flat") {
    const double a = 0.05;
    CHECK(cos_law_spherical(1.0, a, a, 2 * a) == Approx(-1.0).margin(1e-9));
}

TEST_CASE("hyperbolic law: a vanishing opposite side closes the angle") {
    CHECK(cos_law_hyperbolic(1.0, 0.7, 0.7, 1e-9) == Approx(1.0).margin(1e-9));
    CHECK(cos_law_hyperbolic(2.5, 0.3, 0.3, 1e-9) == Approx(1.0).margin(1e-9));
}

TEST_CASE("both laws reduce to the planar law in the flat limit") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 100; ++i) {
        const triangle t = random_triangle(rng);
        const double planar = cos_law_planar(t.x1, t.x2, t.x3);
        CHECK(cos_law_spherical(1e-4, t.x1, t.x2, t.x3) == Approx(planar).margin(1e-5));
        CHECK(cos_law_hyperbolic(1e-4, t.x1, t.x2, t.x3) == Approx(planar).margin(1e-5));
    }
}

TEST_CASE("degenerate and invalid triangles are rejected") {
    CHECK_THROWS_AS(cos_law_spherical(1.0, std::numbers::pi, 0.5, 0.5), domain_error); // sin = 0
    CHECK_THROWS_AS(cos_law_spherical(1.0, 0.0, 0.5, 0.5), domain_error);
    CHECK_THROWS_AS(cos_law_hyperbolic(1.0, 0.5, 0.5, 2.0), domain_error);  // triangle inequality
    CHECK_THROWS_AS(cos_law_hyperbolic(1.0, 0.5, 0.5, -0.1), domain_error);
    CHECK_THROWS_AS(cos_law_spherical(-1.0, 0.5, 0.5, 0.5), domain_error);
}

TEST_CASE("hyperbolic law is consistent with Klein geometry") {
    // Collinear Klein triples: the angle at the middle point is pi, at the
    // outer points 0; and generic triangles have angle sums below pi.
    klein_manifold km;
    std::mt19937_64 rng(77);

    SECTION("collinear configurations") {
        for (int i = 0; i < 50; ++i) {
            const auto a = riemax::testing::random_klein(2, rng, 0.8);
            const auto c = riemax::testing::random_klein(2, rng, 0.8);
            if (km.distance(a, c) < 0.05) continue;
            const auto b = km.interpolate(a, c, 0.4);
            const double ab = km.distance(a, b), bc = km.distance(b, c), ac = km.distance(a, c);
            // angle at b between the sides toward a and c
            CHECK(cos_law_hyperbolic(1.0, ab, bc, ac) == Approx(-1.0).margin(1e-6));
            // angle at a between the sides toward b and c
            CHECK(cos_law_hyperbolic(1.0, ab, ac, bc) == Approx(1.0).margin(1e-6));
        }
    }

    SECTION("angle sums of generic triangles stay below pi") {
        for (int i = 0; i < 50; ++i) {
            const auto a = riemax::testing::random_klein(2, rng, 0.8);
            const auto b = riemax::testing::random_klein(2, rng, 0.8);
            const auto c = riemax::testing::random_klein(2, rng, 0.8);
            const double ab = km.distance(a, b), bc = km.distance(b, c), ac = km.distance(a, c);
            if (ab < 0.05 || bc < 0.05 || ac < 0.05) continue;
            const double ta = std::acos(cos_law_hyperbolic(1.0, ab, ac, bc));
            const double tb = std::acos(cos_law_hyperbolic(1.0, ab, bc, ac));
            const double tc = std::acos(cos_law_hyperbolic(1.0, ac, bc, ab));
            CHECK(ta + tb + tc < std::numbers::pi);
        }
    }
}
