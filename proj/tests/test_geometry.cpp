#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bkm/geometry.hpp"

using namespace bkm;

TEST_CASE("ellipse_knots on the axes") {
    const Ellipse e({0, 0}, 2, 1);
    const auto k = ellipse_knots(e, 4);
    REQUIRE(k.size() == 4);
    const Point pos[] = {{2, 0}, {0, 1}, {-2, 0}, {0, -1}};
    const Vec2 nrm[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(k[i].position.x - pos[i].x) <= 1e-15);
        CHECK(std::abs(k[i].position.y - pos[i].y) <= 1e-15);
        CHECK(std::abs(k[i].normal.x - nrm[i].x) <= 1e-15);
        CHECK(std::abs(k[i].normal.y - nrm[i].y) <= 1e-15);
    }
}

TEST_CASE("ellipse_knots single knot on a shifted ellipse") {
    const auto k = ellipse_knots(Ellipse({3, 0}, 2, 1), 1);
    REQUIRE(k.size() == 1);
    CHECK(k[0].position == Point{5, 0});
    CHECK(k[0].normal == Vec2{1, 0});
}

TEST_CASE("ellipse_knots eighth-turn knot") {
    const auto k = ellipse_knots(Ellipse({0, 0}, 2, 1), 8);
    CHECK(k[1].position.x == doctest::Approx(std::sqrt(2.0)));
    CHECK(k[1].position.y == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(k[1].normal.x == doctest::Approx(1 / std::sqrt(5.0)));
    CHECK(k[1].normal.y == doctest::Approx(2 / std::sqrt(5.0)));
}

TEST_CASE("ellipse_knots argument errors") {
    CHECK_THROWS_AS(ellipse_knots(Ellipse({0, 0}, 2, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(Ellipse({0, 0}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ellipse({0, 0}, 1, 0), std::invalid_argument);
}

TEST_CASE("knots lie on the ellipse with unit outward normals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double b = u(rng);
        const double a = b + u(rng);
        const Ellipse e({u(rng), -u(rng)}, a, b);
        for (const auto& k : ellipse_knots(e, 3 + trial)) {
            CHECK(std::abs(e.level(k.position) - 1.0) <= 1e-12);
            CHECK(std::abs(norm(k.normal) - 1.0) <= 1e-12);
            CHECK(dot(k.normal, e.level_gradient(k.position)) > 0.0);
            CHECK(e.level(k.position + 1e-6 * k.normal) > 1.0);
            CHECK(e.contains_strictly(k.position + -1e-6 * k.normal));
        }
    }
}

TEST_CASE("interior_grid") {
    const Ellipse e({0, 0}, 2, 1);
    const auto coarse = interior_grid(e, 10);
    REQUIRE(coarse.size() == 1);
    CHECK(coarse[0] == Point{0, 0});

    const auto unit = interior_grid(e, 1);
    auto has = [&](Point p) { return std::find(unit.begin(), unit.end(), p) != unit.end(); };
    CHECK(has({0, 0}));
    CHECK(has({1, 0}));
    CHECK(has({-1, 0}));
    CHECK_FALSE(has({2, 0}));

    std::size_t brute = 0;
    for (int i = -10; i <= 10; ++i) {
        for (int j = -10; j <= 10; ++j) {
            const double x = 0.5 * i;
            const double y = 0.5 * j;
            brute += (x * x / 4 + y * y < 1 - 1e-9) ? 1 : 0;
        }
    }
    CHECK(brute == 21);
    CHECK(interior_grid(e, 0.5).size() == brute);

    CHECK_THROWS_AS(interior_grid(e, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(interior_grid(e, -1.0), std::invalid_argument);
}

TEST_CASE("interior_grid is row-major and strictly interior") {
    const Ellipse e({3, 0}, 2, 1);
    const auto g = interior_grid(e, 0.3);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(e.contains_strictly(g[i]));
        if (i > 0) {
            CHECK((g[i - 1].y < g[i].y || (g[i - 1].y == g[i].y && g[i - 1].x < g[i].x)));
        }
    }
}

TEST_CASE("dist") {
    CHECK(dist({0, 0}, {0, 0}) == 0.0);
    CHECK(dist({3, 0}, {0, 4}) == 5.0);
    CHECK(dist({1.5, 0}, {2, 0}) == 0.5);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const Point p{u(rng), u(rng)};
        const Point q{u(rng), u(rng)};
        const Point r{u(rng), u(rng)};
        CHECK(dist(p, q) == dist(q, p));
        CHECK(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
    }
}
