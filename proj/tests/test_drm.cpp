#include <doctest.h>

#include <cmath>
#include <random>

#include "bkm/drm.hpp"
#include "bkm/errors.hpp"
#include "bkm/geometry.hpp"
#include "oracle.hpp"

using namespace bkm;
using namespace bkm::drm;

namespace {

std::vector<Point> positions(const std::vector<BoundaryKnot>& k) {
    std::vector<Point> out;
    for (const auto& b : k) {
        out.push_back(b.position);
    }
    return out;
}

std::vector<Point> scattered(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) {
        out.push_back({u(rng), u(rng)});
    }
    return out;
}

} // namespace

TEST_CASE("interp_matrix") {
    const auto pair = kernels::mq_pair(3.0);
    const std::vector<Point> one{{0.4, -0.2}};
    const auto a1 = interp_matrix(one, pair);
    CHECK(a1(0, 0) == doctest::Approx(45.0).epsilon(1e-15));

    const auto knots = scattered(1, 6);
    const auto a = interp_matrix(knots, pair);
    CHECK(a == a.transposed());
    for (std::size_t i = 0; i < knots.size(); ++i) {
        CHECK(a(i, i) == pair.phi.eval(0));
    }

    const std::vector<Point> line{{0, 0}, {0.5, 0}, {1, 0}};
    const auto t = interp_matrix(line, pair);
    CHECK(t(0, 1) == t(1, 2));
    CHECK(t(1, 0) == t(2, 1));

    const std::vector<Point> dup{{1, 1}, {0, 0}, {1, 1 + 1e-14}};
    CHECK_THROWS_AS(interp_matrix(dup, pair), DegenerateInputError);
    CHECK_THROWS_AS(require_distinct(dup), std::invalid_argument);
}

TEST_CASE("particular_matrix") {
    const std::vector<Point> knots{{0, 0}, {1, 0}};
    const auto p3 = particular_matrix(knots, knots, kernels::mq_pair(3.0));
    CHECK(p3(0, 0) == doctest::Approx(27.0).epsilon(1e-15));
    const auto p1 = particular_matrix(knots, knots, kernels::mq_pair(1.0));
    CHECK(p1(1, 1) == 1.0);
    CHECK(p1(0, 1) == doctest::Approx(2.8284271247461903).epsilon(1e-15));
    const std::vector<Point> eval{{0, 0}, {2, 0}, {0.5, 0.5}};
    const auto rect = particular_matrix(eval, knots, kernels::mq_pair(1.0));
    CHECK(rect.rows() == 3);
    CHECK(rect.cols() == 2);
}

TEST_CASE("rho_matrix") {
    const auto pair = kernels::mq_pair(2.0);
    const auto knots = scattered(2, 7);
    const std::vector<double> u{1, -2, 0.5, 3, 0, 4, -1};
    CHECK(rho_matrix(RhoSpec::identity(), knots, pair, u) == u);
    CHECK(rho_matrix(RhoSpec::zero(), knots, pair, u) == std::vector<double>(7, 0.0));
    const auto scaled = rho_matrix(RhoSpec::scaled_identity(-2.5), knots, pair, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(scaled[i] == -2.5 * u[i]);
    }
    CHECK_THROWS_AS(rho_matrix(RhoSpec::identity(), knots, pair, std::vector<double>{1, 2}),
                    std::invalid_argument);
}

TEST_CASE("identity shortcut equals the explicit product A A^-1 u") {
    const auto pair = kernels::mq_pair(1.0);
    const auto knots = scattered(3, 9);
    std::vector<double> u;
    for (const auto& p : knots) {
        u.push_back(std::sin(p.x) + p.y * p.y);
    }
    const auto a = interp_matrix(knots, pair);
    const auto w = linalg::LuFactorization(a).solve(u);
    const auto back = linalg::multiply(a, w);
    const auto fast = rho_matrix(RhoSpec::identity(), knots, pair, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(std::abs(back[i] - fast[i]) <= 1e-12 * (1 + std::abs(u[i])));
    }
}

TEST_CASE("RhoSpec") {
    CHECK(RhoSpec::identity().is_linear());
    CHECK(RhoSpec::identity().linear_scale() == 1.0);
    CHECK(RhoSpec::zero().linear_scale() == 0.0);
    CHECK(RhoSpec::scaled_identity(3).linear_scale() == 3.0);
    CHECK_FALSE(RhoSpec::burger().is_linear());
    CHECK_THROWS_AS(RhoSpec::burger().linear_scale(), UnsupportedConfigurationError);
    CHECK(RhoSpec::burger().name() == "burger");
}

TEST_CASE("x_derivative_matrix matches FD of the phi interpolant") {
    const auto pair = kernels::mq_pair(1.0);
    const auto knots = scattered(4, 8);
    std::vector<double> w{0.3, -1, 2, 0.1, -0.7, 1.2, 0.5, -0.4};
    const oracle::F2 interp = [&](double x, double y) {
        double s = 0;
        for (std::size_t j = 0; j < knots.size(); ++j) {
            s += w[j] * pair.phi.eval(dist({x, y}, knots[j]));
        }
        return s;
    };
    const auto dxm = x_derivative_matrix(knots, pair);
    const auto d = linalg::multiply(dxm, w);
    for (std::size_t i = 0; i < knots.size(); ++i) {
        CHECK(dxm(i, i) == 0.0);
        CHECK(std::abs(d[i] - oracle::dx(interp, knots[i].x, knots[i].y)) <= 1e-6);
    }
}

TEST_CASE("solve_alpha") {
    const auto pair = kernels::mq_pair(3.0);
    const std::vector<Point> one{{0, 0}};
    const auto single = solve_alpha(one, pair, std::vector<double>{45}, RhoSpec::zero(), std::vector<double>{0});
    CHECK(single.alpha[0] == doctest::Approx(1.0).epsilon(1e-15));

    const auto knots = positions(ellipse_knots(Ellipse({0, 0}, 2, 1), 5));
    const auto zero = solve_alpha(knots, pair, std::vector<double>(5, 0), RhoSpec::zero(), std::vector<double>(5, 1));
    CHECK(zero.alpha == std::vector<double>(5, 0.0));

    std::vector<double> f;
    for (const auto& p : knots) {
        f.push_back(p.x);
    }
    const auto e = solve_alpha(knots, pair, f, RhoSpec::zero(), std::vector<double>(5, 0));
    const auto back = linalg::multiply(interp_matrix(knots, pair), e.alpha);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(back[i] - f[i]) <= 1e-10);
    }
}

TEST_CASE("collocation exactness across shape parameters") {
    const auto knots = scattered(5, 12);
    std::vector<double> f;
    std::vector<double> u;
    for (const auto& p : knots) {
        f.push_back(std::cos(p.x) * p.y);
        u.push_back(p.x - 2 * p.y);
    }
    for (double c : {0.5, 1.0, 3.0}) {
        const auto pair = kernels::mq_pair(c);
        for (const auto& rho : {RhoSpec::zero(), RhoSpec::identity(), RhoSpec::burger()}) {
            const auto e = solve_alpha(knots, pair, f, rho, u);
            const auto target = rho_matrix(rho, knots, pair, u);
            const auto back = linalg::multiply(interp_matrix(knots, pair), e.alpha);
            double scale = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                scale = std::max(scale, std::abs(f[i] + target[i]));
            }
            for (std::size_t i = 0; i < f.size(); ++i) {
                CHECK(std::abs(back[i] - f[i] - target[i]) <= 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("u_p_at") {
    const auto pair = kernels::mq_pair(3.0);
    const std::vector<Point> one{{1, 1}};
    const DrmExpansion e1{one, pair, {1.0}};
    CHECK(u_p_at(e1, one)[0] == doctest::Approx(27.0).epsilon(1e-15));
    const DrmExpansion zero{one, pair, {0.0}};
    CHECK(u_p_at(zero, std::vector<Point>{{3, 4}})[0] == 0.0);

    const auto knots = scattered(6, 7);
    const DrmExpansion e{knots, kernels::mq_pair(1.0), {0.5, -1, 2, 0.3, 0, -0.2, 1}};
    const auto at = u_p_at(e, knots);
    const auto direct = linalg::multiply(particular_matrix(knots, knots, e.pair), e.alpha);
    CHECK(at == direct);
}

TEST_CASE("L{u_p} reproduces f at the knots") {
    const auto knots = positions(ellipse_knots(Ellipse({0, 0}, 2, 1), 7));
    std::vector<double> f;
    for (const auto& p : knots) {
        f.push_back(p.x);
    }
    const auto e = solve_alpha(knots, kernels::mq_pair(3.0), f, RhoSpec::zero(), std::vector<double>(7, 0));
    const oracle::F2 up = [&](double x, double y) { return u_p_at(e, std::vector<Point>{{x, y}})[0]; };
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const double lu = oracle::lap(up, knots[i].x, knots[i].y, 1e-2) + up(knots[i].x, knots[i].y);
        CHECK(std::abs(lu - f[i]) <= 1e-4);
    }
}

TEST_CASE("u_p_normal_at") {
    const auto bk = ellipse_knots(Ellipse({0, 0}, 2, 1), 6);
    const auto pts = positions(bk);
    const DrmExpansion zero{pts, kernels::mq_pair(1.0), std::vector<double>(6, 0.0)};
    CHECK(u_p_normal_at(zero, bk) == std::vector<double>(6, 0.0));

    const std::vector<Point> one{bk[2].position};
    const DrmExpansion self{one, kernels::mq_pair(1.0), {1.0}};
    CHECK(u_p_normal_at(self, std::vector<BoundaryKnot>{bk[2]})[0] == 0.0);

    const DrmExpansion e{pts, kernels::mq_pair(1.5), {0.2, -0.4, 1, 0.5, -1, 0.3}};
    const auto n = u_p_normal_at(e, bk);
    constexpr double h = 1e-5;
    for (std::size_t i = 0; i < bk.size(); ++i) {
        const Point p = bk[i].position;
        const std::vector<Point> pm{p + h * bk[i].normal, p + -h * bk[i].normal};
        const auto v = u_p_at(e, pm);
        CHECK(std::abs(n[i] - (v[0] - v[1]) / (2 * h)) <= 1e-6 * (1 + std::abs(n[i])));
    }
}

TEST_CASE("burger rho converges to the analytic value on a line") {
    const auto pair = kernels::mq_pair(1.0);
    auto worst_error = [&](int n) {
        std::vector<Point> knots;
        std::vector<double> u;
        for (int i = 0; i < n; ++i) {
            const double x = 1.5 + 3.0 * i / (n - 1);
            knots.push_back({x, 0});
            u.push_back(2 / x);
        }
        const auto r = rho_matrix(RhoSpec::burger(), knots, pair, u);
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            const double x = knots[i].x;
            worst = std::max(worst, std::abs(r[i] - (2 / x + 4 / (x * x * x))));
        }
        return worst;
    };
    const double e8 = worst_error(8);
    const double e16 = worst_error(16);
    const double e32 = worst_error(32);
    CHECK(e16 < e8);
    CHECK(e32 < e16);
    CHECK(e32 <= 0.5 * e8);
}

TEST_CASE("ConstrainedInterpolant") {
    const auto [lg, mt] = kernels::biharmonic_mfs_pair();
    const auto kernel = kernels::gsr_kernel(lg, 1);
    const auto centers = scattered(7, 15);
    std::vector<double> v;
    for (const auto& p : centers) {
        v.push_back(std::exp(p.x) - p.y);
    }
    const ConstrainedInterpolant ci(centers, kernel, v);
    double sum = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        CHECK(std::abs(ci.eval(centers[i]) - v[i]) <= 1e-9);
        sum += ci.weights()[i];
    }
    CHECK(std::abs(sum) <= 1e-9);

    const std::vector<double> constant(centers.size(), 4.2);
    const ConstrainedInterpolant flat(centers, kernel, constant);
    CHECK(flat.constant() == doctest::Approx(4.2).epsilon(1e-10));
    CHECK(flat.eval(Point{0.1, 0.2}) == doctest::Approx(4.2).epsilon(1e-10));

    CHECK_THROWS_AS(ConstrainedInterpolant({}, kernel, {}), std::invalid_argument);
}
