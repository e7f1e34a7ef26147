#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bkm/errors.hpp"
#include "bkm/linalg.hpp"
#include "oracle.hpp"

using namespace bkm;
using namespace bkm::linalg;

namespace {

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = u(rng);
        }
    }
    return m;
}

// Diagonally dominant, so kappa stays small.
DenseMatrix well_conditioned(std::mt19937_64& rng, std::size_t n) {
    DenseMatrix m = random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) += static_cast<double>(n);
    }
    return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double true_cond1(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    return oracle::norm1(a.data(), n) * oracle::norm1(oracle::inverse(a.data(), n), n);
}

} // namespace

TEST_CASE("DenseMatrix basics") {
    const DenseMatrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 6);
    CHECK(m.transposed()(2, 1) == 6);
    CHECK(m.col(1) == std::vector<double>{2, 5});
    CHECK(m.row(1)[0] == 4);
    CHECK(norm_inf(m) == 15);
    CHECK(norm_1(m) == 9);
    CHECK(DenseMatrix::identity(3)(1, 1) == 1);
    CHECK(DenseMatrix::column(std::vector<double>{1, 2}).cols() == 1);
    CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<double>{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS((DenseMatrix{{1, 2}, {3}}), std::invalid_argument);
    CHECK(multiply(m, std::vector<double>{1, 1, 1}) == std::vector<double>{6, 15});
    CHECK_THROWS_AS(multiply(m, m), std::invalid_argument);
}

TEST_CASE("lu_solve examples") {
    std::mt19937_64 rng(1);
    const DenseMatrix b = random_matrix(rng, 3, 2);
    CHECK(lu_solve(DenseMatrix::identity(3), b) == b);

    const auto x1 = lu_solve(DenseMatrix{{2, 0}, {0, 4}}, DenseMatrix{{2}, {8}});
    CHECK(x1(0, 0) == 1.0);
    CHECK(x1(1, 0) == 2.0);

    const auto x2 = lu_solve(DenseMatrix{{1, 2}, {3, 4}}, DenseMatrix{{5}, {11}});
    CHECK(x2(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x2(1, 0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("lu_solve errors") {
    try {
        LuFactorization lu(DenseMatrix{{1, 2}, {2, 4}});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot() == 1);
    }
    CHECK_THROWS_AS(LuFactorization(DenseMatrix(3, 3, 0.0)), SingularMatrixError);
    CHECK_THROWS_AS(LuFactorization(DenseMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(LuFactorization(DenseMatrix{{1, std::nan("")}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(lu_solve(DenseMatrix::identity(2), DenseMatrix(3, 1)), std::invalid_argument);
    const LuFactorization lu(DenseMatrix::identity(2));
    CHECK_THROWS_AS(lu.solve(std::vector<double>{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("lu_solve recovers X0 for well-conditioned random systems") {
    std::mt19937_64 rng(2);
    for (std::size_t n : {1u, 2u, 5u, 17u, 33u, 50u}) {
        const DenseMatrix a = well_conditioned(rng, n);
        const DenseMatrix x0 = random_matrix(rng, n, 3);
        const DenseMatrix b = multiply(a, x0);
        const DenseMatrix x = lu_solve(a, b);
        CHECK(max_abs_diff(x, x0) <= 1e-8 * norm_inf(x0));
        const double cond = cond_estimate_1norm(a);
        CHECK(norm_inf(multiply(a, x)) > 0);
        DenseMatrix r = multiply(a, x);
        for (std::size_t i = 0; i < r.data().size(); ++i) {
            CHECK(std::abs(r.data()[i] - b.data()[i]) <= 1e-10 * cond * norm_inf(b));
        }
    }
}

TEST_CASE("row permutation of (A|B) leaves X unchanged") {
    std::mt19937_64 rng(3);
    const std::size_t n = 12;
    const DenseMatrix a = well_conditioned(rng, n);
    const DenseMatrix b = random_matrix(rng, n, 2);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    DenseMatrix pa(n, n);
    DenseMatrix pb(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pa(i, j) = a(perm[i], j);
        }
        for (std::size_t j = 0; j < 2; ++j) {
            pb(i, j) = b(perm[i], j);
        }
    }
    CHECK(max_abs_diff(lu_solve(a, b), lu_solve(pa, pb)) <= 1e-12);
}

TEST_CASE("solve_transposed") {
    std::mt19937_64 rng(4);
    const DenseMatrix a = well_conditioned(rng, 9);
    const std::vector<double> b{1, -2, 3, 0.5, 0, 7, -1, 2, 4};
    const auto x = LuFactorization(a).solve_transposed(b);
    const auto back = multiply(a.transposed(), x);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(back[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
}

TEST_CASE("cond_estimate_1norm") {
    CHECK(cond_estimate_1norm(DenseMatrix::identity(4)) == 1.0);
    const double d = cond_estimate_1norm(DenseMatrix{{1, 0}, {0, 1e-6}});
    CHECK(d >= 0.5e6);
    CHECK(d <= 2e6);
    CHECK(std::isinf(cond_estimate_1norm(DenseMatrix{{1, 1}, {1, 1}})));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const DenseMatrix a = random_matrix(rng, 5, 5);
        const double truth = true_cond1(a);
        const double est = cond_estimate_1norm(a);
        CHECK(est >= 1.0);
        CHECK(est <= truth * (1 + 1e-10));
        CHECK(est >= truth / 5);
    }
}

TEST_CASE("solve is deterministic") {
    std::mt19937_64 rng(6);
    const DenseMatrix a = random_matrix(rng, 20, 20);
    const DenseMatrix b = random_matrix(rng, 20, 1);
    CHECK(lu_solve(a, b) == lu_solve(a, b));
}
