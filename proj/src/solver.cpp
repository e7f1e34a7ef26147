#include "bkm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

using linalg::DenseMatrix;
using linalg::LuFactorization;

std::vector<Point> positions_of(std::span<const BoundaryKnot> knots) {
    std::vector<Point> out;
    out.reserve(knots.size());
    for (const auto& k : knots) {
        out.push_back(k.position);
    }
    return out;
}

std::vector<double> sample(const ScalarField& f, std::span<const Point> points) {
    std::vector<double> out;
    out.reserve(points.size());
    for (const Point& p : points) {
        out.push_back(f(p));
    }
    return out;
}

void require_conditions(std::span<const BoundaryKnot> knots, std::span<const BoundaryCondition> bc) {
    if (knots.empty()) {
        throw std::invalid_argument("need at least one boundary knot");
    }
    if (bc.size() != knots.size()) {
        throw std::invalid_argument("every boundary knot needs exactly one boundary condition");
    }
}

double dirichlet_residual(const BkmSolution& sol, std::span<const BoundaryCondition> bc) {
    const auto u = evaluate(sol, positions_of(sol.knots));
    double worst = 0.0;
    for (std::size_t i = 0; i < bc.size(); ++i) {
        if (bc[i].kind == BcKind::dirichlet) {
            worst = std::max(worst, std::abs(u[i] - bc[i].value));
        }
    }
    return worst;
}

std::vector<double> checked_solve(const DenseMatrix& a, std::span<const double> b, Diagnostics& diag,
                                  const char* stage) {
    try {
        const LuFactorization lu(a);
        diag.cond_bkm = lu.cond_estimate_1norm();
        return lu.solve(b);
    } catch (const SingularMatrixError& e) {
        diag.cond_bkm = std::numeric_limits<double>::infinity();
        throw SolveError(std::string(stage) + ": " + e.what(), diag);
    }
}

drm::DrmExpansion checked_alpha(std::span<const Point> knots, const KernelPair& pair,
                                std::span<const double> f, const drm::RhoSpec& rho,
                                std::span<const double> u, Diagnostics& diag) {
    diag.cond_interp = linalg::cond_estimate_1norm(drm::interp_matrix(knots, pair));
    try {
        return drm::solve_alpha(knots, pair, f, rho, u);
    } catch (const SingularMatrixError& e) {
        throw SolveError(std::string("particular solution: ") + e.what(), diag);
    }
}

} // namespace

std::vector<BoundaryCondition> dirichlet_conditions(const ProblemSpec& problem,
                                                    std::span<const BoundaryKnot> knots) {
    std::vector<BoundaryCondition> bc;
    bc.reserve(knots.size());
    for (const auto& k : knots) {
        bc.push_back({BcKind::dirichlet, problem.dirichlet(k.position)});
    }
    return bc;
}

DenseMatrix assemble_bkm_matrix(std::span<const BoundaryKnot> knots, const RadialKernel& kernel,
                                std::span<const BoundaryCondition> bc) {
    require_conditions(knots, bc);
    drm::require_distinct(positions_of(knots));
    const std::size_t n = knots.size();
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Point source = knots[k].position;
            const Point response = knots[i].position;
            m(i, k) = bc[i].kind == BcKind::dirichlet
                          ? kernel.eval(dist(source, response))
                          : kernels::normal_derivative(kernel, source, response, knots[i].normal);
        }
    }
    return m;
}

SolveResult solve_boundary_only(const ProblemSpec& problem, std::size_t n_knots) {
    const auto knots = ellipse_knots(problem.ellipse, n_knots);
    return solve_boundary_only(problem, knots, dirichlet_conditions(problem, knots));
}

SolveResult solve_boundary_only(const ProblemSpec& problem, std::span<const BoundaryKnot> knots,
                                std::span<const BoundaryCondition> bc) {
    require_conditions(knots, bc);
    if (std::any_of(bc.begin(), bc.end(), [](const auto& c) { return c.kind != BcKind::dirichlet; })) {
        throw UnsupportedConfigurationError(
            "solve_boundary_only: every knot must carry a Dirichlet condition");
    }
    const auto points = positions_of(knots);
    std::vector<double> u_bc;
    u_bc.reserve(bc.size());
    for (const auto& c : bc) {
        u_bc.push_back(c.value);
    }

    const auto pair = kernels::mq_pair(problem.mq_shape_c, problem.split_wavenumber);
    const auto kernel = kernels::helmholtz2d(problem.split_wavenumber);

    Diagnostics diag;
    auto expansion = checked_alpha(points, pair, sample(problem.forcing, points), problem.rho, u_bc, diag);

    const auto matrix = assemble_bkm_matrix(knots, kernel, bc);
    auto rhs = drm::u_p_at(expansion, points);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        rhs[i] = u_bc[i] - rhs[i];
    }
    auto lambda = checked_solve(matrix, rhs, diag, "collocation");

    SolveResult result{BkmSolution{std::move(lambda), std::move(expansion), kernel,
                                   std::vector<BoundaryKnot>(knots.begin(), knots.end()), std::nullopt},
                       diag};
    result.diagnostics.residual_inf = dirichlet_residual(result.solution, bc);
    return result;
}

SolveResult solve_mixed_linear(const ProblemSpec& problem, std::span<const BoundaryKnot> knots,
                               std::span<const BoundaryCondition> bc,
                               std::span<const Point> interior_points) {
    require_conditions(knots, bc);
    if (!problem.rho.is_linear()) {
        throw UnsupportedConfigurationError(
            "solve_mixed_linear: the remaining operator must be linear (got " + problem.rho.name() + ")");
    }
    const double s = problem.rho.linear_scale();
    const std::size_t n = knots.size();
    const std::size_t l = interior_points.size();

    std::vector<Point> all = positions_of(knots);
    all.insert(all.end(), interior_points.begin(), interior_points.end());
    const std::size_t m = all.size();

    // Known u (Dirichlet knots) and the knot indices whose u is unknown.
    std::vector<double> u_known(m, 0.0);
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < n; ++i) {
        if (bc[i].kind == BcKind::dirichlet) {
            u_known[i] = bc[i].value;
        } else {
            unknown.push_back(i);
        }
    }
    for (std::size_t q = 0; q < l; ++q) {
        unknown.push_back(n + q);
    }
    const std::size_t nu = unknown.size();

    const auto pair = kernels::mq_pair(problem.mq_shape_c, problem.split_wavenumber);
    const auto kernel = kernels::helmholtz2d(problem.split_wavenumber);
    const auto f = sample(problem.forcing, all);

    Diagnostics diag;
    // Particular solution driven by f and the known u; the unknown u enter
    // linearly through s * A_phi^{-1}.
    const auto known_part = checked_alpha(all, pair, f, problem.rho, u_known, diag);
    const LuFactorization interp(drm::interp_matrix(all, pair));

    const DenseMatrix up_rows = drm::particular_matrix(all, all, pair);
    const DenseMatrix up_normal_rows = drm::particular_normal_matrix(knots, all, pair);
    const DenseMatrix bkm_rows = assemble_bkm_matrix(knots, kernel, bc);

    DenseMatrix system(n + nu, n + nu);
    std::vector<double> rhs(n + nu, 0.0);

    auto couple = [&](std::size_t row, std::span<const double> functional) {
        double known = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            known += functional[j] * known_part.alpha[j];
        }
        if (s != 0.0 && nu > 0) {
            const auto weights = interp.solve_transposed(functional);
            for (std::size_t q = 0; q < nu; ++q) {
                system(row, n + q) += s * weights[unknown[q]];
            }
        }
        return known;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            system(i, k) = bkm_rows(i, k);
        }
        const auto functional = bc[i].kind == BcKind::dirichlet ? up_rows.row(i) : up_normal_rows.row(i);
        rhs[i] = bc[i].value - couple(i, functional);
    }
    for (std::size_t q = 0; q < nu; ++q) {
        const std::size_t row = n + q;
        const Point at = all[unknown[q]];
        for (std::size_t k = 0; k < n; ++k) {
            system(row, k) = kernel.eval(dist(knots[k].position, at));
        }
        rhs[row] = -couple(row, up_rows.row(unknown[q]));
        system(row, n + q) -= 1.0;
    }

    const auto x = checked_solve(system, rhs, diag, "coupled collocation");

    std::vector<double> u_full = u_known;
    for (std::size_t q = 0; q < nu; ++q) {
        u_full[unknown[q]] = x[n + q];
    }
    auto expansion = nu == 0 ? known_part : drm::solve_alpha(all, pair, f, problem.rho, u_full);

    std::optional<std::vector<double>> interior_u;
    if (l > 0) {
        interior_u = std::vector<double>(u_full.begin() + static_cast<std::ptrdiff_t>(n), u_full.end());
    }
    SolveResult result{BkmSolution{std::vector<double>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)),
                                   std::move(expansion), kernel,
                                   std::vector<BoundaryKnot>(knots.begin(), knots.end()),
                                   std::move(interior_u)},
                       diag};
    result.diagnostics.residual_inf = dirichlet_residual(result.solution, bc);
    return result;
}

std::vector<double> evaluate(const BkmSolution& solution, std::span<const Point> points) {
    auto u = drm::u_p_at(solution.expansion, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        double v = 0.0;
        for (std::size_t k = 0; k < solution.knots.size(); ++k) {
            v += solution.lambda[k] * solution.kernel.eval(dist(points[i], solution.knots[k].position));
        }
        u[i] += v;
    }
    return u;
}

} // namespace bkm
