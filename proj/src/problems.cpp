#include "bkm/problems.hpp"

#include <cmath>
#include <stdexcept>

#include "bkm/finite_difference.hpp"

namespace bkm::problems {

namespace {

const Ellipse kUnitEllipse{{0.0, 0.0}, 2.0, 1.0};

// Rows of the Laplace and Helmholtz result tables. The fourth row is printed
// as (0.0, 0.0) but its exact value (-0.45 for x + y) places it at (0, -0.45).
std::vector<TablePoint> ellipse_table(const std::string& source) {
    const std::string fix = "printed as (0.0, 0.0) in " + source + "; corrected to (0.0, -0.45)";
    return {
        {{1.5, 0.0}, ""},  {{1.2, -0.35}, ""}, {{0.6, -0.45}, ""}, {{0.0, -0.45}, fix},
        {{0.9, 0.0}, ""},  {{0.3, 0.0}, ""},   {{0.0, 0.0}, ""},
    };
}

std::vector<TablePoint> burger_table() {
    return {
        {{4.5, 0.0}, ""},  {{4.2, -0.35}, ""}, {{3.6, -0.45}, ""}, {{3.0, -0.45}, ""},
        {{2.4, -0.45}, ""}, {{1.8, -0.35}, ""}, {{1.5, 0.0}, ""},   {{3.9, 0.0}, ""},
        {{3.3, 0.0}, ""},  {{3.0, 0.0}, ""},   {{2.7, 0.0}, ""},   {{2.1, 0.0}, ""},
    };
}

} // namespace

ProblemSpec laplace_benchmark() {
    auto exact = [](Point p) { return p.x + p.y; };
    return ProblemSpec{
        .name = "laplace",
        .ellipse = kUnitEllipse,
        .split_wavenumber = 1.0,
        .rho = drm::RhoSpec::identity(),
        .forcing = [](Point) { return 0.0; },
        .dirichlet = exact,
        .exact = exact,
        .mq_shape_c = 25.0,
        .table_points = ellipse_table("the Laplace table"),
    };
}

ProblemSpec helmholtz_benchmark() {
    auto exact = [](Point p) { return std::sin(p.x) + p.x; };
    return ProblemSpec{
        .name = "helmholtz",
        .ellipse = kUnitEllipse,
        .split_wavenumber = 1.0,
        .rho = drm::RhoSpec::zero(),
        .forcing = [](Point p) { return p.x; },
        .dirichlet = exact,
        .exact = exact,
        .mq_shape_c = 3.0,
        .table_points = ellipse_table("the Helmholtz table"),
    };
}

ProblemSpec burger_benchmark() {
    auto exact = [](Point p) { return 2.0 / p.x; };
    return ProblemSpec{
        .name = "burger",
        .ellipse = Ellipse{{3.0, 0.0}, 2.0, 1.0},
        .split_wavenumber = 1.0,
        .rho = drm::RhoSpec::burger(),
        .forcing = [](Point) { return 0.0; },
        .dirichlet = exact,
        .exact = exact,
        .mq_shape_c = 1.0,
        .table_points = burger_table(),
    };
}

std::vector<std::string> names() { return {"laplace", "helmholtz", "burger"}; }

ProblemSpec by_name(const std::string& name) {
    if (name == "laplace") {
        return laplace_benchmark();
    }
    if (name == "helmholtz") {
        return helmholtz_benchmark();
    }
    if (name == "burger") {
        return burger_benchmark();
    }
    throw std::invalid_argument("unknown problem '" + name + "'");
}

double apply_rho(const drm::RhoSpec& rho, const ScalarField& u, Point p) {
    switch (rho.kind()) {
    case drm::RhoSpec::Kind::zero:
        return 0.0;
    case drm::RhoSpec::Kind::identity:
    case drm::RhoSpec::Kind::scaled_identity:
        return rho.linear_scale() * u(p);
    case drm::RhoSpec::Kind::burger: {
        const double v = u(p);
        return v - fd::d_dx(u, p) * v;
    }
    }
    throw std::logic_error("apply_rho: unknown operator kind");
}

ProblemSpec manufactured(std::string name, ScalarField exact, double split_wavenumber,
                         drm::RhoSpec rho, Ellipse ellipse, double mq_shape_c) {
    if (!exact) {
        throw std::invalid_argument("manufactured: exact solution is required");
    }
    if (!(split_wavenumber > 0.0)) {
        throw std::invalid_argument("manufactured: split wavenumber must be positive");
    }
    const double k2 = split_wavenumber * split_wavenumber;
    auto forcing_at = [exact, k2, rho](Point p, double h) {
        return fd::laplacian(exact, p, h) + k2 * exact(p) - apply_rho(rho, exact, p);
    };

    constexpr double kStep = 1e-3;
    const double spacing = ellipse.semi_minor() / 4.0;
    for (const Point& p : interior_grid(ellipse, spacing)) {
        const double fine = forcing_at(p, kStep);
        const double coarse = forcing_at(p, 2.0 * kStep);
        if (!std::isfinite(fine) || std::abs(fine - coarse) > 1e-4 * (1.0 + std::abs(fine))) {
            throw std::invalid_argument("manufactured: exact solution is not smooth at (" +
                                        std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
        }
    }

    return ProblemSpec{
        .name = std::move(name),
        .ellipse = ellipse,
        .split_wavenumber = split_wavenumber,
        .rho = rho,
        .forcing = [forcing_at](Point p) { return forcing_at(p, kStep); },
        .dirichlet = exact,
        .exact = exact,
        .mq_shape_c = mq_shape_c,
        .table_points = {},
    };
}

} // namespace bkm::problems
