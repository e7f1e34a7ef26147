#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bkm/drm.hpp"
#include "bkm/geometry.hpp"

namespace bkm {

using ScalarField = std::function<double(Point)>;

/// An evaluation point from a reference results table. `note` is empty unless
/// the printed coordinates were corrected.
struct TablePoint {
    Point at;
    std::string note;
};

/// Problem L{u} = f + rho{u} on an ellipse with Dirichlet data, where
/// L = laplacian + split_wavenumber^2.
struct ProblemSpec {
    std::string name;
    Ellipse ellipse;
    double split_wavenumber = 1.0;
    drm::RhoSpec rho = drm::RhoSpec::zero();
    ScalarField forcing;
    ScalarField dirichlet;
    ScalarField exact; // may be empty
    double mq_shape_c = 1.0;
    std::vector<TablePoint> table_points;
};

namespace problems {

/// lap(u) = 0, u = x + y; split as (lap + 1) u = u.
ProblemSpec laplace_benchmark();
/// (lap + 1) u = x, u = sin x + x.
ProblemSpec helmholtz_benchmark();
/// lap(u) + u_x u = 0, u = 2/x, ellipse centred at (3, 0); split as
/// (lap + 1) u = u - u_x u.
ProblemSpec burger_benchmark();

/// Built-in problem by CLI name (laplace, helmholtz, burger). Throws
/// std::invalid_argument("unknown problem ...") otherwise.
ProblemSpec by_name(const std::string& name);
std::vector<std::string> names();

/// Problem whose forcing is L{exact} - rho{exact} by finite differences and
/// whose Dirichlet data is `exact`. Throws std::invalid_argument if the
/// forcing is not reproducible under step refinement at interior lattice
/// points (non-smooth exact solution).
ProblemSpec manufactured(std::string name, ScalarField exact, double split_wavenumber,
                         drm::RhoSpec rho, Ellipse ellipse, double mq_shape_c);

/// rho{u}(p) for a field u, with u_x by central differences when needed.
double apply_rho(const drm::RhoSpec& rho, const ScalarField& u, Point p);

} // namespace problems
} // namespace bkm
