#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bkm/drm.hpp"
#include "bkm/geometry.hpp"
#include "bkm/kernels.hpp"
#include "bkm/linalg.hpp"
#include "bkm/problems.hpp"

// Boundary knot method: the homogeneous part is a sum of non-singular
// general solutions centred on the boundary knots, the particular part comes
// from the dual-reciprocity expansion, and u = v + u_p.

namespace bkm {

enum class BcKind { dirichlet, neumann };

struct BoundaryCondition {
    BcKind kind = BcKind::dirichlet;
    double value = 0.0;
};

struct Diagnostics {
    double cond_interp = 0.0; // 1-norm estimate for A_phi
    double cond_bkm = 0.0;    // 1-norm estimate for the collocation system
    double residual_inf = 0.0; // max |u - D| over Dirichlet knots
};

struct BkmSolution {
    std::vector<double> lambda;
    drm::DrmExpansion expansion;
    RadialKernel kernel;
    std::vector<BoundaryKnot> knots;
    std::optional<std::vector<double>> interior_u;
};

struct SolveResult {
    BkmSolution solution;
    Diagnostics diagnostics;
};

/// A linear solve failed; carries the diagnostics gathered so far.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, Diagnostics diagnostics)
        : std::runtime_error(what), diagnostics_(diagnostics) {}
    const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    Diagnostics diagnostics_;
};

/// Dirichlet data of `problem` at every knot.
std::vector<BoundaryCondition> dirichlet_conditions(const ProblemSpec& problem,
                                                    std::span<const BoundaryKnot> knots);

/// Row i: kernel(r_ik) on Dirichlet knots, d kernel(r_ik)/dn_i on Neumann knots.
linalg::DenseMatrix assemble_bkm_matrix(std::span<const BoundaryKnot> knots, const RadialKernel& kernel,
                                        std::span<const BoundaryCondition> bc);

/// All-Dirichlet, boundary-knots-only solve. Accepts nonlinear rho; one
/// linear solve, no iteration.
SolveResult solve_boundary_only(const ProblemSpec& problem, std::size_t n_knots);
/// Same on caller-supplied knots and data; throws UnsupportedConfigurationError
/// if any condition is not Dirichlet.
SolveResult solve_boundary_only(const ProblemSpec& problem, std::span<const BoundaryKnot> knots,
                                std::span<const BoundaryCondition> bc);

/// Coupled solve with mixed boundary conditions and optional interior knots.
/// Unknowns are lambda followed by u at Neumann and interior knots (knot
/// order). Requires a linear rho; throws UnsupportedConfigurationError
/// otherwise.
SolveResult solve_mixed_linear(const ProblemSpec& problem, std::span<const BoundaryKnot> knots,
                               std::span<const BoundaryCondition> bc,
                               std::span<const Point> interior_points);

/// u(p) = sum_k lambda_k kernel(|p - x_k|) + u_p(p).
std::vector<double> evaluate(const BkmSolution& solution, std::span<const Point> points);

} // namespace bkm
