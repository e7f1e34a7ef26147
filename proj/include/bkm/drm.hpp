#pragma once

#include <span>
#include <string>
#include <vector>

#include "bkm/geometry.hpp"
#include "bkm/kernels.hpp"
#include "bkm/linalg.hpp"

// Dual-reciprocity particular solutions: the inhomogeneous term f + rho{u}
// is interpolated with phi at the knots, and u_p is the matching sum of
// phi_hat; L{u_p} equals the interpolant.

namespace bkm::drm {

using linalg::DenseMatrix;

/// Knots closer than this are duplicates.
inline constexpr double kDuplicateKnotDistance = 1e-12;

/// The remaining operator rho{u} of the split L{u} = f + rho{u}.
class RhoSpec {
public:
    enum class Kind { zero, identity, scaled_identity, burger };

    static RhoSpec zero() { return RhoSpec(Kind::zero, 0.0); }
    static RhoSpec identity() { return RhoSpec(Kind::identity, 1.0); }
    static RhoSpec scaled_identity(double s) { return RhoSpec(Kind::scaled_identity, s); }
    /// rho{u} = u - u_x u.
    static RhoSpec burger() { return RhoSpec(Kind::burger, 0.0); }

    Kind kind() const { return kind_; }
    bool is_linear() const { return kind_ != Kind::burger; }
    /// rho{u} = s u for linear kinds. Throws UnsupportedConfigurationError for burger.
    double linear_scale() const;
    std::string name() const;

private:
    RhoSpec(Kind kind, double scale) : kind_(kind), scale_(scale) {}
    Kind kind_;
    double scale_;
};

struct DrmExpansion {
    std::vector<Point> knots; // boundary knots first, then interior
    KernelPair pair;
    std::vector<double> alpha;
};

/// Throws DegenerateInputError if two knots are closer than kDuplicateKnotDistance.
void require_distinct(std::span<const Point> knots);

/// A_phi with entries phi(|x_i - x_j|).
DenseMatrix interp_matrix(std::span<const Point> knots, const KernelPair& pair);

/// Entries phi_hat(|p_i - x_j|); rows are evaluation points, columns knots.
DenseMatrix particular_matrix(std::span<const Point> eval_points, std::span<const Point> knots,
                              const KernelPair& pair);

/// Normal derivative of phi_hat(|x - x_j|) at each boundary knot x.
DenseMatrix particular_normal_matrix(std::span<const BoundaryKnot> eval_knots,
                                     std::span<const Point> knots, const KernelPair& pair);

/// D_x with entries d/dx phi(|x - x_j|) at x = x_i; zero diagonal.
DenseMatrix x_derivative_matrix(std::span<const Point> knots, const KernelPair& pair);

/// rho{A_phi} A_phi^{-1} u evaluated at the knots.
std::vector<double> rho_matrix(const RhoSpec& rho, std::span<const Point> knots, const KernelPair& pair,
                               std::span<const double> u_at_knots);

/// alpha = A_phi^{-1} [f + rho{A_phi} A_phi^{-1} u].
DrmExpansion solve_alpha(std::span<const Point> knots, const KernelPair& pair,
                         std::span<const double> f_at_knots, const RhoSpec& rho,
                         std::span<const double> u_at_knots);

std::vector<double> u_p_at(const DrmExpansion& expansion, std::span<const Point> points);
std::vector<double> u_p_normal_at(const DrmExpansion& expansion,
                                  std::span<const BoundaryKnot> boundary_knots);

/// RBF interpolant sum_k beta_k k(|x - x_k|) + beta_0 with the side condition
/// sum_k beta_k = 0 (constant constraint function).
class ConstrainedInterpolant {
public:
    ConstrainedInterpolant(std::span<const Point> centers, RadialKernel kernel,
                           std::span<const double> values);

    double eval(Point p) const;
    std::vector<double> eval(std::span<const Point> points) const;

    const std::vector<double>& weights() const { return weights_; }
    double constant() const { return constant_; }

private:
    std::vector<Point> centers_;
    RadialKernel kernel_;
    std::vector<double> weights_;
    double constant_ = 0.0;
};

} // namespace bkm::drm
