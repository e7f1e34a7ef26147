#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "bkm/geometry.hpp"

namespace bkm {

using RadialFunction = std::function<double(double)>;

/// A radial basis r -> k(r) with its first and (optionally) second radial
/// derivatives. Immutable after construction.
class RadialKernel {
public:
    RadialKernel(std::string label, std::map<std::string, double> params, RadialFunction value,
                 RadialFunction deriv, RadialFunction second = {});

    double eval(double r) const { return value_(r); }
    double deriv(double r) const { return deriv_(r); }
    bool has_second() const { return static_cast<bool>(second_); }
    /// d^2k/dr^2; throws std::logic_error if the kernel was built without it.
    double second(double r) const;

    const std::string& label() const { return label_; }
    const std::map<std::string, double>& params() const { return params_; }
    /// Throws std::out_of_range for an unknown name.
    double param(const std::string& name) const { return params_.at(name); }

private:
    std::string label_;
    std::map<std::string, double> params_;
    RadialFunction value_;
    RadialFunction deriv_;
    RadialFunction second_;
};

/// A kernel of the displacement vector response - source, for operators
/// whose general solution is not purely radial.
class DisplacementKernel {
public:
    DisplacementKernel(std::string label, std::map<std::string, double> params,
                       std::function<double(Vec2)> value);

    double eval(Vec2 displacement) const { return value_(displacement); }
    double eval(Point source, Point response) const { return value_(response - source); }

    const std::string& label() const { return label_; }
    const std::map<std::string, double>& params() const { return params_; }

private:
    std::string label_;
    std::map<std::string, double> params_;
    std::function<double(Vec2)> value_;
};

/// A kernel whose value depends on the source location as well as on the
/// distance, e.g. forcing- or boundary-data-weighted general solutions.
class SourceKernel {
public:
    SourceKernel(std::string label, std::function<double(Point, double)> value);

    double eval(Point source, Point response) const { return value_(source, dist(source, response)); }
    double eval(Point source, double r) const { return value_(source, r); }
    const std::string& label() const { return label_; }

private:
    std::string label_;
    std::function<double(Point, double)> value_;
};

/// Approximate particular solution phi_hat and its image phi = L{phi_hat}
/// under the splitting operator L = laplacian + wavenumber^2.
struct KernelPair {
    RadialKernel phi_hat;
    RadialKernel phi;
};

namespace kernels {

/// J0(lambda r), solving (laplacian + lambda^2) u = 0 in 2D.
RadialKernel helmholtz2d(double wavenumber);
/// I0(lambda r), solving (laplacian - lambda^2) u = 0 in 2D.
RadialKernel modified_helmholtz2d(double wavenumber);
/// sin(lambda r)/(lambda r), solving (laplacian + lambda^2) u = 0 in 3D.
RadialKernel helmholtz3d(double wavenumber);
/// sinh(lambda r)/(lambda r), solving (laplacian - lambda^2) u = 0 in 3D.
RadialKernel modified_helmholtz3d(double wavenumber);

/// {J0(lambda r), I0(lambda r)}. Both components are annihilated by
/// laplacian^2 - lambda^4.
std::pair<RadialKernel, RadialKernel> biharmonic2d(double wavenumber);
/// {sin(lambda r)/(lambda r), sinh(lambda r)/(lambda r)}; 3D analogue.
std::pair<RadialKernel, RadialKernel> biharmonic3d(double wavenumber);

/// exp(-(v . d)/(2D)) J0(mu |d|) with d = response - source, the non-singular
/// solution of D lap(u) + v . grad(u) + k u = 0; mu^2 = k/D - (|v|/2D)^2.
/// Throws std::invalid_argument for D <= 0 or mu^2 < 0.
DisplacementKernel convection_diffusion2d(double diffusivity, Vec2 velocity, double reaction);

/// phi_hat = (r^2 + c^2)^{3/2} and phi = (laplacian + wavenumber^2) phi_hat
///         = 6 sqrt(r^2+c^2) + 3 r^2 / sqrt(r^2+c^2) + wavenumber^2 (r^2+c^2)^{3/2}.
KernelPair mq_pair(double shape, double wavenumber = 1.0);

/// r^{2m} g(s), s = r or s = sqrt(r^2 + c^2) when a pre-wavelet dilation c is
/// given. With m = 0 and no dilation, returns g itself.
RadialKernel gsr_kernel(const RadialKernel& g, int m, std::optional<double> prewavelet_c = std::nullopt);

enum class GsrWeighting {
    forcing,   // [f(x) + rho(g)] r^{2m} g
    dirichlet, // D(x) r^{2m} dg/dr
    neumann,   // N(x) r^{2m} g
};

/// Source-weighted general-solution kernel. `weight` is f, D or N evaluated at
/// the source point; `rho_term` (forcing mode only, optional) is the remaining
/// operator applied to g, as a function of the same radial argument as g.
SourceKernel gsr_weighted_kernel(const RadialKernel& g, GsrWeighting mode,
                                 std::function<double(Point)> weight, int m,
                                 std::optional<double> prewavelet_c = std::nullopt,
                                 RadialFunction rho_term = {});

/// {ln r + 1, r^2 (ln r + 1)}. Both throw std::domain_error for r <= 0.
std::pair<RadialKernel, RadialKernel> biharmonic_mfs_pair();

/// Derivative of k(|response - source|) with respect to the response point
/// along n. Zero when source and response coincide.
double normal_derivative(const RadialKernel& k, Point source, Point response, Vec2 n);

} // namespace kernels
} // namespace bkm
