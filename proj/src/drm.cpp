#include "bkm/drm.hpp"

#include <stdexcept>

#include "bkm/errors.hpp"

namespace bkm::drm {

double RhoSpec::linear_scale() const {
    if (kind_ == Kind::burger) {
        throw UnsupportedConfigurationError("RhoSpec: burger operator is not linear");
    }
    return scale_;
}

std::string RhoSpec::name() const {
    switch (kind_) {
    case Kind::zero:
        return "zero";
    case Kind::identity:
        return "identity";
    case Kind::scaled_identity:
        return "scaled_identity(" + std::to_string(scale_) + ")";
    case Kind::burger:
        return "burger";
    }
    return "unknown";
}

void require_distinct(std::span<const Point> knots) {
    for (std::size_t i = 0; i < knots.size(); ++i) {
        for (std::size_t j = i + 1; j < knots.size(); ++j) {
            if (dist(knots[i], knots[j]) < kDuplicateKnotDistance) {
                throw DegenerateInputError("duplicate knots at indices " + std::to_string(i) + " and " +
                                           std::to_string(j));
            }
        }
    }
}

DenseMatrix interp_matrix(std::span<const Point> knots, const KernelPair& pair) {
    if (knots.empty()) {
        throw std::invalid_argument("interp_matrix: need at least one knot");
    }
    require_distinct(knots);
    const std::size_t n = knots.size();
    DenseMatrix a(n, n);
    const double diag = pair.phi.eval(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = diag;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = pair.phi.eval(dist(knots[i], knots[j]));
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

DenseMatrix particular_matrix(std::span<const Point> eval_points, std::span<const Point> knots,
                              const KernelPair& pair) {
    DenseMatrix m(eval_points.size(), knots.size());
    for (std::size_t i = 0; i < eval_points.size(); ++i) {
        for (std::size_t j = 0; j < knots.size(); ++j) {
            m(i, j) = pair.phi_hat.eval(dist(eval_points[i], knots[j]));
        }
    }
    return m;
}

DenseMatrix particular_normal_matrix(std::span<const BoundaryKnot> eval_knots,
                                     std::span<const Point> knots, const KernelPair& pair) {
    DenseMatrix m(eval_knots.size(), knots.size());
    for (std::size_t i = 0; i < eval_knots.size(); ++i) {
        for (std::size_t j = 0; j < knots.size(); ++j) {
            m(i, j) = kernels::normal_derivative(pair.phi_hat, knots[j], eval_knots[i].position,
                                                 eval_knots[i].normal);
        }
    }
    return m;
}

DenseMatrix x_derivative_matrix(std::span<const Point> knots, const KernelPair& pair) {
    const std::size_t n = knots.size();
    DenseMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                d(i, j) = kernels::normal_derivative(pair.phi, knots[j], knots[i], Vec2{1.0, 0.0});
            }
        }
    }
    return d;
}

namespace {

void require_length(std::span<const double> v, std::size_t n, const char* what) {
    if (v.size() != n) {
        throw std::invalid_argument(std::string(what) + ": length does not match knot count");
    }
}

std::vector<double> rho_with(const linalg::LuFactorization& lu, const RhoSpec& rho,
                             std::span<const Point> knots, const KernelPair& pair,
                             std::span<const double> u) {
    const std::size_t n = knots.size();
    switch (rho.kind()) {
    case RhoSpec::Kind::zero:
        return std::vector<double>(n, 0.0);
    case RhoSpec::Kind::identity:
        return {u.begin(), u.end()};
    case RhoSpec::Kind::scaled_identity: {
        std::vector<double> out(u.begin(), u.end());
        for (double& v : out) {
            v *= rho.linear_scale();
        }
        return out;
    }
    case RhoSpec::Kind::burger: {
        const auto coeff = lu.solve(u);
        const auto ux = linalg::multiply(x_derivative_matrix(knots, pair), coeff);
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = u[i] - ux[i] * u[i];
        }
        return out;
    }
    }
    throw std::logic_error("rho_matrix: unknown operator kind");
}

} // namespace

std::vector<double> rho_matrix(const RhoSpec& rho, std::span<const Point> knots, const KernelPair& pair,
                               std::span<const double> u_at_knots) {
    require_length(u_at_knots, knots.size(), "rho_matrix");
    const linalg::LuFactorization lu(interp_matrix(knots, pair));
    return rho_with(lu, rho, knots, pair, u_at_knots);
}

DrmExpansion solve_alpha(std::span<const Point> knots, const KernelPair& pair,
                         std::span<const double> f_at_knots, const RhoSpec& rho,
                         std::span<const double> u_at_knots) {
    require_length(f_at_knots, knots.size(), "solve_alpha");
    require_length(u_at_knots, knots.size(), "solve_alpha");
    const linalg::LuFactorization lu(interp_matrix(knots, pair));
    auto rhs = rho_with(lu, rho, knots, pair, u_at_knots);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        rhs[i] += f_at_knots[i];
    }
    return {std::vector<Point>(knots.begin(), knots.end()), pair, lu.solve(rhs)};
}

std::vector<double> u_p_at(const DrmExpansion& expansion, std::span<const Point> points) {
    return linalg::multiply(particular_matrix(points, expansion.knots, expansion.pair), expansion.alpha);
}

std::vector<double> u_p_normal_at(const DrmExpansion& expansion,
                                  std::span<const BoundaryKnot> boundary_knots) {
    return linalg::multiply(particular_normal_matrix(boundary_knots, expansion.knots, expansion.pair),
                            expansion.alpha);
}

ConstrainedInterpolant::ConstrainedInterpolant(std::span<const Point> centers, RadialKernel kernel,
                                               std::span<const double> values)
    : centers_(centers.begin(), centers.end()), kernel_(std::move(kernel)) {
    require_length(values, centers.size(), "ConstrainedInterpolant");
    if (centers.empty()) {
        throw std::invalid_argument("ConstrainedInterpolant: need at least one center");
    }
    require_distinct(centers);
    const std::size_t n = centers.size();
    DenseMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = kernel_.eval(dist(centers[i], centers[j]));
        }
        m(i, n) = 1.0;
        m(n, i) = 1.0;
    }
    std::vector<double> rhs(values.begin(), values.end());
    rhs.push_back(0.0);
    auto sol = linalg::LuFactorization(m).solve(rhs);
    constant_ = sol.back();
    sol.pop_back();
    weights_ = std::move(sol);
}

double ConstrainedInterpolant::eval(Point p) const {
    double sum = constant_;
    for (std::size_t k = 0; k < centers_.size(); ++k) {
        sum += weights_[k] * kernel_.eval(dist(p, centers_[k]));
    }
    return sum;
}

std::vector<double> ConstrainedInterpolant::eval(std::span<const Point> points) const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const Point& p : points) {
        out.push_back(eval(p));
    }
    return out;
}

} // namespace bkm::drm
