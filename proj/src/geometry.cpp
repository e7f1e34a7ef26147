#include "bkm/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace bkm {

Ellipse::Ellipse(Point center, double semi_major, double semi_minor)
    : center_(center), a_(semi_major), b_(semi_minor) {
    if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(a_) ||
        !std::isfinite(b_)) {
        throw std::invalid_argument("Ellipse: non-finite parameter");
    }
    if (!(b_ > 0.0) || a_ < b_) {
        throw std::invalid_argument("Ellipse: requires semi_major >= semi_minor > 0");
    }
}

double Ellipse::level(Point p) const {
    const Vec2 d = p - center_;
    return (d.x * d.x) / (a_ * a_) + (d.y * d.y) / (b_ * b_);
}

Vec2 Ellipse::level_gradient(Point p) const {
    const Vec2 d = p - center_;
    return {2.0 * d.x / (a_ * a_), 2.0 * d.y / (b_ * b_)};
}

std::vector<BoundaryKnot> ellipse_knots(const Ellipse& e, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ellipse_knots: need at least one knot");
    }
    const double a = e.semi_major();
    const double b = e.semi_minor();
    std::vector<BoundaryKnot> knots;
    knots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        const double c = std::cos(t);
        const double s = std::sin(t);
        const Vec2 g{c / a, s / b};
        knots.push_back({e.center() + Vec2{a * c, b * s}, (1.0 / norm(g)) * g});
    }
    return knots;
}

std::vector<Point> interior_grid(const Ellipse& e, double spacing) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("interior_grid: spacing must be positive");
    }
    const auto nx = static_cast<long>(std::floor(e.semi_major() / spacing));
    const auto ny = static_cast<long>(std::floor(e.semi_minor() / spacing));
    std::vector<Point> points;
    for (long j = -ny; j <= ny; ++j) {
        for (long i = -nx; i <= nx; ++i) {
            const Point p = e.center() + Vec2{static_cast<double>(i) * spacing,
                                              static_cast<double>(j) * spacing};
            if (e.contains_strictly(p)) {
                points.push_back(p);
            }
        }
    }
    return points;
}

} // namespace bkm
