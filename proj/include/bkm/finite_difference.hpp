#pragma once

#include <array>
#include <functional>

#include "bkm/geometry.hpp"

// Central finite-difference operators on scalar fields. Used to build
// manufactured forcing terms and for user-facing residual reports.

namespace bkm::fd {

using Field2 = std::function<double(Point)>;
using Point3 = std::array<double, 3>;
using Field3 = std::function<double(const Point3&)>;

double d_dx(const Field2& f, Point p, double h = 1e-5);
double d_dy(const Field2& f, Point p, double h = 1e-5);

/// 5-point Laplacian.
double laplacian(const Field2& f, Point p, double h = 1e-4);
/// 7-point Laplacian.
double laplacian(const Field3& f, const Point3& p, double h = 1e-4);

/// Laplacian applied twice, Richardson-extrapolated from steps 2h and h.
double bilaplacian(const Field2& f, Point p, double h = 0.01);
double bilaplacian(const Field3& f, const Point3& p, double h = 0.01);

} // namespace bkm::fd
