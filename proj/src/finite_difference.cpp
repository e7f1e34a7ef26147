#include "bkm/finite_difference.hpp"

namespace bkm::fd {

double d_dx(const Field2& f, Point p, double h) {
    return (f({p.x + h, p.y}) - f({p.x - h, p.y})) / (2.0 * h);
}

double d_dy(const Field2& f, Point p, double h) {
    return (f({p.x, p.y + h}) - f({p.x, p.y - h})) / (2.0 * h);
}

double laplacian(const Field2& f, Point p, double h) {
    const double c = f(p);
    return (f({p.x + h, p.y}) + f({p.x - h, p.y}) + f({p.x, p.y + h}) + f({p.x, p.y - h}) - 4.0 * c) /
           (h * h);
}

double laplacian(const Field3& f, const Point3& p, double h) {
    double sum = -6.0 * f(p);
    for (int axis = 0; axis < 3; ++axis) {
        Point3 q = p;
        q[axis] += h;
        sum += f(q);
        q[axis] -= 2.0 * h;
        sum += f(q);
    }
    return sum / (h * h);
}

namespace {

template <class Field, class Pt>
double nested_laplacian(const Field& f, const Pt& p, double h) {
    const Field inner = [&f, h](const auto& q) { return laplacian(f, q, h); };
    return laplacian(inner, p, h);
}

} // namespace

double bilaplacian(const Field2& f, Point p, double h) {
    const double coarse = nested_laplacian(f, p, 2.0 * h);
    const double fine = nested_laplacian(f, p, h);
    return (4.0 * fine - coarse) / 3.0;
}

double bilaplacian(const Field3& f, const Point3& p, double h) {
    const double coarse = nested_laplacian(f, p, 2.0 * h);
    const double fine = nested_laplacian(f, p, h);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace bkm::fd
