#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace bkm {

/// Displacement or direction in the plane.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Location in the plane.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point operator+(Point p, Vec2 d) { return {p.x + d.x, p.y + d.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

/// Euclidean distance.
inline double dist(Point p, Point q) { return norm(p - q); }

/// A collocation point on the physical boundary with its unit outward normal.
struct BoundaryKnot {
    Point position;
    Vec2 normal;
};

/// Axis-aligned ellipse (x-cx)^2/a^2 + (y-cy)^2/b^2 = 1 with a >= b > 0.
class Ellipse {
public:
    /// Throws std::invalid_argument unless a >= b > 0 and all inputs are finite.
    Ellipse(Point center, double semi_major, double semi_minor);

    Point center() const { return center_; }
    double semi_major() const { return a_; }
    double semi_minor() const { return b_; }

    /// Level function; < 1 inside, 1 on the boundary.
    double level(Point p) const;
    Vec2 level_gradient(Point p) const;
    bool contains_strictly(Point p, double margin = 1e-9) const { return level(p) < 1.0 - margin; }

private:
    Point center_;
    double a_;
    double b_;
};

/// n knots at parameter angles t_i = 2 pi i / n, i = 0..n-1, with outward
/// unit normals. Throws std::invalid_argument for n == 0.
std::vector<BoundaryKnot> ellipse_knots(const Ellipse& e, std::size_t n);

/// Lattice points center + (i h, j h) strictly inside the ellipse, ordered
/// row by row (y ascending, then x ascending).
std::vector<Point> interior_grid(const Ellipse& e, double spacing);

} // namespace bkm
