#pragma once

#include <cmath>
#include <span>
#include <variant>
#include <vector>

#include "orthocevia/errors.hpp"
#include "orthocevia/tolerance.hpp"

namespace orthocevia {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
inline Point operator/(Point p, double k) { return {p.x / k, p.y / k}; }

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm_sq(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist_sq(Point p, Point q) { return norm_sq(p - q); }
inline double dist(Point p, Point q) { return norm(p - q); }
inline Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Implicit line u*x + v*y + w = 0, normalized so u^2 + v^2 = 1 with canonical
// sign u > 0, or u == 0 and v > 0.
struct Line {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;

    Point normal() const { return {u, v}; }
    Point direction() const { return {-v, u}; }
    // Signed distance of p from the line (length units).
    double eval(Point p) const { return u * p.x + v * p.y + w; }
};

struct Circle {
    Point center;
    double r_sq = 0.0;

    double radius() const { return std::sqrt(r_sq); }
};

// Marker for projective outcomes (parallel lines, perspector at infinity).
struct AtInfinity {};

using LineIntersection = std::variant<Point, AtInfinity>;

enum class Orient { CCW, CW, Collinear };

// Sign of the doubled signed area of (p, q, r). Collinear iff the determinant
// vanishes at scale max(|pq|^2, |pr|^2).
Orient orientation(Point p, Point q, Point r, const Tolerance& tol = {});

double signed_area_doubled(Point p, Point q, Point r);

// Canonical normalized line from raw coefficients. Throws DegenerateInput when
// u and v both vanish.
Line make_line(double u, double v, double w, const Tolerance& tol = {});

// Throws DegenerateInput when p and q coincide at tolerance.
Line line_through(Point p, Point q, const Tolerance& tol = {});

Line perpendicular_through(Point p, const Line& l);

// Unique common point, AtInfinity for parallel distinct lines. Throws
// CoincidentLines when the lines are identical at tolerance.
LineIntersection intersect_lines(const Line& l1, const Line& l2, const Tolerance& tol = {});

Point foot_of_perpendicular(Point p, const Line& l);

// Circle through three points. Throws CollinearPoints.
Circle circle_through(Point p, Point q, Point r, const Tolerance& tol = {});

// 0, 1 (tangency at tolerance) or 2 intersection points.
std::vector<Point> line_circle_intersections(const Line& l, const Circle& c,
                                             const Tolerance& tol = {});

// |p - center|^2 - r^2; equals the signed secant product through p.
double power_of_point(Point p, const Circle& c);

// (2*(adj1_sq + adj2_sq) - opp_sq) / 4. Throws NegativeResult when the inputs
// are not realizable as a triangle; values negative within tolerance clamp to 0.
double median_length_squared(double adj1_sq, double adj2_sq, double opp_sq,
                             const Tolerance& tol = {});

// True iff every point lies on the circle through the first three (at the
// circle's scale). Throws CollinearPoints for the base triple.
bool concyclic(std::span<const Point> points, const Tolerance& tol = {});

} // namespace orthocevia
