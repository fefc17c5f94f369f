#pragma once

#include <array>

#include "orthocevia/geom.hpp"

namespace orthocevia {

// Ordered non-degenerate vertex triple with cached side lengths and
// semiperimeter. Vertex index 0/1/2 = A/B/C; side index i is the side
// opposite vertex i (side 0 = BC, length a).
class Triangle {
public:
    // Rejects triangles with 2*area / max_side^2 below the degeneracy
    // threshold (default 1e-6).
    Triangle(Point a_vertex, Point b_vertex, Point c_vertex,
             double degeneracy_threshold = 1e-6);

    const Point& A() const { return v_[0]; }
    const Point& B() const { return v_[1]; }
    const Point& C() const { return v_[2]; }
    const Point& vertex(int i) const { return v_[i]; }

    double a() const { return len_[0]; }
    double b() const { return len_[1]; }
    double c() const { return len_[2]; }
    double side_length(int i) const { return len_[i]; }
    double s() const { return s_; }

    double signed_area() const { return signed_area_; }
    double area() const { return std::abs(signed_area_); }
    // Max squared pairwise vertex distance; the natural scale of the triangle.
    double scale_sq() const { return scale_sq_; }

    Line side_line(int i) const;
    // Endpoints of side i in cyclic order: side 0 = (B, C), 1 = (C, A), 2 = (A, B).
    std::array<Point, 2> side_endpoints(int i) const;

private:
    std::array<Point, 3> v_;
    std::array<double, 3> len_;
    double s_;
    double signed_area_;
    double scale_sq_;
};

// The shared shape of pedal triangles, contact points, extouch points and
// Terquem feet: one point on each side line.
struct CevianFeet {
    Point on_bc;
    Point on_ca;
    Point on_ab;

    const Point& foot(int i) const { return i == 0 ? on_bc : (i == 1 ? on_ca : on_ab); }
    Point& foot(int i) { return i == 0 ? on_bc : (i == 1 ? on_ca : on_ab); }
    std::array<Point, 3> points() const { return {on_bc, on_ca, on_ab}; }
};

} // namespace orthocevia
