#pragma once

#include <span>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "orthocevia/geom.hpp"

namespace orthocevia::exact {

// Arbitrary-precision rational backend covering the rational-closed subset of
// the kernel. Operations needing square roots (side lengths, incircle) are
// deliberately absent. This backend cross-validates the double kernel's
// tolerance policy; results are exact, no Tolerance parameter anywhere.
using Rat = boost::multiprecision::cpp_rational;

struct RatPoint {
    Rat x;
    Rat y;
};

// Implicit u*x + v*y + w = 0, canonically scaled: u == 1, or u == 0 and v == 1.
struct RatLine {
    Rat u, v, w;

    Rat eval(const RatPoint& p) const { return u * p.x + v * p.y + w; }
};

struct RatCircle {
    RatPoint center;
    Rat r_sq;
};

bool operator==(const RatPoint& a, const RatPoint& b);

Orient orientation(const RatPoint& p, const RatPoint& q, const RatPoint& r);

RatLine line_through(const RatPoint& p, const RatPoint& q);

// Parallel distinct lines yield AtInfinity; coincident lines throw.
std::variant<RatPoint, AtInfinity> intersect_lines(const RatLine& l1, const RatLine& l2);

RatPoint foot_of_perpendicular(const RatPoint& p, const RatLine& l);

RatCircle circle_through(const RatPoint& p, const RatPoint& q, const RatPoint& r);

Rat power_of_point(const RatPoint& p, const RatCircle& c);

Rat median_length_squared(const Rat& adj1_sq, const Rat& adj2_sq, const Rat& opp_sq);

bool concyclic(std::span<const RatPoint> points);

double to_double(const Rat& r);
Point to_point(const RatPoint& p);

} // namespace orthocevia::exact
