#include "orthocevia/exact.hpp"

namespace orthocevia::exact {

bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
}

Orient orientation(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    const Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (det == 0) return Orient::Collinear;
    return det > 0 ? Orient::CCW : Orient::CW;
}

static RatLine canonical(Rat u, Rat v, Rat w) {
    if (u != 0) return {1, v / u, w / u};
    if (v == 0) raise(ErrorKind::DegenerateInput, "rational line coefficients vanish");
    return {0, 1, w / v};
}

RatLine line_through(const RatPoint& p, const RatPoint& q) {
    if (p == q) raise(ErrorKind::DegenerateInput, "rational line through coincident points");
    const Rat dx = q.x - p.x, dy = q.y - p.y;
    return canonical(-dy, dx, dy * p.x - dx * p.y);
}

std::variant<RatPoint, AtInfinity> intersect_lines(const RatLine& l1, const RatLine& l2) {
    const Rat det = l1.u * l2.v - l1.v * l2.u;
    if (det == 0) {
        if (l1.u == l2.u && l1.v == l2.v && l1.w == l2.w)
            raise(ErrorKind::CoincidentLines, "rational lines coincide");
        return AtInfinity{};
    }
    return RatPoint{(l1.v * l2.w - l2.v * l1.w) / det, (l2.u * l1.w - l1.u * l2.w) / det};
}

RatPoint foot_of_perpendicular(const RatPoint& p, const RatLine& l) {
    const Rat t = l.eval(p) / (l.u * l.u + l.v * l.v);
    return {p.x - t * l.u, p.y - t * l.v};
}

static Rat dist_sq(const RatPoint& a, const RatPoint& b) {
    const Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

RatCircle circle_through(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    if (orientation(p, q, r) == Orient::Collinear)
        raise(ErrorKind::CollinearPoints, "rational circle through collinear points");
    const Rat dqx = q.x - p.x, dqy = q.y - p.y;
    const Rat drx = r.x - p.x, dry = r.y - p.y;
    const Rat det = 2 * (dqx * dry - dqy * drx);
    const Rat qq = dqx * dqx + dqy * dqy;
    const Rat rr = drx * drx + dry * dry;
    const RatPoint center{p.x + (qq * dry - rr * dqy) / det, p.y + (rr * dqx - qq * drx) / det};
    return {center, dist_sq(center, p)};
}

Rat power_of_point(const RatPoint& p, const RatCircle& c) {
    return dist_sq(p, c.center) - c.r_sq;
}

Rat median_length_squared(const Rat& adj1_sq, const Rat& adj2_sq, const Rat& opp_sq) {
    const Rat m = (2 * (adj1_sq + adj2_sq) - opp_sq) / 4;
    if (m < 0) raise(ErrorKind::NegativeResult, "rational median formula negative");
    return m;
}

bool concyclic(std::span<const RatPoint> points) {
    if (points.size() < 3)
        raise(ErrorKind::DegenerateInput, "concyclic needs at least 3 points");
    const RatCircle c = circle_through(points[0], points[1], points[2]);
    for (const RatPoint& p : points.subspan(3))
        if (dist_sq(p, c.center) != c.r_sq) return false;
    return true;
}

double to_double(const Rat& r) {
    return r.convert_to<double>();
}

Point to_point(const RatPoint& p) {
    return {to_double(p.x), to_double(p.y)};
}

} // namespace orthocevia::exact
