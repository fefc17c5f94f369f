#include "orthocevia/geom.hpp"

#include <algorithm>

namespace orthocevia {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::CoincidentLines: return "CoincidentLines";
        case ErrorKind::CollinearPoints: return "CollinearPoints";
        case ErrorKind::NegativeResult: return "NegativeResult";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::PedalDegenerate: return "PedalDegenerate";
        case ErrorKind::OnSideLine: return "OnSideLine";
        case ErrorKind::FootOffCarrier: return "FootOffCarrier";
        case ErrorKind::ReflectedCevianParallel: return "ReflectedCevianParallel";
        case ErrorKind::FootAtVertex: return "FootAtVertex";
        case ErrorKind::CoincidentVertexPair: return "CoincidentVertexPair";
        case ErrorKind::NotIsogonalPair: return "NotIsogonalPair";
        case ErrorKind::NotConcurrentInput: return "NotConcurrentInput";
        case ErrorKind::ConjugateAtInfinity: return "ConjugateAtInfinity";
        case ErrorKind::CevianAtInfinity: return "CevianAtInfinity";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "GeomError";
}

double signed_area_doubled(Point p, Point q, Point r) {
    return cross(q - p, r - p);
}

Orient orientation(Point p, Point q, Point r, const Tolerance& tol) {
    const double det = signed_area_doubled(p, q, r);
    const double scale = std::max(dist_sq(p, q), dist_sq(p, r));
    if (tol.zero(det, scale)) return Orient::Collinear;
    return det > 0 ? Orient::CCW : Orient::CW;
}

Line make_line(double u, double v, double w, const Tolerance& tol) {
    const double n = std::hypot(u, v);
    if (tol.zero(n * n, std::max(1.0, w * w)))
        raise(ErrorKind::DegenerateInput, "line coefficients u, v both vanish");
    double s = 1.0 / n;
    if (u < 0 || (u == 0 && v < 0)) s = -s;
    return {u * s, v * s, w * s};
}

Line line_through(Point p, Point q, const Tolerance& tol) {
    const double scale = std::max(norm_sq(p), norm_sq(q));
    if (tol.zero(dist_sq(p, q), scale))
        raise(ErrorKind::DegenerateInput, "line through coincident points");
    const Point d = q - p;
    return make_line(-d.y, d.x, d.y * p.x - d.x * p.y, tol);
}

Line perpendicular_through(Point p, const Line& l) {
    // Normal of the result is the direction of l; passes through p.
    return make_line(-l.v, l.u, l.v * p.x - l.u * p.y);
}

LineIntersection intersect_lines(const Line& l1, const Line& l2, const Tolerance& tol) {
    // Both lines are unit-normalized, so the determinant is the sine of the
    // angle between them: a dimensionless parallelism measure.
    const double det = l1.u * l2.v - l1.v * l2.u;
    if (tol.zero_rel(det)) {
        // Parallel. Coincident iff the (sign-aligned) offsets agree.
        const double sign = (l1.u * l2.u + l1.v * l2.v) >= 0 ? 1.0 : -1.0;
        const double dw = l1.w - sign * l2.w;
        if (tol.zero(dw, std::max(std::abs(l1.w), std::abs(l2.w))))
            raise(ErrorKind::CoincidentLines, "lines coincide");
        return AtInfinity{};
    }
    return Point{(l1.v * l2.w - l2.v * l1.w) / det, (l2.u * l1.w - l1.u * l2.w) / det};
}

Point foot_of_perpendicular(Point p, const Line& l) {
    const double d = l.eval(p);
    return {p.x - d * l.u, p.y - d * l.v};
}

Circle circle_through(Point p, Point q, Point r, const Tolerance& tol) {
    if (orientation(p, q, r, tol) == Orient::Collinear)
        raise(ErrorKind::CollinearPoints, "circle through collinear points");
    // Solve the two perpendicular-bisector equations; shifting to p keeps the
    // arithmetic small.
    const Point dq = q - p, dr = r - p;
    const double det = 2.0 * cross(dq, dr);
    const double qq = norm_sq(dq), rr = norm_sq(dr);
    const Point rel{(qq * dr.y - rr * dq.y) / det, (rr * dq.x - qq * dr.x) / det};
    return {p + rel, norm_sq(rel)};
}

std::vector<Point> line_circle_intersections(const Line& l, const Circle& c,
                                             const Tolerance& tol) {
    // Signed distance from center; chord exists iff d^2 <= r^2.
    const double d = l.eval(c.center);
    const Point foot{c.center.x - d * l.u, c.center.y - d * l.v};
    const double disc = c.r_sq - d * d;
    const double scale = std::max(c.r_sq, d * d);
    if (tol.zero(disc, scale)) return {foot};
    if (disc < 0) return {};
    const double h = std::sqrt(disc);
    const Point dir = l.direction();
    return {foot - h * dir, foot + h * dir};
}

double power_of_point(Point p, const Circle& c) {
    return dist_sq(p, c.center) - c.r_sq;
}

double median_length_squared(double adj1_sq, double adj2_sq, double opp_sq,
                             const Tolerance& tol) {
    const double m = (2.0 * (adj1_sq + adj2_sq) - opp_sq) / 4.0;
    if (m < 0) {
        const double scale = std::max({adj1_sq, adj2_sq, opp_sq});
        if (!tol.zero(m, scale))
            raise(ErrorKind::NegativeResult, "median formula negative; no such triangle");
        return 0.0;
    }
    return m;
}

bool concyclic(std::span<const Point> points, const Tolerance& tol) {
    if (points.size() < 3)
        raise(ErrorKind::DegenerateInput, "concyclic needs at least 3 points");
    const Circle c = circle_through(points[0], points[1], points[2], tol);
    for (const Point& p : points.subspan(3)) {
        const double dd = dist_sq(p, c.center);
        if (!tol.zero(dd - c.r_sq, std::max(dd, c.r_sq))) return false;
    }
    return true;
}

} // namespace orthocevia
