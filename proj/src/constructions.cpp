#include "orthocevia/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace orthocevia {

namespace {

Point expect_point(const LineIntersection& li, ErrorKind kind, const char* what) {
    if (const Point* p = std::get_if<Point>(&li)) return *p;
    raise(kind, what);
}

Point unit(Point p) {
    return p / norm(p);
}

} // namespace

const char* center_kind_name(CenterKind kind) {
    switch (kind) {
        case CenterKind::Centroid: return "centroid";
        case CenterKind::Incenter: return "incenter";
        case CenterKind::Circumcenter: return "circumcenter";
        case CenterKind::Orthocenter: return "orthocenter";
        case CenterKind::Gergonne: return "gergonne";
        case CenterKind::Nagel: return "nagel";
        case CenterKind::Bevan: return "bevan";
        case CenterKind::Symmedian: return "symmedian";
    }
    return "?";
}

std::array<double, 3> barycentric(const Triangle& t, Point p) {
    const double full = signed_area_doubled(t.A(), t.B(), t.C());
    return {signed_area_doubled(p, t.B(), t.C()) / full,
            signed_area_doubled(t.A(), p, t.C()) / full,
            signed_area_doubled(t.A(), t.B(), p) / full};
}

Point from_barycentric(const Triangle& t, const std::array<double, 3>& w,
                       const Tolerance& tol) {
    const double sum = w[0] + w[1] + w[2];
    const double scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
    if (tol.zero(sum, scale))
        raise(ErrorKind::ConjugateAtInfinity, "barycentric weights sum to zero");
    return (w[0] * t.A() + w[1] * t.B() + w[2] * t.C()) / sum;
}

Point triangle_center(const Triangle& t, CenterKind kind, const Tolerance& tol) {
    switch (kind) {
        case CenterKind::Centroid:
            return (t.A() + t.B() + t.C()) / 3.0;
        case CenterKind::Incenter:
            return from_barycentric(t, {t.a(), t.b(), t.c()}, tol);
        case CenterKind::Circumcenter:
            return circumcircle(t, tol).center;
        case CenterKind::Orthocenter:
            return expect_point(
                intersect_lines(perpendicular_through(t.A(), t.side_line(0)),
                                perpendicular_through(t.B(), t.side_line(1)), tol),
                ErrorKind::DegenerateTriangle, "altitudes parallel");
        case CenterKind::Gergonne: {
            const double sa = t.s() - t.a(), sb = t.s() - t.b(), sc = t.s() - t.c();
            return from_barycentric(t, {sb * sc, sc * sa, sa * sb}, tol);
        }
        case CenterKind::Nagel:
            return from_barycentric(t, {t.s() - t.a(), t.s() - t.b(), t.s() - t.c()}, tol);
        case CenterKind::Bevan: {
            // Concurrence of the perpendiculars to the sides at the extouch
            // points; the best-conditioned pair of sides is intersected.
            const CevianFeet feet = extouch_triangle(t);
            std::array<Line, 3> perps;
            for (int i = 0; i < 3; ++i)
                perps[i] = perpendicular_through(feet.foot(i), t.side_line(i));
            int bi = 0, bj = 1;
            double best = -1.0;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const double c = std::abs(cross(perps[i].normal(), perps[j].normal()));
                    if (c > best) { best = c; bi = i; bj = j; }
                }
            return expect_point(intersect_lines(perps[bi], perps[bj], tol),
                                ErrorKind::DegenerateTriangle, "extouch perpendiculars parallel");
        }
        case CenterKind::Symmedian:
            return from_barycentric(t, {t.a() * t.a(), t.b() * t.b(), t.c() * t.c()}, tol);
    }
    raise(ErrorKind::DegenerateInput, "unknown center kind");
}

Circle circumcircle(const Triangle& t, const Tolerance& tol) {
    return circle_through(t.A(), t.B(), t.C(), tol);
}

Circle incircle(const Triangle& t) {
    const Point center = from_barycentric(t, {t.a(), t.b(), t.c()});
    const double r = t.area() / t.s();
    return {center, r * r};
}

Circle excircle(const Triangle& t, int opposite) {
    std::array<double, 3> w = {t.a(), t.b(), t.c()};
    w[opposite] = -w[opposite];
    const Point center = from_barycentric(t, w);
    const double r = t.area() / (t.s() - t.side_length(opposite));
    return {center, r * r};
}

CevianFeet pedal_triangle(const Triangle& t, Point p, const Tolerance& tol) {
    const Circle circ = circumcircle(t, tol);
    const double pw = power_of_point(p, circ);
    if (tol.zero(pw, std::max(circ.r_sq, dist_sq(p, circ.center))))
        raise(ErrorKind::PedalDegenerate, "point on circumcircle; pedal is a Simson line");
    return {foot_of_perpendicular(p, t.side_line(0)),
            foot_of_perpendicular(p, t.side_line(1)),
            foot_of_perpendicular(p, t.side_line(2))};
}

CevianFeet contact_triangle(const Triangle& t) {
    const Point inc = from_barycentric(t, {t.a(), t.b(), t.c()});
    return {foot_of_perpendicular(inc, t.side_line(0)),
            foot_of_perpendicular(inc, t.side_line(1)),
            foot_of_perpendicular(inc, t.side_line(2))};
}

CevianFeet extouch_triangle(const Triangle& t) {
    CevianFeet feet;
    for (int i = 0; i < 3; ++i)
        feet.foot(i) = foot_of_perpendicular(excircle(t, i).center, t.side_line(i));
    return feet;
}

CevianFeet orthic_triangle(const Triangle& t, const Tolerance& tol) {
    return pedal_triangle(t, triangle_center(t, CenterKind::Orthocenter, tol), tol);
}

CevianFeet cevian_feet_through(const Triangle& t, Point p, const Tolerance& tol) {
    const auto lam = barycentric(t, p);
    const double linf = std::max({std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2])});
    CevianFeet feet;
    for (int i = 0; i < 3; ++i) {
        std::array<double, 3> w = lam;
        w[i] = 0.0;
        const double sum = w[0] + w[1] + w[2];
        if (tol.zero(sum, linf))
            raise(ErrorKind::CevianAtInfinity, "cevian parallel to the opposite side");
        feet.foot(i) = (w[0] * t.A() + w[1] * t.B() + w[2] * t.C()) / sum;
    }
    return feet;
}

namespace {

std::array<double, 3> checked_barycentric(const Triangle& t, Point p, const Tolerance& tol) {
    const auto lam = barycentric(t, p);
    const double linf = std::max({std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2])});
    for (double li : lam)
        if (tol.zero(li, linf))
            raise(ErrorKind::OnSideLine, "conjugate undefined on a side line");
    return lam;
}

} // namespace

Point isogonal_conjugate(const Triangle& t, Point p, const Tolerance& tol) {
    const auto lam = checked_barycentric(t, p, tol);
    return from_barycentric(t,
                            {t.a() * t.a() / lam[0], t.b() * t.b() / lam[1],
                             t.c() * t.c() / lam[2]},
                            tol);
}

Point isotomic_conjugate(const Triangle& t, Point p, const Tolerance& tol) {
    const auto lam = checked_barycentric(t, p, tol);
    return from_barycentric(t, {1.0 / lam[0], 1.0 / lam[1], 1.0 / lam[2]}, tol);
}

Point isogonal_cevian_foot(const Triangle& t, int vertex, Point foot,
                           const Tolerance& tol) {
    const Line side = t.side_line(vertex);
    const double off = side.eval(foot);
    if (!tol.zero(off * off, t.scale_sq()))
        raise(ErrorKind::FootOffCarrier, "foot not on the opposite side line");
    const Point v = t.vertex(vertex);
    const auto [p, q] = t.side_endpoints(vertex);
    const Point bisector = unit(unit(p - v) + unit(q - v));
    const Point d = foot - v;
    const Point reflected = 2.0 * dot(d, bisector) * bisector - d;
    const Line cevian = line_through(v, v + reflected, tol);
    const LineIntersection li = intersect_lines(cevian, side, tol);
    if (std::holds_alternative<AtInfinity>(li))
        raise(ErrorKind::ReflectedCevianParallel, "reflected cevian parallel to the side");
    return std::get<Point>(li);
}

Point isotomic_point_on_side(const Triangle& t, int side, Point p, const Tolerance& tol) {
    const Line carrier = t.side_line(side);
    const double off = carrier.eval(p);
    if (!tol.zero(off * off, t.scale_sq()))
        raise(ErrorKind::FootOffCarrier, "point not on the side line");
    const auto [e1, e2] = t.side_endpoints(side);
    return midpoint(e1, e2) + (midpoint(e1, e2) - p);
}

} // namespace orthocevia
