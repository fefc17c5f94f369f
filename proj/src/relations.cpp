#include "orthocevia/relations.hpp"

#include <algorithm>
#include <cmath>

namespace orthocevia {

namespace {

double config_scale_sq(std::span<const Point> pts) {
    double m = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            m = std::max(m, dist_sq(pts[i], pts[j]));
    return m;
}

// Division parameter of f along p->q: f = p + t*(q - p).
double side_param(Point p, Point q, Point f) {
    const Point d = q - p;
    return dot(f - p, d) / norm_sq(d);
}

// Signed ratio in which f divides p->q; positive for interior points.
double division_ratio(const Triangle& t, int side, Point f, const Tolerance& tol) {
    const auto [p, q] = t.side_endpoints(side);
    const double side_sq = dist_sq(p, q);
    if (tol.zero(dist_sq(f, p), side_sq) || tol.zero(dist_sq(f, q), side_sq))
        raise(ErrorKind::FootAtVertex, "cevian foot at a vertex");
    const double u = side_param(p, q, f);
    return u / (1.0 - u);
}

} // namespace

PerspectivityResult concurrency(const Line& l1, const Line& l2, const Line& l3,
                                double scale_sq, const Tolerance& tol) {
    const double det = l1.u * (l2.v * l3.w - l3.v * l2.w)
                     - l1.v * (l2.u * l3.w - l3.u * l2.w)
                     + l1.w * (l2.u * l3.v - l3.u * l2.v);
    PerspectivityResult res;
    res.residual = std::abs(det) / std::sqrt(std::max(scale_sq, 1e-300));
    res.concurrent = tol.zero_rel(res.residual);
    if (!res.concurrent) return res;

    const std::array<const Line*, 3> ls = {&l1, &l2, &l3};
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double c = std::abs(cross(ls[i]->normal(), ls[j]->normal()));
            if (c > best) { best = c; bi = i; bj = j; }
        }
    if (tol.zero_rel(best)) {
        res.center = AtInfinity{};
        return res;
    }
    res.center = intersect_lines(*ls[bi], *ls[bj], tol);
    return res;
}

double ceva_product(const Triangle& t, const CevianFeet& feet, const Tolerance& tol) {
    double product = 1.0;
    for (int i = 0; i < 3; ++i)
        product *= division_ratio(t, i, feet.foot(i), tol);
    return product;
}

std::pair<double, double> steiner_check(const Triangle& t, int vertex, Point foot1,
                                        Point foot2, const Tolerance& tol) {
    const auto [p, q] = t.side_endpoints(vertex);
    const double side_sq = dist_sq(p, q);
    for (Point f : {foot1, foot2})
        if (tol.zero(dist_sq(f, p), side_sq) || tol.zero(dist_sq(f, q), side_sq))
            raise(ErrorKind::FootAtVertex, "Steiner foot at a vertex");
    const Point v = t.vertex(vertex);
    const double lhs = (dist(foot1, p) / dist(foot1, q)) * (dist(foot2, p) / dist(foot2, q));
    const double ab_over_ac = dist(v, p) / dist(v, q);
    return {lhs, ab_over_ac * ab_over_ac};
}

PerspectivityResult homology(const Triangle& t1, const std::array<Point, 3>& other,
                             const Tolerance& tol) {
    const std::array<Point, 6> all = {t1.A(), t1.B(), t1.C(), other[0], other[1], other[2]};
    const double scale_sq = config_scale_sq(all);
    std::array<Line, 3> lines;
    for (int i = 0; i < 3; ++i) {
        if (tol.zero(dist_sq(t1.vertex(i), other[i]), scale_sq))
            raise(ErrorKind::CoincidentVertexPair, "corresponding vertices coincide");
        lines[i] = line_through(t1.vertex(i), other[i], tol);
    }
    return concurrency(lines[0], lines[1], lines[2], scale_sq, tol);
}

PerspectivityResult homology(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    return homology(t1, std::array<Point, 3>{t2.A(), t2.B(), t2.C()}, tol);
}

PerspectivityResult homology(const Triangle& t1, const CevianFeet& feet, const Tolerance& tol) {
    return homology(t1, feet.points(), tol);
}

double carnot_sum(const Triangle& t, const CevianFeet& feet) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto [p, q] = t.side_endpoints(i);
        sum += dist_sq(feet.foot(i), p) - dist_sq(feet.foot(i), q);
    }
    return sum;
}

namespace {

// Perpendiculars from `sources` onto the corresponding side lines of `target`.
OrthologyResult one_orthology(const std::array<Point, 3>& sources, const Triangle& target,
                              double scale_sq, const Tolerance& tol) {
    OrthologyResult res;
    for (int i = 0; i < 3; ++i) {
        const auto [p, q] = target.side_endpoints(i);
        res.carnot_sum += dist_sq(sources[i], p) - dist_sq(sources[i], q);
    }
    res.concurrent = tol.zero(res.carnot_sum, scale_sq);
    if (res.concurrent) {
        std::array<Line, 3> perp;
        for (int i = 0; i < 3; ++i)
            perp[i] = perpendicular_through(sources[i], target.side_line(i));
        int bi = 0, bj = 1;
        double best = -1.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const double c = std::abs(cross(perp[i].normal(), perp[j].normal()));
                if (c > best) { best = c; bi = i; bj = j; }
            }
        if (!tol.zero_rel(best)) {
            const LineIntersection li = intersect_lines(perp[bi], perp[bj], tol);
            if (const Point* pt = std::get_if<Point>(&li)) res.center = *pt;
        }
    }
    return res;
}

} // namespace

OrthologyPair orthology(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    const std::array<Point, 6> all = {t1.A(), t1.B(), t1.C(), t2.A(), t2.B(), t2.C()};
    const double scale_sq = config_scale_sq(all);
    return {one_orthology({t1.A(), t1.B(), t1.C()}, t2, scale_sq, tol),
            one_orthology({t2.A(), t2.B(), t2.C()}, t1, scale_sq, tol)};
}

bool is_bilogical(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    const OrthologyPair pair = orthology(t1, t2, tol);
    if (!pair.forward.concurrent || !pair.backward.concurrent) return false;
    if (!pair.forward.center || !pair.backward.center) return false;
    const std::array<Point, 6> all = {t1.A(), t1.B(), t1.C(), t2.A(), t2.B(), t2.C()};
    return tol.zero(dist_sq(*pair.forward.center, *pair.backward.center),
                    config_scale_sq(all));
}

bool is_orthohomological(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    return orthology(t1, t2, tol).forward.concurrent && homology(t1, t2, tol).concurrent;
}

SixPointResult six_point_spread(const Triangle& t, Point p1, Point p2, const Tolerance& tol) {
    const CevianFeet f1 = pedal_triangle(t, p1, tol);
    const CevianFeet f2 = pedal_triangle(t, p2, tol);
    SixPointResult res;
    res.center = midpoint(p1, p2);
    for (int i = 0; i < 3; ++i) {
        res.radii[2 * i] = dist(res.center, f1.foot(i));
        res.radii[2 * i + 1] = dist(res.center, f2.foot(i));
    }
    const auto [mn, mx] = std::minmax_element(res.radii.begin(), res.radii.end());
    double mean = 0.0;
    for (double r : res.radii) mean += r;
    mean /= 6.0;
    res.max_deviation = mean > 0 ? (*mx - *mn) / mean : 0.0;
    return res;
}

SixPointResult six_point_circle(const Triangle& t, Point p1, Point p2, const Tolerance& tol) {
    const Point conj = isogonal_conjugate(t, p1, tol);
    const double scale = std::max(t.scale_sq(), dist_sq(p1, conj));
    if (!tol.zero(dist_sq(p2, conj), scale))
        raise(ErrorKind::NotIsogonalPair, "P2 is not the isogonal conjugate of P1");
    return six_point_spread(t, p1, p2, tol);
}

double six_point_radius_formula(double x1, double x2, double alpha, double a, double d,
                                const Tolerance& tol) {
    const double r_sq =
        (2.0 * (x1 * x1 + x2 * x2 - 2.0 * x1 * x2 * std::cos(alpha) * std::cos(a - alpha))
         - d * d) / 4.0;
    if (r_sq < 0) {
        const double scale = std::max({x1 * x1, x2 * x2, d * d});
        if (!tol.zero(r_sq, scale))
            raise(ErrorKind::NegativeResult, "six-point radius formula negative");
        return 0.0;
    }
    return r_sq;
}

namespace {

Point best_pair_intersection(const std::array<Line, 3>& ls, const Tolerance& tol) {
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double c = std::abs(cross(ls[i].normal(), ls[j].normal()));
            if (c > best) { best = c; bi = i; bj = j; }
        }
    const LineIntersection li = intersect_lines(ls[bi], ls[bj], tol);
    if (const Point* p = std::get_if<Point>(&li)) return *p;
    raise(ErrorKind::CevianAtInfinity, "cevian concurrence point at infinity");
}

} // namespace

TerquemResult terquem(const Triangle& t, const CevianFeet& feet, const Tolerance& tol) {
    const double cp = ceva_product(t, feet, tol);
    if (!tol.zero_rel(cp - 1.0))
        raise(ErrorKind::NotConcurrentInput, "input cevians do not concur");

    TerquemResult res;
    res.circle = circle_through(feet.on_bc, feet.on_ca, feet.on_ab, tol);

    for (int i = 0; i < 3; ++i) {
        const std::vector<Point> hits = line_circle_intersections(t.side_line(i), res.circle, tol);
        if (hits.empty())
            raise(ErrorKind::DegenerateInput, "feet circle lost contact with a side");
        if (hits.size() == 1) {
            res.second_feet.foot(i) = hits[0];
            res.tangent_side[i] = true;
            continue;
        }
        const Point far = dist_sq(hits[0], feet.foot(i)) > dist_sq(hits[1], feet.foot(i))
                              ? hits[0] : hits[1];
        if (tol.zero(dist_sq(far, feet.foot(i)), res.circle.r_sq)) {
            res.second_feet.foot(i) = feet.foot(i);
            res.tangent_side[i] = true;
        } else {
            res.second_feet.foot(i) = far;
        }
    }

    std::array<Line, 3> first_cevians, second_cevians;
    for (int i = 0; i < 3; ++i) {
        first_cevians[i] = line_through(t.vertex(i), feet.foot(i), tol);
        second_cevians[i] = line_through(t.vertex(i), res.second_feet.foot(i), tol);
    }
    res.F1 = best_pair_intersection(first_cevians, tol);
    res.F2 = best_pair_intersection(second_cevians, tol);
    return res;
}

PedalHomologyReport orthohomological_pedal_check(const Triangle& t, Point p1,
                                                 const Tolerance& tol) {
    PedalHomologyReport report;
    report.conjugate = isogonal_conjugate(t, p1, tol);

    const CevianFeet pedal1 = pedal_triangle(t, p1, tol);
    const PerspectivityResult h1 = homology(t, pedal1, tol);
    report.homological_1 = h1.concurrent;
    if (const Point* f1 = h1.center_point()) report.F1 = *f1;
    if (!report.homological_1) return report;

    const CevianFeet pedal2 = pedal_triangle(t, report.conjugate, tol);
    const PerspectivityResult h2 = homology(t, pedal2, tol);
    report.homological_2 = h2.concurrent;
    if (const Point* f2 = h2.center_point()) report.F2 = *f2;

    // The proof's key step: the circle circumscribing the first pedal triangle
    // is the circle of the six points.
    const SixPointResult six = six_point_circle(t, p1, report.conjugate, tol);
    const Circle feet_circle = circle_through(pedal1.on_bc, pedal1.on_ca, pedal1.on_ab, tol);
    double mean_r_sq = 0.0;
    for (double r : six.radii) mean_r_sq += r * r;
    mean_r_sq /= 6.0;
    const double scale = std::max(t.scale_sq(), feet_circle.r_sq);
    const bool same_circle = tol.zero(dist_sq(feet_circle.center, six.center), scale)
                          && tol.zero(feet_circle.r_sq - mean_r_sq, scale);
    const std::array<Point, 6> all_feet = {pedal1.on_bc, pedal1.on_ca, pedal1.on_ab,
                                           pedal2.on_bc, pedal2.on_ca, pedal2.on_ab};
    report.six_feet_concyclic = same_circle && concyclic(all_feet, tol);
    return report;
}

} // namespace orthocevia
