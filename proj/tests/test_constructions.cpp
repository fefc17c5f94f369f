#include <doctest.h>

#include "orthocevia/constructions.hpp"
#include "orthocevia/verify.hpp"

using namespace orthocevia;

namespace {

const Triangle t345({0, 0}, {4, 0}, {0, 3});
const Triangle tacu({0, 0}, {4, 0}, {1, 3});

bool near(Point p, Point q, double eps = 1e-12) { return dist(p, q) <= eps; }

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const GeomError& e) {
        return e.kind() == kind;
    }
    return false;
}

Triangle random_triangle(Rng& rng) {
    SuiteConfig cfg;
    return sample_triangle(rng, cfg);
}

} // namespace

TEST_CASE("triangle caches side data") {
    CHECK(t345.a() == doctest::Approx(5.0));
    CHECK(t345.b() == doctest::Approx(3.0));
    CHECK(t345.c() == doctest::Approx(4.0));
    CHECK(t345.s() == doctest::Approx(6.0));
    CHECK(t345.area() == doctest::Approx(6.0));

    CHECK(tacu.a() == doctest::Approx(std::sqrt(18.0)));
    CHECK(tacu.b() == doctest::Approx(std::sqrt(10.0)));
    CHECK(tacu.c() == doctest::Approx(4.0));

    CHECK(throws_kind(ErrorKind::DegenerateTriangle,
                      [] { Triangle({0, 0}, {1, 0}, {2, 0}); }));
}

TEST_CASE("TACU is acute") {
    for (int i = 0; i < 3; ++i) {
        const Point v = tacu.vertex(i);
        const auto [p, q] = tacu.side_endpoints(i);
        CHECK(dot(p - v, q - v) > 0);
    }
}

TEST_CASE("classical centers on fixtures") {
    CHECK(near(triangle_center(t345, CenterKind::Incenter), {1, 1}));
    CHECK(near(triangle_center(t345, CenterKind::Circumcenter), {2, 1.5}));
    CHECK(near(triangle_center(t345, CenterKind::Nagel), {2, 1}));
    CHECK(near(triangle_center(t345, CenterKind::Gergonne), {8.0 / 11.0, 9.0 / 11.0}));
    CHECK(near(triangle_center(t345, CenterKind::Bevan), {3, 2}));
    CHECK(near(triangle_center(t345, CenterKind::Centroid), {4.0 / 3.0, 1}));
    CHECK(near(triangle_center(t345, CenterKind::Symmedian), {0.72, 0.96}));
    CHECK(near(triangle_center(tacu, CenterKind::Orthocenter), {1, 1}));
    CHECK(near(triangle_center(tacu, CenterKind::Circumcenter), {2, 1}));
}

TEST_CASE("equilateral centers coincide") {
    const Triangle eq({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
    const Point centroid = triangle_center(eq, CenterKind::Centroid);
    for (CenterKind kind : {CenterKind::Incenter, CenterKind::Circumcenter,
                            CenterKind::Orthocenter, CenterKind::Gergonne,
                            CenterKind::Nagel, CenterKind::Symmedian})
        CHECK(near(triangle_center(eq, kind), centroid, 1e-9));
}

TEST_CASE("incircle and excircle") {
    const Circle inc = incircle(t345);
    CHECK(near(inc.center, {1, 1}));
    CHECK(inc.r_sq == doctest::Approx(1.0));

    const Triangle eq({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
    const Circle einc = incircle(eq);
    CHECK(near(einc.center, {1, 1.0 / std::sqrt(3.0)}, 1e-9));
    CHECK(einc.radius() == doctest::Approx(1.0 / std::sqrt(3.0)));

    const Circle exc = excircle(t345, 0);
    CHECK(near(exc.center, {6, 6}));
    CHECK(exc.radius() == doctest::Approx(6.0));
    CHECK(near(foot_of_perpendicular(exc.center, t345.side_line(0)), {2.4, 1.2}));

    // Tangency: distance from each center to every side line equals the radius.
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(std::abs(t345.side_line(i).eval(inc.center)) - inc.radius())
              < 1e-12);
        CHECK(std::abs(std::abs(t345.side_line(i).eval(exc.center)) - exc.radius())
              < 1e-12);
    }
}

TEST_CASE("tangency property on random triangles") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Triangle t = random_triangle(rng);
        const Circle inc = incircle(t);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(std::abs(t.side_line(i).eval(inc.center)) - inc.radius())
                  <= 1e-9 * inc.radius());
            const Circle exc = excircle(t, i);
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(std::abs(t.side_line(j).eval(exc.center)) - exc.radius())
                      <= 1e-9 * exc.radius());
        }
    }
}

TEST_CASE("pedal triangle") {
    // Pedal of the incenter is the contact triangle.
    const CevianFeet pedal_i = pedal_triangle(t345, {1, 1});
    CHECK(near(pedal_i.on_bc, {1.6, 1.8}));
    CHECK(near(pedal_i.on_ca, {0, 1}));
    CHECK(near(pedal_i.on_ab, {1, 0}));

    // Circumcenter projects onto the midpoints.
    const CevianFeet pedal_o = pedal_triangle(tacu, {2, 1});
    CHECK(near(pedal_o.on_bc, {2.5, 1.5}));
    CHECK(near(pedal_o.on_ca, {0.5, 1.5}));
    CHECK(near(pedal_o.on_ab, {2, 0}));

    // A right-angle vertex lies on the circumcircle.
    CHECK(throws_kind(ErrorKind::PedalDegenerate,
                      [] { pedal_triangle(t345, {0, 0}); }));
}

TEST_CASE("contact triangle") {
    const CevianFeet contact = contact_triangle(t345);
    CHECK(near(contact.on_bc, {1.6, 1.8}));
    CHECK(near(contact.on_ca, {0, 1}));
    CHECK(near(contact.on_ab, {1, 0}));
    // Touch point on BC sits s-b from B along BC.
    CHECK(dist(contact.on_bc, t345.B()) == doctest::Approx(3.0));

    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const Triangle t = random_triangle(rng);
        const CevianFeet c = contact_triangle(t);
        const CevianFeet p = pedal_triangle(t, triangle_center(t, CenterKind::Incenter));
        for (int i = 0; i < 3; ++i)
            CHECK(dist(c.foot(i), p.foot(i)) <= 1e-9 * std::sqrt(t.scale_sq()));
    }
}

TEST_CASE("extouch triangle") {
    const CevianFeet extouch = extouch_triangle(t345);
    CHECK(near(extouch.on_bc, {2.4, 1.2}));
    CHECK(near(extouch.on_ca, {0, 2}));
    CHECK(near(extouch.on_ab, {3, 0}));

    // Extouch points are the isotomics of the contact points (per side).
    const CevianFeet contact = contact_triangle(t345);
    for (int i = 0; i < 3; ++i)
        CHECK(near(isotomic_point_on_side(t345, i, contact.foot(i)), extouch.foot(i), 1e-12));
}

TEST_CASE("orthic triangle") {
    const CevianFeet orthic = orthic_triangle(tacu);
    CHECK(near(orthic.on_bc, {2, 2}));
    CHECK(near(orthic.on_ca, {0.4, 1.2}));
    CHECK(near(orthic.on_ab, {1, 0}));
    CHECK(near(orthic.on_bc, foot_of_perpendicular({0, 0}, tacu.side_line(0))));

    CHECK(throws_kind(ErrorKind::PedalDegenerate, [] { orthic_triangle(t345); }));

    const Triangle eq({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
    const CevianFeet mid = orthic_triangle(eq);
    CHECK(near(mid.on_bc, midpoint(eq.B(), eq.C()), 1e-9));
    CHECK(near(mid.on_ca, midpoint(eq.C(), eq.A()), 1e-9));
    CHECK(near(mid.on_ab, midpoint(eq.A(), eq.B()), 1e-9));
}

TEST_CASE("isogonal conjugate fixtures") {
    const Triangle eq({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
    const Point center = triangle_center(eq, CenterKind::Centroid);
    CHECK(near(isogonal_conjugate(eq, center), center, 1e-9));

    CHECK(near(isogonal_conjugate(tacu, {2, 1}), {1, 1}, 1e-12));          // O -> H
    CHECK(near(isogonal_conjugate(t345, {4.0 / 3.0, 1}), {0.72, 0.96}, 1e-12)); // G -> K
    CHECK(near(isogonal_conjugate(t345, {1, 1}), {1, 1}, 1e-12));          // I -> I

    CHECK(throws_kind(ErrorKind::OnSideLine,
                      [] { isogonal_conjugate(t345, {2, 0}); }));
}

TEST_CASE("isotomic conjugate fixtures") {
    const Point centroid = triangle_center(t345, CenterKind::Centroid);
    CHECK(near(isotomic_conjugate(t345, centroid), centroid, 1e-12));
    CHECK(near(isotomic_conjugate(t345, {8.0 / 11.0, 9.0 / 11.0}), {2, 1}, 1e-12));
    CHECK(near(isotomic_conjugate(t345, {2, 1}), {8.0 / 11.0, 9.0 / 11.0}, 1e-12));
}

TEST_CASE("conjugation involutions on random interior points") {
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const Triangle t = random_triangle(rng);
        const Point p = sample_interior_point(rng, t, 0.05);
        const double scale = std::sqrt(t.scale_sq());
        CHECK(dist(isogonal_conjugate(t, isogonal_conjugate(t, p)), p) <= 1e-9 * scale);
        CHECK(dist(isotomic_conjugate(t, isotomic_conjugate(t, p)), p) <= 1e-9 * scale);
    }
}

TEST_CASE("isogonal cevian foot") {
    // The isogonal of the A-median in the right triangle is the altitude foot.
    const Point foot = isogonal_cevian_foot(t345, 0, {2, 1.5});
    CHECK(near(foot, {36.0 / 25.0, 48.0 / 25.0}, 1e-12));

    // The bisector foot is fixed.
    const Point bis_foot = cevian_feet_through(t345, {1, 1}).on_bc;
    CHECK(near(isogonal_cevian_foot(t345, 0, bis_foot), bis_foot, 1e-9));

    // Involution.
    Rng rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const Triangle t = random_triangle(rng);
        const int v = rng.uniform_int(3);
        const auto [p, q] = t.side_endpoints(v);
        const Point f = p + rng.uniform(0.05, 0.95) * (q - p);
        const Point g = isogonal_cevian_foot(t, v, f);
        CHECK(dist(isogonal_cevian_foot(t, v, g), f) <= 1e-9 * std::sqrt(t.scale_sq()));
    }

    CHECK(throws_kind(ErrorKind::FootOffCarrier,
                      [] { isogonal_cevian_foot(t345, 0, {0.5, 0.5}); }));
}

TEST_CASE("isotomic point on side") {
    CHECK(near(isotomic_point_on_side(t345, 0, {1.6, 1.8}), {2.4, 1.2}, 1e-12));
    const Point mid = midpoint(t345.B(), t345.C());
    CHECK(near(isotomic_point_on_side(t345, 0, mid), mid));
    const Point p = t345.B() + 0.3 * (t345.C() - t345.B());
    CHECK(near(isotomic_point_on_side(t345, 0, isotomic_point_on_side(t345, 0, p)), p));
    CHECK(throws_kind(ErrorKind::FootOffCarrier,
                      [] { isotomic_point_on_side(t345, 0, {0, 0}); }));
}

TEST_CASE("cevian consistency of the isogonal conjugate") {
    // The cevian foot through the conjugate equals the isogonal image of the
    // cevian foot through the original point.
    Rng rng(25);
    for (int trial = 0; trial < 500; ++trial) {
        const Triangle t = random_triangle(rng);
        const Point p = sample_interior_point(rng, t, 0.05);
        const Point conj = isogonal_conjugate(t, p);
        const CevianFeet feet_p = cevian_feet_through(t, p);
        const CevianFeet feet_conj = cevian_feet_through(t, conj);
        for (int i = 0; i < 3; ++i)
            CHECK(dist(feet_conj.foot(i), isogonal_cevian_foot(t, i, feet_p.foot(i)))
                  <= 1e-9 * std::sqrt(t.scale_sq()));
    }
}

TEST_CASE("bevan closed form on random triangles") {
    Rng rng(26);
    for (int trial = 0; trial < 1000; ++trial) {
        const Triangle t = random_triangle(rng);
        const Point bevan = triangle_center(t, CenterKind::Bevan);
        const Point closed = 2.0 * triangle_center(t, CenterKind::Circumcenter)
                           - triangle_center(t, CenterKind::Incenter);
        CHECK(dist(bevan, closed) <= 1e-9 * std::sqrt(t.scale_sq()));
    }
}

TEST_CASE("barycentric round trip") {
    Rng rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        const Triangle t = random_triangle(rng);
        const Point p = sample_interior_point(rng, t, 0.01);
        const auto lam = barycentric(t, p);
        CHECK(lam[0] + lam[1] + lam[2] == doctest::Approx(1.0));
        CHECK(dist(from_barycentric(t, lam), p) <= 1e-12 * std::sqrt(t.scale_sq()));
    }
}
