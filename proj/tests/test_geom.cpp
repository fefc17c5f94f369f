#include <doctest.h>

#include "orthocevia/geom.hpp"
#include "orthocevia/verify.hpp"

using namespace orthocevia;

namespace {

bool near(Point p, Point q, double eps = 1e-12) { return dist(p, q) <= eps; }

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const GeomError& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_CASE("orientation basic cases") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orient::CCW);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orient::Collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orient::CW);
}

TEST_CASE("orientation is scale-relative") {
    // Same shape at wildly different scales classifies identically (above the
    // absolute floor).
    for (double k : {1e-3, 1.0, 1e6}) {
        CHECK(orientation({0, 0}, {k, 0}, {k, k * 1e-12}) == Orient::Collinear);
        CHECK(orientation({0, 0}, {k, 0}, {k, k * 1e-3}) == Orient::CCW);
    }
}

TEST_CASE("line_through produces canonical normalized lines") {
    const Line x_axis = line_through({0, 0}, {1, 0});
    CHECK(x_axis.u == doctest::Approx(0.0));
    CHECK(x_axis.v == doctest::Approx(1.0));
    CHECK(x_axis.w == doctest::Approx(0.0));

    const Line y_axis = line_through({0, 0}, {0, 3});
    CHECK(y_axis.u == doctest::Approx(1.0));
    CHECK(y_axis.v == doctest::Approx(0.0));

    // BC of the 3-4-5 triangle: 3x + 4y - 12 = 0 normalized.
    const Line bc = line_through({4, 0}, {0, 3});
    CHECK(bc.u == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(bc.v == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(bc.w == doctest::Approx(-2.4).epsilon(1e-12));
    CHECK(std::abs(bc.eval({4, 0})) < 1e-12);
    CHECK(std::abs(bc.eval({0, 3})) < 1e-12);

    CHECK(throws_kind(ErrorKind::DegenerateInput,
                      [] { line_through({1, 1}, {1, 1}); }));
}

TEST_CASE("intersect_lines: point, infinity, coincidence") {
    const Line x_axis = line_through({0, 0}, {1, 0});
    const Line y_axis = line_through({0, 0}, {0, 1});
    const Line y_one = line_through({0, 1}, {1, 1});

    const auto hit = intersect_lines(x_axis, y_axis);
    REQUIRE(std::holds_alternative<Point>(hit));
    CHECK(near(std::get<Point>(hit), {0, 0}));

    CHECK(std::holds_alternative<AtInfinity>(intersect_lines(x_axis, y_one)));
    CHECK(throws_kind(ErrorKind::CoincidentLines,
                      [&] { intersect_lines(x_axis, x_axis); }));
}

TEST_CASE("foot_of_perpendicular") {
    const Line bc = line_through({4, 0}, {0, 3});
    CHECK(near(foot_of_perpendicular({0, 0}, bc), {36.0 / 25.0, 48.0 / 25.0}));
    CHECK(near(foot_of_perpendicular({1, 1}, line_through({0, 0}, {1, 0})), {1, 0}));
    // p on l returns p
    CHECK(near(foot_of_perpendicular({4, 0}, bc), {4, 0}));
}

TEST_CASE("foot_of_perpendicular is idempotent") {
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Point p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point q{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point r{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        if (dist_sq(q, r) < 1e-6) continue;
        const Line l = line_through(q, r);
        const Point f = foot_of_perpendicular(p, l);
        CHECK(dist(foot_of_perpendicular(f, l), f) < 1e-9 * (1 + norm(f)));
        // foot lies on l and pf is perpendicular to l's direction
        CHECK(std::abs(l.eval(f)) < 1e-9 * (1 + norm(p)));
        CHECK(std::abs(dot(p - f, l.direction())) < 1e-9 * (1 + norm_sq(p)));
    }
}

TEST_CASE("circle_through fixtures") {
    const Circle c345 = circle_through({0, 0}, {4, 0}, {0, 3});
    CHECK(near(c345.center, {2, 1.5}));
    CHECK(c345.r_sq == doctest::Approx(6.25).epsilon(1e-12));

    const Circle tacu = circle_through({0, 0}, {4, 0}, {1, 3});
    CHECK(near(tacu.center, {2, 1}));
    CHECK(tacu.r_sq == doctest::Approx(5.0).epsilon(1e-12));

    CHECK(throws_kind(ErrorKind::CollinearPoints,
                      [] { circle_through({0, 0}, {1, 0}, {2, 0}); }));
}

TEST_CASE("circle_through is symmetric in its arguments") {
    const std::array<Point, 3> pts = {Point{0.3, -1.2}, Point{2.7, 0.4}, Point{-0.9, 1.8}};
    const Circle base = circle_through(pts[0], pts[1], pts[2]);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
        const Circle c = circle_through(pts[perm[0]], pts[perm[1]], pts[perm[2]]);
        CHECK(dist(c.center, base.center) < 1e-9 * (1 + norm(base.center)));
        CHECK(std::abs(c.r_sq - base.r_sq) < 1e-9 * base.r_sq);
    }
}

TEST_CASE("line_circle_intersections") {
    const Circle unit{{0, 0}, 1.0};
    const auto secant = line_circle_intersections(line_through({-2, 0}, {2, 0}), unit);
    REQUIRE(secant.size() == 2);
    CHECK((near(secant[0], {-1, 0}) || near(secant[0], {1, 0})));
    CHECK((near(secant[1], {-1, 0}) || near(secant[1], {1, 0})));
    CHECK(dist(secant[0], secant[1]) == doctest::Approx(2.0));

    const auto tangent = line_circle_intersections(line_through({-2, 1}, {2, 1}), unit);
    REQUIRE(tangent.size() == 1);
    CHECK(near(tangent[0], {0, 1}));

    CHECK(line_circle_intersections(line_through({-2, 2}, {2, 2}), unit).empty());
}

TEST_CASE("power_of_point") {
    const Circle c{{3, 0}, 1.0};
    CHECK(power_of_point({0, 0}, c) == doctest::Approx(8.0));
    CHECK(power_of_point({2, 0}, c) == doctest::Approx(0.0));
    const Circle circ345 = circle_through({0, 0}, {4, 0}, {0, 3});
    CHECK(std::abs(power_of_point({0, 0}, circ345)) < 1e-12);
}

TEST_CASE("power_of_point secant property") {
    // For random secants through p, the signed product of the distances to
    // the two hits equals |p - center|^2 - r^2.
    Rng rng(7);
    int done = 0;
    for (int i = 0; done < 1000 && i < 20000; ++i) {
        const Circle c{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                       std::pow(rng.uniform(0.2, 1.5), 2)};
        const Point p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double theta = rng.uniform(0, 6.283185307179586);
        const Line l = line_through(p, p + Point{std::cos(theta), std::sin(theta)});
        const auto hits = line_circle_intersections(l, c);
        if (hits.size() != 2) continue;
        const Point u = l.direction();
        const double prod = dot(hits[0] - p, u) * dot(hits[1] - p, u);
        const double scale = std::max(c.r_sq, dist_sq(p, c.center));
        CHECK(std::abs(prod - power_of_point(p, c)) <= 1e-9 * scale);
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("median_length_squared") {
    CHECK(median_length_squared(1, 1, 1) == doctest::Approx(0.75));
    CHECK(median_length_squared(1, 1, 4) == doctest::Approx(0.0));
    // A-median of the 3-4-5 triangle: adjacent sides c^2=16, b^2=9, opposite a^2=25.
    CHECK(median_length_squared(16, 9, 25) == doctest::Approx(6.25));
    CHECK(throws_kind(ErrorKind::NegativeResult,
                      [] { median_length_squared(1, 1, 8); }));
}

TEST_CASE("concyclic") {
    const std::array<Point, 4> square = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
    CHECK(concyclic(square));
    const std::array<Point, 4> moved = {Point{0, 0}, Point{1, 0}, Point{1.01, 1}, Point{0, 1}};
    CHECK(!concyclic(moved));
    const std::array<Point, 3> any3 = {Point{0, 0}, Point{2, 1}, Point{-1, 4}};
    CHECK(concyclic(any3));
    const std::array<Point, 4> collinear_base = {Point{0, 0}, Point{1, 0}, Point{2, 0},
                                                 Point{0, 1}};
    CHECK(throws_kind(ErrorKind::CollinearPoints,
                      [&] { concyclic(collinear_base); }));
}
