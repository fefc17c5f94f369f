#pragma once

#include <optional>
#include <utility>

#include "orthocevia/constructions.hpp"

namespace orthocevia {

// Outcome of a three-line concurrency test. `residual` is the normalized
// 3-line determinant (dimensionless); `center` is present iff concurrent and
// is AtInfinity when the three lines are parallel.
struct PerspectivityResult {
    bool concurrent = false;
    double residual = 0.0;
    std::optional<LineIntersection> center;

    const Point* center_point() const {
        if (!center) return nullptr;
        return std::get_if<Point>(&*center);
    }
    bool center_at_infinity() const {
        return center && std::holds_alternative<AtInfinity>(*center);
    }
};

struct OrthologyResult {
    double carnot_sum = 0.0; // left side of the Carnot relation (length^2)
    bool concurrent = false;
    std::optional<Point> center;
};

struct OrthologyPair {
    OrthologyResult forward;  // perpendiculars from t1's vertices onto t2's sides
    OrthologyResult backward; // perpendiculars from t2's vertices onto t1's sides
};

struct SixPointResult {
    Point center;                 // midpoint of P1P2
    std::array<double, 6> radii;  // distances to A1, A2, B1, B2, C1, C2
    double max_deviation = 0.0;   // (max - min) / mean of the radii
};

struct TerquemResult {
    Circle circle;                // through the first feet
    CevianFeet second_feet;       // the re-cut points A2, B2, C2
    Point F1;                     // concurrence of the input cevians
    Point F2;                     // concurrence of the second cevians
    std::array<bool, 3> tangent_side = {false, false, false};
};

struct PedalHomologyReport {
    Point conjugate;              // P2
    std::optional<Point> F1;
    std::optional<Point> F2;
    bool homological_1 = false;
    bool homological_2 = false;
    bool six_feet_concyclic = false;
};

// Concurrency of three normalized lines; scale_sq is the squared length scale
// of the configuration the lines came from.
PerspectivityResult concurrency(const Line& l1, const Line& l2, const Line& l3,
                                double scale_sq, const Tolerance& tol = {});

// Product of the three signed division ratios; +1 at tolerance iff the
// cevians concur. Throws FootAtVertex when a foot coincides with a side
// endpoint at tolerance.
double ceva_product(const Triangle& t, const CevianFeet& feet, const Tolerance& tol = {});

// Unsigned Steiner pair: lhs = (F1B/F1C)*(F2B/F2C), rhs = (VB/VC)^2 for the
// two remaining vertices B, C in cyclic order from `vertex`.
std::pair<double, double> steiner_check(const Triangle& t, int vertex, Point foot1,
                                        Point foot2, const Tolerance& tol = {});

PerspectivityResult homology(const Triangle& t1, const std::array<Point, 3>& other,
                             const Tolerance& tol = {});
PerspectivityResult homology(const Triangle& t1, const Triangle& t2,
                             const Tolerance& tol = {});
PerspectivityResult homology(const Triangle& t1, const CevianFeet& feet,
                             const Tolerance& tol = {});

// Left side of the Carnot relation for feet on the respective side lines.
double carnot_sum(const Triangle& t, const CevianFeet& feet);

OrthologyPair orthology(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

// Orthological with coinciding orthology centers.
bool is_bilogical(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

// Simultaneously orthological and homological.
bool is_orthohomological(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

// Common circle of the pedal triangles of the isogonal pair (P1, P2).
// Throws NotIsogonalPair unless P2 is the isogonal conjugate of P1 at
// tolerance; PedalDegenerate propagates from the pedal construction.
SixPointResult six_point_circle(const Triangle& t, Point p1, Point p2,
                                const Tolerance& tol = {});

// Same computation without the isogonal-pair precondition (negative controls).
SixPointResult six_point_spread(const Triangle& t, Point p1, Point p2,
                                const Tolerance& tol = {});

// Squared common radius from the per-vertex data: distances x1, x2 from the
// vertex to P1 and P2, cevian angle alpha against one side, full vertex angle
// a, and d = |P1P2|.
double six_point_radius_formula(double x1, double x2, double alpha, double a, double d,
                                const Tolerance& tol = {});

// Terquem construction: circle through concurrent cevian feet, its second
// intersections with the sides, and the two concurrence points.
TerquemResult terquem(const Triangle& t, const CevianFeet& feet, const Tolerance& tol = {});

// Full pipeline for the orthohomological pedal theorem: conjugate point, both
// pedal homologies, and the identification of the feet-circle with the
// six-point circle. Stops after homological_1 when the hypothesis fails.
PedalHomologyReport orthohomological_pedal_check(const Triangle& t, Point p1,
                                                 const Tolerance& tol = {});

} // namespace orthocevia
