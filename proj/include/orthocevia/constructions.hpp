#pragma once

#include "orthocevia/triangle.hpp"

namespace orthocevia {

enum class CenterKind {
    Centroid,
    Incenter,
    Circumcenter,
    Orthocenter,
    Gergonne,
    Nagel,
    Bevan,
    Symmedian,
};

constexpr std::array<CenterKind, 8> all_center_kinds = {
    CenterKind::Centroid,   CenterKind::Incenter, CenterKind::Circumcenter,
    CenterKind::Orthocenter, CenterKind::Gergonne, CenterKind::Nagel,
    CenterKind::Bevan,      CenterKind::Symmedian,
};

const char* center_kind_name(CenterKind kind);

// Normalized barycentric coordinates of p (sum to 1).
std::array<double, 3> barycentric(const Triangle& t, Point p);

// Point from (not necessarily normalized) barycentric weights. Throws
// ConjugateAtInfinity when the weights sum to zero at tolerance.
Point from_barycentric(const Triangle& t, const std::array<double, 3>& w,
                       const Tolerance& tol = {});

Point triangle_center(const Triangle& t, CenterKind kind, const Tolerance& tol = {});

Circle circumcircle(const Triangle& t, const Tolerance& tol = {});
Circle incircle(const Triangle& t);
// opposite: 0, 1 or 2; the excircle tangent to side `opposite` itself and the
// other two sides' extensions.
Circle excircle(const Triangle& t, int opposite);

// Feet of the perpendiculars from p onto the three side lines. Throws
// PedalDegenerate when p lies on the circumcircle (the pedal collapses to the
// Simson line).
CevianFeet pedal_triangle(const Triangle& t, Point p, const Tolerance& tol = {});

// Incircle tangency points; equals pedal_triangle(t, incenter).
CevianFeet contact_triangle(const Triangle& t);

// Excircle tangency points on the corresponding sides (the cotangent triangle).
CevianFeet extouch_triangle(const Triangle& t);

// Altitude feet. Throws PedalDegenerate for right triangles (the orthocenter
// is a vertex, which lies on the circumcircle).
CevianFeet orthic_triangle(const Triangle& t, const Tolerance& tol = {});

// Feet on the opposite sides of the cevians from each vertex through p.
// Throws OnSideLine when p is a vertex, CevianAtInfinity when a cevian is
// parallel to its opposite side.
CevianFeet cevian_feet_through(const Triangle& t, Point p, const Tolerance& tol = {});

// Barycentric (x:y:z) -> (a^2/x : b^2/y : c^2/z). Throws OnSideLine when p is
// on a side line, ConjugateAtInfinity when p is on the circumcircle.
Point isogonal_conjugate(const Triangle& t, Point p, const Tolerance& tol = {});

// Barycentric (x:y:z) -> (1/x : 1/y : 1/z). Throws OnSideLine; throws
// ConjugateAtInfinity on the Steiner circumellipse.
Point isotomic_conjugate(const Triangle& t, Point p, const Tolerance& tol = {});

// The foot of the cevian from `vertex` symmetric to the cevian through `foot`
// with respect to the internal angle bisector, computed by explicit
// reflection of the cevian line in the bisector.
Point isogonal_cevian_foot(const Triangle& t, int vertex, Point foot,
                           const Tolerance& tol = {});

// Reflection of p through the midpoint of side `side`.
Point isotomic_point_on_side(const Triangle& t, int side, Point p,
                             const Tolerance& tol = {});

} // namespace orthocevia
