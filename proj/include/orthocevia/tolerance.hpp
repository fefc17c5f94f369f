#pragma once

#include <algorithm>
#include <cmath>

namespace orthocevia {

// Scale-relative comparison policy. A quantity q with natural scale S is
// treated as zero iff |q| <= max(abs_floor, rel_eps * S). Callers pass the
// scale in the quantity's own units (squared lengths for squared quantities,
// 1 for dimensionless residuals).
struct Tolerance {
    double rel_eps = 1e-9;
    double abs_floor = 1e-12;

    double eps(double scale) const { return std::max(abs_floor, rel_eps * scale); }

    bool zero(double q, double scale) const { return std::abs(q) <= eps(scale); }

    // Dimensionless residuals (normalized determinants, relative errors).
    bool zero_rel(double q) const { return std::abs(q) <= rel_eps; }
};

} // namespace orthocevia
