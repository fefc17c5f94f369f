#include "orthocevia/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "orthocevia/json17.hpp"

namespace orthocevia {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

Rng Rng::for_trial(std::uint64_t seed, int trial_index) {
    return Rng(mix64(seed + 0x9E3779B97F4A7C15ull * (std::uint64_t(trial_index) + 1)));
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
}

double Rng::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int n) {
    return int(next_u64() % std::uint64_t(n));
}

Triangle sample_triangle(Rng& rng, const SuiteConfig& config) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Point a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        try {
            return Triangle(a, b, c, std::max(config.min_area_ratio, 1e-12));
        } catch (const GeomError&) {
            continue;
        }
    }
    raise(ErrorKind::SamplingExhausted, "1000 rejections; min_area_ratio too strict");
}

Point sample_interior_point(Rng& rng, const Triangle& t, double margin) {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) { u = 1.0 - u; v = 1.0 - v; }
    const double k = 1.0 - 3.0 * margin;
    const std::array<double, 3> lam = {margin + k * u, margin + k * v,
                                       margin + k * (1.0 - u - v)};
    return lam[0] * t.A() + lam[1] * t.B() + lam[2] * t.C();
}

namespace {

// Per-trial collector. Residual thresholds are fixed per name; controls are
// boolean outcomes aggregated into fractions by the runner.
class TrialCtx {
public:
    explicit TrialCtx(int index) { report_.trial_index = index; }

    void triangle(const Triangle& t) { report_.triangle = {t.A(), t.B(), t.C()}; }
    void point(std::string name, Point p) { report_.points.emplace_back(std::move(name), p); }

    void residual(std::string name, double value, double threshold) {
        if (!(value <= threshold)) report_.passed = false;
        report_.residuals.emplace_back(std::move(name), value);
        thresholds_.push_back(threshold);
    }

    void require(std::string name, bool ok) {
        residual(std::move(name) + "_violations", ok ? 0.0 : 1.0, 0.5);
    }

    void control(std::string name, bool tripped) {
        controls_.emplace_back(std::move(name), tripped);
    }

    void note_once(std::string text) { notes_.push_back(std::move(text)); }

    void skip() { skipped_ = true; }

    TrialReport report_;
    std::vector<double> thresholds_;
    std::vector<std::pair<std::string, bool>> controls_;
    std::vector<std::string> notes_;
    bool skipped_ = false;
};

using TrialFn = std::function<void(Rng&, TrialCtx&, const SuiteConfig&)>;

struct SuiteDef {
    TrialFn trial;
    std::vector<std::pair<std::string, double>> control_requirements; // name -> min fraction
};

double scale_len(const Triangle& t) { return std::sqrt(t.scale_sq()); }

Point unit_or(Point p) { return p / norm(p); }

bool near_equilateral(const Triangle& t, double rel = 1e-6) {
    const double mx = std::max({t.a(), t.b(), t.c()});
    const double mn = std::min({t.a(), t.b(), t.c()});
    return (mx - mn) / mx < rel;
}

bool is_acute(const Triangle& t, double min_cos = 0.05) {
    for (int i = 0; i < 3; ++i) {
        const Point v = t.vertex(i);
        const auto [p, q] = t.side_endpoints(i);
        if (dot(unit_or(p - v), unit_or(q - v)) <= min_cos) return false;
    }
    return true;
}

double angle_between(Point u, Point v) {
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Triangle feet_as_triangle(const CevianFeet& feet) {
    return Triangle(feet.on_bc, feet.on_ca, feet.on_ab);
}

// ---------------------------------------------------------------------------
// Suite protocols
// ---------------------------------------------------------------------------

void steiner_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    double worst = 0.0;
    for (int v = 0; v < 3; ++v) {
        const auto [p, q] = t.side_endpoints(v);
        const double u = rng.uniform(cfg.interior_margin, 1.0 - cfg.interior_margin);
        const Point foot1 = p + u * (q - p);
        const Point foot2 = isogonal_cevian_foot(t, v, foot1, tol);
        const auto [lhs, rhs] = steiner_check(t, v, foot1, foot2, tol);
        worst = std::max(worst, std::abs(lhs / rhs - 1.0));
    }
    ctx.residual("steiner_rel", worst, tol.rel_eps);
}

void ceva_isogonal_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    const Point p = sample_interior_point(rng, t, cfg.interior_margin);
    ctx.triangle(t);
    ctx.point("P", p);
    const CevianFeet feet = cevian_feet_through(t, p, tol);
    CevianFeet iso;
    for (int i = 0; i < 3; ++i)
        iso.foot(i) = isogonal_cevian_foot(t, i, feet.foot(i), tol);
    ctx.residual("ceva_minus_1", std::abs(ceva_product(t, iso, tol) - 1.0), tol.rel_eps);
    const PerspectivityResult h = homology(t, iso, tol);
    ctx.require("isogonal_cevians_concur", h.concurrent && h.center_point() != nullptr);
    if (const Point* center = h.center_point()) {
        const Point conj = isogonal_conjugate(t, p, tol);
        ctx.residual("conjugate_dist_rel", dist(*center, conj) / scale_len(t), tol.rel_eps);
    }
}

void carnot_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    const Point p = sample_interior_point(rng, t, cfg.interior_margin);
    ctx.triangle(t);
    ctx.point("P", p);
    const CevianFeet feet = pedal_triangle(t, p, tol);
    ctx.residual("carnot_rel", std::abs(carnot_sum(t, feet)) / t.scale_sq(), tol.rel_eps);

    // Negative control: nudging one foot 1e-3*scale along its side must blow
    // the relation past 10x the concurrency threshold.
    CevianFeet bad = feet;
    const int k = rng.uniform_int(3);
    const auto [p1, p2] = t.side_endpoints(k);
    bad.foot(k) = bad.foot(k) + (1e-3 * scale_len(t)) * unit_or(p2 - p1);
    ctx.control("perturbed_exceeds",
                std::abs(carnot_sum(t, bad)) > 10.0 * tol.eps(t.scale_sq()));
}

void orthology_symmetry_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);

    for (int attempt = 0;; ++attempt) {
        const Point p = sample_interior_point(rng, t, cfg.interior_margin);
        try {
            const Triangle pedal = feet_as_triangle(pedal_triangle(t, p, tol));
            const OrthologyPair pair = orthology(t, pedal, tol);
            ctx.point("P", p);
            ctx.require("pedal_pair_orthological",
                        pair.forward.concurrent && pair.backward.concurrent);
            break;
        } catch (const GeomError&) {
            if (attempt > 100) throw;
        }
    }

    const Triangle other = sample_triangle(rng, cfg);
    const OrthologyPair generic = orthology(t, other, tol);
    ctx.require("generic_pair_agrees",
                generic.forward.concurrent == generic.backward.concurrent);
    ctx.require("generic_pair_not_orthological", !generic.forward.concurrent);
}

void pedal_orthology_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    for (int attempt = 0;; ++attempt) {
        const Point p = sample_interior_point(rng, t, cfg.interior_margin);
        try {
            const CevianFeet feet = pedal_triangle(t, p, tol);
            const Triangle pedal = feet_as_triangle(feet);
            const OrthologyPair pair = orthology(t, pedal, tol);
            ctx.point("P", p);
            ctx.residual("carnot_fwd_rel", std::abs(pair.forward.carnot_sum) / t.scale_sq(),
                         tol.rel_eps);
            ctx.residual("carnot_bwd_rel", std::abs(pair.backward.carnot_sum) / t.scale_sq(),
                         tol.rel_eps);
            ctx.require("backward_center_exists", pair.backward.center.has_value());
            if (pair.backward.center)
                ctx.residual("backward_center_is_P_rel",
                             dist(*pair.backward.center, p) / scale_len(t), tol.rel_eps);
            return;
        } catch (const GeomError&) {
            if (attempt > 100) throw;
        }
    }
}

void six_point_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    const Point p1 = sample_interior_point(rng, t, cfg.interior_margin);
    ctx.triangle(t);
    ctx.point("P1", p1);
    const Point p2 = isogonal_conjugate(t, p1, tol);
    ctx.point("P2", p2);
    const SixPointResult six = six_point_circle(t, p1, p2, tol);
    ctx.residual("max_deviation", six.max_deviation, tol.rel_eps);

    // Per-vertex closed-form radius: at vertex V the formula reproduces the
    // distances to the P1-foot on the next side and the P2-foot on the
    // previous side.
    double mean_sq = 0.0;
    for (double r : six.radii) mean_sq += r * r;
    mean_sq /= 6.0;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Point v = t.vertex(i);
        const auto [pnext, pprev] = t.side_endpoints(i);
        const double x1 = dist(v, p1), x2 = dist(v, p2);
        const double alpha = angle_between(pnext - v, p1 - v);
        const double full = angle_between(pnext - v, pprev - v);
        const double r_sq = six_point_radius_formula(x1, x2, alpha, full, dist(p1, p2), tol);
        const double direct1 = six.radii[2 * ((i + 1) % 3)];     // P1 foot, side i+1
        const double direct2 = six.radii[2 * ((i + 2) % 3) + 1]; // P2 foot, side i+2
        worst = std::max({worst, std::abs(r_sq - direct1 * direct1) / mean_sq,
                          std::abs(r_sq - direct2 * direct2) / mean_sq});
    }
    ctx.residual("formula_rel", worst, tol.rel_eps);

    // Negative control: a deliberately non-conjugate partner must break
    // concyclicity by orders of magnitude.
    const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const Point off = p1 + (5e-3 * scale_len(t)) * Point{std::cos(theta), std::sin(theta)};
    bool tripped = false;
    try {
        tripped = six_point_spread(t, p1, off, tol).max_deviation > 100.0 * tol.rel_eps;
    } catch (const GeomError&) {
        tripped = false;
    }
    ctx.control("negctrl_deviation_exceeds", tripped);
}

void power_of_point_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Circle c{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                   std::pow(rng.uniform(0.1, 1.5), 2)};
    Point p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double scale_sq = std::max(c.r_sq, dist_sq(p, c.center));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        const Point dir{std::cos(theta), std::sin(theta)};
        const Line l = line_through(p, p + dir, tol);
        const std::vector<Point> hits = line_circle_intersections(l, c, tol);
        if (hits.size() != 2) continue;
        const Point u = l.direction();
        const double prod = dot(hits[0] - p, u) * dot(hits[1] - p, u);
        ctx.point("P", p);
        ctx.point("center", c.center);
        ctx.residual("secant_rel", std::abs(prod - power_of_point(p, c)) / scale_sq,
                     tol.rel_eps);
        return;
    }
    raise(ErrorKind::SamplingExhausted, "no secant direction found");
}

void terquem_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    for (int attempt = 0; attempt < 200; ++attempt) {
        const Triangle t = sample_triangle(rng, cfg);
        const Point q = sample_interior_point(rng, t, cfg.interior_margin);
        try {
            const CevianFeet feet = cevian_feet_through(t, q, tol);
            const TerquemResult res = terquem(t, feet, tol);
            if (res.tangent_side[0] || res.tangent_side[1] || res.tangent_side[2])
                continue; // sides-secant trials only
            ctx.triangle(t);
            ctx.point("Q", q);
            ctx.point("F1", res.F1);
            ctx.point("F2", res.F2);
            ctx.residual("eq37_minus_1",
                         std::abs(ceva_product(t, res.second_feet, tol) - 1.0), tol.rel_eps);

            // Power-of-a-point identities at each vertex: the signed products
            // along the two adjacent sides both equal the vertex's power with
            // respect to the feet circle.
            const double scale_sq = std::max(t.scale_sq(), res.circle.r_sq);
            double worst = 0.0;
            for (int i = 0; i < 3; ++i) {
                const Point v = t.vertex(i);
                const double pw = power_of_point(v, res.circle);
                for (int j : {(i + 1) % 3, (i + 2) % 3}) {
                    const Point u = t.side_line(j).direction();
                    const double prod = dot(feet.foot(j) - v, u)
                                      * dot(res.second_feet.foot(j) - v, u);
                    worst = std::max(worst, std::abs(prod - pw) / scale_sq);
                }
            }
            ctx.residual("power_identity_rel", worst, tol.rel_eps);
            return;
        } catch (const GeomError&) {
            continue;
        }
    }
    raise(ErrorKind::SamplingExhausted, "no secant Terquem configuration found");
}

void main_theorem_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const bool acute = is_acute(t);

    std::vector<std::pair<std::string, CenterKind>> curated = {
        {"incenter", CenterKind::Incenter}, {"bevan", CenterKind::Bevan}};
    if (acute) {
        curated.push_back({"circumcenter", CenterKind::Circumcenter});
        curated.push_back({"orthocenter", CenterKind::Orthocenter});
    }

    bool hypothesis_all = true, conclusion_all = true, circle_all = true;
    for (const auto& [name, kind] : curated) {
        const Point p1 = triangle_center(t, kind, tol);
        try {
            const PedalHomologyReport rep = orthohomological_pedal_check(t, p1, tol);
            hypothesis_all = hypothesis_all && rep.homological_1;
            conclusion_all = conclusion_all && (!rep.homological_1 || rep.homological_2);
            circle_all = circle_all && (!rep.homological_1 || rep.six_feet_concyclic);
        } catch (const GeomError&) {
            // curated point degenerated (e.g. Bevan on a side line); rare and
            // harmless for the claim under test
        }
    }
    ctx.require("curated_hypothesis_holds", hypothesis_all);
    ctx.require("h1_implies_h2", conclusion_all);
    ctx.require("feet_circle_is_six_point_circle", circle_all);

    // Hypothesis-check path: a generic interior point almost surely has a
    // non-perspective pedal triangle, and then no claim is made.
    const Point p = sample_interior_point(rng, t, cfg.interior_margin);
    try {
        const PedalHomologyReport rep = orthohomological_pedal_check(t, p, tol);
        ctx.require("random_h1_implies_h2", !rep.homological_1 || rep.homological_2);
        ctx.control("random_point_no_claim", !rep.homological_1);
    } catch (const GeomError&) {
        ctx.control("random_point_no_claim", true);
    }
}

void gergonne_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const CevianFeet contact = contact_triangle(t);
    ctx.residual("ceva_contact_minus_1", std::abs(ceva_product(t, contact, tol) - 1.0),
                 tol.rel_eps);
    const PerspectivityResult h = homology(t, contact, tol);
    ctx.require("contact_homological", h.concurrent && h.center_point() != nullptr);
    const Point gergonne = triangle_center(t, CenterKind::Gergonne, tol);
    if (const Point* center = h.center_point())
        ctx.residual("gergonne_dist_rel", dist(*center, gergonne) / scale_len(t), tol.rel_eps);

    const PedalHomologyReport rep =
        orthohomological_pedal_check(t, triangle_center(t, CenterKind::Incenter, tol), tol);
    ctx.require("incenter_pipeline", rep.homological_1 && rep.homological_2
                                         && rep.six_feet_concyclic
                                         && rep.F1.has_value() && rep.F2.has_value());
    if (rep.F1 && rep.F2) {
        const double sl = scale_len(t);
        ctx.residual("f1_gergonne_rel", dist(*rep.F1, gergonne) / sl, tol.rel_eps);
        ctx.residual("f2_gergonne_rel", dist(*rep.F2, gergonne) / sl, tol.rel_eps);
    }
}

void isotomic_touch_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const CevianFeet contact = contact_triangle(t);
    const CevianFeet extouch = extouch_triangle(t);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto [p, q] = t.side_endpoints(i);
        const Point sum = contact.foot(i) + extouch.foot(i) - p - q;
        worst = std::max(worst, norm(sum) / scale_len(t));
    }
    ctx.residual("touch_isotomic_rel", worst, tol.rel_eps);
}

void isotomic_concurrency_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    const Point p = sample_interior_point(rng, t, cfg.interior_margin);
    ctx.triangle(t);
    ctx.point("P", p);
    const CevianFeet feet = cevian_feet_through(t, p, tol);
    CevianFeet iso;
    for (int i = 0; i < 3; ++i)
        iso.foot(i) = isotomic_point_on_side(t, i, feet.foot(i), tol);
    ctx.residual("ceva_isotomic_minus_1", std::abs(ceva_product(t, iso, tol) - 1.0),
                 tol.rel_eps);
    const PerspectivityResult h = homology(t, iso, tol);
    ctx.require("isotomic_cevians_concur", h.concurrent && h.center_point() != nullptr);
    if (const Point* center = h.center_point())
        ctx.residual("isotomic_conj_dist_rel",
                     dist(*center, isotomic_conjugate(t, p, tol)) / scale_len(t), tol.rel_eps);
}

void nagel_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const CevianFeet extouch = extouch_triangle(t);
    ctx.residual("ceva_extouch_minus_1", std::abs(ceva_product(t, extouch, tol) - 1.0),
                 tol.rel_eps);
    const PerspectivityResult h = homology(t, extouch, tol);
    ctx.require("extouch_homological", h.concurrent && h.center_point() != nullptr);
    if (const Point* center = h.center_point())
        ctx.residual("nagel_dist_rel",
                     dist(*center, triangle_center(t, CenterKind::Nagel, tol)) / scale_len(t),
                     tol.rel_eps);
}

void bevan_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const CevianFeet extouch = extouch_triangle(t);
    ctx.residual("carnot_extouch_rel", std::abs(carnot_sum(t, extouch)) / t.scale_sq(),
                 tol.rel_eps);
    const Point bevan = triangle_center(t, CenterKind::Bevan, tol);
    const Point closed_form = 2.0 * triangle_center(t, CenterKind::Circumcenter, tol)
                            - triangle_center(t, CenterKind::Incenter, tol);
    ctx.residual("bevan_closed_form_rel", dist(bevan, closed_form) / scale_len(t),
                 tol.rel_eps);
}

void counterexample_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    if (near_equilateral(t)) {
        // I = O = V would make the negative assertion vacuous.
        ctx.skip();
        return;
    }
    ctx.triangle(t);
    const PerspectivityResult h_contact = homology(t, contact_triangle(t), tol);
    const PerspectivityResult h_extouch = homology(t, extouch_triangle(t), tol);
    ctx.require("contact_homological", h_contact.concurrent);
    ctx.require("extouch_homological", h_extouch.concurrent);

    const Point incenter = triangle_center(t, CenterKind::Incenter, tol);
    const Point bevan = triangle_center(t, CenterKind::Bevan, tol);
    const Point conj = isogonal_conjugate(t, bevan, tol);
    const double margin = dist(conj, incenter) / scale_len(t);
    ctx.point("bevan", bevan);
    ctx.point("conjugate_of_bevan", conj);
    ctx.residual("conj_margin_shortfall", std::max(0.0, 1e-3 - margin), 0.0);
}

void gergonne_nagel_trial(Rng& rng, TrialCtx& ctx, const SuiteConfig& cfg) {
    const Tolerance& tol = cfg.tolerance;
    const Triangle t = sample_triangle(rng, cfg);
    ctx.triangle(t);
    const Point gergonne = triangle_center(t, CenterKind::Gergonne, tol);
    const Point nagel = triangle_center(t, CenterKind::Nagel, tol);
    const double sl = scale_len(t);
    ctx.residual("isotomic_reading_rel",
                 dist(isotomic_conjugate(t, gergonne, tol), nagel) / sl, tol.rel_eps);
    if (!near_equilateral(t))
        ctx.control("isogonal_reading_fails",
                    dist(isogonal_conjugate(t, gergonne, tol), nagel) / sl > 1e-3);
}

const std::map<std::string, SuiteDef>& registry() {
    static const std::map<std::string, SuiteDef> suites = {
        {"steiner", {steiner_trial, {}}},
        {"ceva_isogonal", {ceva_isogonal_trial, {}}},
        {"carnot", {carnot_trial, {{"perturbed_exceeds", 0.99}}}},
        {"orthology_symmetry", {orthology_symmetry_trial, {}}},
        {"pedal_orthology", {pedal_orthology_trial, {}}},
        {"six_point", {six_point_trial, {{"negctrl_deviation_exceeds", 0.99}}}},
        {"power_of_point", {power_of_point_trial, {}}},
        {"terquem", {terquem_trial, {}}},
        {"main_theorem", {main_theorem_trial, {{"random_point_no_claim", 0.99}}}},
        {"gergonne", {gergonne_trial, {}}},
        {"isotomic_touch", {isotomic_touch_trial, {}}},
        {"isotomic_concurrency", {isotomic_concurrency_trial, {}}},
        {"nagel", {nagel_trial, {}}},
        {"bevan", {bevan_trial, {}}},
        {"counterexample", {counterexample_trial, {}}},
        {"gergonne_nagel_conjugacy", {gergonne_nagel_trial, {{"isogonal_reading_fails", 0.99}}}},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, def] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    const auto it = registry().find(name);
    if (it == registry().end())
        raise(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
    const SuiteDef& def = it->second;

    std::vector<TrialCtx> outcomes;
    outcomes.reserve(config.trials);
    for (int i = 0; i < config.trials; ++i) outcomes.emplace_back(i);

    const auto run_one = [&](int i) {
        Rng rng = Rng::for_trial(config.seed, i);
        try {
            def.trial(rng, outcomes[i], config);
        } catch (const std::exception& e) {
            outcomes[i].report_.error = e.what();
            outcomes[i].report_.passed = false;
        }
    };

    unsigned n_threads = std::min(std::thread::hardware_concurrency(), 8u);
    if (!config.parallel || config.trials < 64) n_threads = 1;
    if (n_threads <= 1) {
        for (int i = 0; i < config.trials; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n_threads; ++k)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < config.trials; i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction ordered by trial index.
    SuiteReport report;
    report.suite = name;
    report.config = config;
    std::map<std::string, ControlSummary> controls;
    for (const auto& [cname, req] : def.control_requirements)
        controls[cname] = {cname, 0, 0, req};

    std::vector<std::string> residual_order;
    std::map<std::string, double> max_residuals;
    for (TrialCtx& ctx : outcomes) {
        if (ctx.skipped_) {
            ++report.skipped;
            continue;
        }
        ++report.trials_run;
        for (const auto& [rname, value] : ctx.report_.residuals) {
            auto [pos, inserted] = max_residuals.try_emplace(rname, value);
            if (inserted) residual_order.push_back(rname);
            else pos->second = std::max(pos->second, value);
        }
        for (const auto& [cname, tripped] : ctx.controls_) {
            ControlSummary& c = controls[cname];
            if (c.name.empty()) c.name = cname;
            ++c.eligible;
            if (tripped) ++c.tripped;
        }
        for (std::string& note : ctx.notes_)
            if (std::find(report.notes.begin(), report.notes.end(), note) == report.notes.end())
                report.notes.push_back(note);
        if (!ctx.report_.passed) report.failures.push_back(std::move(ctx.report_));
    }
    for (const std::string& rname : residual_order)
        report.max_residuals.emplace_back(rname, max_residuals.at(rname));
    for (auto& [cname, summary] : controls) report.controls.push_back(summary);

    report.passed = report.failures.empty() && report.trials_run > 0;
    for (const ControlSummary& c : report.controls)
        report.passed = report.passed && c.passed();

    if (name == "gergonne_nagel_conjugacy" && !report.controls.empty()) {
        const ControlSummary& c = report.controls.front();
        report.notes.push_back(
            "isotomic_conjugate(Gergonne) = Nagel holds on all trials; the isogonal "
            "reading failed on " + std::to_string(c.tripped) + " of "
            + std::to_string(c.eligible) + " non-equilateral trials");
    }
    if (name == "counterexample")
        report.notes.push_back("skipped " + std::to_string(report.skipped)
                               + " near-equilateral trials");
    return report;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["suite"] = report.suite;
    doc["config"] = {{"trials", report.config.trials},
                     {"seed", report.config.seed},
                     {"rel_eps", report.config.tolerance.rel_eps},
                     {"abs_floor", report.config.tolerance.abs_floor},
                     {"min_area_ratio", report.config.min_area_ratio},
                     {"interior_margin", report.config.interior_margin}};
    doc["trials"] = report.trials_run;
    doc["skipped"] = report.skipped;
    json failures = json::array();
    for (const TrialReport& f : report.failures) {
        json jf;
        jf["trial_index"] = f.trial_index;
        json tri = json::array();
        for (const Point& v : f.triangle) tri.push_back(point_to_json(v.x, v.y));
        jf["inputs"]["triangle"] = tri;
        json pts = json::object();
        for (const auto& [pname, p] : f.points) pts[pname] = point_to_json(p.x, p.y);
        jf["inputs"]["points"] = pts;
        json res = json::object();
        for (const auto& [rname, value] : f.residuals) res[rname] = value;
        jf["residuals"] = res;
        if (!f.error.empty()) jf["error"] = f.error;
        jf["passed"] = f.passed;
        failures.push_back(jf);
    }
    doc["failures"] = failures;
    json maxres = json::object();
    for (const auto& [rname, value] : report.max_residuals) maxres[rname] = value;
    doc["max_residuals"] = maxres;
    json controls = json::object();
    for (const ControlSummary& c : report.controls)
        controls[c.name] = {{"fraction", c.fraction()},
                            {"required", c.required_fraction},
                            {"passed", c.passed()}};
    doc["controls"] = controls;
    doc["notes"] = report.notes;
    doc["passed"] = report.passed;
    return doc;
}

std::string report_json_string(const SuiteReport& report) {
    return dump_json17(report_to_json(report));
}

} // namespace orthocevia
