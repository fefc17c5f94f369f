#include "orthocevia/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthocevia/constructions.hpp"
#include "orthocevia/json17.hpp"
#include "orthocevia/relations.hpp"
#include "orthocevia/svg.hpp"

namespace orthocevia::cli {

namespace {

using json = nlohmann::ordered_json;

json jpoint(Point p) { return point_to_json(p.x, p.y); }

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseFailure("not a number: '" + text + "'");
    }
    if (used != text.size()) throw ParseFailure("trailing characters in number: '" + text + "'");
    return v;
}

} // namespace

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseFailure("expected 'x,y': '" + text + "'");
    return {parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1))};
}

std::array<Point, 3> parse_triangle(const std::string& text) {
    std::istringstream in(text);
    std::array<Point, 3> vs;
    std::string token;
    for (int i = 0; i < 3; ++i) {
        if (!(in >> token)) throw ParseFailure("triangle needs three 'x,y' vertices");
        vs[i] = parse_point(token);
    }
    if (in >> token) throw ParseFailure("triangle takes exactly three vertices");
    return vs;
}

SceneInput scene_from_json(const nlohmann::json& doc) {
    SceneInput scene;
    if (!doc.contains("triangle") || !doc["triangle"].is_array()
        || doc["triangle"].size() != 3)
        throw ParseFailure("scene needs a 3-vertex \"triangle\" array");
    for (int i = 0; i < 3; ++i) {
        const auto& v = doc["triangle"][i];
        if (!v.is_array() || v.size() != 2) throw ParseFailure("vertex must be [x, y]");
        scene.triangle[i] = {v[0].get<double>(), v[1].get<double>()};
    }
    if (doc.contains("points"))
        for (const auto& [name, coords] : doc["points"].items()) {
            if (!coords.is_array() || coords.size() != 2)
                throw ParseFailure("point must be [x, y]");
            scene.points[name] = {coords[0].get<double>(), coords[1].get<double>()};
        }
    return scene;
}

int exit_code_for(const GeomError& err) {
    switch (err.kind()) {
        case ErrorKind::DegenerateTriangle:
            return exit_degenerate;
        case ErrorKind::UnknownSuite:
            return exit_parse_error;
        default:
            return exit_precondition;
    }
}

namespace {

Triangle scene_triangle(const SceneInput& scene) {
    return Triangle(scene.triangle[0], scene.triangle[1], scene.triangle[2]);
}

Point named_point(const SceneInput& scene, const std::string& name) {
    const auto it = scene.points.find(name);
    if (it == scene.points.end()) throw ParseFailure("missing named point '" + name + "'");
    return it->second;
}

json perspectivity_json(const PerspectivityResult& r) {
    json out;
    out["concurrent"] = r.concurrent;
    out["residual"] = r.residual;
    if (const Point* p = r.center_point()) out["center"] = jpoint(*p);
    else if (r.center_at_infinity()) out["center"] = "at_infinity";
    else out["center"] = nullptr;
    return out;
}

json orthology_json(const OrthologyResult& r) {
    json out;
    out["carnot_sum"] = r.carnot_sum;
    out["concurrent"] = r.concurrent;
    out["center"] = r.center ? jpoint(*r.center) : json(nullptr);
    return out;
}

json feet_json(const CevianFeet& feet) {
    return json::array({jpoint(feet.on_bc), jpoint(feet.on_ca), jpoint(feet.on_ab)});
}

// Second triangle for the two-triangle relations: named points A2/B2/C2 or a
// derived construction.
std::array<Point, 3> second_triangle(const Triangle& t, const SceneInput& scene,
                                     const std::string& with, const Tolerance& tol) {
    if (with == "contact") return contact_triangle(t).points();
    if (with == "extouch") return extouch_triangle(t).points();
    if (with == "medial")
        return {midpoint(t.B(), t.C()), midpoint(t.C(), t.A()), midpoint(t.A(), t.B())};
    if (with == "orthic") return orthic_triangle(t, tol).points();
    if (with == "pedal") return pedal_triangle(t, named_point(scene, "P1"), tol).points();
    if (!with.empty()) throw ParseFailure("unknown --with construction '" + with + "'");
    return {named_point(scene, "A2"), named_point(scene, "B2"), named_point(scene, "C2")};
}

CevianFeet terquem_feet(const Triangle& t, const SceneInput& scene, const Tolerance& tol) {
    if (scene.points.contains("A1") && scene.points.contains("B1")
        && scene.points.contains("C1"))
        return {named_point(scene, "A1"), named_point(scene, "B1"), named_point(scene, "C1")};
    return cevian_feet_through(t, named_point(scene, "P1"), tol);
}

} // namespace

json centers_document(const SceneInput& scene) {
    const Triangle t = scene_triangle(scene);
    json doc;
    doc["triangle"] = json::array({jpoint(t.A()), jpoint(t.B()), jpoint(t.C())});
    doc["sides"] = {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}, {"s", t.s()}};
    doc["area"] = t.area();
    json centers = json::object();
    for (CenterKind kind : all_center_kinds)
        centers[center_kind_name(kind)] = jpoint(triangle_center(t, kind, scene.tolerance));
    doc["centers"] = centers;
    return doc;
}

std::pair<json, bool> check_document(const SceneInput& scene, const std::string& relation,
                                     const std::string& with) {
    const Tolerance& tol = scene.tolerance;
    const Triangle t = scene_triangle(scene);
    json doc;
    doc["relation"] = relation;
    bool holds = false;

    if (relation == "homology") {
        const PerspectivityResult r = homology(t, second_triangle(t, scene, with, tol), tol);
        doc["result"] = perspectivity_json(r);
        holds = r.concurrent;
    } else if (relation == "orthology") {
        const auto pts = second_triangle(t, scene, with, tol);
        const Triangle t2(pts[0], pts[1], pts[2]);
        const OrthologyPair pair = orthology(t, t2, tol);
        doc["forward"] = orthology_json(pair.forward);
        doc["backward"] = orthology_json(pair.backward);
        holds = pair.forward.concurrent && pair.backward.concurrent;
    } else if (relation == "bilogical") {
        const auto pts = second_triangle(t, scene, with, tol);
        const Triangle t2(pts[0], pts[1], pts[2]);
        const OrthologyPair pair = orthology(t, t2, tol);
        doc["forward"] = orthology_json(pair.forward);
        doc["backward"] = orthology_json(pair.backward);
        holds = is_bilogical(t, t2, tol);
        doc["bilogical"] = holds;
    } else if (relation == "orthohomological") {
        const auto pts = second_triangle(t, scene, with, tol);
        const Triangle t2(pts[0], pts[1], pts[2]);
        const OrthologyPair pair = orthology(t, t2, tol);
        const PerspectivityResult h = homology(t, t2, tol);
        doc["orthology"] = {{"forward", orthology_json(pair.forward)},
                            {"backward", orthology_json(pair.backward)}};
        doc["homology"] = perspectivity_json(h);
        holds = pair.forward.concurrent && h.concurrent;
        doc["orthohomological"] = holds;
    } else if (relation == "sixpoint") {
        const Point p1 = named_point(scene, "P1");
        const Point p2 = scene.points.contains("P2") ? scene.points.at("P2")
                                                     : isogonal_conjugate(t, p1, tol);
        const SixPointResult r = six_point_circle(t, p1, p2, tol);
        doc["P1"] = jpoint(p1);
        doc["P2"] = jpoint(p2);
        doc["center"] = jpoint(r.center);
        doc["radii"] = r.radii;
        doc["max_deviation"] = r.max_deviation;
        holds = r.max_deviation <= tol.rel_eps;
    } else if (relation == "terquem") {
        const CevianFeet feet = terquem_feet(t, scene, tol);
        const TerquemResult r = terquem(t, feet, tol);
        doc["first_feet"] = feet_json(feet);
        doc["circle"] = {{"center", jpoint(r.circle.center)}, {"r_sq", r.circle.r_sq}};
        doc["second_feet"] = feet_json(r.second_feet);
        doc["tangent_side"] = r.tangent_side;
        doc["F1"] = jpoint(r.F1);
        doc["F2"] = jpoint(r.F2);
        holds = std::abs(ceva_product(t, r.second_feet, tol) - 1.0) <= tol.rel_eps;
    } else if (relation == "theorem7") {
        const PedalHomologyReport r =
            orthohomological_pedal_check(t, named_point(scene, "P1"), tol);
        doc["P2"] = jpoint(r.conjugate);
        doc["homological_1"] = r.homological_1;
        doc["homological_2"] = r.homological_2;
        doc["six_feet_concyclic"] = r.six_feet_concyclic;
        doc["F1"] = r.F1 ? jpoint(*r.F1) : json(nullptr);
        doc["F2"] = r.F2 ? jpoint(*r.F2) : json(nullptr);
        holds = r.homological_1 && r.homological_2 && r.six_feet_concyclic;
    } else {
        throw ParseFailure("unknown relation '" + relation + "'");
    }
    doc["holds"] = holds;
    return {doc, holds};
}

namespace {

struct SceneFlags {
    std::string triangle_arg;
    std::string scene_path;
    std::vector<std::string> point_args; // NAME=x,y
    double eps = 0.0;                    // 0 means unset
};

void add_scene_flags(CLI::App* cmd, SceneFlags& flags) {
    cmd->add_option("--triangle", flags.triangle_arg, "three vertices: \"ax,ay bx,by cx,cy\"");
    cmd->add_option("--scene", flags.scene_path, "scene JSON file");
    cmd->add_option("--point", flags.point_args, "named point NAME=x,y (repeatable)");
    cmd->add_option("--eps", flags.eps, "relative tolerance override");
}

Tolerance tolerance_from_env_and_flag(double eps_flag) {
    Tolerance tol;
    if (const char* env = std::getenv("ORTHOCEVIA_EPS")) {
        try {
            tol.rel_eps = parse_number(env);
        } catch (const ParseFailure&) {
            throw ParseFailure("ORTHOCEVIA_EPS is not a number");
        }
    }
    if (eps_flag > 0) tol.rel_eps = eps_flag;
    return tol;
}

SceneInput build_scene(const SceneFlags& flags) {
    SceneInput scene;
    bool have_triangle = false;
    if (!flags.scene_path.empty()) {
        std::ifstream in(flags.scene_path);
        if (!in) throw ParseFailure("cannot open scene file '" + flags.scene_path + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseFailure(std::string("scene JSON: ") + e.what());
        }
        scene = scene_from_json(doc);
        have_triangle = true;
    }
    if (!flags.triangle_arg.empty()) {
        scene.triangle = parse_triangle(flags.triangle_arg);
        have_triangle = true;
    }
    if (!have_triangle) throw ParseFailure("no triangle given (--triangle or --scene)");
    for (const std::string& spec : flags.point_args) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw ParseFailure("--point needs NAME=x,y");
        scene.points[spec.substr(0, eq)] = parse_point(spec.substr(eq + 1));
    }
    scene.tolerance = tolerance_from_env_and_flag(flags.eps);
    for (const Point& v : scene.triangle)
        if (!finite(v)) throw ParseFailure("non-finite triangle vertex");
    for (const auto& [name, p] : scene.points)
        if (!finite(p)) throw ParseFailure("non-finite named point '" + name + "'");
    return scene;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"2D triangle-geometry kernel and theorem-verification harness"};
    app.require_subcommand(1);

    SceneFlags centers_flags;
    CLI::App* centers_cmd = app.add_subcommand("centers", "triangle centers and side data");
    add_scene_flags(centers_cmd, centers_flags);

    SceneFlags check_flags;
    std::string relation, with;
    CLI::App* check_cmd = app.add_subcommand("check", "evaluate a relation on a scene");
    check_cmd->add_option("relation", relation,
                          "homology|orthology|bilogical|orthohomological|sixpoint|terquem|theorem7")
        ->required();
    check_cmd->add_option("--with", with, "derived second triangle: contact|extouch|medial|orthic|pedal");
    add_scene_flags(check_cmd, check_flags);

    std::string suite, json_path;
    int trials = 0;
    std::uint64_t seed = 42;
    double verify_eps = 0.0;
    bool sequential = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a randomized theorem suite");
    verify_cmd->add_option("suite", suite, "suite name (see README)")->required();
    verify_cmd->add_option("--trials", trials, "number of trials");
    verify_cmd->add_option("--seed", seed, "rng seed");
    verify_cmd->add_option("--eps", verify_eps, "relative tolerance override");
    verify_cmd->add_option("--json", json_path, "write the JSON report here");
    verify_cmd->add_flag("--sequential", sequential, "disable parallel trials");

    SceneFlags figure_flags;
    std::string figure_name, out_path;
    int size_px = 640;
    CLI::App* figure_cmd = app.add_subcommand("figure", "emit an SVG sketch of a configuration");
    figure_cmd->add_option("id", figure_name,
                           "fig3_contact|fig5_orthology|fig7_sixpoint|fig9_terquem|fig10_excircle")
        ->required();
    figure_cmd->add_option("-o,--out", out_path, "output SVG path");
    figure_cmd->add_option("--size", size_px, "output width in pixels");
    add_scene_flags(figure_cmd, figure_flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return exit_ok;
        }
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    }

    try {
        if (centers_cmd->parsed()) {
            std::cout << dump_json17(centers_document(build_scene(centers_flags)));
            return exit_ok;
        }
        if (check_cmd->parsed()) {
            const auto [doc, holds] = check_document(build_scene(check_flags), relation, with);
            std::cout << dump_json17(doc);
            return holds ? exit_ok : exit_relation_fails;
        }
        if (verify_cmd->parsed()) {
            SuiteConfig config;
            if (trials > 0) config.trials = trials;
            config.seed = seed;
            config.tolerance = tolerance_from_env_and_flag(verify_eps);
            config.parallel = !sequential;
            const SuiteReport report = run_suite(suite, config);
            const std::string text = report_json_string(report);
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw ParseFailure("cannot write '" + json_path + "'");
                out << text;
                std::cout << "suite " << report.suite << ": "
                          << (report.passed ? "pass" : "FAIL") << " ("
                          << report.trials_run << " trials, " << report.failures.size()
                          << " failures, " << report.skipped << " skipped)\n";
            } else {
                std::cout << text;
            }
            return report.passed ? exit_ok : exit_relation_fails;
        }
        if (figure_cmd->parsed()) {
            const auto id = figure_id_from_string(figure_name);
            if (!id) {
                std::cerr << "error: unknown figure id '" << figure_name << "'\n";
                return exit_parse_error;
            }
            const SceneInput scene = build_scene(figure_flags);
            const Triangle t(scene.triangle[0], scene.triangle[1], scene.triangle[2]);
            std::optional<Point> p1;
            if (const auto it = scene.points.find("P1"); it != scene.points.end())
                p1 = it->second;
            const std::string svg = render_figure(*id, t, p1, size_px, scene.tolerance);
            if (out_path.empty()) out_path = figure_name + ".svg";
            std::ofstream out(out_path);
            if (!out) throw ParseFailure("cannot write '" + out_path + "'");
            out << svg;
            return exit_ok;
        }
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const GeomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return exit_parse_error;
}

} // namespace orthocevia::cli
