#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthocevia/triangle.hpp"
#include "orthocevia/verify.hpp"

namespace orthocevia::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_relation_fails = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_degenerate = 3;
inline constexpr int exit_precondition = 4;

struct SceneInput {
    std::array<Point, 3> triangle{};
    std::map<std::string, Point> points;
    Tolerance tolerance{};
};

Point parse_point(const std::string& text);                 // "x,y"
std::array<Point, 3> parse_triangle(const std::string& text); // "ax,ay bx,by cx,cy"
SceneInput scene_from_json(const nlohmann::json& doc);

// Document builders (pure; the run_cli dispatcher prints them).
nlohmann::ordered_json centers_document(const SceneInput& scene);
// Returns the document and whether the relation holds.
std::pair<nlohmann::ordered_json, bool> check_document(const SceneInput& scene,
                                                       const std::string& relation,
                                                       const std::string& with);

int exit_code_for(const GeomError& err);

// Full command dispatcher; argv-style arguments without the program name.
int run_cli(const std::vector<std::string>& args);

} // namespace orthocevia::cli
