#pragma once

// Text and JSON forms of a triangulation.
//
// Text, one statement per line, '#' starts a comment:
//
//     rotation 0: 0 1 2        darts leaving vertex 0, counterclockwise
//     twin 0 5                 darts 0 and 5 are the two halves of an edge
//
// or, for simple maps, counterclockwise neighbor lists:
//
//     adj 0: 1 2 3
//
// JSON: {"rotations": [[0,1,2], ...], "twins": [[0,5], ...]} or
// {"neighbors": [[1,2,3], ...]}.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "systole/triangulation.hpp"

namespace systole {

Triangulation parse_triangulation_text(std::string_view text);
std::string format_triangulation_text(const Triangulation& g);

nlohmann::json triangulation_to_json(const Triangulation& g);
Triangulation triangulation_from_json(const nlohmann::json& j);

/// Reads either form; JSON is recognized by a leading '{'.
Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::filesystem::path& path);

}  // namespace systole
