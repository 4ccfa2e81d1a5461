#pragma once

// JSON form of a generator set, optionally with an ideal polygon whose sides
// the generators pair:
//
//     {"generators": [{"name": "a1", "matrix": ["1", "404/100", "0", "1"]}, ...],
//      "words": ["a8", "a4 a3"],
//      "polygon": {"vertices": ["inf", "0", "1/2", ...],
//                  "sides": [[["0", "1/2"], ["1", "1/2"]], ...]}}
//
// Each side entry maps the first side onto the second, endpoints in order.

#include <optional>

#include <json.hpp>

#include "systole/fixtures.hpp"
#include "systole/fuchsian.hpp"

namespace systole {

struct GroupInput {
    GroupFixture group;
    std::optional<IdealPolygon> domain;
};

/// Parse errors for malformed entries; invalid-argument for matrices whose
/// determinant is not 1.
GroupInput group_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const GroupFixture& group, const IdealPolygon* domain = nullptr);

}  // namespace systole
