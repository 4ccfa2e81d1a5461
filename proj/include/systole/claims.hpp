#pragma once

// Machine checks of the published claims: fixtures, worked examples and the
// per-n density and systole statements.

#include <string>
#include <vector>

#include <json.hpp>

#include "systole/fixtures.hpp"
#include "systole/fuchsian.hpp"

namespace systole {

struct ClaimResult {
    std::string group;  ///< "examples", "fixtures" or "n=K"
    std::string id;
    std::string source;  ///< where the claim is stated, in words
    bool passed = false;
    std::string detail;
};

/// Selectors accepted by verify_claims: "all", "examples", "fixtures",
/// "n=4" .. "n=12", or a single claim id.
std::vector<std::string> claim_selectors();

/// Throws invalid-argument for an unknown selector.
std::vector<ClaimResult> verify_claims(const std::string& selector, int threads = 1);

nlohmann::json claim_to_json(const ClaimResult& c);

/// Fundamental polygon for a perturbed group: the development of `graph`
/// with the arithmetic generators rewritten in its side pairings and carried
/// over to the perturbed ones.
IdealPolygon perturbed_domain(const GraphFixture& graph, const GroupFixture& arithmetic,
                              const GroupFixture& perturbed);

/// Development polygon of a fixture graph (its own tree and seed).
IdealPolygon fixture_domain(const GraphFixture& graph);

}  // namespace systole
