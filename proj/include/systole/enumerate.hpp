#pragma once

// Isomorphism-free generation of sphere triangulations and the max-min edge
// density checks built on it.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "systole/triangulation.hpp"

namespace systole {

struct EnumerationQuery {
    int n = 4;
    int min_degree = 3;
    bool allow_loops = false;
    bool allow_duplicates = false;
};

/// Largest n the generator will run to.
inline constexpr int max_enumerated_vertices = 12;

/// Throws invalid-argument for malformed queries, resource-limit for n above
/// max_enumerated_vertices or for classes with loops, duplicate edges or
/// min_degree < 3 (these are not finite-type searches here).
void check_query(const EnumerationQuery& q);

/// Every map obtained from g by splitting one vertex into two adjacent
/// vertices of degree at least 3.  Not deduplicated.
std::vector<Triangulation> vertex_splits(const Triangulation& g);

/// One representative per isomorphism class (reflections identified),
/// ordered by canonical code.  Representatives are canonically relabeled.
std::vector<Triangulation> enumerate_triangulations(const EnumerationQuery& q, int threads = 1);

struct DensityExtremum {
    std::int64_t value = 0;
    std::size_t classes = 0;  ///< size of the enumerated class
    std::vector<Triangulation> extremal;
};

DensityExtremum max_min_density(const EnumerationQuery& q, int threads = 1);
DensityExtremum max_min_density(const std::vector<Triangulation>& graphs);

/// Published max-min densities over simple triangulations, n = 4..12.
std::int64_t expected_max_min_density(int n);

/// A family of non-regular triangulations and the worst certified trace in
/// it.  For each member the certified trace is the smallest of its pattern
/// certificates and of m1 m2 - 2 over non-loop edges with m1 m2 > 4.
struct FamilyCheck {
    std::string name;
    std::size_t members = 0;
    std::int64_t worst_trace = 0;  ///< max over members of the certified trace
    bool below_bound = false;
};

struct PropositionReport {
    int n = 0;
    std::size_t regular_classes = 0;
    std::int64_t max_min_density = 0;
    std::int64_t expected = 0;
    std::size_t extremal = 0;
    std::int64_t trace_bound = 0;  ///< max_min_density - 2
    std::vector<FamilyCheck> families;
    bool holds = false;
};

PropositionReport verify_proposition(int n, int threads = 1);
nlohmann::json proposition_report_to_json(const PropositionReport& r);

/// Smallest certified |trace| for g, or -1 when nothing is certified.
std::int64_t certified_trace(const Triangulation& g);

}  // namespace systole
