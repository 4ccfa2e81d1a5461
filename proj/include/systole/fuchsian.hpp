#pragma once

// Explicit matrix groups with an ideal polygon as fundamental domain: exact
// Poincaré checks, reduction of elements to side-pairing words, transport of
// the domain to a deformed generator set, and the tile search that lists
// every closed geodesic up to a trace bound.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "systole/developing.hpp"
#include "systole/geodesics.hpp"
#include "systole/modular.hpp"

namespace systole {

/// Letter of a word in a free basis: generator index and sign.
struct Letter {
    int generator = 0;
    bool inverse = false;
    friend bool operator==(const Letter&, const Letter&) = default;
};
using FreeWord = std::vector<Letter>;

FreeWord free_reduce(const FreeWord& w);
FreeWord inverse_word(const FreeWord& w);
/// Cyclic reduction; conjugate words give rotations of each other.
FreeWord cyclic_reduce(const FreeWord& w);
std::string format_free_word(const std::vector<LabeledGenerator>& gens, const FreeWord& w);
Moebius free_word_value(const std::vector<Moebius>& gens, const FreeWord& w);

/// Ideal polygon with ∞ first and the finite vertices increasing; side i
/// joins vertex i to vertex i+1 (mod size).  pairing[i] carries side
/// partner[i] onto side i, reversing it, so pairing[i] P is the tile across
/// side i.  Each pairing is generators[k] or its inverse per side_letter.
struct IdealPolygon {
    std::vector<Fraction> vertices;
    std::vector<int> partner;
    std::vector<Moebius> pairing;
    std::vector<LabeledGenerator> generators;
    std::vector<Letter> side_letter;

    int size() const { return static_cast<int>(vertices.size()); }
};

/// The developed polygon with the side pairings g1, g2, ... as basis.
IdealPolygon polygon_from_development(const Development& dev);

/// Builds sides from endpoint pairs: each generator maps side `from` onto
/// side `to` (endpoints in matching order).
IdealPolygon polygon_from_pairings(const std::vector<Fraction>& vertices,
                                   const std::vector<LabeledGenerator>& generators,
                                   const std::vector<std::pair<std::pair<Fraction, Fraction>,
                                                               std::pair<Fraction, Fraction>>>& sides);

/// Cycle of a vertex under the side pairings and the element fixing it.
struct VertexCycle {
    int start = 0;
    std::vector<int> vertices;
    FreeWord word;
    Moebius transform;
};
VertexCycle vertex_cycle(const IdealPolygon& p, int vertex);

/// Exact Poincaré conditions: vertex order, pairing endpoints, partner
/// involution, and a parabolic cycle transform at every vertex.  Empty when
/// the polygon is a fundamental domain of the group it pairs.
std::vector<std::string> polygon_problems(const IdealPolygon& p);

/// A rational interior point used for reductions.
std::pair<Rational, Rational> interior_point(const IdealPolygon& p);

/// Writes g as a word in the basis by walking its tile back to the polygon;
/// throws validation error if g is not in the group.
FreeWord reduce_to_basis(const IdealPolygon& p, const Moebius& g);

/// Expresses each basis element as a word in `gens` (indices into gens),
/// given every gen as a basis word.  Throws validation error when the
/// reduction does not recover the whole basis.
std::vector<FreeWord> basis_in_generators(const IdealPolygon& p, const std::vector<Moebius>& gens);

/// Moves the domain of ⟨base_gens⟩ (= the polygon's group) to the group
/// generated by new_gens, under the correspondence base_gens[i] ->
/// new_gens[i].  New vertices are fixed points of the transported cycle
/// transforms.  Throws validation error when any exact check fails.
IdealPolygon transport_polygon(const IdealPolygon& base, const std::vector<Moebius>& base_gens,
                               const std::vector<LabeledGenerator>& new_gens);

struct MatrixGroupReport {
    Rational trace_bound;
    /// Every primitive hyperbolic class with |trace| <= bound, inverses
    /// identified, sorted by witness_less; words in the polygon basis.
    std::vector<GeodesicWitness> classes;
    bool frontier_exhausted = false;
    std::string certificate;
    std::size_t cover_balls = 0;  ///< balls covering the truncated polygon
    double cover_radius = 0;      ///< largest ball radius
    double reach = 0;             ///< 2 arccosh(bound/2)
    std::size_t tiles = 0;
};

/// Tile search on a verified polygon.  The classes are complete up to the
/// bound: every such geodesic has a lift meeting the polygon outside the
/// horoballs bounded by horocycles of length 2/bound, so a conjugate moves
/// some point of that truncated polygon by at most 2 arccosh(bound/2).
MatrixGroupReport systole_matrix_group(const IdealPolygon& domain, const Rational& trace_bound,
                                       std::size_t max_tiles = 50'000'000, double cover_radius = 0.5);

/// Without a domain: all reduced words up to `max_length`, classes keyed by
/// cyclically reduced word.  Never exhaustive.
MatrixGroupReport matrix_group_sweep(const std::vector<LabeledGenerator>& gens, const Rational& trace_bound,
                                     int max_length);

/// Canonical key of the conjugacy class of a basis word, inverses identified.
FreeWord class_key(const FreeWord& w);

nlohmann::json matrix_group_report_to_json(const MatrixGroupReport& r);

}  // namespace systole
