#pragma once

// Combinatorial maps of sphere triangulations.  Loops and duplicate edges are
// allowed, so everything is expressed in darts (half-edges) rather than in
// vertex adjacency.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "systole/modular.hpp"

namespace systole {

using Dart = int;
using Vertex = int;

/// Darts carry an origin vertex, a counterclockwise rotation `next` around
/// that origin, and a fixed-point-free involution `twin`.  Faces are the
/// orbits of face_next(d) = next(twin(d)).
class Triangulation {
public:
    Triangulation() = default;

    /// `rotations[v]` lists the darts leaving v in counterclockwise order;
    /// `twins` pairs every dart with its reverse.  Throws a parse error if
    /// the data does not describe a permutation/involution pair.
    static Triangulation from_rotations(const std::vector<std::vector<Dart>>& rotations,
                                        const std::vector<std::pair<Dart, Dart>>& twins);

    /// Simple maps given by counterclockwise neighbor lists.
    static Triangulation from_neighbor_lists(const std::vector<std::vector<Vertex>>& neighbors);

    int num_vertices() const { return static_cast<int>(first_dart_.size()); }
    int num_darts() const { return static_cast<int>(origin_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_faces() const { return static_cast<int>(face_darts_.size()); }

    Vertex origin(Dart d) const { return origin_[d]; }
    Vertex head(Dart d) const { return origin_[twin_[d]]; }
    Dart twin(Dart d) const { return twin_[d]; }
    Dart next(Dart d) const { return next_[d]; }
    Dart prev(Dart d) const { return prev_[d]; }
    Dart face_next(Dart d) const { return next_[twin_[d]]; }
    Dart face_prev(Dart d) const { return twin_[prev_[d]]; }

    int face_of(Dart d) const { return face_[d]; }
    /// Darts of face f in face_next order (three for a triangle).
    const std::vector<Dart>& face_darts(int f) const { return face_darts_[f]; }

    int edge_of(Dart d) const { return edge_[d]; }
    /// The lower-numbered dart of edge e.
    Dart edge_dart(int e) const { return edge_darts_[e]; }
    std::pair<Vertex, Vertex> endpoints(int e) const {
        return {origin(edge_darts_[e]), head(edge_darts_[e])};
    }
    bool is_loop(int e) const { return origin(edge_darts_[e]) == head(edge_darts_[e]); }

    int degree(Vertex v) const { return degree_[v]; }
    Dart first_dart(Vertex v) const { return first_dart_[v]; }
    /// Darts leaving v, counterclockwise from first_dart(v).
    std::vector<Dart> rotation(Vertex v) const;

    /// Rotations and twin pairs, suitable for from_rotations().
    std::vector<std::vector<Dart>> rotations() const;
    std::vector<std::pair<Dart, Dart>> twin_pairs() const;

    /// Relabels darts vertex by vertex, each rotation starting at its
    /// smallest dart.  Idempotent.
    Triangulation canonical() const;

    /// Same map with every rotation reversed.
    Triangulation mirror() const;

private:
    void finalize();

    std::vector<Vertex> origin_;
    std::vector<Dart> next_, prev_, twin_;
    std::vector<int> face_, edge_;
    std::vector<std::vector<Dart>> face_darts_;
    std::vector<Dart> edge_darts_;
    std::vector<Dart> first_dart_;
    std::vector<int> degree_;

    friend class MapBuilder;
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> diagnostics;
    int vertices = 0, edges = 0, faces = 0;
    std::vector<int> degrees;
    int min_degree = 0;
    int degree_excess = 0;  ///< sum over v of (6 - deg v)
    bool has_loops = false;
    bool has_duplicates = false;
    bool regular = false;  ///< min degree >= 3, no loops, no duplicate edges
};

ValidationReport validate(const Triangulation& g);

/// Throws a validation error listing the diagnostics when g is invalid.
void require_valid(const Triangulation& g);

struct DensityReport {
    std::vector<std::int64_t> edge_density;  ///< indexed by edge id
    std::int64_t min_density = 0;
    int witness_edge = -1;
    std::vector<bool> loop_edge;  ///< loops use deg(v)^2; flagged here
};

DensityReport density(const Triangulation& g);

/// Inserts a degree-3 vertex into each listed face.
Triangulation stellate(const Triangulation& g, const std::vector<int>& faces);

/// Face counts on the two sides of the bigon formed by duplicate edges e1, e2,
/// smaller first.
std::pair<int, int> duplicate_edge_split(const Triangulation& g, int e1, int e2);

/// Replaces edge e by a bigon containing a new degree-2 vertex.
Triangulation insert_bigon_vertex(const Triangulation& g, int e);

/// Doubles the edge of dart d (origin v2, head v3) and places, inside the
/// new bigon, a loop at v2 enclosing a new degree-1 vertex.
Triangulation insert_pendant(const Triangulation& g, Dart d);

enum class PatternKind {
    adjacent_low_degree,  ///< degree-2 apex next to a degree-2 or 3 apex
    loop_walk,            ///< L^p R walk inside a loop
    pendant,              ///< degree-1 vertex, enclosing apex of degree d
};

struct PatternCertificate {
    PatternKind kind;
    std::vector<Vertex> vertices;
    std::string word;  ///< L/R word of the element, empty when given as a product
    Moebius element;   ///< certified element of PSL2(Z), up to conjugacy
    Rational trace;    ///< exact |trace| of element
    std::string description;
};

std::vector<PatternCertificate> pattern_certificates(const Triangulation& g);

std::string to_string(PatternKind kind);

/// Simple triangulation from consistently oriented triangles (a, b, c).
Triangulation triangulation_from_faces(int num_vertices,
                                       const std::vector<std::array<Vertex, 3>>& faces);

/// Minimal dart-BFS code over all starting darts and both orientations;
/// equal codes iff the maps are isomorphic up to reflection.
std::vector<int> canonical_code(const Triangulation& g);

}  // namespace systole
