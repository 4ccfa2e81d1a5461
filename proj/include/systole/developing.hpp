#pragma once

// Farey labeling of a triangulation from a spanning tree: the developed
// ideal polygon, its side pairings and the cusp parabolics.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "systole/modular.hpp"
#include "systole/triangulation.hpp"

namespace systole {

class SpanningTree {
public:
    SpanningTree() = default;
    /// Throws invalid-argument unless `edges` is a spanning tree of g.
    SpanningTree(const Triangulation& g, std::vector<int> edges);

    /// Breadth-first tree from vertex 0, taking darts in rotation order.
    static SpanningTree bfs(const Triangulation& g, Vertex root = 0);

    /// Edges given by endpoint pairs; throws if a pair is missing or, because
    /// of duplicate edges, ambiguous.
    static SpanningTree from_vertex_pairs(const Triangulation& g,
                                          const std::vector<std::pair<Vertex, Vertex>>& pairs);

    const std::vector<int>& edges() const { return edges_; }
    bool contains(int e) const { return in_tree_[e]; }
    int tree_degree(Vertex v) const { return tree_degree_[v]; }

private:
    std::vector<int> edges_;
    std::vector<bool> in_tree_;
    std::vector<int> tree_degree_;
};

/// The seed dart runs along a tree edge from a terminal vertex (labeled ∞)
/// to its tree neighbor (labeled 0).  The face labeled (0, 1, ∞) is the face
/// of the seed dart, or of its twin when `twin_face` is set.
struct DevelopSeed {
    Dart dart = -1;
    bool twin_face = false;
};

/// Least terminal edge: smallest terminal vertex, its tree dart, own face.
DevelopSeed default_seed(const Triangulation& g, const SpanningTree& t);

/// Pairs the polygon side of tree edge `edge` lying in face(dart) with the
/// side lying in face(twin(dart)); `matrix` sends from.first -> to.first and
/// from.second -> to.second.
struct SidePairing {
    int edge = -1;
    Dart dart = -1;
    std::pair<Fraction, Fraction> from;
    std::pair<Fraction, Fraction> to;
    Moebius matrix;
};

struct Development {
    Triangulation graph;
    SpanningTree tree;
    DevelopSeed seed;
    /// Label of origin(d) in face(d), for every dart d.
    std::vector<Fraction> corner_label;
    /// Faces in the order they were labeled.
    std::vector<int> face_order;
    /// Ideal vertices, starting ∞, 0, ...; one per tree dart in tour order.
    std::vector<Fraction> polygon;
    std::vector<Dart> tour;
    std::vector<SidePairing> pairings;  ///< ordered by first appearance in the tour
    std::vector<Fraction> first_label;  ///< per vertex, first in tour order
    std::vector<Moebius> cusp_generators;  ///< per vertex, cusp_parabolic(first_label, deg)

    /// Labels (x, y, z) of face f, starting from its lowest dart.
    std::vector<Fraction> face_labels(int f) const;
};

/// Throws invalid-argument on a bad tree or seed, validation error if the
/// labeling breaks the Farey structure.
Development develop(const Triangulation& g, const SpanningTree& t, const DevelopSeed& seed);
Development develop(const Triangulation& g, const SpanningTree& t);

struct LabeledGenerator {
    std::string name;
    Moebius matrix;
    bool redundant = false;
};

/// Side pairings named g1, g2, ... in tour order (a free basis); with
/// `with_cusps`, also one cusp parabolic per vertex, flagged redundant.
std::vector<LabeledGenerator> generators(const Development& dev, bool with_cusps = false);

struct CuspCheck {
    Vertex vertex = -1;
    Fraction fixed;
    Moebius composite;
    bool ok = false;
};

/// Composite of the side pairings around each vertex; not ok when the
/// labels around it do not determine the pairings.
std::vector<CuspCheck> cusp_checks(const Development& dev);
bool check_cusp_parabolics(const Development& dev);

/// Re-verifies the labeling invariants: every face a Farey triangle, each
/// vertex with tree-degree many labels, every pairing integral and exact on
/// its endpoints.  Returns the violated conditions.
std::vector<std::string> development_problems(const Development& dev);

nlohmann::json development_to_json(const Development& dev);

/// Upper half-plane picture of the developed faces; tree sides thickened.
std::string render_polygon_svg(const Development& dev);

}  // namespace systole
