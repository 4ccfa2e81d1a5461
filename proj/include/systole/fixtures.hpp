#pragma once

// Embedded reconstructions of the worked examples: triangulations with their
// spanning trees and seeds, and the printed generator lists and words.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "systole/developing.hpp"
#include "systole/triangulation.hpp"

namespace systole {

/// Straight edges and Bezier-like curves between points in the plane.  The
/// rotation at each vertex is read off from the departure directions, so a
/// curve must be given the tangent it actually leaves along.
class PlanarSketch {
public:
    struct Point {
        double x = 0, y = 0;
    };

    Vertex vertex(double x, double y);
    int edge(Vertex u, Vertex w);
    /// `at_u` and `at_w` point from each endpoint into the curve.
    int curve(Vertex u, Vertex w, Point at_u, Point at_w);

    /// Edge k of the sketch becomes edge k of the triangulation.
    Triangulation build() const;

private:
    struct Arc {
        Vertex u, w;
        Point at_u, at_w;
    };
    std::vector<Point> points_;
    std::vector<Arc> arcs_;
};

struct GraphFixture {
    std::string name;
    std::string citation;
    Triangulation graph;
    std::optional<SpanningTree> tree;
    DevelopSeed seed;
};

/// Seed with v_inf -> v0 along a tree edge, face chosen to contain v1.
DevelopSeed seed_for(const Triangulation& g, const SpanningTree& t, Vertex v_inf, Vertex v0, Vertex v1);

Triangulation tetrahedron();
Triangulation octahedron();
Triangulation icosahedron();
/// Top 0, ring 1..5, bottom 6.
Triangulation pentagonal_bipyramid();

GraphFixture tetrahedron_example();    ///< Figs. 1-3
GraphFixture ten_vertex_example();     ///< Fig. 4, tree of Example 2
GraphFixture ten_vertex_long_tree();   ///< same graph, tree used for the 10-cusp generators
GraphFixture seven_vertex_example();   ///< bipyramid with the tree of the 7-cusp section
GraphFixture eleven_vertex_example();  ///< Fig. 7
GraphFixture degree_two_example();     ///< Fig. 5, Example 3
GraphFixture degree_one_example();     ///< Fig. 6, Example 4
GraphFixture adjacent_degree_twos();   ///< Fig. 8 configuration, closed up by one edge

struct GroupFixture {
    std::string name;
    std::string citation;
    std::vector<LabeledGenerator> generators;
    /// Designated words, e.g. "g2 g1^-1", in generator names.
    std::vector<std::string> words;
};

GroupFixture seven_cusp_arithmetic();   ///< a1..a6
GroupFixture seven_cusp_perturbed();    ///< b1..b6
GroupFixture ten_cusp_arithmetic();     ///< γ1..γ9 with γ5 corrected, eight systole words
GroupFixture ten_cusp_perturbed();      ///< α1..α9 built from P, same eight words
GroupFixture eleven_cusp_arithmetic();  ///< γ1..γ13 and six systole words
GroupFixture eleven_cusp_perturbed();   ///< α1..α13 built from τ, same six words

/// γ5 exactly as printed in the 10-cusp list, entries (a, b, c, d); its
/// determinant is 449, so it is not a Moebius value.
std::array<Rational, 4> ten_cusp_gamma5_as_printed();

/// Example 2: the three printed non-parabolic pairings with their sides.
struct PrintedPairing {
    Moebius matrix;
    std::pair<Fraction, Fraction> side_a;
    std::pair<Fraction, Fraction> side_b;
};
std::vector<PrintedPairing> ten_vertex_printed_pairings();
/// Example 2 polygon vertices, ∞ first.
std::vector<Fraction> ten_vertex_printed_polygon();

std::vector<GraphFixture> graph_fixtures();
std::vector<GroupFixture> group_fixtures();
/// Throws invalid-argument for unknown names.
GraphFixture graph_fixture(const std::string& name);
GroupFixture group_fixture(const std::string& name);

}  // namespace systole
