#include "systole/fixtures.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <cmath>

namespace systole {

// ---------------------------------------------------------------------------
// Sketches

Vertex PlanarSketch::vertex(double x, double y) {
    points_.push_back({x, y});
    return static_cast<Vertex>(points_.size() - 1);
}

int PlanarSketch::edge(Vertex u, Vertex w) {
    Point a = points_.at(u), b = points_.at(w);
    return curve(u, w, {b.x - a.x, b.y - a.y}, {a.x - b.x, a.y - b.y});
}

int PlanarSketch::curve(Vertex u, Vertex w, Point at_u, Point at_w) {
    arcs_.push_back({u, w, at_u, at_w});
    return static_cast<int>(arcs_.size() - 1);
}

Triangulation PlanarSketch::build() const {
    std::vector<std::vector<std::pair<double, Dart>>> around(points_.size());
    std::vector<std::pair<Dart, Dart>> twins;
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        const Arc& a = arcs_[k];
        Dart d = static_cast<Dart>(2 * k);
        around.at(a.u).emplace_back(std::atan2(a.at_u.y, a.at_u.x), d);
        around.at(a.w).emplace_back(std::atan2(a.at_w.y, a.at_w.x), d + 1);
        twins.emplace_back(d, d + 1);
    }
    std::vector<std::vector<Dart>> rotations;
    for (auto& list : around) {
        std::sort(list.begin(), list.end());
        for (std::size_t i = 1; i < list.size(); ++i) {
            if (list[i].first == list[i - 1].first) fail(ErrorKind::invalid_argument, "sketch has coincident directions");
        }
        rotations.emplace_back();
        for (auto& [angle, d] : list) rotations.back().push_back(d);
    }
    return Triangulation::from_rotations(rotations, twins);
}

DevelopSeed seed_for(const Triangulation& g, const SpanningTree& t, Vertex v_inf, Vertex v0, Vertex v1) {
    for (Dart d : g.rotation(v_inf)) {
        if (g.head(d) != v0 || !t.contains(g.edge_of(d))) continue;
        if (g.origin(g.face_prev(d)) == v1) return {d, false};
        if (g.origin(g.face_prev(g.twin(d))) == v1) return {d, true};
    }
    fail(ErrorKind::invalid_argument, "no seed with the requested vertices");
}

// ---------------------------------------------------------------------------
// Polyhedra

Triangulation tetrahedron() {
    return triangulation_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

namespace {

// Apexes 0 and k+1 over a k-cycle 1..k.
Triangulation bipyramid(int k) {
    std::vector<std::array<Vertex, 3>> faces;
    for (int i = 0; i < k; ++i) {
        Vertex a = 1 + i, b = 1 + (i + 1) % k;
        faces.push_back({0, a, b});
        faces.push_back({k + 1, b, a});
    }
    return triangulation_from_faces(k + 2, faces);
}

}  // namespace

Triangulation octahedron() { return bipyramid(4); }

Triangulation pentagonal_bipyramid() { return bipyramid(5); }

Triangulation icosahedron() {
    std::vector<std::array<Vertex, 3>> faces;
    for (int i = 0; i < 5; ++i) {
        Vertex u0 = 1 + i, u1 = 1 + (i + 1) % 5;
        Vertex l0 = 6 + i, l1 = 6 + (i + 1) % 5;
        faces.push_back({0, u0, u1});
        faces.push_back({u0, l0, u1});
        faces.push_back({u1, l0, l1});
        faces.push_back({l0, 11, l1});
    }
    return triangulation_from_faces(12, faces);
}

// ---------------------------------------------------------------------------
// Figures

GraphFixture tetrahedron_example() {
    PlanarSketch s;
    Vertex c = s.vertex(0, 0), top = s.vertex(0, 2), lr = s.vertex(1.7, -1), ll = s.vertex(-1.7, -1);
    s.edge(c, top);
    s.edge(top, lr);
    int bottom = s.edge(lr, ll);
    int left = s.edge(ll, top);
    int inner = s.edge(ll, c);
    s.edge(lr, c);
    GraphFixture f{"tetrahedron-example", "Example 1, Figs. 1-3", s.build(), std::nullopt, {}};
    f.tree = SpanningTree(f.graph, {left, inner, bottom});
    f.seed = seed_for(f.graph, *f.tree, c, ll, lr);
    return f;
}

namespace {

struct TenVertexSketch {
    Triangulation graph;
    std::vector<int> e;
};

// Fig. 4: 0 (0,0), 1 (2,0), 2 (-2,0), 3 (0,2), 4 (0,-2), 5 (3,3), 6 (3,-3),
// 7 (-3,-3), 8 (-3,3), 9 (0,6).
TenVertexSketch ten_vertex_sketch() {
    PlanarSketch s;
    for (auto [x, y] : std::vector<std::pair<double, double>>{
             {0, 0}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}, {3, 3}, {3, -3}, {-3, -3}, {-3, 3}, {0, 6}}) {
        s.vertex(x, y);
    }
    std::vector<int> e;
    for (auto [u, w] : std::vector<std::pair<int, int>>{
             {4, 0}, {0, 3}, {3, 1}, {1, 0}, {0, 2}, {2, 4}, {2, 3}, {4, 1},          // e0-e7 diamond
             {5, 6}, {6, 7}, {7, 8}, {8, 5},                                          // e8-e11 square
             {5, 1}, {1, 6}, {6, 4}, {4, 7}, {7, 2}, {2, 8}, {8, 3}, {3, 5},          // e12-e19 zigzag
             {8, 9}, {9, 5}}) {                                                       // e20-e21
        e.push_back(s.edge(u, w));
    }
    e.push_back(s.curve(9, 7, {-8, -3}, {-1, 1}));  // e22
    e.push_back(s.curve(9, 6, {8, -3}, {1, 1}));    // e23
    return {s.build(), e};
}

}  // namespace

GraphFixture ten_vertex_example() {
    auto [g, e] = ten_vertex_sketch();
    GraphFixture f{"ten-vertex-example", "Example 2, Fig. 4", g, std::nullopt, {}};
    f.tree = SpanningTree(g, {e[3], e[2], e[7], e[5], e[12], e[13], e[9], e[11], e[21]});
    f.seed = seed_for(g, *f.tree, 2, 4, 0);
    return f;
}

GraphFixture ten_vertex_long_tree() {
    auto [g, e] = ten_vertex_sketch();
    GraphFixture f{"ten-vertex-long-tree", "10-cusp section, second spanning tree for Example 2", g,
                   std::nullopt, {}};
    f.tree = SpanningTree(g, {e[20], e[21], e[22], e[23], e[3], e[13], e[19], e[15], e[17]});
    f.seed = seed_for(g, *f.tree, 0, 1, 3);
    return f;
}

GraphFixture seven_vertex_example() {
    Triangulation g = pentagonal_bipyramid();
    GraphFixture f{"seven-vertex-example", "7-cusp section, bipyramid with its spanning tree", g,
                   std::nullopt, {}};
    f.tree = SpanningTree::from_vertex_pairs(g, {{0, 1}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
    f.seed = seed_for(g, *f.tree, 0, 1, 2);
    return f;
}

// 0 (0,0), 1 (-2,-2), 2 (2,2), 3 (2,-2), 4 (-2,2), 5 (0,2), 6 (0,-2), 7 (4,0),
// 8 (0,4), 9 (0,-4), 10 (-5,0).  The lowest curve passes through (0,-5).
GraphFixture eleven_vertex_example() {
    PlanarSketch s;
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0, 0}, {-2, -2}, {2, 2}, {2, -2}, {-2, 2}, {0, 2},
                                                              {0, -2}, {4, 0}, {0, 4}, {0, -4}, {-5, 0}}) {
        s.vertex(x, y);
    }
    std::vector<int> e;
    for (auto [u, w] : std::vector<std::pair<int, int>>{
             {1, 4}, {4, 5}, {5, 2}, {2, 3}, {3, 6}, {6, 1},  // e0-e5 square
             {6, 0}, {0, 5}, {1, 0}, {0, 2}, {4, 0}, {0, 3},  // e6-e11 through the center
             {2, 7}, {7, 3}, {1, 9}, {9, 3}, {6, 9},          // e12-e16
             {2, 8}, {8, 4}, {5, 8}, {1, 10}, {10, 4}}) {     // e17-e21
        e.push_back(s.edge(u, w));
    }
    e.push_back(s.curve(10, 8, {1, 3}, {-1, 0}));     // e22
    e.push_back(s.curve(10, 9, {1, -3}, {-1, 0}));    // e23
    e.push_back(s.curve(9, 7, {1, 0}, {-0.5, -1.5}));  // e24
    e.push_back(s.curve(8, 7, {1, 0}, {1, 1.5}));      // e25
    e.push_back(s.curve(10, 7, {0, -1}, {0, -1}));     // e26
    GraphFixture f{"eleven-vertex-example", "11-cusp section, Fig. 7", s.build(), std::nullopt, {}};
    f.tree = SpanningTree(f.graph, {e[8], e[14], e[16], e[15], e[19], e[12], e[21], e[24], e[25], e[26]});
    f.seed = seed_for(f.graph, *f.tree, 0, 1, 6);
    return f;
}

// 0 (0,-3), 1 (0,0), 2 (0,3), 3 (5,0), 4 (-5,0).
GraphFixture degree_two_example() {
    PlanarSketch s;
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0, -3}, {0, 0}, {0, 3}, {5, 0}, {-5, 0}}) {
        s.vertex(x, y);
    }
    for (auto [u, w] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 0}, {4, 0}, {3, 2}, {2, 4}}) {
        s.edge(u, w);
    }
    s.curve(0, 2, {1.5, 2}, {1.5, -2});
    s.curve(0, 2, {-1.5, 2}, {-1.5, -2});
    s.curve(4, 3, {2, 6}, {-2, 6});
    return {"degree-two-example", "Example 3, Fig. 5", s.build(), std::nullopt, {}};
}

// 0 (0,0), 1 (2,0) carrying the loop, 2 (-4,0), 3 (4,0).  Directions at
// vertex 1 follow the topology: the curves from vertex 2 stay outside the
// loop.
GraphFixture degree_one_example() {
    PlanarSketch s;
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0, 0}, {2, 0}, {-4, 0}, {4, 0}}) s.vertex(x, y);
    s.edge(0, 1);
    s.edge(3, 1);
    s.curve(1, 1, {0, 1}, {0, -1});
    s.curve(2, 1, {1, 1}, {1, 1});
    s.curve(2, 1, {1, -1}, {1, -1});
    s.curve(2, 3, {0, 1}, {0, 1});
    return {"degree-one-example", "Example 4, Fig. 6", s.build(), std::nullopt, {}};
}

// 0 (0,-3), 1 (0,3), 2 (-5,0), 3 (5,0), 4 and 5 the degree-2 vertices at
// (-1.13,0) and (1.13,0).  The outer face is closed by a curve from 2 to 3.
GraphFixture adjacent_degree_twos() {
    PlanarSketch s;
    for (auto [x, y] : std::vector<std::pair<double, double>>{
             {0, -3}, {0, 3}, {-5, 0}, {5, 0}, {-1.13, 0}, {1.13, 0}}) {
        s.vertex(x, y);
    }
    for (auto [u, w] : std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}}) s.edge(u, w);
    s.curve(0, 1, {-3.1, 2}, {-3.1, -2});
    s.curve(0, 1, {3.1, 2}, {3.1, -2});
    for (auto [u, w] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}}) s.edge(u, w);
    s.curve(2, 3, {2, 6}, {-2, 6});
    return {"adjacent-degree-twos", "Lemma on adjacent triangles, Fig. 8", s.build(), std::nullopt, {}};
}

// ---------------------------------------------------------------------------
// Generator lists

namespace {

Moebius mat(const char* a, const char* b, const char* c, const char* d) {
    return Moebius(parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d));
}

std::vector<LabeledGenerator> named(const std::string& prefix, const std::vector<Moebius>& ms) {
    std::vector<LabeledGenerator> out;
    for (std::size_t i = 0; i < ms.size(); ++i) out.push_back({prefix + std::to_string(i + 1), ms[i], false});
    return out;
}

std::vector<std::string> ten_cusp_words(const std::string& x) {
    auto g = [&](int i) { return x + std::to_string(i); };
    std::string inv1 = g(1) + "^-1";
    return {g(2) + " " + inv1,
            g(3) + " " + inv1,
            g(4) + " " + inv1,
            g(5) + " " + inv1,
            g(2) + " " + inv1 + " " + g(9) + " " + g(5) + " " + g(8) + " " + g(4) + " " + g(7) + " " + g(3),
            g(7) + " " + g(3) + " " + g(2) + " " + inv1 + " " + g(9) + " " + g(5) + " " + g(8) + " " + g(4),
            g(8) + " " + g(4) + " " + g(7) + " " + g(3) + " " + g(2) + " " + inv1 + " " + g(9) + " " + g(5),
            g(9) + " " + g(5) + " " + g(8) + " " + g(4) + " " + g(7) + " " + g(3) + " " + g(2) + " " + inv1};
}

std::vector<std::string> eleven_cusp_words(const std::string& x) {
    auto g = [&](int i) { return x + std::to_string(i); };
    return {g(8), g(9), g(4) + " " + g(3), g(6) + " " + g(5), g(7) + " " + g(6),
            g(3) + " " + g(2) + "^-1 " + g(1)};
}

std::vector<Moebius> ten_cusp_gammas() {
    return {mat("1", "4", "0", "1"),     mat("1", "0", "5", "1"),       mat("6", "-5", "5", "-4"),
            mat("11", "-20", "5", "-9"), mat("16", "-45", "5", "-14"),  mat("11", "-5", "20", "-9"),
            mat("31", "-45", "20", "-29"), mat("51", "-125", "20", "-49"), mat("71", "-245", "20", "-69")};
}

std::vector<Moebius> eleven_cusp_gammas() {
    return {mat("1", "6", "0", "1"),      mat("-29", "6", "-5", "1"),    mat("5", "-4", "4", "-3"),
            mat("11", "-20", "5", "-9"),  mat("16", "-45", "5", "-14"),  mat("17", "-64", "4", "-15"),
            mat("26", "-125", "5", "-24"), mat("25", "-11", "16", "-7"), mat("-73", "251", "-16", "55"),
            mat("-49", "125", "-20", "51"), mat("111", "-605", "20", "-109"), mat("-118", "281", "-21", "50"),
            mat("-113", "296", "-21", "55")};
}

}  // namespace

GroupFixture seven_cusp_arithmetic() {
    return {"seven-cusp-arithmetic",
            "7-cusp section, generators of the arithmetic group",
            named("a", {mat("1", "5", "0", "1"), mat("1", "0", "4", "1"), mat("5", "-4", "4", "-3"),
                        mat("9", "-16", "4", "-7"), mat("13", "-36", "4", "-11"), mat("17", "-64", "4", "-15")}),
            {}};
}

GroupFixture seven_cusp_perturbed() {
    return {"seven-cusp-perturbed",
            "7-cusp section, perturbed generators",
            named("b", {mat("1", "5", "0", "1"), mat("1", "0", "4", "1"), mat("53/11", "-441/110", "40/11", "-31/11"),
                        mat("47/5", "-441/25", "4", "-37/5"), mat("1331/97", "-380689/9700", "400/97", "-1137/97"),
                        mat("569/31", "-217083/3100", "400/93", "-507/31")}),
            {}};
}

GroupFixture ten_cusp_arithmetic() {
    return {"ten-cusp-arithmetic", "10-cusp section, generators with the fifth corrected",
            named("g", ten_cusp_gammas()), ten_cusp_words("g")};
}

GroupFixture ten_cusp_perturbed() {
    Moebius p = mat("1", "101/100", "0", "1");
    Moebius a2 = mat("1", "0", "499/100", "1");
    Moebius a6 = mat("111197/10399", "-5090299/1039900", "199600/10399", "-90399/10399");
    std::vector<Moebius> a{mat("1", "404/100", "0", "1"), a2};
    for (int k = 1; k <= 3; ++k) a.push_back(a2.conjugate_by(p.pow(k)));
    a.push_back(a6);
    for (int k = 1; k <= 3; ++k) a.push_back(a6.conjugate_by(p.pow(k)));
    return {"ten-cusp-perturbed", "10-cusp section, deformation by P", named("a", a), ten_cusp_words("a")};
}

GroupFixture eleven_cusp_arithmetic() {
    return {"eleven-cusp-arithmetic", "11-cusp section, generators", named("g", eleven_cusp_gammas()),
            eleven_cusp_words("g")};
}

GroupFixture eleven_cusp_perturbed() {
    auto g = eleven_cusp_gammas();
    Moebius t = mat("1", "1/100", "0", "1");
    Moebius t2 = t * t, ti = t.inverse(), t2i = t2.inverse();
    std::vector<Moebius> a{mat("1", "602/100", "0", "1"),
                           t2 * g[1],
                           mat("503/101", "-40401/10100", "400/101", "-301/101"),
                           t * g[3] * ti,
                           t * g[4] * ti,
                           mat("1707/101", "-644809/10100", "400/101", "-1505/101"),
                           t2 * g[6] * t2i,
                           t * g[7],
                           t2 * g[8] * ti,
                           t * g[9] * ti,
                           t2 * g[10] * t2i,
                           t2 * g[11] * ti,
                           t2 * g[12] * ti};
    return {"eleven-cusp-perturbed", "11-cusp section, deformation by tau", named("a", a),
            eleven_cusp_words("a")};
}

std::array<Rational, 4> ten_cusp_gamma5_as_printed() {
    return {Rational(16), Rational(-45), Rational(5), Rational(14)};
}

std::vector<PrintedPairing> ten_vertex_printed_pairings() {
    auto f = [](const char* s) { return Fraction::parse(s); };
    return {{mat("-24", "5", "-5", "1"), {f("0"), f("1/2")}, {f("5"), f("14/3")}},
            {mat("-114", "415", "-25", "91"), {f("29/8"), f("11/3")}, {f("14/3"), f("9/2")}},
            {mat("-112", "271", "-31", "75"), {f("7/3"), f("5/2")}, {f("18/5"), f("29/8")}}};
}

std::vector<Fraction> ten_vertex_printed_polygon() {
    std::vector<Fraction> out{Fraction::infinity()};
    for (const char* s : {"0", "1/2", "1", "3/2", "2", "7/3", "5/2", "3", "10/3", "7/2", "18/5", "29/8", "11/3", "4",
                          "9/2", "14/3", "5"}) {
        out.push_back(Fraction::parse(s));
    }
    return out;
}

std::vector<GraphFixture> graph_fixtures() {
    return {tetrahedron_example(),  ten_vertex_example(), ten_vertex_long_tree(), seven_vertex_example(),
            eleven_vertex_example(), degree_two_example(), degree_one_example(),  adjacent_degree_twos()};
}

std::vector<GroupFixture> group_fixtures() {
    return {seven_cusp_arithmetic(),  seven_cusp_perturbed(),  ten_cusp_arithmetic(),
            ten_cusp_perturbed(),     eleven_cusp_arithmetic(), eleven_cusp_perturbed()};
}

GraphFixture graph_fixture(const std::string& name) {
    for (auto& f : graph_fixtures()) {
        if (f.name == name) return f;
    }
    if (name == "tetrahedron") return {name, "", tetrahedron(), std::nullopt, {}};
    if (name == "octahedron") return {name, "", octahedron(), std::nullopt, {}};
    if (name == "icosahedron") return {name, "", icosahedron(), std::nullopt, {}};
    if (name == "pentagonal-bipyramid") return {name, "", pentagonal_bipyramid(), std::nullopt, {}};
    fail(ErrorKind::invalid_argument, "unknown graph fixture '" + name + "'");
}

GroupFixture group_fixture(const std::string& name) {
    for (auto& f : group_fixtures()) {
        if (f.name == name) return f;
    }
    fail(ErrorKind::invalid_argument, "unknown group fixture '" + name + "'");
}

}  // namespace systole
