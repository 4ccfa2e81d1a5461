#include <doctest.h>

#include <algorithm>
#include <map>

#include "systole/enumerate.hpp"
#include "systole/error.hpp"
#include "systole/fixtures.hpp"
#include "systole/triangulation.hpp"
#include "systole/triangulation_io.hpp"

using namespace systole;

namespace {

std::vector<int> sorted_degrees(const Triangulation& g) {
    auto d = validate(g).degrees;
    std::sort(d.begin(), d.end());
    return d;
}

int excess(const Triangulation& g) {
    int s = 0;
    for (int v = 0; v < g.num_vertices(); ++v) s += 6 - g.degree(v);
    return s;
}

std::pair<int, int> duplicate_pair(const Triangulation& g) {
    std::map<std::pair<int, int>, int> seen;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) continue;
        auto [u, v] = g.endpoints(e);
        auto key = std::minmax(u, v);
        if (auto it = seen.find(key); it != seen.end()) return {it->second, e};
        seen[key] = e;
    }
    return {-1, -1};
}

}  // namespace

TEST_CASE("validation of the named maps") {
    auto t = validate(tetrahedron());
    CHECK(t.valid);
    CHECK(t.regular);
    CHECK(t.degrees == std::vector<int>{3, 3, 3, 3});

    auto two = validate(degree_two_example().graph);
    CHECK(two.valid);
    CHECK_FALSE(two.regular);
    CHECK(two.has_duplicates);
    CHECK(sorted_degrees(degree_two_example().graph) == std::vector<int>{2, 3, 3, 5, 5});

    auto one = validate(degree_one_example().graph);
    CHECK(one.valid);
    CHECK(one.has_loops);
    CHECK(sorted_degrees(degree_one_example().graph) == std::vector<int>{1, 2, 3, 6});

    for (const auto& f : graph_fixtures()) {
        INFO(f.name);
        auto r = validate(f.graph);
        CHECK(r.valid);
        CHECK(r.degree_excess == 12);
    }
}

TEST_CASE("a triangulated torus is rejected") {
    // K7 on the torus: rotation at i is i+1, i+3, i+2, i+6, i+4, i+5.
    std::vector<std::vector<Vertex>> nbrs(7);
    for (int i = 0; i < 7; ++i) {
        for (int k : {1, 3, 2, 6, 4, 5}) nbrs[i].push_back((i + k) % 7);
    }
    auto g = Triangulation::from_neighbor_lists(nbrs);
    auto r = validate(g);
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.diagnostics.empty());
    CHECK_THROWS_AS(require_valid(g), Error);
}

TEST_CASE("K3,3 has no rotation system that triangulates the sphere") {
    // Any rotation gives 9 edges on 6 vertices; triangles would need 6 faces,
    // but a bipartite graph has no triangles at all.
    std::vector<std::vector<Vertex>> nbrs{{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    auto r = validate(Triangulation::from_neighbor_lists(nbrs));
    CHECK_FALSE(r.valid);
}

TEST_CASE("densities") {
    auto all_equal = [](const Triangulation& g, std::int64_t d) {
        auto r = density(g);
        return r.min_density == d && std::all_of(r.edge_density.begin(), r.edge_density.end(),
                                                 [d](std::int64_t x) { return x == d; });
    };
    CHECK(all_equal(tetrahedron(), 9));
    CHECK(all_equal(octahedron(), 16));
    CHECK(all_equal(icosahedron(), 25));
    auto r = density(pentagonal_bipyramid());
    CHECK(r.min_density == 16);
    CHECK(r.edge_density[r.witness_edge] == r.min_density);
    auto loop = density(degree_one_example().graph);
    CHECK(std::count(loop.loop_edge.begin(), loop.loop_edge.end(), true) == 1);
}

TEST_CASE("stellation") {
    CHECK(canonical_code(stellate(octahedron(), {})) == canonical_code(octahedron()));
    auto s = stellate(tetrahedron(), {0, 1, 2, 3});
    CHECK(s.num_vertices() == 8);
    CHECK(sorted_degrees(s) == std::vector<int>{3, 3, 3, 3, 6, 6, 6, 6});
    CHECK(density(s).min_density == 18);
    auto o = stellate(octahedron(), {0});
    CHECK(o.num_vertices() == 7);
    CHECK(sorted_degrees(o) == std::vector<int>{3, 4, 4, 4, 5, 5, 5});
    // The new vertex (degree 3) meets three degree-5 vertices: 3 * 5.
    CHECK(density(o).min_density == 15);
    CHECK_THROWS_AS(stellate(tetrahedron(), {0, 0}), Error);
}

TEST_CASE("duplicate edge splits") {
    auto five = degree_two_example().graph;
    auto [a, b] = duplicate_pair(five);
    REQUIRE(a >= 0);
    CHECK(duplicate_edge_split(five, a, b) == std::pair<int, int>{2, 4});
    auto four = degree_one_example().graph;
    auto [c, d] = duplicate_pair(four);
    REQUIRE(c >= 0);
    CHECK(duplicate_edge_split(four, c, d) == std::pair<int, int>{2, 2});
    CHECK_THROWS_AS(duplicate_edge_split(tetrahedron(), 0, 1), Error);
}

TEST_CASE("pattern certificates") {
    CHECK(pattern_certificates(tetrahedron()).empty());
    auto fig8 = pattern_certificates(adjacent_degree_twos().graph);
    CHECK(std::any_of(fig8.begin(), fig8.end(), [](const PatternCertificate& c) {
        return c.kind == PatternKind::adjacent_low_degree && c.trace == 14;
    }));
    auto g = degree_one_example().graph;
    auto certs = pattern_certificates(g);
    bool pendant = false;
    for (const auto& c : certs) {
        if (c.kind != PatternKind::pendant) continue;
        pendant = true;
        Vertex apex = c.vertices.back();
        CHECK(c.trace == 4 * g.degree(apex) - 2);
        CHECK(abs(c.element.trace()) == c.trace);
    }
    CHECK(pendant);
}

TEST_CASE("bigon and pendant insertion") {
    auto g = insert_bigon_vertex(octahedron(), 0);
    auto r = validate(g);
    CHECK(r.valid);
    CHECK(r.min_degree == 2);
    CHECK(r.has_duplicates);
    auto p = insert_pendant(octahedron(), 0);
    auto q = validate(p);
    CHECK(q.valid);
    CHECK(q.min_degree == 1);
    CHECK(q.has_loops);
    CHECK(q.degree_excess == 12);
}

TEST_CASE("text and JSON round trips") {
    for (const auto& f : graph_fixtures()) {
        INFO(f.name);
        auto text = format_triangulation_text(f.graph);
        auto back = parse_triangulation(text);
        CHECK(format_triangulation_text(back) == text);
        auto j = triangulation_to_json(f.graph);
        CHECK(format_triangulation_text(triangulation_from_json(j)) == text);
        CHECK(format_triangulation_text(parse_triangulation(j.dump())) == text);
    }
    auto adj = parse_triangulation("# tetrahedron\nadj 0: 1 2 3\nadj 1: 0 3 2\nadj 2: 0 1 3\nadj 3: 0 2 1\n");
    CHECK(validate(adj).valid);
    CHECK(canonical_code(adj) == canonical_code(tetrahedron()));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_triangulation("rotation 0: 0 1 2\ntwin 0 x\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_triangulation("rotation 0: 0 1\n"), Error);
}

TEST_CASE("canonical codes identify mirror images") {
    auto g = seven_vertex_example().graph;
    CHECK(canonical_code(g) == canonical_code(g.mirror()));
    CHECK(canonical_code(g) == canonical_code(g.canonical()));
    CHECK(canonical_code(octahedron()) != canonical_code(stellate(tetrahedron(), {0, 1})));
}

TEST_CASE("property: the degree excess is 12 on every enumerated map") {
    std::size_t checked = 0;
    for (int n = 4; n <= 10; ++n) {
        for (const auto& g : enumerate_triangulations({n, 3, false, false})) {
            REQUIRE(excess(g) == 12);
            REQUIRE(validate(g).regular);
            ++checked;
            for (int e = 0; e < g.num_edges(); ++e, ++checked) REQUIRE(excess(insert_bigon_vertex(g, e)) == 12);
            for (Dart d = 0; d < g.num_darts(); ++d, ++checked) REQUIRE(excess(insert_pendant(g, d)) == 12);
        }
    }
    CHECK(checked >= 10000);
}
