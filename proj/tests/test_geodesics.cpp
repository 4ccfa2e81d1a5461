#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "systole/enumerate.hpp"
#include "systole/error.hpp"
#include "systole/fixtures.hpp"
#include "systole/geodesics.hpp"

using namespace systole;

namespace {

std::int64_t plain_trace(unsigned bits, int len) {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    for (int i = 0; i < len; ++i) {
        if (bits >> i & 1) {  // R = (1 0; 1 1)
            a += b;
            c += d;
        } else {  // L = (1 1; 0 1)
            b += a;
            d += c;
        }
    }
    return a + d;
}

}  // namespace

TEST_CASE("walk length cutoff against brute force to length 14") {
    // Shortest trace over words of each length containing both letters.
    std::map<int, std::int64_t> least;
    for (int len = 2; len <= 14; ++len) {
        std::int64_t best = INT64_MAX;
        for (unsigned bits = 1; bits + 1 < (1u << len); ++bits) best = std::min(best, plain_trace(bits, len));
        least[len] = best;
    }
    for (std::int64_t bound = 3; bound <= 15; ++bound) {
        INFO("bound " << bound);
        int cutoff = walk_length_cutoff(bound);
        for (int len = cutoff + 1; len <= 14; ++len) CHECK(least[len] > bound);
        if (cutoff >= 2 && cutoff <= 14) CHECK(least[cutoff] <= bound);
    }
}

TEST_CASE("turns") {
    auto g = tetrahedron();
    for (Dart c = 0; c < g.num_darts(); ++c) {
        CHECK(turn_left(g, c) == g.next(c));
        // Both turns leave from the face entered.
        CHECK(g.face_of(turn_left(g, c)) == g.face_of(g.twin(c)));
        CHECK(g.face_of(turn_right(g, c)) == g.face_of(g.twin(c)));
        // Three lefts circle origin(c).
        CHECK(follow_walk(g, c, "LLL") == c);
    }
}

TEST_CASE("systoles of the regular solids") {
    auto t = systole_combinatorial(tetrahedron());
    CHECK(t.trace == 7);
    CHECK(std::abs(t.length - 2 * std::acosh(3.5)) < 1e-12);
    auto o = systole_combinatorial(octahedron());
    CHECK(o.trace == 14);
    CHECK(std::abs(o.length - schmutz_bound(6)) < 1e-12);
    auto i = systole_combinatorial(icosahedron());
    CHECK(i.trace == 23);
    CHECK(i.witnesses.size() == 30);
    CHECK(std::abs(i.length - 2 * std::acosh(11.5)) < 1e-12);
}

TEST_CASE("spectrum witnesses close up and carry their traces") {
    for (const auto& f : graph_fixtures()) {
        if (!validate(f.graph).regular) continue;
        INFO(f.name);
        auto ws = combinatorial_spectrum(f.graph, 24);
        std::set<std::string> seen;
        for (const auto& w : ws) {
            CHECK(follow_walk(f.graph, w.darts.front(), w.word) == w.darts.front());
            CHECK(lr_word_value(w.word).trace() == w.trace);
            CHECK(w.abs_trace() <= 24);
            CHECK(w.word.find('L') != std::string::npos);
            CHECK(w.word.find('R') != std::string::npos);
        }
        for (std::size_t k = 1; k < ws.size(); ++k) CHECK_FALSE(witness_less(ws[k], ws[k - 1]));
    }
}

TEST_CASE("density walks") {
    auto g = tetrahedron();
    auto w = verify_density_length(g, 0);
    CHECK(w.trace == 7);
    auto ten = ten_vertex_example().graph;
    bool found = false;
    for (int e = 0; e < ten.num_edges() && !found; ++e) {
        auto [u, v] = ten.endpoints(e);
        if (ten.degree(u) * ten.degree(v) != 20) continue;
        found = true;
        auto x = verify_density_length(ten, e);
        CHECK(abs(x.trace) == 18);
        CHECK(std::abs(x.length - 2 * std::acosh(9.0)) < 1e-12);
    }
    CHECK(found);
    // Degrees 2 and 3: L R^0 L R^1, trace 4.
    CHECK(lr_word_value("LLR").trace() == 4);
    CHECK(std::abs(trace_to_length(4) - 2 * std::acosh(2.0)) < 1e-12);
    // A degree-2 vertex next to a degree-2 vertex has density 4: not hyperbolic.
    auto bigon = insert_bigon_vertex(degree_two_example().graph, 0);
    for (int e = 0; e < bigon.num_edges(); ++e) {
        auto [u, v] = bigon.endpoints(e);
        if (u != v && bigon.degree(u) * bigon.degree(v) <= 4) {
            CHECK_THROWS_AS(verify_density_length(bigon, e), Error);
        }
    }
}

TEST_CASE("words in named generators") {
    auto gens = eleven_cusp_arithmetic().generators;
    // (11 -20; 5 -9)(5 -4; 4 -3) = (-25 16; -11 7) by hand.
    CHECK(gens[3].matrix == Moebius(11, -20, 5, -9));
    CHECK(gens[2].matrix == Moebius(5, -4, 4, -3));
    CHECK(word_value(gens, "g4 g3") == Moebius(-25, 16, -11, 7));
    CHECK(word_trace(gens, "g4 g3") == -18);
    CHECK(word_trace(gens, "") == 2);
    auto ten = ten_cusp_arithmetic().generators;
    CHECK(abs(word_trace(ten, "g2 g1^-1")) == 18);
    auto parsed = parse_word(gens, "g3*g2^-1.g1^2");
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[1].power == -1);
    CHECK(parsed[2].power == 2);
    CHECK(format_word(gens, parsed) == "g3 g2^-1 g1^2");
    CHECK_THROWS_AS(parse_word(gens, "g99"), Error);
}

TEST_CASE("property: every edge walk closes with trace density - 2") {
    std::size_t edges = 0;
    for (int n = 4; n <= 9; ++n) {
        for (const auto& g : enumerate_triangulations({n, 3, false, false})) {
            for (int e = 0; e < g.num_edges(); ++e) {
                auto [u, v] = g.endpoints(e);
                auto w = verify_density_length(g, e);
                REQUIRE(w.trace == g.degree(u) * g.degree(v) - 2);
                REQUIRE(follow_walk(g, w.start, w.word) == w.start);
                ++edges;
            }
        }
    }
    CHECK(edges > 1000);
}
