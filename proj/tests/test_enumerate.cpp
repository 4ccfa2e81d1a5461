#include <doctest.h>

#include "oracles.hpp"
#include "systole/enumerate.hpp"
#include "systole/error.hpp"
#include "systole/fixtures.hpp"

using namespace systole;

TEST_CASE("small counts") {
    CHECK(enumerate_triangulations({4, 3, false, false}).size() == 1);
    CHECK(enumerate_triangulations({5, 3, false, false}).size() == 1);
    CHECK(enumerate_triangulations({6, 3, false, false}).size() == 2);
    auto four = enumerate_triangulations({4, 3, false, false});
    CHECK(canonical_code(four.front()) == canonical_code(tetrahedron()));
}

TEST_CASE("enumeration matches flip closure with brute-force isomorphism") {
    for (int n = 4; n <= 8; ++n) {
        INFO("n = " << n);
        auto naive = oracle::all_simple(n);
        auto ours = enumerate_triangulations({n, 3, false, false});
        CHECK(ours.size() == naive.size());
        for (const auto& g : ours) {
            auto m = oracle::from_library(g);
            int matches = 0;
            for (const auto& x : naive) matches += oracle::isomorphic(m, x);
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("threads do not change the stream") {
    auto one = enumerate_triangulations({9, 3, false, false}, 1);
    auto three = enumerate_triangulations({9, 3, false, false}, 3);
    REQUIRE(one.size() == three.size());
    for (std::size_t k = 0; k < one.size(); ++k) CHECK(canonical_code(one[k]) == canonical_code(three[k]));
}

TEST_CASE("query limits") {
    CHECK_THROWS_AS(check_query({3, 3, false, false}), Error);
    try {
        check_query({13, 3, false, false});
        FAIL("expected a resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
    try {
        check_query({6, 2, true, true});
        FAIL("expected a resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
}

TEST_CASE("max-min densities to ten vertices") {
    for (int n = 4; n <= 10; ++n) {
        INFO("n = " << n);
        auto ext = max_min_density({n, 3, false, false});
        CHECK(ext.value == expected_max_min_density(n));
        for (const auto& g : ext.extremal) CHECK(density(g).min_density == ext.value);
    }
    auto nine = max_min_density({9, 3, false, false});
    bool degrees_4_3_5_6 = false;
    for (const auto& g : nine.extremal) {
        int fours = 0, fives = 0;
        for (int v = 0; v < 9; ++v) {
            fours += g.degree(v) == 4;
            fives += g.degree(v) == 5;
        }
        degrees_4_3_5_6 = degrees_4_3_5_6 || (fours == 3 && fives == 6);
    }
    CHECK(degrees_4_3_5_6);
}

TEST_CASE("vertex splits keep the map a triangulation") {
    for (const auto& g : enumerate_triangulations({7, 3, false, false})) {
        for (const auto& h : vertex_splits(g)) {
            auto r = validate(h);
            CHECK(r.valid);
            CHECK(r.vertices == 8);
            CHECK(r.min_degree >= 3);
        }
    }
}

TEST_CASE("certified traces of the non-regular fixtures") {
    CHECK(certified_trace(adjacent_degree_twos().graph) <= 14);
    auto one = degree_one_example().graph;
    CHECK(certified_trace(one) > 2);
    CHECK(certified_trace(tetrahedron()) == 7);
}

TEST_CASE("propositions at seven and eight vertices") {
    for (int n : {7, 8}) {
        auto r = verify_proposition(n);
        CHECK(r.holds);
        CHECK(r.max_min_density == r.expected);
        CHECK(r.trace_bound == r.max_min_density - 2);
        for (const auto& f : r.families) {
            INFO(f.name);
            CHECK(f.members > 0);
            CHECK(f.below_bound);
            CHECK(f.worst_trace <= r.trace_bound);
        }
        auto j = proposition_report_to_json(r);
        CHECK(j["holds"] == true);
    }
}
