#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "systole/error.hpp"
#include "systole/modular.hpp"

using namespace systole;

namespace {

// Plain 64-bit matrices, independent of the library arithmetic.
using M2 = std::array<long, 4>;

M2 mul(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

M2 word(const std::string& w) {
    M2 m{1, 0, 0, 1};
    for (char ch : w) m = mul(m, ch == 'L' ? M2{1, 1, 0, 1} : M2{1, 0, 1, 1});
    return m;
}

std::string repeat(char ch, long n) { return std::string(static_cast<std::size_t>(n), ch); }

}  // namespace

TEST_CASE("Farey adjacency") {
    CHECK(farey_adjacent(Fraction::infinity(), Fraction(0)));
    CHECK(farey_adjacent(Fraction(1, 2), Fraction(1, 3)));
    CHECK_FALSE(farey_adjacent(Fraction(1, 3), Fraction(2, 3)));
    // Neighbors of 1/3 with denominator at most 3, listed by hand: 0, 1/2, 1/0.
    for (long q = 1; q <= 3; ++q) {
        for (long p = -3; p <= 3; ++p) {
            if (std::gcd(p, q) != 1 || (p == 1 && q == 3)) continue;
            bool expected = (p == 0 && q == 1) || (p == 1 && q == 2);
            CHECK(farey_adjacent(Fraction(1, 3), Fraction(p, q)) == expected);
        }
    }
    auto [m, d] = farey_apexes(Fraction(0), Fraction(1));
    CHECK(m == Fraction(1, 2));
    CHECK(d == Fraction::infinity());
}

TEST_CASE("fraction parsing and ordering") {
    CHECK(Fraction::parse("6/4") == Fraction(3, 2));
    CHECK(Fraction::parse("-2/-4") == Fraction(1, 2));
    CHECK(Fraction::parse("inf").is_infinity());
    CHECK(Fraction::parse("1/0").is_infinity());
    CHECK(Fraction(5, 3) < Fraction::infinity());
    CHECK(Fraction(-1) < Fraction(0));
    CHECK(Fraction(7, 3).pretty() == "7/3");
    CHECK(Fraction::infinity().str() == "1/0");
    CHECK_THROWS_AS(Fraction::parse("1/x"), Error);
}

TEST_CASE("Moebius basics") {
    CHECK_THROWS_AS(Moebius(1, 1, 1, 1), Error);
    Moebius t = Moebius::translation(3);
    CHECK(t.kind() == MoebiusKind::parabolic);
    CHECK(t.apply(Fraction(1)) == Fraction(4));
    CHECK(t.apply(Fraction::infinity()).is_infinity());
    CHECK(Moebius(0, -1, 1, 0).kind() == MoebiusKind::elliptic);
    CHECK(Moebius(2, 1, 1, 1).kind() == MoebiusKind::hyperbolic);
    CHECK(-t == t);
    CHECK(t.pow(-2) == Moebius::translation(-6));
    CHECK(lr_word_value("L") == Moebius(1, 1, 0, 1));
    CHECK_THROWS_AS(lr_word_value(""), Error);
}

TEST_CASE("geodesic lengths and the Schmutz bound") {
    CHECK(trace_to_length(7) == doctest::Approx(2 * std::acosh(3.5)).epsilon(1e-14));
    // cosh(2x) = 2 cosh(x)^2 - 1 with cosh x = 3/2 gives 7/2.
    CHECK(std::abs(trace_to_length(7) - 4 * std::acosh(1.5)) < 1e-12);
    CHECK(std::abs(trace_to_length(23) - 2 * std::acosh(11.5)) < 1e-12);
    CHECK(std::abs(schmutz_bound(5) - 4.77164) < 1e-5);
    CHECK(std::abs(schmutz_bound(12) - trace_to_length(23)) < 1e-12);
    CHECK(std::abs(schmutz_bound(4) - trace_to_length(7)) < 1e-12);
    CHECK_THROWS_AS(trace_to_length(2), Error);
    CHECK(format12(std::acosh(3.5)) == "1.92484730024");
}

TEST_CASE("cusp parabolics") {
    CHECK(cusp_parabolic(Fraction::infinity(), 3) == Moebius(1, 3, 0, 1));
    auto a2 = cusp_parabolic(Fraction(0), 4);
    CHECK((a2 == Moebius(1, 0, 4, 1) || a2 == Moebius(1, 0, -4, 1)));
    // Conjugating T^5 by x -> 2 - 1/x (sends ∞ to 2) gives a parabolic fixing 2.
    Moebius m(2, -1, 1, 0);
    Moebius expected = Moebius::translation(5).conjugate_by(m);
    auto p = cusp_parabolic(Fraction(2), 5);
    CHECK(p.trace() == 2);
    CHECK(p.apply(Fraction(2)) == Fraction(2));
    CHECK(p == expected);
}

TEST_CASE("parabolic products") {
    CHECK(parabolic_product_trace(2, 8) == 14);
    CHECK(parabolic_product_trace(2, 12) == 22);
    CHECK(parabolic_product_trace(1, 2) == 0);
}

TEST_CASE("Farey edge maps") {
    auto m = map_farey_edge(Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 3));
    CHECK(m.apply(Fraction(0)) == Fraction(1, 2));
    CHECK(m.apply(Fraction(1)) == Fraction(1, 3));
    CHECK(m.is_integral());
    auto f = farey_frame(Fraction(3, 2), Fraction(5, 3));
    CHECK(f.apply(Fraction::infinity()) == Fraction(3, 2));
    CHECK(f.apply(Fraction(0)) == Fraction(5, 3));
}

TEST_CASE("property: trace of L R^(m1-2) L R^(m2-2) is m1 m2 - 2") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> m(2, 60);
    for (int k = 0; k < 10000; ++k) {
        long m1 = m(rng), m2 = m(rng);
        std::string w = "L" + repeat('R', m1 - 2) + "L" + repeat('R', m2 - 2);
        M2 plain = word(w);
        REQUIRE(plain[0] + plain[3] == m1 * m2 - 2);
        REQUIRE(lr_word_value(w).trace() == m1 * m2 - 2);
    }
    for (long m1 = 2; m1 <= 50; ++m1) {
        for (long m2 = 2; m2 <= 50; ++m2) {
            REQUIRE(lr_word_value("L" + repeat('R', m1 - 2) + "L" + repeat('R', m2 - 2)).trace() == m1 * m2 - 2);
        }
    }
}

TEST_CASE("property: parabolic products match matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> w(1, 40);
    std::uniform_int_distribution<long> label(0, 1000);
    for (int k = 0; k < 10000; ++k) {
        long m1 = w(rng), m2 = w(rng);
        // Widths m1 at ∞ and m2 at 0, the ends of a shared Farey edge.
        M2 prod = mul(M2{1, m1, 0, 1}, M2{1, 0, -m2, 1});
        REQUIRE(parabolic_product_trace(m1, m2) == std::labs(prod[0] + prod[3]));
        // Same product at a random Farey edge (g(∞), g(0)), g a random LR word.
        std::string w;
        for (long len = label(rng) % 9; len > 0; --len) w += label(rng) % 2 ? 'L' : 'R';
        M2 g = word(w);
        Moebius at = cusp_parabolic(Fraction(g[0], g[2]), m1) * cusp_parabolic(Fraction(g[1], g[3]), m2);
        REQUIRE(abs(at.trace()) == parabolic_product_trace(m1, m2));
    }
}

TEST_CASE("property: trace of L^4 R^(d-1) is 4d - 2") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(1, 400);
    for (int k = 0; k < 10000; ++k) {
        long d = dist(rng);
        M2 plain = word("LLLL" + repeat('R', d - 1));
        REQUIRE(plain[0] + plain[3] == 4 * d - 2);
        if (k < 2000) REQUIRE(lr_word_value("LLLL" + repeat('R', d - 1)).trace() == 4 * d - 2);
    }
}
