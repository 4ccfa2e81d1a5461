#pragma once

// Exact arithmetic for the modular group PSL2(Z) and the Farey tessellation.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace systole {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Q ∪ {∞}, stored in lowest terms with a nonnegative
/// denominator; ∞ is the unique value with denominator zero (written 1/0).
class Fraction {
public:
    Fraction() : p_(0), q_(1) {}
    Fraction(long p) : p_(p), q_(1) {}  // NOLINT: integers are fractions
    Fraction(Integer p, Integer q);
    explicit Fraction(const Rational& r);

    static Fraction infinity() { return Fraction(Integer(1), Integer(0)); }

    /// Accepts "p/q", "p", "1/0", "inf" and "∞".
    static Fraction parse(std::string_view text);

    const Integer& num() const { return p_; }
    const Integer& den() const { return q_; }
    bool is_infinity() const { return q_ == 0; }

    /// Finite value; throws invalid-argument for ∞.
    Rational value() const;
    double to_double() const;

    /// Always "p/q" ("1/0" for ∞); the serialization form.
    std::string str() const;
    /// "p" for integers, "p/q" otherwise, "inf" for ∞.
    std::string pretty() const;

    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.p_ == y.p_ && x.q_ == y.q_;
    }
    /// Orders as extended reals with ∞ largest.
    friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

private:
    Integer p_;
    Integer q_;
};

/// p/q and r/s span an edge of the Farey tessellation iff ps - rq = ±1.
bool farey_adjacent(const Fraction& x, const Fraction& y);

/// The two Farey vertices completing the edge (x, y) to a Farey triangle:
/// the mediant (p+r)/(q+s) and the difference (p-r)/(q-s).  Requires x, y
/// Farey adjacent.
std::pair<Fraction, Fraction> farey_apexes(const Fraction& x, const Fraction& y);

enum class MoebiusKind { elliptic, parabolic, hyperbolic };

/// An element of PSL2(Q): a determinant-one rational 2x2 matrix, compared up
/// to global sign.
class Moebius {
public:
    Moebius() : a_(1), b_(0), c_(0), d_(1) {}
    /// Throws invalid-argument unless ad - bc == 1.
    Moebius(Rational a, Rational b, Rational c, Rational d);

    static Moebius identity() { return {}; }
    static Moebius translation(const Rational& t) { return {1, t, 0, 1}; }
    static Moebius left_turn() { return {1, 1, 0, 1}; }
    static Moebius right_turn() { return {1, 0, 1, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational trace() const { return a_ + d_; }
    Rational abs_trace() const;
    Rational det() const { return a_ * d_ - b_ * c_; }
    MoebiusKind kind() const;
    bool is_integral() const;

    Moebius inverse() const { return Moebius(d_, -b_, -c_, a_, unchecked{}); }
    Moebius pow(long e) const;
    Moebius operator-() const { return Moebius(-a_, -b_, -c_, -d_, unchecked{}); }
    friend Moebius operator*(const Moebius& x, const Moebius& y);
    Moebius conjugate_by(const Moebius& g) const { return g * *this * g.inverse(); }

    Fraction apply(const Fraction& x) const;
    /// Image of a point of the upper half-plane (x + iy), in doubles.
    std::pair<double, double> apply_point(double x, double y) const;

    /// Fixed point of a parabolic element (∞ when c = 0).
    Fraction parabolic_fixed_point() const;

    /// Sign-normalized copy: the first nonzero of (a, b, c, d) is positive.
    Moebius canonical() const;
    /// Stable textual key of the canonical representative.
    std::string key() const;

    std::array<std::string, 4> entries_str() const;
    std::string str() const;

    /// Projective equality: M == -M.
    friend bool operator==(const Moebius& x, const Moebius& y);

private:
    struct unchecked {};
    Moebius(Rational a, Rational b, Rational c, Rational d, unchecked)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    Rational a_, b_, c_, d_;
};

/// Equal up to sign or inversion.
bool equal_up_to_inverse(const Moebius& x, const Moebius& y);

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

/// Length of the closed geodesic of a hyperbolic element of trace t:
/// 2 arccosh(|t|/2).  Throws not-hyperbolic for |t| <= 2.
double trace_to_length(const Rational& t);

/// Rounds to 12 significant digits, the precision used in every output.
double round12(double x);
/// "%.12g" form of x.
std::string format12(double x);

/// Upper bound 4 arccosh((3n-6)/n) on the systole of an n-cusped sphere.
double schmutz_bound(int n);

/// |m1 m2 - 2|, the trace of a product of two parabolics of widths m1, m2
/// sharing an edge.  Computed from the closed form and from the matrix
/// product T^{m1} * P^{-1}; the two must agree.
std::int64_t parabolic_product_trace(std::int64_t m1, std::int64_t m2);

/// Left-to-right product over a word in {L, R}.
Moebius lr_word_value(std::string_view word);

/// M T^d M^{-1} for an integral M with M(∞) = cusp:
/// (1 - pqd, p^2 d; -q^2 d, 1 + pqd).
Moebius cusp_parabolic(const Fraction& cusp, long width);

/// The unique element of PSL2(Z) sending the Farey edge (x1, y1) to (x2, y2)
/// with x1 -> x2 and y1 -> y2.
Moebius map_farey_edge(const Fraction& x1, const Fraction& y1,
                       const Fraction& x2, const Fraction& y2);

/// An integral matrix whose columns are (x.num, x.den) and (y.num, y.den),
/// sign-adjusted to determinant one; sends ∞ -> x and 0 -> y.
Moebius farey_frame(const Fraction& x, const Fraction& y);

}  // namespace systole
