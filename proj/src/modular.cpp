#include "systole/modular.hpp"

#include "systole/error.hpp"

#include <cassert>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace systole {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) {
        fail(ErrorKind::parse, "not an integer: '" + s + "'");
    }
    return z;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fraction

Fraction::Fraction(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) fail(ErrorKind::invalid_argument, "0/0 is not a fraction");
    if (q_ < 0) {
        p_ = -p_;
        q_ = -q_;
    }
    if (q_ == 0) {
        p_ = 1;
        return;
    }
    Integer g = gcd(p_, q_);
    if (g != 1) {
        p_ /= g;
        q_ /= g;
    }
}

Fraction::Fraction(const Rational& r) : p_(r.get_num()), q_(r.get_den()) {}

Fraction Fraction::parse(std::string_view text) {
    text = trim(text);
    if (text == "inf" || text == "∞" || text == "oo") return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Fraction(parse_integer(text), Integer(1));
    return Fraction(parse_integer(trim(text.substr(0, slash))),
                    parse_integer(trim(text.substr(slash + 1))));
}

Rational Fraction::value() const {
    if (is_infinity()) fail(ErrorKind::invalid_argument, "infinity has no finite value");
    Rational r(p_, q_);
    r.canonicalize();
    return r;
}

double Fraction::to_double() const {
    if (is_infinity()) return HUGE_VAL;
    return value().get_d();
}

std::string Fraction::str() const { return p_.get_str() + "/" + q_.get_str(); }

std::string Fraction::pretty() const {
    if (is_infinity()) return "inf";
    if (q_ == 1) return p_.get_str();
    return str();
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    if (x.is_infinity() || y.is_infinity()) {
        if (x.is_infinity() && y.is_infinity()) return std::strong_ordering::equal;
        return x.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(x.p_ * y.q_, y.p_ * x.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool farey_adjacent(const Fraction& x, const Fraction& y) {
    if (x == y) fail(ErrorKind::invalid_argument, "farey_adjacent: identical vertices " + x.str());
    Integer det = x.num() * y.den() - y.num() * x.den();
    return det == 1 || det == -1;
}

std::pair<Fraction, Fraction> farey_apexes(const Fraction& x, const Fraction& y) {
    if (!farey_adjacent(x, y)) {
        fail(ErrorKind::invalid_argument, "not a Farey edge: " + x.str() + ", " + y.str());
    }
    return {Fraction(x.num() + y.num(), x.den() + y.den()),
            Fraction(x.num() - y.num(), x.den() - y.den())};
}

// ---------------------------------------------------------------------------
// Moebius

Moebius::Moebius(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
    if (det() != 1) {
        fail(ErrorKind::invalid_argument,
             "matrix " + str() + " has determinant " + rational_str(det()) + ", expected 1");
    }
}

Rational Moebius::abs_trace() const {
    Rational t = trace();
    return t < 0 ? Rational(-t) : t;
}

MoebiusKind Moebius::kind() const {
    int c = cmp(abs_trace(), 2);
    if (c < 0) return MoebiusKind::elliptic;
    if (c == 0) return MoebiusKind::parabolic;
    return MoebiusKind::hyperbolic;
}

bool Moebius::is_integral() const {
    return a_.get_den() == 1 && b_.get_den() == 1 && c_.get_den() == 1 && d_.get_den() == 1;
}

Moebius operator*(const Moebius& x, const Moebius& y) {
    Moebius m(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
              x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_, Moebius::unchecked{});
    assert(m.det() == 1);
    return m;
}

Moebius Moebius::pow(long e) const {
    Moebius base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Moebius result;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Fraction Moebius::apply(const Fraction& x) const {
    Rational num = a_ * x.num() + b_ * x.den();
    Rational den = c_ * x.num() + d_ * x.den();
    if (den == 0) return Fraction::infinity();
    Rational v = num / den;
    return Fraction(v);
}

std::pair<double, double> Moebius::apply_point(double x, double y) const {
    double a = a_.get_d(), b = b_.get_d(), c = c_.get_d(), d = d_.get_d();
    // (a z + b) / (c z + d) with z = x + iy
    double nr = a * x + b, ni = a * y;
    double dr = c * x + d, di = c * y;
    double n2 = dr * dr + di * di;
    return {(nr * dr + ni * di) / n2, (ni * dr - nr * di) / n2};
}

Fraction Moebius::parabolic_fixed_point() const {
    if (c_ == 0) return Fraction::infinity();
    return Fraction(Rational((a_ - d_) / (2 * c_)));
}

Moebius Moebius::canonical() const {
    for (const Rational* e : {&a_, &b_, &c_, &d_}) {
        if (*e != 0) return *e > 0 ? *this : -*this;
    }
    return *this;
}

std::string Moebius::key() const {
    Moebius m = canonical();
    return rational_str(m.a_) + "," + rational_str(m.b_) + "," + rational_str(m.c_) + "," +
           rational_str(m.d_);
}

std::array<std::string, 4> Moebius::entries_str() const {
    return {rational_str(a_), rational_str(b_), rational_str(c_), rational_str(d_)};
}

std::string Moebius::str() const {
    auto e = entries_str();
    return "(" + e[0] + " " + e[1] + "; " + e[2] + " " + e[3] + ")";
}

bool operator==(const Moebius& x, const Moebius& y) {
    if (x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_) return true;
    return x.a_ == -y.a_ && x.b_ == -y.b_ && x.c_ == -y.c_ && x.d_ == -y.d_;
}

bool equal_up_to_inverse(const Moebius& x, const Moebius& y) {
    return x == y || x == y.inverse();
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(trim(text.substr(0, slash))), den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Lengths and traces

double round12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double trace_to_length(const Rational& t) {
    Rational at = abs(t);
    if (at <= 2) {
        fail(ErrorKind::not_hyperbolic, "trace " + rational_str(t) + " is not hyperbolic");
    }
    return 2.0 * std::acosh(Rational(at / 2).get_d());
}

double schmutz_bound(int n) {
    if (n < 4) fail(ErrorKind::invalid_argument, "schmutz_bound needs n >= 4");
    return 4.0 * std::acosh(static_cast<double>(3 * n - 6) / n);
}

std::int64_t parabolic_product_trace(std::int64_t m1, std::int64_t m2) {
    if (m1 < 1 || m2 < 1) fail(ErrorKind::invalid_argument, "widths must be positive");
    std::int64_t closed = m1 * m2 - 2;
    if (closed < 0) closed = -closed;
    // Parabolic of width m2 fixing 0, with a + d = 2.
    Moebius p(1, 0, Rational(m2), 1);
    Moebius g = Moebius::translation(Rational(m1)) * p.inverse();
    Rational t = g.abs_trace();
    if (t != closed) {
        fail(ErrorKind::validation, "parabolic_product_trace: closed form and matrix disagree");
    }
    return closed;
}

Moebius lr_word_value(std::string_view word) {
    if (word.empty()) fail(ErrorKind::invalid_argument, "empty L/R word");
    // Positive integer matrices; accumulate in Integers for speed.
    Integer a = 1, b = 0, c = 0, d = 1;
    for (char ch : word) {
        if (ch == 'L') {
            b += a;
            d += c;
        } else if (ch == 'R') {
            a += b;
            c += d;
        } else {
            fail(ErrorKind::invalid_argument, std::string("bad letter in L/R word: ") + ch);
        }
    }
    return Moebius(Rational(a), Rational(b), Rational(c), Rational(d));
}

Moebius cusp_parabolic(const Fraction& cusp, long width) {
    if (width < 1) fail(ErrorKind::invalid_argument, "cusp width must be >= 1");
    const Integer& p = cusp.num();
    const Integer& q = cusp.den();
    Integer w(width);
    return Moebius(Rational(1 - p * q * w), Rational(p * p * w), Rational(-q * q * w),
                   Rational(1 + p * q * w));
}

Moebius farey_frame(const Fraction& x, const Fraction& y) {
    Integer det = x.num() * y.den() - y.num() * x.den();
    if (det != 1 && det != -1) {
        fail(ErrorKind::invalid_argument, "not a Farey edge: " + x.str() + ", " + y.str());
    }
    Integer s = det;  // flip second column when det = -1
    return Moebius(Rational(x.num()), Rational(s * y.num()), Rational(x.den()),
                   Rational(s * y.den()));
}

Moebius map_farey_edge(const Fraction& x1, const Fraction& y1, const Fraction& x2,
                       const Fraction& y2) {
    return farey_frame(x2, y2) * farey_frame(x1, y1).inverse();
}

}  // namespace systole
