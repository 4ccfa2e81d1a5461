#include "systole/fuchsian.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace systole {

// ---------------------------------------------------------------------------
// Free words

namespace {

int code(const Letter& l) { return 2 * l.generator + (l.inverse ? 1 : 0); }

Letter inverse_letter(Letter l) {
    l.inverse = !l.inverse;
    return l;
}

bool cancels(const Letter& a, const Letter& b) { return a.generator == b.generator && a.inverse != b.inverse; }

bool code_less(const FreeWord& a, const FreeWord& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Letter& x, const Letter& y) { return code(x) < code(y); });
}

FreeWord min_rotation(const FreeWord& w) {
    FreeWord best = w, r(w.size());
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate_copy(w.begin(), w.begin() + k, w.end(), r.begin());
        if (code_less(r, best)) best = r;
    }
    return best;
}

bool is_proper_power(const FreeWord& w) {
    std::size_t k = w.size();
    for (std::size_t p = 1; p < k; ++p) {
        if (k % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < k && periodic; ++i) periodic = w[i] == w[i - p];
        if (periodic) return true;
    }
    return false;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return free_reduce(w);
}

}  // namespace

FreeWord free_reduce(const FreeWord& w) {
    FreeWord out;
    for (const Letter& l : w) {
        if (!out.empty() && cancels(out.back(), l)) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

FreeWord inverse_word(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
    return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
    FreeWord r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && cancels(r[i], r[j - 1])) {
        ++i;
        --j;
    }
    return FreeWord(r.begin() + i, r.begin() + j);
}

FreeWord class_key(const FreeWord& w) {
    FreeWord c = cyclic_reduce(w);
    FreeWord a = min_rotation(c), b = min_rotation(inverse_word(c));
    return code_less(b, a) ? b : a;
}

std::string format_free_word(const std::vector<LabeledGenerator>& gens, const FreeWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += ' ';
        s += gens.at(w[i].generator).name;
        long power = static_cast<long>(j - i) * (w[i].inverse ? -1 : 1);
        if (power != 1) s += "^" + std::to_string(power);
        i = j;
    }
    return s;
}

Moebius free_word_value(const std::vector<Moebius>& gens, const FreeWord& w) {
    Moebius m;
    for (const Letter& l : w) m = m * (l.inverse ? gens.at(l.generator).inverse() : gens.at(l.generator));
    return m;
}

// ---------------------------------------------------------------------------
// Polygons

namespace {

std::vector<Moebius> matrices(const std::vector<LabeledGenerator>& gens) {
    std::vector<Moebius> out;
    for (const auto& g : gens) out.push_back(g.matrix);
    return out;
}

int side_with(const std::vector<Fraction>& v, const Fraction& a, const Fraction& b) {
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        const Fraction &x = v[i], &y = v[(i + 1) % n];
        if ((x == a && y == b) || (x == b && y == a)) return i;
    }
    fail(ErrorKind::validation, "no polygon side joins " + a.pretty() + " and " + b.pretty());
}

}  // namespace

IdealPolygon polygon_from_pairings(
    const std::vector<Fraction>& vertices, const std::vector<LabeledGenerator>& generators,
    const std::vector<std::pair<std::pair<Fraction, Fraction>, std::pair<Fraction, Fraction>>>& sides) {
    if (sides.size() != generators.size()) fail(ErrorKind::invalid_argument, "one side pair per generator");
    int n = static_cast<int>(vertices.size());
    if (n != 2 * static_cast<int>(generators.size())) {
        fail(ErrorKind::invalid_argument, "polygon needs two sides per generator");
    }
    IdealPolygon p;
    p.vertices = vertices;
    p.generators = generators;
    p.partner.assign(n, -1);
    p.pairing.assign(n, Moebius());
    p.side_letter.assign(n, Letter{});
    for (std::size_t k = 0; k < sides.size(); ++k) {
        int from = side_with(vertices, sides[k].first.first, sides[k].first.second);
        int to = side_with(vertices, sides[k].second.first, sides[k].second.second);
        if (p.partner[from] >= 0 || p.partner[to] >= 0 || from == to) {
            fail(ErrorKind::validation, "side used twice by the pairings");
        }
        p.partner[from] = to;
        p.partner[to] = from;
        p.pairing[to] = generators[k].matrix;
        p.pairing[from] = generators[k].matrix.inverse();
        p.side_letter[to] = {static_cast<int>(k), false};
        p.side_letter[from] = {static_cast<int>(k), true};
    }
    return p;
}

IdealPolygon polygon_from_development(const Development& dev) {
    std::vector<std::pair<std::pair<Fraction, Fraction>, std::pair<Fraction, Fraction>>> sides;
    for (const auto& s : dev.pairings) sides.push_back({s.from, s.to});
    return polygon_from_pairings(dev.polygon, generators(dev, false), sides);
}

VertexCycle vertex_cycle(const IdealPolygon& p, int vertex) {
    VertexCycle c;
    c.start = vertex;
    int i = vertex;
    do {
        c.vertices.push_back(i);
        int j = p.partner.at(i);
        c.transform = p.pairing[j] * c.transform;
        c.word.insert(c.word.begin(), p.side_letter[j]);
        i = (j + 1) % p.size();
        if (static_cast<int>(c.vertices.size()) > p.size()) fail(ErrorKind::validation, "vertex cycle does not close");
    } while (i != vertex);
    c.word = free_reduce(c.word);
    return c;
}

std::vector<std::string> polygon_problems(const IdealPolygon& p) {
    std::vector<std::string> out;
    int n = p.size();
    if (n < 2 || p.partner.size() != static_cast<std::size_t>(n) || p.pairing.size() != static_cast<std::size_t>(n)) {
        return {"polygon arrays have inconsistent sizes"};
    }
    if (!p.vertices[0].is_infinity()) out.push_back("first vertex is not infinity");
    for (int i = 2; i < n; ++i) {
        if (!(p.vertices[i - 1] < p.vertices[i])) out.push_back("finite vertices are not increasing at " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
        int j = p.partner[i];
        if (j < 0 || j >= n || j == i || p.partner[j] != i) {
            out.push_back("side " + std::to_string(i) + " has no proper partner");
            continue;
        }
        const Moebius& t = p.pairing[i];
        if (!(p.pairing[j] == t.inverse())) out.push_back("pairings of sides " + std::to_string(i) + " and " + std::to_string(j) + " are not inverse");
        if (!(t.apply(p.vertices[j]) == p.vertices[(i + 1) % n]) || !(t.apply(p.vertices[(j + 1) % n]) == p.vertices[i])) {
            out.push_back("pairing of side " + std::to_string(i) + " does not reverse side " + std::to_string(j) + " onto it");
        }
    }
    if (!out.empty()) return out;
    for (int v = 0; v < n; ++v) {
        VertexCycle c = vertex_cycle(p, v);
        if (c.transform.kind() != MoebiusKind::parabolic || c.transform == Moebius()) {
            out.push_back("cycle transform at vertex " + p.vertices[v].pretty() + " is " + c.transform.str() + ", not parabolic");
        } else if (!(c.transform.parabolic_fixed_point() == p.vertices[v])) {
            out.push_back("cycle transform at vertex " + p.vertices[v].pretty() + " fixes another point");
        }
    }
    return out;
}

std::pair<Rational, Rational> interior_point(const IdealPolygon& p) {
    int n = p.size();
    if (n < 3) fail(ErrorKind::invalid_argument, "polygon too small");
    Rational lo = p.vertices[1].value(), hi = p.vertices[n - 1].value();
    Rational x = lo + (hi - lo) * Rational(3, 7);
    Rational y = hi - lo + Rational(1, 3);
    x.canonicalize();
    y.canonicalize();
    return {x, y};
}

namespace {

// Image of x + iy under m, exactly.
std::pair<Rational, Rational> act(const Moebius& m, const Rational& x, const Rational& y) {
    Rational cx = m.c() * x + m.d();
    Rational den = cx * cx + m.c() * m.c() * y * y;
    Rational re = ((m.a() * x + m.b()) * cx + m.a() * m.c() * y * y) / den;
    Rational im = y / den;
    return {re, im};
}

// The side whose outer half-plane contains x + iy, or -1 inside.
template <class Num>
int violated_side(const std::vector<Num>& v, const Num& x, const Num& y) {
    int n = static_cast<int>(v.size());
    if (x <= v[1]) return 0;
    if (x >= v[n - 1]) return n - 1;
    int i = static_cast<int>(std::upper_bound(v.begin() + 1, v.end(), x) - v.begin()) - 1;
    if ((x - v[i]) * (x - v[i + 1]) + y * y < 0) return i;
    return -1;
}

std::vector<Rational> finite_values(const IdealPolygon& p) {
    std::vector<Rational> v(p.size());
    for (int i = 1; i < p.size(); ++i) v[i] = p.vertices[i].value();
    return v;
}

}  // namespace

FreeWord reduce_to_basis(const IdealPolygon& p, const Moebius& g) {
    auto v = finite_values(p);
    auto [x0, y0] = interior_point(p);
    auto [x, y] = act(g, x0, y0);
    Moebius h = g;
    FreeWord word;
    for (int steps = 0;; ++steps) {
        if (steps > 100000) fail(ErrorKind::resource_limit, "reduction does not terminate");
        int s = violated_side(v, x, y);
        if (s < 0) break;
        Moebius back = p.pairing[s].inverse();
        std::tie(x, y) = act(back, x, y);
        h = back * h;
        word.push_back(p.side_letter[s]);
    }
    if (!(h == Moebius())) fail(ErrorKind::validation, g.str() + " is not in the group of the polygon");
    return free_reduce(word);
}

std::vector<FreeWord> basis_in_generators(const IdealPolygon& p, const std::vector<Moebius>& gens) {
    // Nielsen-style length reduction on pairs (basis word, word in gens).
    struct Item {
        FreeWord basis;
        FreeWord in_gens;
    };
    std::vector<Item> items;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        items.push_back({reduce_to_basis(p, gens[j]), {Letter{static_cast<int>(j), false}}});
    }
    auto invert = [](const Item& it) { return Item{inverse_word(it.basis), inverse_word(it.in_gens)}; };
    auto times = [](const Item& a, const Item& b) {
        return Item{concat(a.basis, b.basis), concat(a.in_gens, b.in_gens)};
    };
    for (bool changed = true; changed;) {
        changed = false;
        items.erase(std::remove_if(items.begin(), items.end(), [](const Item& it) { return it.basis.empty(); }),
                    items.end());
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = 0; j < items.size(); ++j) {
                if (i == j) continue;
                for (const Item& other : {items[j], invert(items[j])}) {
                    for (const Item& cand : {times(items[i], other), times(other, items[i])}) {
                        if (cand.basis.size() < items[i].basis.size()) {
                            items[i] = cand;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    std::vector<FreeWord> out(p.generators.size());
    std::vector<bool> found(p.generators.size(), false);
    for (const Item& it : items) {
        if (it.basis.size() != 1) continue;
        int k = it.basis[0].generator;
        out[k] = it.basis[0].inverse ? inverse_word(it.in_gens) : it.in_gens;
        found[k] = true;
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
        if (!found[k]) fail(ErrorKind::validation, "basis element " + p.generators[k].name + " not recovered from the generators");
    }
    return out;
}

IdealPolygon transport_polygon(const IdealPolygon& base, const std::vector<Moebius>& base_gens,
                               const std::vector<LabeledGenerator>& new_gens) {
    if (base_gens.size() != new_gens.size()) fail(ErrorKind::invalid_argument, "generator lists differ in length");
    auto base_problems = polygon_problems(base);
    if (!base_problems.empty()) fail(ErrorKind::validation, "base polygon: " + base_problems.front());
    std::vector<Moebius> alpha = matrices(new_gens);
    std::vector<FreeWord> words = basis_in_generators(base, base_gens);

    IdealPolygon p;
    p.partner = base.partner;
    p.side_letter = base.side_letter;
    std::vector<Moebius> sigma;
    for (std::size_t k = 0; k < words.size(); ++k) {
        sigma.push_back(free_word_value(alpha, words[k]));
        p.generators.push_back({base.generators[k].name, sigma.back(), false});
    }
    for (int i = 0; i < base.size(); ++i) {
        const Letter& l = base.side_letter[i];
        p.pairing.push_back(l.inverse ? sigma[l.generator].inverse() : sigma[l.generator]);
    }
    // The correspondence must be an isomorphism onto the new group: every
    // new generator is the transported image of the old one.
    for (std::size_t j = 0; j < base_gens.size(); ++j) {
        FreeWord w = reduce_to_basis(base, base_gens[j]);
        if (!(free_word_value(sigma, w) == alpha[j])) {
            fail(ErrorKind::validation, new_gens[j].name + " is not the image of its counterpart");
        }
    }
    for (int v = 0; v < base.size(); ++v) {
        VertexCycle c = vertex_cycle(base, v);
        Moebius t = free_word_value(sigma, c.word);
        if (t.kind() != MoebiusKind::parabolic) {
            fail(ErrorKind::validation, "transported cycle at vertex " + std::to_string(v) + " is not parabolic: " + t.str());
        }
        p.vertices.push_back(t.parabolic_fixed_point());
    }
    auto problems = polygon_problems(p);
    if (!problems.empty()) fail(ErrorKind::validation, "transported polygon: " + problems.front());
    return p;
}

// ---------------------------------------------------------------------------
// Tile search

namespace {

struct DMat {
    double a, b, c, d;
    DMat operator*(const DMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    std::pair<double, double> apply(double x, double y) const {
        double cx = c * x + d;
        double den = cx * cx + c * c * y * y;
        return {((a * x + b) * cx + a * c * y * y) / den, y / den};
    }
};

DMat to_double(const Moebius& m) { return {m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()}; }

double cosh_dist(double x0, double y0, double x1, double y1) {
    return 1 + ((x1 - x0) * (x1 - x0) + (y1 - y0) * (y1 - y0)) / (2 * y0 * y1);
}

struct Horoballs {
    double top = 0;         ///< height of the horocycle at infinity
    std::vector<double> h;  ///< Euclidean diameters at the finite vertices
};

// Horoballs bounded by horocycles of length 2 / bound.  An element with
// |trace| <= bound has an axis of Euclidean radius below bound * w / 2 at a
// cusp of width w (Shimizu: |c| w >= 1), so no such axis enters them.
Horoballs truncation(const IdealPolygon& p, double bound) {
    int n = p.size();
    Horoballs hb;
    hb.h.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        Moebius t = vertex_cycle(p, i).transform;
        if (i == 0) hb.top = bound * std::abs(Rational(t.b() / t.a()).get_d()) / 2;
        else hb.h[i] = 2 / (bound * std::abs(t.c().get_d()));
    }
    return hb;
}

std::vector<std::pair<double, double>> truncation_corners(const std::vector<double>& v, const Horoballs& hb) {
    int n = static_cast<int>(v.size());
    std::vector<std::pair<double, double>> out{
        {v[1], hb.top}, {v[1], hb.h[1]}, {v[n - 1], hb.top}, {v[n - 1], hb.h[n - 1]}};
    for (int i = 1; i + 1 < n; ++i) {
        double s = (v[i + 1] - v[i]) / 2;
        for (int end = 0; end < 2; ++end) {
            double hh = hb.h[i + end], ss = end ? -s : s;
            double y = 4 * ss * ss * hh / (4 * ss * ss + hh * hh);
            out.push_back({v[i + end] + hh * y / (2 * ss), y});
        }
    }
    return out;
}

// A side cut down to the part outside the horoballs, in coordinates where
// its geodesic is the imaginary axis and the part is i [lo, hi].
struct SideSegment {
    DMat to_axis;
    double lo, hi;

    double distance(double x, double y) const {
        auto [u, w] = to_axis.apply(x, y);
        double foot = std::hypot(u, w);
        if (foot >= lo && foot <= hi) return std::asinh(std::abs(u) / w);
        double t = foot < lo ? lo : hi;
        return std::acosh(cosh_dist(u, w, 0, t));
    }
};

std::vector<SideSegment> side_segments(const std::vector<double>& v, const Horoballs& hb) {
    int n = static_cast<int>(v.size());
    std::vector<SideSegment> out(n);
    out[0] = {{1, -v[1], 0, 1}, hb.h[1], hb.top};
    out[n - 1] = {{1, -v[n - 1], 0, 1}, hb.h[n - 1], hb.top};
    for (int i = 1; i + 1 < n; ++i) {
        double k = 1 / std::sqrt(v[i + 1] - v[i]);
        DMat m{k, -k * v[i], -k, k * v[i + 1]};
        double s = (v[i + 1] - v[i]) / 2;
        double t[2];
        for (int end = 0; end < 2; ++end) {
            double hh = hb.h[i + end], ss = end ? -s : s;
            double y = 4 * ss * ss * hh / (4 * ss * ss + hh * hh);
            auto [u, w] = m.apply(v[i + end] + hh * y / (2 * ss), y);
            t[end] = std::hypot(u, w);
        }
        out[i] = {m, std::min(t[0], t[1]), std::max(t[0], t[1])};
    }
    return out;
}

// Box subdivision of the truncated polygon.  Each node carries a ball
// containing its box; leaves have radius at most the target.  A box is
// dropped only when provably outside: inside one side's half-disk or inside
// one horoball.
struct CoverNode {
    double x, y, r;
    int first_child = -1;  ///< children are first_child and first_child + 1
};

std::vector<CoverNode> cover_truncated(const std::vector<double>& v, const Horoballs& hb, double y_min, double target) {
    int n = static_cast<int>(v.size());
    auto in_disk = [](double x, double y, double cx, double cy, double r) {
        return (x - cx) * (x - cx) + (y - cy) * (y - cy) < r * r;
    };
    struct Box {
        double x0, x1, y0, y1;
    };
    auto outside = [&](const Box& b) {
        auto all_corners = [&](auto&& inside) {
            return inside(b.x0, b.y0) && inside(b.x0, b.y1) && inside(b.x1, b.y0) && inside(b.x1, b.y1);
        };
        for (int i = 1; i + 1 < n; ++i) {
            double c = (v[i] + v[i + 1]) / 2, r = (v[i + 1] - v[i]) / 2;
            if (all_corners([&](double x, double y) { return in_disk(x, y, c, 0, r); })) return true;
        }
        for (int i = 1; i < n; ++i) {
            double r = hb.h[i] / 2;
            if (all_corners([&](double x, double y) { return in_disk(x, y, v[i], r, r); })) return true;
        }
        return false;
    };
    std::vector<CoverNode> nodes;
    std::vector<Box> boxes;
    auto add = [&](const Box& b) {
        double cx = (b.x0 + b.x1) / 2, cy = std::sqrt(b.y0 * b.y1);
        double rad = 0;
        for (double x : {b.x0, b.x1})
            for (double y : {b.y0, b.y1}) rad = std::max(rad, std::acosh(cosh_dist(cx, cy, x, y)));
        nodes.push_back({cx, cy, rad});
        boxes.push_back(b);
    };
    add({v[1], v[n - 1], y_min, hb.top});
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].r <= target) continue;
        Box b = boxes[k];
        double cx = nodes[k].x, cy = nodes[k].y;
        Box halves[2];
        if ((b.x1 - b.x0) / cy > std::log(b.y1 / b.y0)) {
            halves[0] = {b.x0, cx, b.y0, b.y1};
            halves[1] = {cx, b.x1, b.y0, b.y1};
        } else {
            halves[0] = {b.x0, b.x1, b.y0, cy};
            halves[1] = {b.x0, b.x1, cy, b.y1};
        }
        nodes[k].first_child = static_cast<int>(nodes.size());
        for (const Box& h : halves) {
            add(h);
            // An empty box stays as a leaf that can never pass.
            if (outside(h)) nodes.back().r = -1;
        }
    }
    return nodes;
}

struct ClassTable {
    const std::vector<LabeledGenerator>& gens;
    Rational bound;
    std::map<std::vector<int>, std::optional<GeodesicWitness>> seen;

    void offer(const FreeWord& word) {
        FreeWord key = class_key(word);
        std::vector<int> k;
        for (const Letter& l : key) k.push_back(code(l));
        if (seen.count(k)) return;
        std::optional<GeodesicWitness> w;
        if (!key.empty() && !is_proper_power(key)) {
            Moebius m = free_word_value(matrices(gens), key);
            if (m.abs_trace() > 2 && m.abs_trace() <= bound) {
                w = GeodesicWitness{format_free_word(gens, key), {}, m, m.trace(), trace_to_length(m.trace())};
            }
        }
        seen.emplace(std::move(k), std::move(w));
    }

    std::vector<GeodesicWitness> classes() const {
        std::vector<GeodesicWitness> out;
        for (const auto& [k, w] : seen) {
            if (w) out.push_back(*w);
        }
        std::sort(out.begin(), out.end(), witness_less);
        return out;
    }
};

}  // namespace

MatrixGroupReport systole_matrix_group(const IdealPolygon& domain, const Rational& trace_bound, std::size_t max_tiles,
                                       double cover_radius) {
    auto problems = polygon_problems(domain);
    if (!problems.empty()) fail(ErrorKind::validation, "domain: " + problems.front());
    if (trace_bound <= 2) fail(ErrorKind::invalid_argument, "trace bound must exceed 2");
    MatrixGroupReport r;
    r.trace_bound = trace_bound;
    int n = domain.size();
    double bound = trace_bound.get_d();
    std::vector<double> v(n);
    for (int i = 1; i < n; ++i) v[i] = domain.vertices[i].to_double();
    Horoballs hb = truncation(domain, bound);
    double y_min = hb.top;
    for (auto [x, y] : truncation_corners(v, hb)) y_min = std::min(y_min, y);
    auto cover = cover_truncated(v, hb, y_min, cover_radius);
    for (const CoverNode& c : cover) {
        if (c.first_child < 0 && c.r >= 0) {
            ++r.cover_balls;
            r.cover_radius = std::max(r.cover_radius, c.r);
        }
    }
    double reach = 2 * std::acosh(bound / 2) + 1e-9;
    r.reach = reach;

    std::vector<DMat> pair_d;
    for (const auto& m : domain.pairing) pair_d.push_back(to_double(m));
    ClassTable table{domain.generators, trace_bound, {}};
    double loose = bound * (1 + 1e-6);

    // Tile g P is reached through sides s1, s2, ... with g = T_s1 T_s2 ...
    // Everything beyond the side crossed last lies in a half-plane, and its
    // truncated part is at least as far from a ball as the truncated piece of
    // that side.  So a subtree is dropped once no cover ball comes within
    // `reach` of that piece.  The tiles form a tree, so none is visited twice.
    auto segments = side_segments(v, hb);
    std::vector<int> stack;
    auto near = [&](const DMat& ginv, const SideSegment& entry) {
        stack.assign(1, 0);
        while (!stack.empty()) {
            const CoverNode& c = cover[stack.back()];
            stack.pop_back();
            if (c.r < 0) continue;
            auto [x, y] = ginv.apply(c.x, c.y);
            if (entry.distance(x, y) > reach + c.r) continue;
            if (c.first_child < 0) return true;
            stack.push_back(c.first_child);
            stack.push_back(c.first_child + 1);
        }
        return false;
    };
    // Depth-first over the tile tree; frame k holds tile path[0..k).
    struct Frame {
        DMat g, ginv;
        int last, next;
    };
    FreeWord path;
    std::vector<Frame> frames{{DMat{1, 0, 0, 1}, DMat{1, 0, 0, 1}, -1, 0}};
    bool truncated = false;
    r.tiles = 1;
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next == n) {
            frames.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        int s = f.next++;
        if (f.last >= 0 && s == domain.partner[f.last]) continue;
        DMat child_inv = pair_d[domain.partner[s]] * f.ginv;
        if (!near(child_inv, segments[domain.partner[s]])) continue;
        if (++r.tiles > max_tiles) {
            truncated = true;
            break;
        }
        DMat g = f.g * pair_d[s];
        path.push_back(domain.side_letter[s]);
        double tr = std::abs(g.a + g.d);
        if (tr > 2 && tr <= loose) table.offer(path);
        frames.push_back({g, child_inv, s, 0});
    }

    r.frontier_exhausted = !truncated;
    r.classes = table.classes();
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "every closed geodesic with |trace| <= %s meets the polygon outside the horoballs bounded by "
                  "horocycles of length 2/%s; %zu balls of radius <= %.3f cover that region and every tile "
                  "within %.6f = 2 arccosh(bound/2) of a ball was searched; %zu tiles%s",
                  rational_str(trace_bound).c_str(), rational_str(trace_bound).c_str(), r.cover_balls,
                  r.cover_radius, reach, r.tiles, truncated ? ", stopped at the tile limit" : "");
    r.certificate = buf;
    return r;
}

MatrixGroupReport matrix_group_sweep(const std::vector<LabeledGenerator>& gens, const Rational& trace_bound,
                                     int max_length) {
    if (trace_bound <= 2) fail(ErrorKind::invalid_argument, "trace bound must exceed 2");
    MatrixGroupReport r;
    r.trace_bound = trace_bound;
    ClassTable table{gens, trace_bound, {}};
    int k = static_cast<int>(gens.size());
    FreeWord path;
    auto visit = [&](auto&& self, int depth) -> void {
        ++r.tiles;
        if (!path.empty()) table.offer(path);
        if (depth == max_length) return;
        for (int c = 0; c < 2 * k; ++c) {
            Letter l{c / 2, (c & 1) != 0};
            if (!path.empty() && cancels(path.back(), l)) continue;
            path.push_back(l);
            self(self, depth + 1);
            path.pop_back();
        }
    };
    visit(visit, 0);
    r.frontier_exhausted = false;
    r.classes = table.classes();
    r.certificate = "sweep over all reduced words of length <= " + std::to_string(max_length) +
                    "; not exhaustive, classes above this length are not seen";
    return r;
}

nlohmann::json matrix_group_report_to_json(const MatrixGroupReport& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& w : r.classes) classes.push_back(witness_to_json(w));
    return {{"trace_bound", rational_str(r.trace_bound)},
            {"frontier_exhausted", r.frontier_exhausted},
            {"certificate", r.certificate},
            {"cover_balls", r.cover_balls},
            {"cover_radius", round12(r.cover_radius)},
            {"reach", round12(r.reach)},
            {"tiles", r.tiles},
            {"classes", classes}};
}

}  // namespace systole
