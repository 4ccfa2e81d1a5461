// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Reference values are written out here, not taken from
// the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "systole/claims.hpp"
#include "systole/developing.hpp"
#include "systole/enumerate.hpp"
#include "systole/fixtures.hpp"
#include "systole/fuchsian.hpp"
#include "systole/geodesics.hpp"

using namespace systole;

namespace {

constexpr double length_tolerance = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= length_tolerance; }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

std::vector<Rational> sorted_abs_traces(const std::vector<GeodesicWitness>& ws) {
    std::vector<Rational> out;
    for (const auto& w : ws) out.push_back(w.abs_trace());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Moebius> matrices(const std::vector<LabeledGenerator>& gens) {
    std::vector<Moebius> out;
    for (const auto& g : gens) out.push_back(g.matrix);
    return out;
}

std::string four_decimals(const Rational& t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", Rational(abs(t)).get_d());
    return buf;
}

}  // namespace

namespace {

void extremal_densities(Outcome& out, int threads) {
    const std::map<int, std::int64_t> published{{4, 9},   {5, 12},  {6, 16},  {7, 16}, {8, 18},
                                                {9, 20}, {10, 20}, {11, 20}, {12, 25}};
    for (auto [n, want] : published) {
        auto ext = max_min_density({n, 3, false, false}, threads);
        out.detail << "n=" << n << ":" << ext.value << " ";
        out.need(ext.value == want, "n=" + std::to_string(n) + " expected " + std::to_string(want));
    }
}

void systole_values(Outcome& out, int threads) {
    auto tetra = systole_combinatorial(tetrahedron(), threads);
    out.need(tetra.trace == 7 && close(tetra.length, 2 * std::acosh(3.5)), "tetrahedron 2 arccosh(7/2)");
    auto octa = systole_combinatorial(octahedron(), threads);
    out.need(octa.trace == 14 && close(octa.length, 2 * std::acosh(7.0)), "octahedron 2 arccosh(7)");
    out.need(close(octa.length, schmutz_bound(6)), "octahedron meets the n=6 bound");
    auto ico = systole_combinatorial(icosahedron(), threads);
    out.need(ico.trace == 23 && close(ico.length, 2 * std::acosh(11.5)), "icosahedron 2 arccosh(23/2)");
    out.need(close(ico.length, schmutz_bound(12)), "icosahedron meets the n=12 bound");
    out.need(ico.witnesses.size() == 30, "icosahedron has 30 systoles");
    auto ten = systole_combinatorial(ten_vertex_example().graph, threads);
    out.need(ten.trace == 18 && ten.witnesses.size() == 8 && close(ten.length, 2 * std::acosh(9.0)),
             "ten-vertex example: 8 witnesses of trace 18");
    auto eleven = systole_combinatorial(eleven_vertex_example().graph, threads);
    out.need(eleven.trace == 18 && eleven.witnesses.size() == 6, "eleven-vertex example: 6 witnesses");

    // The six printed words name exactly the six shortest classes.
    auto fx = eleven_cusp_arithmetic();
    auto domain = fixture_domain(eleven_vertex_example());
    std::set<std::string> printed, found;
    auto key = [&](const Moebius& m) { return format_free_word(domain.generators, class_key(reduce_to_basis(domain, m))); };
    for (const auto& w : fx.words) printed.insert(key(word_value(fx.generators, w)));
    for (const auto& w : systole_matrix_group(domain, 18).classes) found.insert(key(w.matrix));
    out.need(printed.size() == 6 && printed == found, "printed 11-cusp words are the six systoles");
    out.detail << "tetra " << format12(tetra.length) << ", octa " << format12(octa.length) << ", ico "
               << format12(ico.length) << " x" << ico.witnesses.size() << ", n=10 x" << ten.witnesses.size()
               << ", n=11 x" << eleven.witnesses.size() << " ";
}

}  // namespace

namespace {

void fixture_values(Outcome& out) {
    for (const auto& g : group_fixtures()) {
        for (const auto& x : g.generators) out.need(x.matrix.det() == 1, g.name + " " + x.name + " determinant");
    }
    auto g5 = ten_cusp_gamma5_as_printed();
    out.detail << "printed 10-cusp g5 det " << Rational(g5[0] * g5[3] - g5[1] * g5[2]).get_str() << " (corrected to 1); ";

    for (const auto& g : {ten_cusp_arithmetic(), eleven_cusp_arithmetic()}) {
        for (const auto& w : g.words) out.need(abs(word_trace(g.generators, w)) == 18, g.name + " word " + w);
    }

    auto eleven = eleven_cusp_perturbed();
    std::multiset<Rational> got, want{Rational(454, 25), Rational(454, 25), Rational(36361, 2020),
                                      Rational(36361, 2020), Rational(36361, 2020), Rational(36361, 2020)};
    for (const auto& w : eleven.words) got.insert(abs(word_trace(eleven.generators, w)));
    out.need(got == want, "perturbed 11-cusp word traces");
    auto d11 = perturbed_domain(eleven_vertex_example(), eleven_cusp_arithmetic(), eleven);
    auto wider = systole_matrix_group(d11, Rational(1820, 100));
    std::set<Rational> minima;
    for (const auto& w : wider.classes) minima.insert(w.abs_trace());
    out.need(minima == std::set<Rational>{Rational(454, 25), Rational(36361, 2020)}, "perturbed 11-cusp minima");

    auto ten = ten_cusp_perturbed();
    std::set<Rational> ten_traces;
    for (const auto& w : ten.words) ten_traces.insert(word_trace(ten.generators, w));
    bool one_trace = ten_traces.size() == 1;
    out.need(one_trace, "perturbed 10-cusp words share one trace");
    if (one_trace) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", ten_traces.begin()->get_d());
        out.need(std::string(buf) == "-18.1596", "perturbed 10-cusp trace begins -18.1596");
        out.detail << "10-cusp perturbed trace " << rational_str(*ten_traces.begin()) << "; ";
    }

    auto d7 = perturbed_domain(seven_vertex_example(), seven_cusp_arithmetic(), seven_cusp_perturbed());
    auto seven = systole_matrix_group(d7, Rational(1405, 100));
    std::multiset<std::string> rounded, printed{"14.0364", "14.0364", "14.0037", "14.0071", "14.0211"};
    bool above = true;
    for (const auto& w : seven.classes) {
        rounded.insert(four_decimals(w.trace));
        above = above && w.abs_trace() > 14;
    }
    out.need(seven.frontier_exhausted && rounded == printed, "perturbed 7-cusp traces round to the printed values");
    out.need(above, "perturbed 7-cusp traces exceed 14");
}

void certified_absence(Outcome& out) {
    struct Case {
        const char* name;
        IdealPolygon domain;
    };
    std::vector<Case> cases{
        {"n=10", perturbed_domain(ten_vertex_long_tree(), ten_cusp_arithmetic(), ten_cusp_perturbed())},
        {"n=11", perturbed_domain(eleven_vertex_example(), eleven_cusp_arithmetic(), eleven_cusp_perturbed())}};
    for (const auto& c : cases) {
        out.need(polygon_problems(c.domain).empty(), std::string(c.name) + " domain");
        auto r = systole_matrix_group(c.domain, 18);
        out.need(r.classes.empty() && r.frontier_exhausted, std::string(c.name) + " empty and exhausted at 18");
        out.detail << c.name << ": " << r.classes.size() << " classes, exhausted " << r.frontier_exhausted << ", "
                   << r.cover_balls << " balls of radius <= " << format12(r.cover_radius) << ", reach "
                   << format12(r.reach) << ", " << r.tiles << " tiles; ";
    }
}

}  // namespace

namespace {

using M2 = std::array<long, 4>;

M2 mul(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

M2 power(M2 x, long e) {
    M2 r{1, 0, 0, 1};
    for (; e > 0; e >>= 1, x = mul(x, x)) {
        if (e & 1) r = mul(r, x);
    }
    return r;
}

const M2 left{1, 1, 0, 1}, right{1, 0, 1, 1};

bool farey_faces(const Development& dev) {
    for (int f = 0; f < dev.graph.num_faces(); ++f) {
        auto labels = dev.face_labels(f);
        for (int i = 0; i < 3; ++i) {
            const Fraction& x = labels[i];
            const Fraction& y = labels[(i + 1) % 3];
            if (abs(Integer(x.num() * y.den() - y.num() * x.den())) != 1) return false;
        }
    }
    return true;
}

void algebraic_identities(Outcome& out) {
    constexpr int cases = 10000;
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<long> width(2, 200);
    int good = 0;
    for (int k = 0; k < cases; ++k) {
        long m1 = width(rng), m2 = width(rng);
        std::string w = "L" + std::string(m1 - 2, 'R') + "L" + std::string(m2 - 2, 'R');
        M2 plain = mul(mul(left, power(right, m1 - 2)), mul(left, power(right, m2 - 2)));
        good += plain[0] + plain[3] == m1 * m2 - 2 && lr_word_value(w).trace() == m1 * m2 - 2;
    }
    out.need(good == cases, "trace of L R^(m1-2) L R^(m2-2)");
    out.detail << good << " density words, ";

    good = 0;
    for (int k = 0; k < cases; ++k) {
        long m1 = width(rng) - 1, m2 = width(rng) - 1;
        M2 prod = mul(power(left, m1), M2{1, 0, -m2, 1});
        good += parabolic_product_trace(m1, m2) == std::labs(prod[0] + prod[3]);
    }
    out.need(good == cases, "parabolic products");
    out.detail << good << " parabolic products, ";

    good = 0;
    for (int k = 0; k < cases; ++k) {
        long d = width(rng) - 1;
        M2 plain = mul(power(left, 4), power(right, d - 1));
        bool lib = k % 5 != 0 || lr_word_value("LLLL" + std::string(d - 1, 'R')).trace() == 4 * d - 2;
        good += plain[0] + plain[3] == 4 * d - 2 && lib;
    }
    out.need(good == cases, "trace of L^4 R^(d-1)");
    out.detail << good << " pendant words, ";

    std::size_t maps = 0, bad = 0;
    auto excess = [&](const Triangulation& g) {
        int s = 0;
        for (int v = 0; v < g.num_vertices(); ++v) s += 6 - g.degree(v);
        ++maps;
        bad += s != 12;
    };
    for (int n = 4; n <= 12; ++n) {
        for (const auto& g : enumerate_triangulations({n, 3, false, false})) {
            excess(g);
            if (n <= 9) {
                for (int e = 0; e < g.num_edges(); ++e) excess(insert_bigon_vertex(g, e));
                for (Dart d = 0; d < g.num_darts(); ++d) excess(insert_pendant(g, d));
            }
        }
    }
    out.need(bad == 0 && maps >= cases, "degree excess 12");
    out.detail << maps << " maps with excess 12, ";

    std::size_t developments = 0, broken = 0;
    for (int n = 4; n <= 11; ++n) {
        for (const auto& g : enumerate_triangulations({n, 3, false, false})) {
            for (Vertex root = 0; root < n; ++root) {
                ++developments;
                broken += !farey_faces(develop(g, SpanningTree::bfs(g, root)));
            }
        }
    }
    out.need(broken == 0 && developments >= cases, "Farey faces");
    out.detail << developments << " developments with Farey faces";
}

}  // namespace

namespace {

std::vector<Fraction> fracs(std::initializer_list<const char*> xs) {
    std::vector<Fraction> v;
    for (const char* x : xs) v.push_back(Fraction::parse(x));
    return v;
}

bool pairs_sides(const Development& dev, const Moebius& m, std::pair<const char*, const char*> a,
                 std::pair<const char*, const char*> b) {
    auto fa = std::pair{Fraction::parse(a.first), Fraction::parse(a.second)};
    auto fb = std::pair{Fraction::parse(b.first), Fraction::parse(b.second)};
    auto same = [](const std::pair<Fraction, Fraction>& x, const std::pair<Fraction, Fraction>& y) {
        return (x.first == y.first && x.second == y.second) || (x.first == y.second && x.second == y.first);
    };
    for (const auto& p : dev.pairings) {
        if ((p.matrix == m && same(p.from, fa) && same(p.to, fb)) ||
            (p.matrix == m.inverse() && same(p.from, fb) && same(p.to, fa))) {
            return true;
        }
    }
    return false;
}

void developing_correctness(Outcome& out) {
    auto ex1 = tetrahedron_example();
    auto d1 = develop(ex1.graph, *ex1.tree, ex1.seed);
    out.need(d1.polygon == fracs({"inf", "0", "1", "3/2", "2", "3"}), "Example 1 polygon");
    out.need(pairs_sides(d1, Moebius(1, 3, 0, 1), {"0", "inf"}, {"3", "inf"}), "Example 1 pairing T^3");
    std::set<std::string> fixed;
    for (const auto& g : generators(d1)) {
        Fraction x = g.matrix.parabolic_fixed_point();
        fixed.insert(x.pretty());
        out.need(equal_up_to_inverse(g.matrix, cusp_parabolic(x, 3)), "Example 1 generator is a width-3 parabolic");
    }
    out.need(fixed == std::set<std::string>{"inf", "1", "2"}, "Example 1 generators fix inf, 1, 2");

    auto ex2 = ten_vertex_example();
    auto d2 = develop(ex2.graph, *ex2.tree, ex2.seed);
    out.need(d2.polygon == fracs({"inf", "0", "1/2", "1", "3/2", "2", "7/3", "5/2", "3", "10/3", "7/2", "18/5",
                                  "29/8", "11/3", "4", "9/2", "14/3", "5"}),
             "Example 2 polygon");
    out.need(pairs_sides(d2, Moebius(-24, 5, -5, 1), {"0", "1/2"}, {"5", "14/3"}), "Example 2 pairing (-24 5; -5 1)");
    for (const auto& p : ten_vertex_printed_pairings()) {
        bool found = false;
        for (const auto& q : d2.pairings) found = found || equal_up_to_inverse(p.matrix, q.matrix);
        out.need(found, "Example 2 printed pairing " + p.matrix.str());
    }
    out.need(check_cusp_parabolics(d1) && check_cusp_parabolics(d2), "Example cusps");

    std::size_t developments = 0, failures = 0;
    for (int n = 4; n <= 8; ++n) {
        for (const auto& g : enumerate_triangulations({n, 3, false, false})) {
            for (const auto& edges : oracle::spanning_trees(g)) {
                SpanningTree t(g, edges);
                for (Dart d = 0; d < g.num_darts(); ++d) {
                    if (!t.contains(g.edge_of(d)) || t.tree_degree(g.origin(d)) != 1) continue;
                    for (bool twin : {false, true}) {
                        ++developments;
                        failures += !check_cusp_parabolics(develop(g, t, DevelopSeed{d, twin}));
                    }
                }
            }
        }
    }
    out.need(failures == 0, "cusp sweep");
    out.detail << "examples verbatim; cusp check on " << developments << " developments (every tree and seed, n <= 8), "
               << failures << " failures";
}

void oracle_equivalence(Outcome& out, int threads) {
    for (int n = 4; n <= 8; ++n) {
        auto naive = oracle::all_simple(n);
        auto ours = enumerate_triangulations({n, 3, false, false}, threads);
        bool bijective = naive.size() == ours.size();
        for (const auto& g : ours) {
            auto m = oracle::from_library(g);
            int hits = 0;
            for (const auto& x : naive) hits += oracle::isomorphic(m, x);
            bijective = bijective && hits == 1;
        }
        out.need(bijective, "naive generator at n=" + std::to_string(n));
        out.detail << "n=" << n << ":" << ours.size() << " ";
    }
    std::vector<GraphFixture> graphs;
    for (const auto& f : graph_fixtures()) {
        if (validate(f.graph).regular) graphs.push_back(f);
    }
    for (const char* name : {"tetrahedron", "octahedron", "pentagonal-bipyramid", "icosahedron"}) {
        graphs.push_back(graph_fixture(name));
    }
    for (const auto& f : graphs) {
        auto comb = combinatorial_spectrum(f.graph, 30, threads);
        IdealPolygon domain;
        if (f.tree) {
            domain = fixture_domain(f);
        } else {
            domain = polygon_from_development(develop(f.graph, SpanningTree::bfs(f.graph)));
        }
        auto rep = systole_matrix_group(domain, 30);
        bool same = rep.frontier_exhausted && sorted_abs_traces(comb) == sorted_abs_traces(rep.classes);
        out.need(same, f.name + " spectra up to 30");
        out.detail << f.name << ":" << comb.size() << " ";
    }
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::max(1, std::atoi(argv[1])) : 1;
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "extremal densities", [&](Outcome& o) { extremal_densities(o, threads); }},
        {2, "systole values", [&](Outcome& o) { systole_values(o, threads); }},
        {3, "fixture verification", fixture_values},
        {4, "certified absence", certified_absence},
        {5, "algebraic identities", algebraic_identities},
        {6, "developing correctness", developing_correctness},
        {7, "oracle equivalence", [&](Outcome& o) { oracle_equivalence(o, threads); }},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "[exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        char t[32];
        std::snprintf(t, sizeof t, "%.1fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", " << t
                  << "): " << o.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
