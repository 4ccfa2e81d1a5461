#include "systole/claims.hpp"

#include "systole/enumerate.hpp"
#include "systole/error.hpp"
#include "systole/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

namespace systole {

IdealPolygon fixture_domain(const GraphFixture& graph) {
    if (!graph.tree) fail(ErrorKind::invalid_argument, graph.name + " has no spanning tree");
    return polygon_from_development(develop(graph.graph, *graph.tree, graph.seed));
}

IdealPolygon perturbed_domain(const GraphFixture& graph, const GroupFixture& arithmetic,
                              const GroupFixture& perturbed) {
    std::vector<Moebius> base;
    for (const auto& g : arithmetic.generators) base.push_back(g.matrix);
    return transport_polygon(fixture_domain(graph), base, perturbed.generators);
}

nlohmann::json claim_to_json(const ClaimResult& c) {
    return {{"group", c.group}, {"id", c.id}, {"source", c.source}, {"passed", c.passed}, {"detail", c.detail}};
}

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

std::string traces_of(const std::vector<GeodesicWitness>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : " ") + rational_str(w.trace);
    return s.empty() ? "none" : s;
}

// Conjugacy classes, up to inversion, of the given words as keys in the
// basis of `domain`.
std::set<std::string> class_keys(const IdealPolygon& domain, const GroupFixture& group,
                                 const std::vector<std::string>& words) {
    std::set<std::string> out;
    for (const auto& w : words) {
        out.insert(format_free_word(domain.generators,
                                    class_key(reduce_to_basis(domain, word_value(group.generators, w)))));
    }
    return out;
}

std::set<std::string> class_keys(const IdealPolygon& domain, const std::vector<GeodesicWitness>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) {
        out.insert(format_free_word(domain.generators, class_key(reduce_to_basis(domain, w.matrix))));
    }
    return out;
}

struct Runner {
    int threads;
    std::vector<ClaimResult> results;

    void add(std::string group, std::string id, std::string source, bool passed, std::string detail) {
        results.push_back({std::move(group), std::move(id), std::move(source), passed, std::move(detail)});
    }

    // Runs `body`, recording a failed claim if it throws.
    void guarded(const std::string& group, const std::string& id, const std::string& source,
                 const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(group, id, source, false, std::string("error: ") + e.what());
        }
    }
};

}  // namespace

namespace {

int side_between(const IdealPolygon& p, const Fraction& a, const Fraction& b) {
    for (int i = 0; i < p.size(); ++i) {
        const Fraction& x = p.vertices[i];
        const Fraction& y = p.vertices[(i + 1) % p.size()];
        if ((x == a && y == b) || (x == b && y == a)) return i;
    }
    return -1;
}

std::string vertex_list(const std::vector<Fraction>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.pretty();
    return s;
}

void example_claims(Runner& r) {
    const std::string g = "examples";
    r.guarded(g, "example-1-polygon", "Example 1", [&] {
        auto fx = tetrahedron_example();
        auto dev = develop(fx.graph, *fx.tree, fx.seed);
        auto poly = polygon_from_development(dev);
        std::vector<Fraction> want{Fraction::infinity(), 0, 1, Fraction(3, 2), 2, 3};
        r.add(g, "example-1-polygon", "Example 1", poly.vertices == want,
              "polygon " + vertex_list(poly.vertices));
        // T^3 and its conjugates fixing 1 and 2 pair all sides.
        std::vector<std::pair<Moebius, std::pair<Fraction, Fraction>>> expected{
            {Moebius::translation(3), {Fraction::infinity(), 0}},
            {cusp_parabolic(1, 3), {0, 1}},
            {cusp_parabolic(2, 3), {Fraction(3, 2), 2}}};
        bool ok = true;
        std::string detail;
        for (const auto& [m, side] : expected) {
            int s = side_between(poly, side.first, side.second);
            bool hit = s >= 0 && equal_up_to_inverse(poly.pairing[s], m);
            ok = ok && hit;
            detail += m.str() + (hit ? " pairs " : " missing at ") + side.first.pretty() + "," +
                      side.second.pretty() + "; ";
        }
        r.add(g, "example-1-generators", "Example 1", ok, detail);
        r.add(g, "example-1-cusps", "Example 1", check_cusp_parabolics(dev), "cusp composites parabolic");
    });
    r.guarded(g, "example-2-polygon", "Example 2", [&] {
        auto fx = ten_vertex_example();
        auto dev = develop(fx.graph, *fx.tree, fx.seed);
        auto poly = polygon_from_development(dev);
        r.add(g, "example-2-polygon", "Example 2", poly.vertices == ten_vertex_printed_polygon(),
              "polygon " + vertex_list(poly.vertices));
        bool ok = true;
        std::string detail;
        for (const auto& pp : ten_vertex_printed_pairings()) {
            int a = side_between(poly, pp.side_a.first, pp.side_a.second);
            int b = side_between(poly, pp.side_b.first, pp.side_b.second);
            bool hit = a >= 0 && b >= 0 && poly.partner[a] == b && equal_up_to_inverse(poly.pairing[a], pp.matrix);
            ok = ok && hit;
            detail += pp.matrix.str() + (hit ? " ok; " : " mismatch; ");
        }
        r.add(g, "example-2-pairings", "Example 2", ok, detail);
        r.add(g, "example-2-cusps", "Example 2", check_cusp_parabolics(dev), "cusp composites parabolic");
    });
}

}  // namespace

namespace {

void fixture_claims(Runner& r) {
    const std::string g = "fixtures";
    std::vector<GroupFixture> groups{seven_cusp_arithmetic(), seven_cusp_perturbed(), ten_cusp_arithmetic(),
                                     ten_cusp_perturbed(),    eleven_cusp_arithmetic(), eleven_cusp_perturbed()};
    // Parabolic generators expected per list; the 11-cusp list also holds
    // hyperbolic elements, but nothing may be elliptic.
    const std::map<std::string, std::size_t> parabolic_count{
        {"seven-cusp-arithmetic", 6}, {"seven-cusp-perturbed", 6},    {"ten-cusp-arithmetic", 9},
        {"ten-cusp-perturbed", 9},    {"eleven-cusp-arithmetic", 8}, {"eleven-cusp-perturbed", 8}};
    for (const auto& grp : groups) {
        bool det_ok = true, elliptic = false;
        std::size_t parabolic = 0;
        for (const auto& gen : grp.generators) {
            det_ok = det_ok && gen.matrix.det() == 1;
            if (gen.matrix.kind() == MoebiusKind::parabolic) ++parabolic;
            if (gen.matrix.kind() == MoebiusKind::elliptic) elliptic = true;
        }
        r.add(g, grp.name + "-determinants", grp.citation, det_ok,
              std::to_string(grp.generators.size()) + " generators, all determinant 1");
        r.add(g, grp.name + "-parabolic", grp.citation, !elliptic && parabolic == parabolic_count.at(grp.name),
              std::to_string(parabolic) + " parabolic generators, none elliptic");
    }
    auto printed = ten_cusp_gamma5_as_printed();
    Rational det = printed[0] * printed[3] - printed[1] * printed[2];
    r.add(g, "gamma5-n10", "10-cusp generator list, fifth matrix", det == 449,
          "printed (16 -45; 5 14) has determinant " + rational_str(det) +
              "; stored with d = -14, determinant " +
              rational_str(ten_cusp_arithmetic().generators[4].matrix.det()));

    for (const auto& grp : {ten_cusp_arithmetic(), eleven_cusp_arithmetic()}) {
        bool ok = !grp.words.empty();
        std::string detail;
        for (const auto& w : grp.words) {
            Rational t = word_trace(grp.generators, w);
            ok = ok && abs(t) == 18;
            detail += w + " -> " + rational_str(t) + "; ";
        }
        r.add(g, grp.name + "-words", grp.citation, ok, detail);
    }
    {
        auto grp = ten_cusp_perturbed();
        std::set<std::string> traces;
        double first = 0;
        for (const auto& w : grp.words) {
            Rational t = word_trace(grp.generators, w);
            traces.insert(rational_str(t));
            first = t.get_d();
        }
        bool ok = traces.size() == 1 && format12(first).rfind("-18.1596", 0) == 0;
        r.add(g, grp.name + "-words", grp.citation, ok,
              "traces {" + *traces.begin() + "} = " + format12(first));
    }
    {
        auto grp = eleven_cusp_perturbed();
        std::set<Rational> traces;
        for (const auto& w : grp.words) traces.insert(abs(word_trace(grp.generators, w)));
        std::set<Rational> want{Rational(454, 25), Rational(36361, 2020)};
        std::string detail;
        for (const auto& t : traces) detail += rational_str(t) + " ";
        r.add(g, grp.name + "-words", grp.citation, traces == want, "|traces| " + detail);
    }
}

}  // namespace

namespace {

void systole_claim(Runner& r, const std::string& group, const std::string& id, const std::string& source,
                   const Triangulation& graph, std::int64_t trace, std::size_t witnesses, double length) {
    r.guarded(group, id, source, [&] {
        auto s = systole_combinatorial(graph, r.threads);
        bool ok = s.trace == trace && close(s.length, length) && (witnesses == 0 || s.witnesses.size() == witnesses);
        r.add(group, id, source, ok,
              "trace " + rational_str(s.trace) + ", length " + format12(s.length) + ", " +
                  std::to_string(s.witnesses.size()) + " witnesses");
    });
}

// Certified absence of classes with |trace| <= bound in a perturbed group.
void absence_claim(Runner& r, const std::string& group, const std::string& id, const std::string& source,
                   const IdealPolygon& domain, const Rational& bound) {
    auto rep = systole_matrix_group(domain, bound);
    r.add(group, id, source, rep.classes.empty() && rep.frontier_exhausted,
          std::to_string(rep.classes.size()) + " classes with |trace| <= " + rational_str(bound) +
              ", exhausted " + (rep.frontier_exhausted ? "yes" : "no") + "; " + rep.certificate);
}

void density_claims(Runner& r, int n) {
    const std::string g = "n=" + std::to_string(n);
    r.guarded(g, g + "-max-min-density", "case n = " + std::to_string(n), [&] {
        auto rep = verify_proposition(n, r.threads);
        r.add(g, g + "-max-min-density", "case n = " + std::to_string(n), rep.max_min_density == rep.expected,
              std::to_string(rep.regular_classes) + " simple triangulations, max-min density " +
                  std::to_string(rep.max_min_density) + " (expected " + std::to_string(rep.expected) + "), " +
                  std::to_string(rep.extremal) + " extremal");
        bool fam_ok = true;
        std::string detail = "trace bound " + std::to_string(rep.trace_bound) + ";";
        for (const auto& f : rep.families) {
            fam_ok = fam_ok && f.below_bound;
            detail += " " + f.name + ": " + std::to_string(f.members) + " maps, worst " +
                      std::to_string(f.worst_trace) + ";";
        }
        if (rep.families.empty()) detail += " no smaller regular class to build on";
        r.add(g, g + "-non-regular", "case n = " + std::to_string(n), fam_ok, detail);
    });
}

}  // namespace

namespace {

std::string rounded4(const Rational& t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", std::abs(t.get_d()));
    return buf;
}

void case_claims(Runner& r, int n) {
    const std::string g = "n=" + std::to_string(n);
    density_claims(r, n);
    switch (n) {
    case 4:
        systole_claim(r, g, "tetrahedron-systole", "case n = 4", tetrahedron(), 7, 0, 2 * std::acosh(3.5));
        r.add(g, "tetrahedron-schmutz", "case n = 4", close(2 * std::acosh(3.5), schmutz_bound(4)),
              "2 arccosh(7/2) = " + format12(2 * std::acosh(3.5)) + ", bound " + format12(schmutz_bound(4)));
        break;
    case 6:
        systole_claim(r, g, "octahedron-systole", "case n = 6", octahedron(), 14, 0, 2 * std::acosh(7.0));
        r.add(g, "octahedron-schmutz", "case n = 6", close(2 * std::acosh(7.0), schmutz_bound(6)),
              "2 arccosh(7) = " + format12(2 * std::acosh(7.0)) + ", bound " + format12(schmutz_bound(6)));
        break;
    case 7:
        r.guarded(g, "seven-cusp-perturbed", "7-cusp perturbation", [&] {
            auto fx = seven_vertex_example();
            auto arith = seven_cusp_arithmetic();
            auto base = fixture_domain(fx);
            auto a = systole_matrix_group(base, 14);
            r.add(g, "seven-cusp-arithmetic-classes", "7-cusp arithmetic group",
                  a.classes.size() == 5 && a.frontier_exhausted,
                  std::to_string(a.classes.size()) + " classes of trace " + traces_of(a.classes));
            auto domain = perturbed_domain(fx, arith, seven_cusp_perturbed());
            absence_claim(r, g, "seven-cusp-perturbed-absence", "7-cusp perturbation", domain, 14);
            auto near = systole_matrix_group(domain, Rational(1405, 100));
            std::multiset<std::string> got, want{"14.0364", "14.0364", "14.0037", "14.0071", "14.0211"};
            bool above = true;
            for (const auto& w : near.classes) {
                got.insert(rounded4(w.trace));
                above = above && w.abs_trace() > 14;
            }
            r.add(g, "seven-cusp-perturbed-traces", "7-cusp perturbation", got == want && above,
                  "traces " + traces_of(near.classes));
        });
        break;
    case 9:
        r.guarded(g, "n=9-extremal-degrees", "case n = 9", [&] {
            auto ext = max_min_density(EnumerationQuery{9, 3, false, false}, r.threads);
            bool ok = !ext.extremal.empty();
            for (const auto& t : ext.extremal) {
                auto deg = validate(t).degrees;
                ok = ok && std::count(deg.begin(), deg.end(), 4) == 3 && std::count(deg.begin(), deg.end(), 5) == 6;
            }
            r.add(g, "n=9-extremal-degrees", "case n = 9", ok,
                  std::to_string(ext.extremal.size()) + " extremal, degrees 4^3 5^6");
        });
        break;
    default:
        break;
    }
}

}  // namespace

namespace {

void word_class_claim(Runner& r, const std::string& g, const std::string& id, const std::string& source,
                      const IdealPolygon& domain, const GroupFixture& grp, std::size_t count) {
    auto rep = systole_matrix_group(domain, 18);
    auto found = class_keys(domain, rep.classes);
    auto printed = class_keys(domain, grp, grp.words);
    // Printed words may repeat a class (cyclic rotations); each must be one
    // of the certified classes.
    bool covered = std::includes(found.begin(), found.end(), printed.begin(), printed.end());
    bool ok = rep.frontier_exhausted && rep.classes.size() == count && covered;
    r.add(g, id, source, ok,
          std::to_string(rep.classes.size()) + " classes with |trace| <= 18 (" + traces_of(rep.classes) + "); " +
              std::to_string(grp.words.size()) + " printed words in " + std::to_string(printed.size()) +
              " distinct classes, " + (covered ? "all certified" : "not all certified"));
}

void large_case_claims(Runner& r, int n) {
    const std::string g = "n=" + std::to_string(n);
    if (n == 10) {
        systole_claim(r, g, "ten-vertex-systole", "10-cusp arithmetic example", ten_vertex_example().graph, 18, 8,
                      2 * std::acosh(9.0));
        r.guarded(g, "ten-cusp-groups", "10-cusp section", [&] {
            auto fx = ten_vertex_long_tree();
            word_class_claim(r, g, "ten-cusp-arithmetic-words", "10-cusp systole words", fixture_domain(fx),
                             ten_cusp_arithmetic(), 8);
            absence_claim(r, g, "ten-cusp-perturbed-absence", "10-cusp perturbation",
                          perturbed_domain(fx, ten_cusp_arithmetic(), ten_cusp_perturbed()), 18);
        });
    } else if (n == 11) {
        systole_claim(r, g, "eleven-vertex-systole", "11-cusp arithmetic example", eleven_vertex_example().graph,
                      18, 6, 2 * std::acosh(9.0));
        r.guarded(g, "eleven-vertex-extremal", "11-vertex example caption", [&] {
            auto fx = eleven_vertex_example();
            auto ext = max_min_density(EnumerationQuery{11, 3, false, false}, r.threads);
            auto code = canonical_code(fx.graph);
            bool among = std::any_of(ext.extremal.begin(), ext.extremal.end(),
                                     [&](const Triangulation& t) { return canonical_code(t) == code; });
            auto dens = density(fx.graph);
            auto d20 = std::count(dens.edge_density.begin(), dens.edge_density.end(), 20);
            r.add(g, "eleven-vertex-extremal", "11-vertex example caption", among && d20 == 6 && dens.min_density == 20,
                  std::string(among ? "among" : "not among") + " the " + std::to_string(ext.extremal.size()) +
                      " extremal maps; " + std::to_string(d20) + " edges of density 20");
        });
        r.guarded(g, "eleven-cusp-groups", "11-cusp section", [&] {
            auto fx = eleven_vertex_example();
            word_class_claim(r, g, "eleven-cusp-arithmetic-words", "11-cusp systole words", fixture_domain(fx),
                             eleven_cusp_arithmetic(), 6);
            auto domain = perturbed_domain(fx, eleven_cusp_arithmetic(), eleven_cusp_perturbed());
            absence_claim(r, g, "eleven-cusp-perturbed-absence", "11-cusp perturbation", domain, 18);
            auto near = systole_matrix_group(domain, Rational(182, 10));
            bool ok = !near.classes.empty() && near.classes.front().abs_trace() == Rational(36361, 2020);
            for (const auto& w : near.classes) {
                ok = ok && (w.abs_trace() == Rational(36361, 2020) || w.abs_trace() == Rational(454, 25));
            }
            r.add(g, "eleven-cusp-perturbed-minima", "11-cusp perturbation", ok,
                  "classes with |trace| <= 18.2: " + traces_of(near.classes));
        });
    } else if (n == 12) {
        systole_claim(r, g, "icosahedron-systole", "case n = 12", icosahedron(), 23, 30, 2 * std::acosh(11.5));
        double lhs = 4 * std::acosh(2.5), rhs = 2 * std::acosh(11.5);
        r.add(g, "icosahedron-schmutz", "case n = 12", close(lhs, rhs) && close(rhs, schmutz_bound(12)),
              "4 arccosh(5/2) = " + format12(lhs) + ", 2 arccosh(23/2) = " + format12(rhs));
    }
}

}  // namespace

std::vector<std::string> claim_selectors() {
    std::vector<std::string> out{"all", "examples", "fixtures"};
    for (int n = 4; n <= 12; ++n) out.push_back("n=" + std::to_string(n));
    return out;
}

namespace {

std::vector<ClaimResult> run_group(const std::string& group, int threads) {
    Runner r{threads, {}};
    if (group == "examples") {
        example_claims(r);
    } else if (group == "fixtures") {
        fixture_claims(r);
    } else {
        int n = std::stoi(group.substr(2));
        case_claims(r, n);
        large_case_claims(r, n);
    }
    return r.results;
}

}  // namespace

std::vector<ClaimResult> verify_claims(const std::string& selector, int threads) {
    auto groups = claim_selectors();
    groups.erase(groups.begin());
    if (selector == "all") {
        std::vector<ClaimResult> out;
        for (const auto& g : groups) {
            auto part = run_group(g, threads);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (std::find(groups.begin(), groups.end(), selector) != groups.end()) return run_group(selector, threads);
    // A single claim id: run groups until one produces it.
    std::string id = selector == "fixture γ5-n10" ? "gamma5-n10" : selector;
    for (const auto& g : groups) {
        for (auto& c : run_group(g, threads)) {
            if (c.id == id) return {c};
        }
    }
    fail(ErrorKind::invalid_argument, "unknown claim selector '" + selector + "'");
}

}  // namespace systole
