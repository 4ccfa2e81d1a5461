// systole: command-line front end.
//
// Exit codes: 0 success, 1 a check or claim failed, 2 bad input, 3 resource
// limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "systole/claims.hpp"
#include "systole/developing.hpp"
#include "systole/enumerate.hpp"
#include "systole/error.hpp"
#include "systole/fixtures.hpp"
#include "systole/fuchsian.hpp"
#include "systole/geodesics.hpp"
#include "systole/group_io.hpp"
#include "systole/triangulation.hpp"
#include "systole/triangulation_io.hpp"

using namespace systole;
using nlohmann::json;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2, resource_limit = 3 };

struct Globals {
    bool json = false;
    int threads = 1;
    std::string seed_edge;
    std::string trace_bound;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != token.size()) fail(ErrorKind::parse, what + ": bad integer '" + token + "'");
        out.push_back(v);
    }
    return out;
}

/// "0-1,1-2,2-3" as vertex pairs.
std::vector<std::pair<Vertex, Vertex>> parse_tree(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        auto dash = token.find('-');
        if (dash == std::string::npos) fail(ErrorKind::parse, "tree edge '" + token + "' is not u-v");
        auto a = parse_ints(token.substr(0, dash), "tree");
        auto b = parse_ints(token.substr(dash + 1), "tree");
        out.push_back({a.at(0), b.at(0)});
    }
    return out;
}

/// "u,v" or "u,v,w": ∞ at u, 0 at v, and the first face the one containing w.
DevelopSeed parse_seed(const Triangulation& g, const SpanningTree& t, const std::string& text) {
    auto xs = parse_ints(text, "--seed-edge");
    if (xs.size() != 2 && xs.size() != 3) fail(ErrorKind::parse, "--seed-edge takes u,v or u,v,w");
    for (int x : xs) {
        if (x < 0 || x >= g.num_vertices()) fail(ErrorKind::invalid_argument, "--seed-edge: no vertex " + std::to_string(x));
    }
    if (xs.size() == 3) return seed_for(g, t, xs[0], xs[1], xs[2]);
    for (Dart d : g.rotation(xs[0])) {
        if (g.head(d) == xs[1] && t.contains(g.edge_of(d))) return DevelopSeed{d, false};
    }
    fail(ErrorKind::invalid_argument, "--seed-edge: " + text + " is not a tree edge");
}

Triangulation load_graph(const std::string& path) {
    auto g = parse_triangulation(read_input(path));
    require_valid(g);
    return g;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string row(const GeodesicWitness& w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-14s %-20s ", rational_str(w.trace).c_str(), format12(w.length).c_str());
    return buf + w.word;
}

}  // namespace

namespace {

int cmd_validate(const Globals& o, const std::string& path) {
    auto rep = validate(parse_triangulation(read_input(path)));
    if (o.json) {
        print_json({{"valid", rep.valid},
                    {"diagnostics", rep.diagnostics},
                    {"vertices", rep.vertices},
                    {"edges", rep.edges},
                    {"faces", rep.faces},
                    {"degrees", rep.degrees},
                    {"min_degree", rep.min_degree},
                    {"degree_excess", rep.degree_excess},
                    {"has_loops", rep.has_loops},
                    {"has_duplicates", rep.has_duplicates},
                    {"regular", rep.regular}});
    } else {
        std::cout << (rep.valid ? "valid" : "invalid") << "\n";
        for (const auto& d : rep.diagnostics) std::cout << "  " << d << "\n";
        std::cout << "vertices " << rep.vertices << ", edges " << rep.edges << ", faces " << rep.faces << "\n";
        std::cout << "degrees";
        for (int d : rep.degrees) std::cout << " " << d;
        std::cout << "\nmin degree " << rep.min_degree << ", sum of (6 - deg) " << rep.degree_excess << "\n";
        std::cout << "loops " << (rep.has_loops ? "yes" : "no") << ", duplicate edges "
                  << (rep.has_duplicates ? "yes" : "no") << ", regular " << (rep.regular ? "yes" : "no") << "\n";
    }
    return rep.valid ? ok : input_error;
}

int cmd_density(const Globals& o, const std::string& path) {
    auto g = load_graph(path);
    auto rep = density(g);
    std::optional<DensityWitness> witness;
    std::string witness_note;
    if (rep.witness_edge >= 0) {
        try {
            witness = verify_density_length(g, rep.witness_edge);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::not_hyperbolic) throw;
            witness_note = e.what();
        }
    }
    auto certs = pattern_certificates(g);
    if (o.json) {
        json edges = json::array();
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [u, v] = g.endpoints(e);
            edges.push_back({{"edge", e}, {"u", u}, {"v", v}, {"density", rep.edge_density[e]}, {"loop", bool(rep.loop_edge[e])}});
        }
        json j{{"edges", edges}, {"min_density", rep.min_density}, {"witness_edge", rep.witness_edge}};
        if (witness) {
            j["witness"] = {{"edge", witness->edge}, {"start", witness->start}, {"word", witness->word},
                            {"trace", rational_str(witness->trace)}, {"length", round12(witness->length)}};
        } else if (!witness_note.empty()) {
            j["witness_note"] = witness_note;
        }
        json cj = json::array();
        for (const auto& c : certs) {
            cj.push_back({{"kind", to_string(c.kind)}, {"vertices", c.vertices}, {"word", c.word},
                          {"trace", rational_str(c.trace)}, {"description", c.description}});
        }
        j["patterns"] = cj;
        print_json(j);
        return ok;
    }
    std::cout << "edge  u  v  density\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.endpoints(e);
        std::printf("%4d %2d %2d  %lld%s\n", e, u, v, static_cast<long long>(rep.edge_density[e]),
                    rep.loop_edge[e] ? " (loop)" : "");
    }
    std::cout << "min density " << rep.min_density << " at edge " << rep.witness_edge << "\n";
    if (witness) {
        std::cout << "closed walk " << witness->word << " from dart " << witness->start << ": trace "
                  << rational_str(witness->trace) << ", length " << format12(witness->length) << "\n";
    } else if (!witness_note.empty()) {
        std::cout << "no geodesic around the witness edge: " << witness_note << "\n";
    }
    for (const auto& c : certs) {
        std::cout << to_string(c.kind) << ": trace " << rational_str(c.trace) << " " << c.description << "\n";
    }
    return ok;
}

}  // namespace

namespace {

struct GraphSource {
    std::string path;
    std::string fixture;
    std::string tree;
};

Development develop_source(const Globals& o, const GraphSource& src) {
    if (src.path.empty() == src.fixture.empty()) fail(ErrorKind::invalid_argument, "give an input file or --fixture");
    std::optional<GraphFixture> fx;
    Triangulation g;
    if (!src.fixture.empty()) {
        fx = graph_fixture(src.fixture);
        g = fx->graph;
    } else {
        g = load_graph(src.path);
    }
    SpanningTree t;
    bool fixture_tree = false;
    if (!src.tree.empty()) {
        t = SpanningTree::from_vertex_pairs(g, parse_tree(src.tree));
    } else if (fx && fx->tree) {
        t = *fx->tree;
        fixture_tree = true;
    } else {
        t = SpanningTree::bfs(g);
    }
    DevelopSeed seed;
    if (!o.seed_edge.empty()) {
        seed = parse_seed(g, t, o.seed_edge);
    } else if (fixture_tree) {
        seed = fx->seed;
    } else {
        seed = default_seed(g, t);
    }
    return develop(g, t, seed);
}

int cmd_develop(const Globals& o, const GraphSource& src, const std::string& svg_path) {
    auto dev = develop_source(o, src);
    auto problems = development_problems(dev);
    auto checks = cusp_checks(dev);
    bool cusps_ok = check_cusp_parabolics(dev);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) fail(ErrorKind::invalid_argument, "cannot write " + svg_path);
        out << render_polygon_svg(dev);
    }
    if (o.json) {
        json j = development_to_json(dev);
        json cj = json::array();
        for (const auto& c : checks) {
            cj.push_back({{"vertex", c.vertex}, {"fixed", c.fixed.str()}, {"composite", c.composite.str()}, {"parabolic", c.ok}});
        }
        j["cusp_checks"] = cj;
        j["problems"] = problems;
        print_json(j);
    } else {
        std::cout << "polygon:";
        for (const auto& v : dev.polygon) std::cout << " " << v.pretty();
        std::cout << "\nside pairings:\n";
        auto gens = generators(dev);
        for (std::size_t k = 0; k < dev.pairings.size(); ++k) {
            const auto& p = dev.pairings[k];
            auto [u, v] = dev.graph.endpoints(p.edge);
            std::cout << "  " << gens[k].name << " = " << p.matrix.str() << "  edge " << u << "-" << v << ": ("
                      << p.from.first.pretty() << ", " << p.from.second.pretty() << ") -> (" << p.to.first.pretty()
                      << ", " << p.to.second.pretty() << ")\n";
        }
        std::cout << "cusps:\n";
        for (const auto& c : checks) {
            std::cout << "  vertex " << c.vertex << " at " << c.fixed.pretty() << " degree "
                      << dev.graph.degree(c.vertex) << ": " << c.composite.str() << (c.ok ? "" : "  NOT PARABOLIC")
                      << "\n";
        }
        for (const auto& p : problems) std::cout << "problem: " << p << "\n";
    }
    return cusps_ok && problems.empty() ? ok : check_failed;
}

int cmd_render(const Globals& o, const GraphSource& src, const std::string& out_path) {
    auto svg = render_polygon_svg(develop_source(o, src));
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(out_path);
        if (!out) fail(ErrorKind::invalid_argument, "cannot write " + out_path);
        out << svg;
    }
    return ok;
}

}  // namespace

namespace {

struct SystoleInputs {
    GraphSource graph;
    std::string group_path;
    std::string group_fixture;
    int max_length = 6;
};

/// Graph whose development is the domain of a named group fixture.
GraphFixture graph_for_group(const std::string& name) {
    if (name.rfind("seven-cusp", 0) == 0) return seven_vertex_example();
    if (name.rfind("ten-cusp", 0) == 0) return ten_vertex_long_tree();
    if (name.rfind("eleven-cusp", 0) == 0) return eleven_vertex_example();
    fail(ErrorKind::invalid_argument, "no domain for group fixture " + name);
}

GroupInput load_group(const SystoleInputs& in) {
    if (!in.group_path.empty()) {
        json j;
        try {
            j = json::parse(read_input(in.group_path));
        } catch (const json::exception& e) {
            fail(ErrorKind::parse, in.group_path + ": " + e.what());
        }
        return group_from_json(j);
    }
    GroupInput g{group_fixture(in.group_fixture), std::nullopt};
    auto graph = graph_for_group(in.group_fixture);
    if (in.group_fixture.find("perturbed") != std::string::npos) {
        auto base = in.group_fixture.substr(0, in.group_fixture.find("perturbed")) + "arithmetic";
        g.domain = perturbed_domain(graph, group_fixture(base), g.group);
    } else {
        g.domain = fixture_domain(graph);
    }
    return g;
}

std::vector<GeodesicWitness> shortest(const std::vector<GeodesicWitness>& ws) {
    std::vector<GeodesicWitness> out;
    for (const auto& w : ws) {
        if (out.empty() || w.abs_trace() == out.front().abs_trace()) out.push_back(w);
    }
    return out;
}

void print_rows(const std::vector<GeodesicWitness>& ws) {
    std::cout << "trace          length               word\n";
    for (const auto& w : ws) std::cout << row(w) << "\n";
}

int systole_of_graph(const Globals& o, const Triangulation& g, const std::optional<Rational>& bound) {
    std::vector<GeodesicWitness> ws;
    if (bound) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound->get_num_mpz_t(), bound->get_den_mpz_t());
        if (!fl.fits_slong_p()) fail(ErrorKind::resource_limit, "trace bound too large");
        ws = combinatorial_spectrum(g, fl.get_si(), o.threads);
    } else {
        ws = systole_combinatorial(g, o.threads).witnesses;
    }
    if (o.json) {
        json j = json::array();
        for (const auto& w : ws) j.push_back(witness_to_json(w));
        print_json(bound ? json{{"trace_bound", rational_str(*bound)}, {"classes", j}} : json{{"witnesses", j}});
        return ok;
    }
    if (bound) {
        std::cout << ws.size() << " classes with |trace| <= " << rational_str(*bound) << "\n";
    } else if (!ws.empty()) {
        std::cout << "systole: trace " << rational_str(ws.front().abs_trace()) << ", length "
                  << format12(ws.front().length) << ", " << ws.size() << " witnesses\n";
    }
    print_rows(ws);
    return ok;
}

}  // namespace

namespace {

json words_json(const GroupFixture& g) {
    json j = json::array();
    for (const auto& w : g.words) {
        Rational t = word_trace(g.generators, w);
        json e{{"word", w}, {"trace", rational_str(t)}};
        if (abs(t) > 2) e["length"] = round12(trace_to_length(t));
        j.push_back(e);
    }
    return j;
}

int systole_of_group(const Globals& o, const SystoleInputs& in, const std::optional<Rational>& bound) {
    auto g = load_group(in);
    MatrixGroupReport rep;
    std::vector<GeodesicWitness> minima;
    if (!g.domain) {
        if (!bound) fail(ErrorKind::invalid_argument, "a group without a polygon needs --trace-bound");
        rep = matrix_group_sweep(g.group.generators, *bound, in.max_length);
    } else if (bound) {
        rep = systole_matrix_group(*g.domain, *bound);
        if (rep.classes.empty() && rep.frontier_exhausted) {
            // Nothing at the bound: widen until something shows up.
            for (Rational step(1, 100); minima.empty() && step <= 64; step *= 2) {
                auto wider = systole_matrix_group(*g.domain, *bound * (1 + step));
                minima = wider.classes;
            }
        }
    } else {
        for (Rational b = 4; rep.classes.empty(); b *= 2) {
            if (b > 1 << 20) fail(ErrorKind::resource_limit, "no hyperbolic class below trace 2^20");
            rep = systole_matrix_group(*g.domain, b);
        }
        rep.classes = shortest(rep.classes);
    }
    std::set<Rational> minimum_traces;
    for (const auto& w : minima) minimum_traces.insert(w.abs_trace());
    if (o.json) {
        json j = matrix_group_report_to_json(rep);
        if (!bound) j.erase("trace_bound");
        if (!minima.empty()) {
            json m = json::array(), t = json::array();
            for (const auto& w : minima) m.push_back(witness_to_json(w));
            for (const auto& x : minimum_traces) t.push_back(rational_str(x));
            j["minima"] = m;
            j["minimum_traces"] = t;
        }
        if (!g.group.words.empty()) j["words"] = words_json(g.group);
        print_json(j);
        return ok;
    }
    std::cout << "group " << g.group.name << ", " << g.group.generators.size() << " generators\n";
    std::cout << rep.certificate << "\n";
    if (g.domain) {
        std::cout << "domain:";
        for (const auto& v : g.domain->vertices) std::cout << " " << v.pretty();
        std::cout << "\nbasis:";
        for (const auto& b : g.domain->generators) std::cout << " " << b.name << " = " << b.matrix.str();
        std::cout << "\n";
    }
    if (bound && rep.classes.empty()) {
        std::cout << (rep.frontier_exhausted ? "no elements" : "no elements found") << " with |trace| <= "
                  << rational_str(*bound);
        if (!minima.empty()) {
            std::cout << "; minima";
            const char* sep = " ";
            for (const auto& x : minimum_traces) {
                std::cout << sep << rational_str(x);
                sep = ", ";
            }
        }
        std::cout << "\n";
        if (!minima.empty()) print_rows(minima);
    } else {
        if (bound) {
            std::cout << rep.classes.size() << " classes with |trace| <= " << rational_str(*bound) << "\n";
        } else {
            std::cout << "systole: trace " << rational_str(rep.classes.front().abs_trace()) << ", length "
                      << format12(rep.classes.front().length) << ", " << rep.classes.size() << " witnesses\n";
        }
        print_rows(rep.classes);
    }
    if (!g.group.words.empty()) {
        std::cout << "designated words:\n";
        for (const auto& w : words_json(g.group)) {
            std::cout << "  " << w["word"].get<std::string>() << ": trace " << w["trace"].get<std::string>();
            if (w.contains("length")) std::cout << ", length " << format12(w["length"].get<double>());
            std::cout << "\n";
        }
    }
    return ok;
}

int cmd_systole(const Globals& o, const SystoleInputs& in) {
    int forms = !in.graph.path.empty() + !in.graph.fixture.empty() + !in.group_path.empty() + !in.group_fixture.empty();
    if (forms != 1) fail(ErrorKind::invalid_argument, "give exactly one of: input file, --fixture, --group, --group-fixture");
    std::optional<Rational> bound;
    if (!o.trace_bound.empty()) {
        bound = parse_rational(o.trace_bound);
        if (*bound <= 2) fail(ErrorKind::invalid_argument, "--trace-bound must exceed 2");
    }
    if (!in.group_path.empty() || !in.group_fixture.empty()) return systole_of_group(o, in, bound);
    auto g = in.graph.fixture.empty() ? load_graph(in.graph.path) : graph_fixture(in.graph.fixture).graph;
    return systole_of_graph(o, g, bound);
}

}  // namespace

namespace {

struct EnumerateOptions {
    int n = 4;
    int min_degree = 3;
    bool simple = false;
    bool count_only = false;
    bool max_min = false;
};

int cmd_enumerate(const Globals& o, const EnumerateOptions& e) {
    EnumerationQuery q{e.n, e.min_degree, !e.simple, !e.simple};
    check_query(q);
    auto graphs = enumerate_triangulations(q, o.threads);
    if (e.max_min) {
        auto ext = max_min_density(graphs);
        if (o.json) {
            json maps = json::array();
            for (const auto& g : ext.extremal) maps.push_back(triangulation_to_json(g));
            print_json({{"n", e.n}, {"classes", ext.classes}, {"max_min_density", ext.value}, {"extremal", maps}});
        } else {
            std::cout << "n " << e.n << ": " << ext.classes << " classes, max-min density " << ext.value << ", "
                      << ext.extremal.size() << " extremal\n";
            for (const auto& g : ext.extremal) std::cout << "\n" << format_triangulation_text(g);
        }
        return ok;
    }
    if (e.count_only) {
        if (o.json) {
            print_json({{"n", e.n}, {"count", graphs.size()}});
        } else {
            std::cout << graphs.size() << "\n";
        }
        return ok;
    }
    if (o.json) {
        json maps = json::array();
        for (const auto& g : graphs) maps.push_back(triangulation_to_json(g));
        print_json(maps);
        return ok;
    }
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        std::cout << "# triangulation " << k + 1 << " of " << graphs.size() << "\n"
                  << format_triangulation_text(graphs[k]) << "\n";
    }
    return ok;
}

int cmd_verify(const Globals& o, const std::string& selector) {
    auto results = verify_claims(selector, o.threads);
    bool all = true;
    for (const auto& c : results) {
        all = all && c.passed;
        if (o.json) {
            std::cout << claim_to_json(c).dump() << "\n";
        } else {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << " " << c.id << ": " << c.detail << "\n";
        }
    }
    std::size_t passed = std::count_if(results.begin(), results.end(), [](const ClaimResult& c) { return c.passed; });
    if (!o.json) std::cout << passed << "/" << results.size() << " claims hold\n";
    return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Systoles of cusped spheres from triangulations of the modular group"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed-edge", o.seed_edge, "u,v[,w]: develop with ∞ at u, 0 at v, first face containing w");
    app.add_option("--trace-bound", o.trace_bound, "list every class with |trace| at most this (integer or p/q)");

    std::string path;
    auto* validate_cmd = app.add_subcommand("validate", "check a triangulation file");
    validate_cmd->add_option("input", path, "triangulation file, '-' for stdin")->required();

    auto* density_cmd = app.add_subcommand("density", "edge densities and certified short geodesics");
    density_cmd->add_option("input", path, "triangulation file")->required();

    GraphSource src;
    std::string svg;
    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("input", src.path, "triangulation file");
        cmd->add_option("--fixture", src.fixture, "built-in graph instead of a file");
        cmd->add_option("--tree", src.tree, "spanning tree as u-v,u-v,...");
    };
    auto* develop_cmd = app.add_subcommand("develop", "Farey labeling, polygon, side pairings, cusp check");
    add_source(develop_cmd);
    develop_cmd->add_option("--svg", svg, "also write the polygon picture here");

    auto* render_cmd = app.add_subcommand("render", "SVG of the developed polygon");
    add_source(render_cmd);
    render_cmd->add_option("-o,--output", svg, "output file (default stdout)");

    SystoleInputs sys;
    auto* systole_cmd = app.add_subcommand("systole", "shortest closed geodesics");
    systole_cmd->add_option("input", sys.graph.path, "triangulation file");
    systole_cmd->add_option("--fixture", sys.graph.fixture, "built-in graph");
    systole_cmd->add_option("--group", sys.group_path, "generator JSON");
    systole_cmd->add_option("--group-fixture", sys.group_fixture, "built-in generator set");
    systole_cmd->add_option("--max-length", sys.max_length, "word length for groups without a polygon")
        ->check(CLI::Range(1, 20));

    EnumerateOptions en;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "triangulations of the sphere up to isomorphism");
    enumerate_cmd->add_option("--n", en.n, "vertices")->required();
    enumerate_cmd->add_option("--min-degree", en.min_degree, "minimum vertex degree");
    enumerate_cmd->add_flag("--simple", en.simple, "no loops or duplicate edges");
    enumerate_cmd->add_flag("--count-only", en.count_only, "print the number of classes");
    enumerate_cmd->add_flag("--max-min-density", en.max_min, "largest minimum edge density and its maps");

    std::string selector = "all";
    auto* verify_cmd = app.add_subcommand("verify-paper", "re-check every published claim");
    verify_cmd->add_option("selector", selector, "all, examples, fixtures, n=4 .. n=12, or a claim id");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*validate_cmd) return cmd_validate(o, path);
        if (*density_cmd) return cmd_density(o, path);
        if (*develop_cmd) return cmd_develop(o, src, svg);
        if (*render_cmd) return cmd_render(o, src, svg);
        if (*systole_cmd) return cmd_systole(o, sys);
        if (*enumerate_cmd) return cmd_enumerate(o, en);
        if (*verify_cmd) return cmd_verify(o, selector);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::resource_limit ? resource_limit : input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}
