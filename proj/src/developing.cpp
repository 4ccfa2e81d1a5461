#include "systole/developing.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace systole {

// ---------------------------------------------------------------------------
// Spanning trees

SpanningTree::SpanningTree(const Triangulation& g, std::vector<int> edges)
    : edges_(std::move(edges)), in_tree_(g.num_edges(), false), tree_degree_(g.num_vertices(), 0) {
    if (static_cast<int>(edges_.size()) != g.num_vertices() - 1) {
        fail(ErrorKind::invalid_argument, "spanning tree needs " + std::to_string(g.num_vertices() - 1) +
                                              " edges, got " + std::to_string(edges_.size()));
    }
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : edges_) {
        if (e < 0 || e >= g.num_edges()) fail(ErrorKind::invalid_argument, "tree edge out of range");
        if (in_tree_[e]) fail(ErrorKind::invalid_argument, "tree edge listed twice");
        if (g.is_loop(e)) fail(ErrorKind::invalid_argument, "a loop cannot be a tree edge");
        auto [u, w] = g.endpoints(e);
        int ru = find(u), rw = find(w);
        if (ru == rw) fail(ErrorKind::invalid_argument, "tree edges contain a cycle");
        parent[ru] = rw;
        in_tree_[e] = true;
        ++tree_degree_[u];
        ++tree_degree_[w];
    }
}

SpanningTree SpanningTree::bfs(const Triangulation& g, Vertex root) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<int> edges;
    std::deque<Vertex> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Dart d : g.rotation(v)) {
            Vertex w = g.head(d);
            if (seen[w]) continue;
            seen[w] = true;
            edges.push_back(g.edge_of(d));
            queue.push_back(w);
        }
    }
    return SpanningTree(g, edges);
}

SpanningTree SpanningTree::from_vertex_pairs(const Triangulation& g,
                                             const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<int> edges;
    for (auto [u, w] : pairs) {
        int found = -1, count = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.endpoints(e);
            if ((a == u && b == w) || (a == w && b == u)) {
                found = e;
                ++count;
            }
        }
        std::string name = std::to_string(u) + "-" + std::to_string(w);
        if (count == 0) fail(ErrorKind::invalid_argument, "no edge " + name);
        if (count > 1) fail(ErrorKind::invalid_argument, "edge " + name + " is ambiguous (duplicate edges)");
        edges.push_back(found);
    }
    return SpanningTree(g, edges);
}

DevelopSeed default_seed(const Triangulation& g, const SpanningTree& t) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (t.tree_degree(v) != 1) continue;
        for (Dart d : g.rotation(v)) {
            if (t.contains(g.edge_of(d))) return {d, false};
        }
    }
    fail(ErrorKind::invalid_argument, "spanning tree has no terminal vertex");
}

// ---------------------------------------------------------------------------
// Development

std::vector<Fraction> Development::face_labels(int f) const {
    std::vector<Fraction> out;
    for (Dart d : graph.face_darts(f)) out.push_back(corner_label[d]);
    return out;
}

namespace {

Moebius pairing_across(const Development& dev, Dart t) {
    const Triangulation& g = dev.graph;
    const auto& L = dev.corner_label;
    return map_farey_edge(L[t], L[g.face_next(t)], L[g.face_next(g.twin(t))], L[g.twin(t)]);
}

}  // namespace

Development develop(const Triangulation& g, const SpanningTree& t, const DevelopSeed& seed) {
    require_valid(g);
    if (static_cast<int>(t.edges().size()) != g.num_vertices() - 1) {
        fail(ErrorKind::invalid_argument, "tree does not belong to this triangulation");
    }
    Dart s = seed.dart;
    if (s < 0 || s >= g.num_darts()) fail(ErrorKind::invalid_argument, "seed dart out of range");
    if (!t.contains(g.edge_of(s))) fail(ErrorKind::invalid_argument, "seed edge is not a tree edge");
    if (t.tree_degree(g.origin(s)) != 1) {
        fail(ErrorKind::invalid_argument, "seed dart must leave a terminal vertex of the tree");
    }

    Development dev;
    dev.graph = g;
    dev.tree = t;
    dev.seed = seed;
    dev.corner_label.assign(g.num_darts(), Fraction());
    std::vector<bool> labeled(g.num_darts(), false);
    auto set = [&](Dart d, const Fraction& x) {
        dev.corner_label[d] = x;
        labeled[d] = true;
    };

    Dart base = seed.twin_face ? g.twin(s) : s;
    int f0 = g.face_of(base);
    if (!seed.twin_face) {
        set(s, Fraction::infinity());
        set(g.face_next(s), 0);
        set(g.face_prev(s), 1);
    } else {
        set(base, 0);
        set(g.face_next(base), Fraction::infinity());
        set(g.face_prev(base), 1);
    }
    std::vector<bool> face_done(g.num_faces(), false);
    face_done[f0] = true;
    std::deque<int> queue{f0};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        dev.face_order.push_back(f);
        for (Dart e : g.face_darts(f)) {
            if (t.contains(g.edge_of(e))) continue;
            int h = g.face_of(g.twin(e));
            if (face_done[h]) continue;
            const Fraction& x = dev.corner_label[e];
            const Fraction& y = dev.corner_label[g.face_next(e)];
            const Fraction& z = dev.corner_label[g.face_prev(e)];
            auto [mediant, difference] = farey_apexes(x, y);
            Fraction apex;
            if (mediant == z) {
                apex = difference;
            } else if (difference == z) {
                apex = mediant;
            } else {
                fail(ErrorKind::validation, "face labels " + x.str() + ", " + y.str() + ", " + z.str() +
                                                " do not form a Farey triangle");
            }
            Dart r = g.twin(e);
            set(r, y);
            set(g.face_next(r), x);
            set(g.face_prev(r), apex);
            face_done[h] = true;
            queue.push_back(h);
        }
    }
    if (std::find(labeled.begin(), labeled.end(), false) != labeled.end()) {
        fail(ErrorKind::validation, "development did not reach every face");
    }

    // Walk the tree boundary counterclockwise from the seed.
    std::vector<Dart> tour;
    Dart cur = s;
    do {
        tour.push_back(cur);
        Dart x = g.next(g.twin(cur));
        while (!t.contains(g.edge_of(x))) x = g.next(x);
        cur = x;
    } while (cur != s);
    std::vector<Fraction> poly;
    for (Dart d : tour) poly.push_back(dev.corner_label[d]);
    if (poly.size() > 1 && poly[1] != Fraction(0)) {
        const std::size_t n = tour.size();
        std::vector<Dart> rtour(n);
        std::vector<Fraction> rpoly(n);
        for (std::size_t k = 0; k < n; ++k) {
            rpoly[k] = poly[(n - k) % n];
            rtour[k] = g.twin(tour[n - k - 1]);
        }
        tour = std::move(rtour);
        poly = std::move(rpoly);
    }
    if (poly.size() < 2 || poly[0] != Fraction::infinity() || poly[1] != Fraction(0)) {
        fail(ErrorKind::validation, "polygon does not start at infinity, 0");
    }
    for (std::size_t k = 2; k < poly.size(); ++k) {
        if (!(poly[k - 1] < poly[k])) fail(ErrorKind::validation, "polygon vertices are not increasing");
    }
    dev.tour = tour;
    dev.polygon = poly;

    std::vector<bool> edge_seen(g.num_edges(), false);
    for (Dart u : dev.tour) {
        if (edge_seen[g.edge_of(u)]) continue;
        edge_seen[g.edge_of(u)] = true;
        const auto& L = dev.corner_label;
        SidePairing p;
        p.edge = g.edge_of(u);
        p.dart = u;
        p.from = {L[u], L[g.face_next(u)]};
        p.to = {L[g.face_next(g.twin(u))], L[g.twin(u)]};
        p.matrix = pairing_across(dev, u);
        dev.pairings.push_back(std::move(p));
    }

    dev.first_label.assign(g.num_vertices(), Fraction());
    std::vector<bool> have(g.num_vertices(), false);
    for (std::size_t k = 0; k < dev.tour.size(); ++k) {
        Vertex v = g.origin(dev.tour[k]);
        if (!have[v]) {
            have[v] = true;
            dev.first_label[v] = dev.polygon[k];
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        dev.cusp_generators.push_back(cusp_parabolic(dev.first_label[v], g.degree(v)));
    }
    return dev;
}

Development develop(const Triangulation& g, const SpanningTree& t) {
    return develop(g, t, default_seed(g, t));
}

std::vector<LabeledGenerator> generators(const Development& dev, bool with_cusps) {
    std::vector<LabeledGenerator> out;
    for (std::size_t i = 0; i < dev.pairings.size(); ++i) {
        out.push_back({"g" + std::to_string(i + 1), dev.pairings[i].matrix, false});
    }
    if (with_cusps) {
        for (Vertex v = 0; v < dev.graph.num_vertices(); ++v) {
            out.push_back({"c" + std::to_string(v), dev.cusp_generators[v], true});
        }
    }
    return out;
}

std::vector<CuspCheck> cusp_checks(const Development& dev) {
    const Triangulation& g = dev.graph;
    std::vector<CuspCheck> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<Dart> tree_darts;
        for (Dart d : g.rotation(v)) {
            if (dev.tree.contains(g.edge_of(d))) tree_darts.push_back(d);
        }
        CuspCheck c;
        c.vertex = v;
        c.fixed = dev.first_label[v];
        // Start in the sector carrying the first label; the sector after
        // tree dart t is labeled by the corner following t.
        std::size_t m = tree_darts.size(), start = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (dev.corner_label[g.next(tree_darts[j])] == c.fixed) start = j;
        }
        if (start == m) {
            out.push_back(c);
            continue;
        }
        Moebius composite;
        try {
            for (std::size_t j = 1; j <= m; ++j) {
                composite = pairing_across(dev, tree_darts[(start + j) % m]) * composite;
            }
        } catch (const Error&) {
            // A corrupted labeling has no pairing here.
            out.push_back(c);
            continue;
        }
        c.composite = composite;
        c.ok = composite.kind() == MoebiusKind::parabolic && composite.apply(c.fixed) == c.fixed &&
               equal_up_to_inverse(composite, cusp_parabolic(c.fixed, g.degree(v)));
        out.push_back(c);
    }
    return out;
}

bool check_cusp_parabolics(const Development& dev) {
    auto checks = cusp_checks(dev);
    return std::all_of(checks.begin(), checks.end(), [](const CuspCheck& c) { return c.ok; });
}

std::vector<std::string> development_problems(const Development& dev) {
    const Triangulation& g = dev.graph;
    std::vector<std::string> out;
    for (int f = 0; f < g.num_faces(); ++f) {
        auto L = dev.face_labels(f);
        bool farey = L.size() == 3;
        for (std::size_t i = 0; farey && i < 3; ++i) {
            const Fraction& x = L[i];
            const Fraction& y = L[(i + 1) % 3];
            farey = x != y && farey_adjacent(x, y);
        }
        if (!farey) out.push_back("face " + std::to_string(f) + " is not a Farey triangle");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::set<std::string> labels;
        for (Dart d : g.rotation(v)) labels.insert(dev.corner_label[d].str());
        if (static_cast<int>(labels.size()) != dev.tree.tree_degree(v)) {
            out.push_back("vertex " + std::to_string(v) + " has " + std::to_string(labels.size()) +
                          " labels but tree-degree " + std::to_string(dev.tree.tree_degree(v)));
        }
    }
    for (const auto& p : dev.pairings) {
        if (!p.matrix.is_integral() || p.matrix.det() != 1) {
            out.push_back("pairing of edge " + std::to_string(p.edge) + " is not in PSL2(Z)");
        }
        if (p.matrix.apply(p.from.first) != p.to.first || p.matrix.apply(p.from.second) != p.to.second) {
            out.push_back("pairing of edge " + std::to_string(p.edge) + " misses its target side");
        }
    }
    if (static_cast<int>(dev.face_order.size()) != 2 * g.num_vertices() - 4) {
        out.push_back("polygon has " + std::to_string(dev.face_order.size()) + " faces, expected 2n - 4");
    }
    return out;
}

namespace {

nlohmann::json matrix_json(const Moebius& m) {
    auto e = m.entries_str();
    return nlohmann::json::array({e[0], e[1], e[2], e[3]});
}

}  // namespace

nlohmann::json development_to_json(const Development& dev) {
    const Triangulation& g = dev.graph;
    nlohmann::json j;
    j["seed"] = {{"dart", dev.seed.dart}, {"twin_face", dev.seed.twin_face}};
    j["tree"] = dev.tree.edges();
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& x : dev.polygon) poly.push_back(x.str());
    j["polygon"] = poly;
    nlohmann::json pairings = nlohmann::json::array();
    for (std::size_t i = 0; i < dev.pairings.size(); ++i) {
        const auto& p = dev.pairings[i];
        pairings.push_back({{"name", "g" + std::to_string(i + 1)},
                            {"edge", p.edge},
                            {"from", {p.from.first.str(), p.from.second.str()}},
                            {"to", {p.to.first.str(), p.to.second.str()}},
                            {"matrix", matrix_json(p.matrix)}});
    }
    j["pairings"] = pairings;
    nlohmann::json cusps = nlohmann::json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        cusps.push_back({{"vertex", v},
                         {"fixed", dev.first_label[v].str()},
                         {"width", g.degree(v)},
                         {"matrix", matrix_json(dev.cusp_generators[v])}});
    }
    j["cusp_generators"] = cusps;
    nlohmann::json corners = nlohmann::json::array();
    for (Dart d = 0; d < g.num_darts(); ++d) {
        corners.push_back({{"dart", d},
                           {"vertex", g.origin(d)},
                           {"face", g.face_of(d)},
                           {"label", dev.corner_label[d].str()}});
    }
    j["corner_labels"] = corners;
    return j;
}

std::string render_polygon_svg(const Development& dev) {
    if (dev.polygon.size() < 3) fail(ErrorKind::invalid_argument, "empty development");
    double lo = 0, hi = dev.polygon.back().to_double();
    for (const auto& x : dev.polygon) {
        if (!x.is_infinity()) {
            lo = std::min(lo, x.to_double());
            hi = std::max(hi, x.to_double());
        }
    }
    const double width = 900, margin = 40;
    const double scale = (width - 2 * margin) / std::max(hi - lo, 1e-9);
    const double height = std::min(0.6 * width, (hi - lo) * scale / 2 + 2 * margin);
    const double base = height - margin;
    auto px = [&](double x) { return margin + (x - lo) * scale; };

    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"0\" y1=\"" << base << "\" x2=\"" << width << "\" y2=\"" << base
        << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    auto arc = [&](const Fraction& a, const Fraction& b, double stroke) {
        out << "<path d=\"";
        if (a.is_infinity() || b.is_infinity()) {
            double x = px((a.is_infinity() ? b : a).to_double());
            out << "M " << x << ' ' << base << " L " << x << " 0";
        } else {
            double xa = px(a.to_double()), xb = px(b.to_double());
            double r = std::abs(xb - xa) / 2;
            out << "M " << std::min(xa, xb) << ' ' << base << " A " << r << ' ' << r << " 0 0 1 "
                << std::max(xa, xb) << ' ' << base;
        }
        out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
    };
    std::set<std::pair<std::string, std::string>> drawn;
    for (int f : dev.face_order) {
        auto L = dev.face_labels(f);
        for (std::size_t i = 0; i < L.size(); ++i) {
            const Fraction& a = L[i];
            const Fraction& b = L[(i + 1) % L.size()];
            std::string sa = a.str(), sb = b.str();
            if (sb < sa) std::swap(sa, sb);
            if (drawn.insert({sa, sb}).second) arc(a, b, 0.8);
        }
    }
    for (std::size_t k = 0; k < dev.polygon.size(); ++k) {
        arc(dev.polygon[k], dev.polygon[(k + 1) % dev.polygon.size()], 2.5);
    }
    for (const auto& x : dev.polygon) {
        if (x.is_infinity()) continue;
        out << "<text x=\"" << px(x.to_double()) << "\" y=\"" << base + 16
            << "\" font-size=\"11\" text-anchor=\"middle\">" << x.pretty() << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace systole
