#include "systole/enumerate.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

namespace systole {

void check_query(const EnumerationQuery& q) {
    if (q.n < 4) fail(ErrorKind::invalid_argument, "enumeration needs n >= 4");
    if (q.min_degree < 1) fail(ErrorKind::invalid_argument, "min_degree must be >= 1");
    if (q.allow_loops || q.allow_duplicates || q.min_degree < 3) {
        fail(ErrorKind::resource_limit,
             "only simple triangulations (min degree >= 3, no loops or duplicate edges) are enumerated; "
             "the other classes are unbounded for fixed n");
    }
    if (q.n > max_enumerated_vertices) {
        fail(ErrorKind::resource_limit,
             "n = " + std::to_string(q.n) + " exceeds the enumeration limit of " +
                 std::to_string(max_enumerated_vertices));
    }
}

namespace {

// Faces as (u, v, w) with the rotation at v turning from u to w.
std::vector<std::array<Vertex, 3>> faces_at(const Triangulation& g, Vertex v) {
    std::vector<std::array<Vertex, 3>> out;
    for (Dart d : g.rotation(v)) out.push_back({g.head(d), v, g.head(g.next(d))});
    return out;
}

std::vector<std::array<Vertex, 3>> all_faces(const Triangulation& g) {
    std::set<std::array<Vertex, 3>> seen;
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (auto f : faces_at(g, v)) {
            std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
            if (seen.insert(f).second) out.push_back(f);
        }
    }
    return out;
}

}  // namespace

std::vector<Triangulation> vertex_splits(const Triangulation& g) {
    std::vector<Triangulation> out;
    auto faces = all_faces(g);
    int n = g.num_vertices();
    Vertex w = n;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> u;
        for (Dart d : g.rotation(v)) u.push_back(g.head(d));
        int deg = static_cast<int>(u.size());
        std::vector<std::array<Vertex, 3>> rest;
        for (const auto& f : faces) {
            if (f[0] != v && f[1] != v && f[2] != v) rest.push_back(f);
        }
        // v keeps u[i..j], w takes u[j..i]; both end with degree >= 3.
        for (int i = 0; i < deg; ++i) {
            for (int step = 1; step < deg; ++step) {
                int j = (i + step) % deg;
                auto split = rest;
                for (int k = i; k != j; k = (k + 1) % deg) split.push_back({u[k], v, u[(k + 1) % deg]});
                for (int k = j; k != i; k = (k + 1) % deg) split.push_back({u[k], w, u[(k + 1) % deg]});
                split.push_back({u[j], v, w});
                split.push_back({w, v, u[i]});
                out.push_back(triangulation_from_faces(n + 1, split));
            }
        }
    }
    return out;
}

namespace {

using Code = std::vector<int>;

// Canonical codes of all splits of the given parents, merged.
std::map<Code, Triangulation> next_level(const std::vector<Triangulation>& parents, int threads) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(parents.size())));
    std::vector<std::map<Code, Triangulation>> parts(threads);
    auto work = [&](int t) {
        for (std::size_t p = t; p < parents.size(); p += threads) {
            for (Triangulation& child : vertex_splits(parents[p])) {
                Code code = canonical_code(child);
                if (!parts[t].count(code)) parts[t].emplace(std::move(code), child.canonical());
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::map<Code, Triangulation> merged;
    for (auto& part : parts) merged.merge(part);
    return merged;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const EnumerationQuery& q, int threads) {
    check_query(q);
    // Every simple triangulation with more than four vertices has an edge in
    // no separating triangle; contracting it inverts a vertex split.
    std::vector<Triangulation> level{triangulation_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}})
                                         .canonical()};
    for (int n = 5; n <= q.n; ++n) {
        auto next = next_level(level, threads);
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    std::vector<Triangulation> out;
    for (auto& g : level) {
        auto rep = validate(g);
        if (rep.min_degree >= q.min_degree) out.push_back(std::move(g));
    }
    return out;
}

DensityExtremum max_min_density(const std::vector<Triangulation>& graphs) {
    DensityExtremum r;
    r.classes = graphs.size();
    for (const auto& g : graphs) {
        std::int64_t m = density(g).min_density;
        if (m > r.value) {
            r.value = m;
            r.extremal.clear();
        }
        if (m == r.value) r.extremal.push_back(g);
    }
    return r;
}

DensityExtremum max_min_density(const EnumerationQuery& q, int threads) {
    return max_min_density(enumerate_triangulations(q, threads));
}

std::int64_t expected_max_min_density(int n) {
    static const std::map<int, std::int64_t> table{{4, 9},  {5, 12}, {6, 16},  {7, 16}, {8, 18},
                                                   {9, 20}, {10, 20}, {11, 20}, {12, 25}};
    auto it = table.find(n);
    if (it == table.end()) fail(ErrorKind::invalid_argument, "no published value for n = " + std::to_string(n));
    return it->second;
}

std::int64_t certified_trace(const Triangulation& g) {
    std::int64_t best = -1;
    auto offer = [&](std::int64_t t) {
        if (t > 2 && (best < 0 || t < best)) best = t;
    };
    auto dens = density(g);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!dens.loop_edge[e]) offer(dens.edge_density[e] - 2);
    }
    for (const auto& c : pattern_certificates(g)) offer(c.trace.get_num().get_si());
    return best;
}

namespace {

FamilyCheck check_family(std::string name, const std::vector<Triangulation>& members, std::int64_t bound) {
    FamilyCheck f{std::move(name), members.size(), 0, true};
    for (const auto& g : members) {
        std::int64_t t = certified_trace(g);
        if (t < 0) {
            f.below_bound = false;
            continue;
        }
        f.worst_trace = std::max(f.worst_trace, t);
    }
    f.below_bound = f.below_bound && f.worst_trace <= bound;
    return f;
}

std::vector<Triangulation> with_bigons(const std::vector<Triangulation>& base) {
    std::vector<Triangulation> out;
    for (const auto& g : base) {
        for (int e = 0; e < g.num_edges(); ++e) out.push_back(insert_bigon_vertex(g, e));
    }
    return out;
}

std::vector<Triangulation> with_pendants(const std::vector<Triangulation>& base) {
    std::vector<Triangulation> out;
    for (const auto& g : base) {
        for (Dart d = 0; d < g.num_darts(); ++d) out.push_back(insert_pendant(g, d));
    }
    return out;
}

}  // namespace

PropositionReport verify_proposition(int n, int threads) {
    if (n < 4 || n > max_enumerated_vertices) {
        fail(ErrorKind::invalid_argument, "verify_proposition covers 4 <= n <= 12");
    }
    PropositionReport r;
    r.n = n;
    auto regular = enumerate_triangulations({n, 3, false, false}, threads);
    auto ext = max_min_density(regular);
    r.regular_classes = ext.classes;
    r.max_min_density = ext.value;
    r.expected = expected_max_min_density(n);
    r.extremal = ext.extremal.size();
    r.trace_bound = ext.value - 2;

    // Non-regular maps built from smaller regular ones: a degree-2 vertex in
    // a bigon, two of them, and a degree-1 vertex inside a loop.
    if (n >= 5) {
        auto smaller = enumerate_triangulations({n - 1, 3, false, false}, threads);
        r.families.push_back(check_family("degree-2 bigon", with_bigons(smaller), r.trace_bound));
        r.families.push_back(check_family("degree-1 flower", with_pendants(smaller), r.trace_bound));
    }
    if (n >= 6) {
        auto two_smaller = enumerate_triangulations({n - 2, 3, false, false}, threads);
        r.families.push_back(
            check_family("two degree-2 bigons", with_bigons(with_bigons(two_smaller)), r.trace_bound));
    }
    r.holds = r.max_min_density == r.expected;
    for (const auto& f : r.families) r.holds = r.holds && f.below_bound;
    return r;
}

nlohmann::json proposition_report_to_json(const PropositionReport& r) {
    nlohmann::json fam = nlohmann::json::array();
    for (const auto& f : r.families) {
        fam.push_back({{"family", f.name},
                       {"members", f.members},
                       {"worst_certified_trace", f.worst_trace},
                       {"below_bound", f.below_bound}});
    }
    return {{"n", r.n},
            {"regular_classes", r.regular_classes},
            {"max_min_density", r.max_min_density},
            {"expected", r.expected},
            {"extremal", r.extremal},
            {"trace_bound", r.trace_bound},
            {"families", fam},
            {"holds", r.holds}};
}

}  // namespace systole
