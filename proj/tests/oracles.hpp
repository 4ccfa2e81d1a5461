#pragma once

// Slow, independent reference implementations used to cross-check the
// library: triangulations by flip closure with brute-force isomorphism
// testing, and spanning trees by exhaustive edge selection.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "systole/triangulation.hpp"

namespace oracle {

/// Simple sphere triangulation as a graph plus its face triples.
struct SimpleMap {
    int n = 0;
    std::vector<std::vector<bool>> adj;
    std::set<std::array<int, 3>> faces;  // sorted triples

    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d[u] += adj[u][v];
        return d;
    }
};

inline std::array<int, 3> triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

/// Bipyramid over an (n-2)-cycle: poles 0 and 1, ring 2..n-1.  For n = 4
/// the tetrahedron.
inline SimpleMap bipyramid(int n) {
    SimpleMap m;
    m.n = n;
    m.adj.assign(n, std::vector<bool>(n, false));
    auto link = [&](int a, int b) { m.adj[a][b] = m.adj[b][a] = true; };
    if (n == 4) {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) link(a, b);
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<int> t;
            for (int a = 0; a < 4; ++a) {
                if (a != skip) t.push_back(a);
            }
            m.faces.insert(triple(t[0], t[1], t[2]));
        }
        return m;
    }
    int k = n - 2;
    for (int i = 0; i < k; ++i) {
        int a = 2 + i, b = 2 + (i + 1) % k;
        link(a, b);
        link(0, a);
        link(1, a);
        m.faces.insert(triple(0, a, b));
        m.faces.insert(triple(1, a, b));
    }
    return m;
}

/// Every map obtained by one flip that keeps the graph simple.
inline std::vector<SimpleMap> flips(const SimpleMap& m) {
    std::vector<SimpleMap> out;
    for (int u = 0; u < m.n; ++u) {
        for (int v = u + 1; v < m.n; ++v) {
            if (!m.adj[u][v]) continue;
            std::vector<int> apex;
            for (int x = 0; x < m.n; ++x) {
                if (x != u && x != v && m.faces.count(triple(u, v, x))) apex.push_back(x);
            }
            if (apex.size() != 2) continue;
            int x = apex[0], y = apex[1];
            if (m.adj[x][y]) continue;
            SimpleMap f = m;
            f.adj[u][v] = f.adj[v][u] = false;
            f.adj[x][y] = f.adj[y][x] = true;
            f.faces.erase(triple(u, v, x));
            f.faces.erase(triple(u, v, y));
            f.faces.insert(triple(x, y, u));
            f.faces.insert(triple(x, y, v));
            out.push_back(std::move(f));
        }
    }
    return out;
}

/// Graph isomorphism by backtracking over vertex assignments.
inline bool isomorphic(const SimpleMap& a, const SimpleMap& b) {
    if (a.n != b.n) return false;
    auto da = a.degrees(), db = b.degrees();
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> image(a.n, -1);
    std::vector<bool> used(b.n, false);
    std::function<bool(int)> place = [&](int u) {
        if (u == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || db[w] != da[u]) continue;
            bool fits = true;
            for (int p = 0; p < u && fits; ++p) fits = a.adj[u][p] == b.adj[w][image[p]];
            if (!fits) continue;
            image[u] = w;
            used[w] = true;
            if (place(u + 1)) return true;
            used[w] = false;
        }
        image[u] = -1;
        return false;
    };
    return place(0);
}

/// Simple triangulations on n >= 4 vertices, one per isomorphism class.
/// Flips connect all of them, and simple sphere triangulations are
/// 3-connected, so their graphs fix the embedding up to reflection.
inline std::vector<SimpleMap> all_simple(int n) {
    std::vector<SimpleMap> seen{bipyramid(n)};
    for (std::size_t k = 0; k < seen.size(); ++k) {
        for (auto& f : flips(seen[k])) {
            bool known = std::any_of(seen.begin(), seen.end(), [&](const SimpleMap& s) { return isomorphic(s, f); });
            if (!known) seen.push_back(std::move(f));
        }
    }
    return seen;
}

inline SimpleMap from_library(const systole::Triangulation& g) {
    SimpleMap m;
    m.n = g.num_vertices();
    m.adj.assign(m.n, std::vector<bool>(m.n, false));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.endpoints(e);
        m.adj[u][v] = m.adj[v][u] = true;
    }
    for (int f = 0; f < g.num_faces(); ++f) {
        const auto& ds = g.face_darts(f);
        m.faces.insert(triple(g.origin(ds[0]), g.origin(ds[1]), g.origin(ds[2])));
    }
    return m;
}

/// Every spanning tree of g as a sorted list of edge ids.
inline std::vector<std::vector<int>> spanning_trees(const systole::Triangulation& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    int n = g.num_vertices();
    std::function<void(int, std::vector<int>)> go = [&](int e, std::vector<int> comp) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            out.push_back(chosen);
            return;
        }
        if (g.num_edges() - e < n - 1 - static_cast<int>(chosen.size())) return;
        auto [u, v] = g.endpoints(e);
        if (comp[u] != comp[v]) {
            auto joined = comp;
            int from = comp[v];
            for (int& c : joined) {
                if (c == from) c = comp[u];
            }
            chosen.push_back(e);
            go(e + 1, joined);
            chosen.pop_back();
        }
        go(e + 1, std::move(comp));
    };
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    go(0, comp);
    return out;
}

}  // namespace oracle
