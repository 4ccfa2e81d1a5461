#include "systole/triangulation.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace systole {

// Raw dart arrays, turned into a Triangulation by finalize().
class MapBuilder {
public:
    std::vector<Vertex> origin;
    std::vector<Dart> next;
    std::vector<Dart> twin;
    int vertices = 0;

    explicit MapBuilder(const Triangulation& g)
        : origin(g.origin_), next(g.next_), twin(g.twin_), vertices(g.num_vertices()) {}
    MapBuilder() = default;

    Vertex add_vertex() { return vertices++; }

    // New edge with two darts; rotations are left self-looped for the
    // caller to splice.
    std::pair<Dart, Dart> add_edge(Vertex u, Vertex w) {
        Dart a = static_cast<Dart>(origin.size());
        Dart b = a + 1;
        origin.push_back(u);
        origin.push_back(w);
        next.push_back(a);
        next.push_back(b);
        twin.push_back(b);
        twin.push_back(a);
        return {a, b};
    }

    // Insert dart x right after dart d in the rotation around origin(d).
    void insert_after(Dart d, Dart x) {
        next[x] = next[d];
        next[d] = x;
    }

    Triangulation build() const {
        Triangulation g;
        g.origin_ = origin;
        g.next_ = next;
        g.twin_ = twin;
        g.first_dart_.assign(vertices, -1);
        g.finalize();
        return g;
    }
};

void Triangulation::finalize() {
    const int n = num_darts();
    const int nv = static_cast<int>(first_dart_.size());
    if (n % 2 != 0) fail(ErrorKind::parse, "odd number of darts");
    prev_.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (next_[d] < 0 || next_[d] >= n) fail(ErrorKind::parse, "rotation refers to missing dart");
        if (prev_[next_[d]] != -1) fail(ErrorKind::parse, "rotation is not a permutation");
        prev_[next_[d]] = d;
        if (twin_[d] < 0 || twin_[d] >= n || twin_[d] == d || twin_[twin_[d]] != d) {
            fail(ErrorKind::parse, "twin is not a fixed-point-free involution at dart " +
                                       std::to_string(d));
        }
        if (origin_[next_[d]] != origin_[d]) fail(ErrorKind::parse, "rotation leaves its vertex");
    }
    degree_.assign(nv, 0);
    for (Dart d = 0; d < n; ++d) {
        Vertex v = origin_[d];
        if (v < 0 || v >= nv) fail(ErrorKind::parse, "dart origin out of range");
        ++degree_[v];
        if (first_dart_[v] == -1 || d < first_dart_[v]) first_dart_[v] = d;
    }
    for (Vertex v = 0; v < nv; ++v) {
        if (first_dart_[v] == -1) fail(ErrorKind::parse, "vertex " + std::to_string(v) + " has no darts");
        int len = 0;
        Dart d = first_dart_[v];
        do {
            ++len;
            d = next_[d];
        } while (d != first_dart_[v]);
        if (len != degree_[v]) {
            fail(ErrorKind::parse, "darts of vertex " + std::to_string(v) + " form several cycles");
        }
    }

    face_.assign(n, -1);
    face_darts_.clear();
    for (Dart d = 0; d < n; ++d) {
        if (face_[d] != -1) continue;
        int f = static_cast<int>(face_darts_.size());
        face_darts_.emplace_back();
        Dart x = d;
        do {
            face_[x] = f;
            face_darts_.back().push_back(x);
            x = face_next(x);
        } while (x != d);
    }

    edge_.assign(n, -1);
    edge_darts_.clear();
    for (Dart d = 0; d < n; ++d) {
        if (edge_[d] != -1) continue;
        edge_[d] = edge_[twin_[d]] = static_cast<int>(edge_darts_.size());
        edge_darts_.push_back(d);
    }
}

Triangulation Triangulation::from_rotations(const std::vector<std::vector<Dart>>& rotations,
                                            const std::vector<std::pair<Dart, Dart>>& twins) {
    int n = 0;
    for (const auto& r : rotations) n += static_cast<int>(r.size());
    Triangulation g;
    g.origin_.assign(n, -1);
    g.next_.assign(n, -1);
    g.twin_.assign(n, -1);
    for (Vertex v = 0; v < static_cast<Vertex>(rotations.size()); ++v) {
        const auto& r = rotations[v];
        if (r.empty()) fail(ErrorKind::parse, "vertex " + std::to_string(v) + " has empty rotation");
        for (std::size_t i = 0; i < r.size(); ++i) {
            Dart d = r[i];
            if (d < 0 || d >= n) {
                fail(ErrorKind::parse, "dart id " + std::to_string(d) + " out of range 0.." +
                                           std::to_string(n - 1));
            }
            if (g.origin_[d] != -1) fail(ErrorKind::parse, "dart " + std::to_string(d) + " listed twice");
            g.origin_[d] = v;
            g.next_[d] = r[(i + 1) % r.size()];
        }
    }
    for (auto [a, b] : twins) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::parse, "twin dart out of range");
        if (g.twin_[a] != -1 || g.twin_[b] != -1) {
            fail(ErrorKind::parse, "dart paired twice: " + std::to_string(a) + " " + std::to_string(b));
        }
        g.twin_[a] = b;
        g.twin_[b] = a;
    }
    for (Dart d = 0; d < n; ++d) {
        if (g.twin_[d] == -1) fail(ErrorKind::parse, "dart " + std::to_string(d) + " has no twin");
    }
    g.first_dart_.assign(rotations.size(), -1);
    g.finalize();
    return g;
}

Triangulation Triangulation::from_neighbor_lists(const std::vector<std::vector<Vertex>>& neighbors) {
    const int nv = static_cast<int>(neighbors.size());
    std::vector<std::vector<Dart>> rot(nv);
    std::map<std::pair<Vertex, Vertex>, Dart> dart_of;
    Dart next_id = 0;
    for (Vertex v = 0; v < nv; ++v) {
        for (Vertex w : neighbors[v]) {
            if (w < 0 || w >= nv) fail(ErrorKind::parse, "neighbor out of range at vertex " + std::to_string(v));
            if (w == v) fail(ErrorKind::parse, "neighbor lists cannot express loops");
            if (!dart_of.emplace(std::pair{v, w}, next_id).second) {
                fail(ErrorKind::parse, "neighbor lists cannot express duplicate edges (" +
                                           std::to_string(v) + "," + std::to_string(w) + ")");
            }
            rot[v].push_back(next_id++);
        }
    }
    std::vector<std::pair<Dart, Dart>> twins;
    for (auto [key, d] : dart_of) {
        auto it = dart_of.find({key.second, key.first});
        if (it == dart_of.end()) {
            fail(ErrorKind::parse, "asymmetric adjacency: " + std::to_string(key.first) + " -> " +
                                       std::to_string(key.second));
        }
        if (key.first < key.second) twins.emplace_back(d, it->second);
    }
    return from_rotations(rot, twins);
}

std::vector<Dart> Triangulation::rotation(Vertex v) const {
    std::vector<Dart> r;
    Dart d = first_dart_[v];
    do {
        r.push_back(d);
        d = next_[d];
    } while (d != first_dart_[v]);
    return r;
}

std::vector<std::vector<Dart>> Triangulation::rotations() const {
    std::vector<std::vector<Dart>> r;
    for (Vertex v = 0; v < num_vertices(); ++v) r.push_back(rotation(v));
    return r;
}

std::vector<std::pair<Dart, Dart>> Triangulation::twin_pairs() const {
    std::vector<std::pair<Dart, Dart>> t;
    for (Dart d = 0; d < num_darts(); ++d) {
        if (d < twin_[d]) t.emplace_back(d, twin_[d]);
    }
    return t;
}

Triangulation Triangulation::canonical() const {
    std::vector<Dart> relabel(num_darts(), -1);
    Dart id = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) {
        for (Dart d : rotation(v)) relabel[d] = id++;
    }
    std::vector<std::vector<Dart>> rot;
    for (Vertex v = 0; v < num_vertices(); ++v) {
        rot.emplace_back();
        for (Dart d : rotation(v)) rot.back().push_back(relabel[d]);
    }
    std::vector<std::pair<Dart, Dart>> twins;
    for (auto [a, b] : twin_pairs()) {
        Dart x = relabel[a], y = relabel[b];
        twins.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(twins.begin(), twins.end());
    return from_rotations(rot, twins);
}

Triangulation Triangulation::mirror() const {
    auto rot = rotations();
    for (auto& r : rot) std::reverse(r.begin() + 1, r.end());
    return from_rotations(rot, twin_pairs());
}

// ---------------------------------------------------------------------------
// Validation and densities

ValidationReport validate(const Triangulation& g) {
    ValidationReport r;
    r.vertices = g.num_vertices();
    r.edges = g.num_edges();
    r.faces = g.num_faces();
    auto complain = [&](const std::string& msg) { r.diagnostics.push_back(msg); };

    for (int f = 0; f < g.num_faces(); ++f) {
        const auto& fd = g.face_darts(f);
        if (fd.size() != 3) {
            complain("face " + std::to_string(f) + " has " + std::to_string(fd.size()) + " sides");
        }
    }
    if (r.vertices - r.edges + r.faces != 2) {
        complain("Euler characteristic V - E + F = " +
                 std::to_string(r.vertices - r.edges + r.faces) + ", expected 2");
    }
    if (2 * r.edges != 3 * r.faces) complain("2E != 3F");
    if (r.vertices < 3) complain("fewer than three vertices");

    // Connectivity over darts.
    if (r.vertices > 0) {
        std::vector<bool> seen(r.vertices, false);
        std::deque<Vertex> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Dart d : g.rotation(v)) {
                if (!seen[g.head(d)]) {
                    seen[g.head(d)] = true;
                    queue.push_back(g.head(d));
                }
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) complain("map is disconnected");
    }

    r.min_degree = r.vertices ? g.degree(0) : 0;
    int excess = 0;
    for (Vertex v = 0; v < r.vertices; ++v) {
        r.degrees.push_back(g.degree(v));
        r.min_degree = std::min(r.min_degree, g.degree(v));
        excess += 6 - g.degree(v);
    }
    r.degree_excess = excess;
    if (r.diagnostics.empty() && excess != 12) {
        complain("sum of (6 - deg) is " + std::to_string(excess) + ", expected 12");
    }

    std::set<std::pair<Vertex, Vertex>> seen_pairs;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, w] = g.endpoints(e);
        if (u == w) {
            r.has_loops = true;
            continue;
        }
        if (!seen_pairs.emplace(std::min(u, w), std::max(u, w)).second) r.has_duplicates = true;
    }
    r.valid = r.diagnostics.empty();
    r.regular = r.valid && !r.has_loops && !r.has_duplicates && r.min_degree >= 3;
    return r;
}

void require_valid(const Triangulation& g) {
    ValidationReport r = validate(g);
    if (r.valid) return;
    std::string msg = "invalid triangulation:";
    for (const auto& d : r.diagnostics) msg += "\n  " + d;
    fail(ErrorKind::validation, msg);
}

DensityReport density(const Triangulation& g) {
    DensityReport r;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, w] = g.endpoints(e);
        std::int64_t d = static_cast<std::int64_t>(g.degree(u)) * g.degree(w);
        r.edge_density.push_back(d);
        r.loop_edge.push_back(u == w);
        if (r.witness_edge == -1 || d < r.min_density) {
            r.min_density = d;
            r.witness_edge = e;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Local modifications

Triangulation stellate(const Triangulation& g, const std::vector<int>& faces) {
    std::set<int> unique(faces.begin(), faces.end());
    if (unique.size() != faces.size()) fail(ErrorKind::invalid_argument, "stellate: face listed twice");
    MapBuilder b(g);
    for (int f : faces) {
        if (f < 0 || f >= g.num_faces()) fail(ErrorKind::invalid_argument, "stellate: no face " + std::to_string(f));
        const auto& fd = g.face_darts(f);
        if (fd.size() != 3) fail(ErrorKind::invalid_argument, "stellate: face is not a triangle");
        Vertex x = b.add_vertex();
        std::array<Dart, 3> out{}, in{};
        for (int i = 0; i < 3; ++i) {
            auto [a, c] = b.add_edge(x, g.origin(fd[i]));
            out[i] = a;
            in[i] = c;
        }
        for (int i = 0; i < 3; ++i) {
            b.insert_after(g.twin(fd[(i + 2) % 3]), in[i]);
            b.next[out[(i + 1) % 3]] = out[i];
        }
    }
    return b.build();
}

std::pair<int, int> duplicate_edge_split(const Triangulation& g, int e1, int e2) {
    if (e1 == e2) fail(ErrorKind::invalid_argument, "duplicate_edge_split: same edge twice");
    if (g.is_loop(e1) || g.is_loop(e2)) fail(ErrorKind::invalid_argument, "duplicate_edge_split: loop given");
    auto [a1, b1] = g.endpoints(e1);
    auto [a2, b2] = g.endpoints(e2);
    if (std::minmax(a1, b1) != std::minmax(a2, b2)) {
        fail(ErrorKind::invalid_argument, "duplicate_edge_split: edges do not share both endpoints");
    }
    std::vector<bool> seen(g.num_faces(), false);
    int start = g.face_of(g.edge_dart(e1));
    std::deque<int> queue{start};
    seen[start] = true;
    int count = 0;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        ++count;
        for (Dart d : g.face_darts(f)) {
            if (g.edge_of(d) == e1 || g.edge_of(d) == e2) continue;
            int h = g.face_of(g.twin(d));
            if (!seen[h]) {
                seen[h] = true;
                queue.push_back(h);
            }
        }
    }
    int other = g.num_faces() - count;
    return {std::min(count, other), std::max(count, other)};
}

Triangulation insert_bigon_vertex(const Triangulation& g, int e) {
    if (e < 0 || e >= g.num_edges()) fail(ErrorKind::invalid_argument, "insert_bigon_vertex: no such edge");
    if (g.is_loop(e)) fail(ErrorKind::invalid_argument, "insert_bigon_vertex: loop given");
    Dart t = g.edge_dart(e), tw = g.twin(t);
    Vertex u = g.origin(t), w = g.head(t);
    MapBuilder b(g);
    Vertex x = b.add_vertex();
    auto [s, sw] = b.add_edge(u, w);
    auto [p, px] = b.add_edge(u, x);
    auto [q, qx] = b.add_edge(w, x);
    b.insert_after(t, p);
    b.insert_after(p, s);
    b.insert_after(g.prev(tw), sw);
    b.insert_after(sw, q);
    b.next[px] = qx;
    b.next[qx] = px;
    return b.build();
}

Triangulation insert_pendant(const Triangulation& g, Dart d) {
    if (d < 0 || d >= g.num_darts()) fail(ErrorKind::invalid_argument, "insert_pendant: no such dart");
    if (g.origin(d) == g.head(d)) fail(ErrorKind::invalid_argument, "insert_pendant: loop given");
    Dart tw = g.twin(d);
    Vertex u = g.origin(d), w = g.head(d);
    MapBuilder b(g);
    Vertex y = b.add_vertex();
    auto [s, sw] = b.add_edge(u, w);
    auto [la, lb] = b.add_edge(u, u);
    auto [r, ry] = b.add_edge(u, y);
    b.insert_after(d, la);
    b.insert_after(la, r);
    b.insert_after(r, lb);
    b.insert_after(lb, s);
    b.insert_after(g.prev(tw), sw);
    b.next[ry] = ry;
    return b.build();
}

// ---------------------------------------------------------------------------
// Structural patterns

std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::adjacent_low_degree: return "adjacent-low-degree";
        case PatternKind::loop_walk: return "loop-walk";
        case PatternKind::pendant: return "pendant";
    }
    return "?";
}

namespace {

PatternCertificate from_word(PatternKind kind, std::vector<Vertex> vs, std::string word,
                             std::string description) {
    PatternCertificate c{kind, std::move(vs), std::move(word), Moebius(), 0, std::move(description)};
    c.element = lr_word_value(c.word);
    c.trace = c.element.abs_trace();
    return c;
}

}  // namespace

std::vector<PatternCertificate> pattern_certificates(const Triangulation& g) {
    std::vector<PatternCertificate> out;

    // Degree-2 apex across an edge from a degree-2 or 3 apex.  With the
    // degree-2 vertex at infinity and the partner at 1/2 the group holds
    // T^2 and the width-d parabolic fixing 1/2.
    std::set<std::pair<Vertex, Vertex>> reported;
    for (int e = 0; e < g.num_edges(); ++e) {
        Dart t = g.edge_dart(e);
        if (g.face_of(t) == g.face_of(g.twin(t))) continue;
        Vertex x = g.origin(g.face_prev(t));
        Vertex y = g.origin(g.face_prev(g.twin(t)));
        if (x == y) continue;
        if (g.degree(x) > g.degree(y)) std::swap(x, y);
        if (g.degree(x) != 2 || (g.degree(y) != 2 && g.degree(y) != 3)) continue;
        if (!reported.emplace(std::min(x, y), std::max(x, y)).second) continue;
        int d = g.degree(y);
        PatternCertificate c{PatternKind::adjacent_low_degree, {x, y}, "", Moebius(), 0, ""};
        c.element = Moebius::translation(2) * cusp_parabolic(Fraction(Integer(1), Integer(2)), d);
        c.trace = c.element.abs_trace();
        c.description = "degree-2 vertex " + std::to_string(x) + " and degree-" + std::to_string(d) +
                        " vertex " + std::to_string(y) + " are apexes of adjacent triangles";
        out.push_back(std::move(c));
    }

    // Loops: walk around the loop vertex on a side with k >= 2 edges.
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!g.is_loop(e)) continue;
        Dart a = g.edge_dart(e), b = g.twin(a);
        Vertex v = g.origin(a);
        int k1 = 0;
        for (Dart x = g.next(a); x != b; x = g.next(x)) ++k1;
        int k2 = g.degree(v) - 2 - k1;
        int k = -1;
        for (int cand : {k1, k2}) {
            if (cand >= 2 && (k == -1 || cand < k)) k = cand;
        }
        if (k == -1) continue;
        std::string word(static_cast<std::size_t>(k - 1), 'L');
        word += 'R';
        out.push_back(from_word(PatternKind::loop_walk, {v}, word,
                                "loop at vertex " + std::to_string(v) + " with " + std::to_string(k) +
                                    " edges on its smaller side"));
    }

    // Degree-1 vertex inside a loop; the triangle across the loop has apex v3.
    for (Vertex v1 = 0; v1 < g.num_vertices(); ++v1) {
        if (g.degree(v1) != 1) continue;
        Dart d1 = g.first_dart(v1);
        Vertex v2 = g.head(d1);
        Dart loop = -1;
        for (Dart x : g.face_darts(g.face_of(d1))) {
            if (g.origin(x) == v2 && g.head(x) == v2) loop = x;
        }
        if (loop == -1) continue;
        Vertex v3 = -1;
        for (Dart x : g.face_darts(g.face_of(g.twin(loop)))) {
            if (g.origin(x) != v2) v3 = g.origin(x);
        }
        if (v3 == -1) continue;
        int d = g.degree(v3);
        std::string word = "LLLL" + std::string(static_cast<std::size_t>(d - 1), 'R');
        out.push_back(from_word(PatternKind::pendant, {v1, v2, v3}, word,
                                "degree-1 vertex " + std::to_string(v1) + " at " + std::to_string(v2) +
                                    ", enclosing apex " + std::to_string(v3) + " of degree " +
                                    std::to_string(d)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// BFS numbering of darts from `start`, following twin and the rotation in
// the given direction; returns false as soon as the code exceeds `best`.
bool dart_code(const Triangulation& g, Dart start, bool reflected, std::vector<int>& code,
               const std::vector<int>& best) {
    const int n = g.num_darts();
    std::vector<int> label(n, -1);
    std::vector<Dart> order;
    order.reserve(n);
    label[start] = 0;
    order.push_back(start);
    code.clear();
    bool tied = !best.empty();
    auto emit = [&](int value) {
        std::size_t i = code.size();
        code.push_back(value);
        if (tied) {
            if (value > best[i]) return false;
            if (value < best[i]) tied = false;
        }
        return true;
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        for (Dart x : {g.twin(d), reflected ? g.prev(d) : g.next(d)}) {
            if (label[x] == -1) {
                label[x] = static_cast<int>(order.size());
                order.push_back(x);
            }
            if (!emit(label[x])) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> canonical_code(const Triangulation& g) {
    std::vector<int> best, code;
    for (bool reflected : {false, true}) {
        for (Dart d = 0; d < g.num_darts(); ++d) {
            if (dart_code(g, d, reflected, code, best) && (best.empty() || code < best)) best = code;
        }
    }
    return best;
}

}  // namespace systole

namespace systole {

Triangulation triangulation_from_faces(int num_vertices, const std::vector<std::array<Vertex, 3>>& faces) {
    // In a face (u, v, w) the rotation at v turns from u to w.
    std::vector<std::map<Vertex, Vertex>> turn(num_vertices);
    for (const auto& f : faces) {
        for (int i = 0; i < 3; ++i) {
            Vertex u = f[i], v = f[(i + 1) % 3], w = f[(i + 2) % 3];
            if (u < 0 || v < 0 || w < 0 || u >= num_vertices || v >= num_vertices || w >= num_vertices) {
                fail(ErrorKind::parse, "face vertex out of range");
            }
            if (!turn[v].emplace(u, w).second) fail(ErrorKind::parse, "faces are not consistently oriented");
        }
    }
    std::vector<std::vector<Vertex>> neighbors(num_vertices);
    for (Vertex v = 0; v < num_vertices; ++v) {
        if (turn[v].empty()) fail(ErrorKind::parse, "vertex " + std::to_string(v) + " lies on no face");
        Vertex start = turn[v].begin()->first, x = start;
        do {
            neighbors[v].push_back(x);
            auto it = turn[v].find(x);
            if (it == turn[v].end()) fail(ErrorKind::parse, "faces around vertex " + std::to_string(v) + " do not close up");
            x = it->second;
        } while (x != start && neighbors[v].size() <= turn[v].size());
        if (neighbors[v].size() != turn[v].size()) {
            fail(ErrorKind::parse, "vertex " + std::to_string(v) + " has a pinched neighborhood");
        }
    }
    return Triangulation::from_neighbor_lists(neighbors);
}

}  // namespace systole
