#include "systole/geodesics.hpp"

#include "systole/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <thread>

namespace systole {

bool witness_less(const GeodesicWitness& a, const GeodesicWitness& b) {
    int c = cmp(a.abs_trace(), b.abs_trace());
    if (c != 0) return c < 0;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
}

nlohmann::json witness_to_json(const GeodesicWitness& w) {
    auto e = w.matrix.entries_str();
    nlohmann::json j{{"word", w.word},
                     {"matrix", nlohmann::json::array({e[0], e[1], e[2], e[3]})},
                     {"trace", rational_str(w.trace)},
                     {"length", round12(w.length)}};
    if (!w.darts.empty()) j["darts"] = w.darts;
    return j;
}

Dart turn_left(const Triangulation& g, Dart c) { return g.next(c); }

Dart turn_right(const Triangulation& g, Dart c) { return g.face_prev(g.twin(c)); }

Dart follow_walk(const Triangulation& g, Dart start, std::string_view word) {
    Dart c = start;
    for (char ch : word) {
        if (ch == 'L') c = turn_left(g, c);
        else if (ch == 'R') c = turn_right(g, c);
        else fail(ErrorKind::invalid_argument, std::string("bad letter in L/R word: ") + ch);
    }
    return c;
}

int walk_length_cutoff(std::int64_t bound) {
    // Among cyclic words of length m with both letters, L^{m-1} R has the
    // smallest trace, m + 1, so nothing longer than bound - 1 letters fits.
    if (bound < 3) return 0;
    return static_cast<int>(bound - 1);
}

namespace {

struct Mat {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    Mat times_left() const { return {a, a + b, c, c + d}; }
    Mat times_right() const { return {a + b, b, c + d, d}; }
    std::int64_t trace() const { return a + d; }
};

// Closed walk as codes 2*dart + (letter == 'R'), letter i leading from
// state i to state i+1.
using Code = std::vector<int>;

Code min_rotation(const Code& s) {
    Code best = s;
    Code r(s.size());
    for (std::size_t k = 1; k < s.size(); ++k) {
        std::rotate_copy(s.begin(), s.begin() + k, s.end(), r.begin());
        if (r < best) best = r;
    }
    return best;
}

bool is_proper_power(const Code& s) {
    std::size_t k = s.size();
    for (std::size_t p = 1; p < k; ++p) {
        if (k % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < k && periodic; ++i) periodic = s[i] == s[i - p];
        if (periodic) return true;
    }
    return false;
}

Code reversed_code(const Triangulation& g, const Code& s) {
    std::size_t k = s.size();
    Code r(k);
    for (std::size_t m = 0; m < k; ++m) {
        int state = g.twin(s[k - 1 - m] / 2);
        int letter = s[(2 * k - 2 - m) % k] & 1;
        r[m] = 2 * state + (1 - letter);
    }
    return r;
}

GeodesicWitness witness_from_code(const Code& s) {
    GeodesicWitness w;
    for (int x : s) {
        w.darts.push_back(x / 2);
        w.word.push_back((x & 1) ? 'R' : 'L');
    }
    w.matrix = lr_word_value(w.word);
    w.trace = w.matrix.trace();
    w.length = trace_to_length(w.trace);
    return w;
}

struct WalkSearch {
    const Triangulation& g;
    Dart start;
    std::int64_t bound;
    int cutoff;
    std::map<Code, GeodesicWitness>& found;
    Code path;

    void run(Dart c, const Mat& m, bool has_l, bool has_r) {
        int depth = static_cast<int>(path.size());
        if (depth > 0 && c == start && has_l && has_r && !is_proper_power(path)) {
            Code key = std::min(min_rotation(path), min_rotation(reversed_code(g, path)));
            if (!found.count(key)) found.emplace(key, witness_from_code(key));
        }
        if (depth >= cutoff) return;
        for (int r = 0; r < 2; ++r) {
            Mat n = r ? m.times_right() : m.times_left();
            bool l2 = has_l || !r, r2 = has_r || r;
            if (l2 && r2) {
                if (n.trace() > bound) continue;
            } else if (depth + 3 > bound) {
                continue;  // X^k followed by the other letter has trace k + 2
            }
            path.push_back(2 * c + r);
            run(r ? turn_right(g, c) : turn_left(g, c), n, l2, r2);
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<GeodesicWitness> combinatorial_spectrum(const Triangulation& g, std::int64_t bound, int threads) {
    require_valid(g);
    if (bound > 100000) fail(ErrorKind::resource_limit, "trace bound too large for walk enumeration");
    threads = std::max(1, std::min(threads, g.num_darts()));
    std::vector<std::map<Code, GeodesicWitness>> parts(threads);
    auto work = [&](int t) {
        for (Dart d = t; d < g.num_darts(); d += threads) {
            WalkSearch s{g, d, bound, walk_length_cutoff(bound), parts[t], {}};
            s.run(d, Mat{}, false, false);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::map<Code, GeodesicWitness> all;
    for (auto& p : parts) all.merge(p);
    std::vector<GeodesicWitness> out;
    for (auto& [k, w] : all) out.push_back(std::move(w));
    std::sort(out.begin(), out.end(), witness_less);
    return out;
}

SystoleResult systole_combinatorial(const Triangulation& g, int threads) {
    require_valid(g);
    DensityReport dr = density(g);
    std::int64_t bound = 3;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!g.is_loop(e) && dr.edge_density[e] >= 5) {
            bound = bound == 3 ? dr.edge_density[e] - 2 : std::min(bound, dr.edge_density[e] - 2);
        }
    }
    bound = std::max<std::int64_t>(bound, 3);
    for (;; bound *= 2) {
        auto spectrum = combinatorial_spectrum(g, bound, threads);
        if (spectrum.empty()) continue;
        SystoleResult r;
        r.trace = spectrum.front().abs_trace();
        r.length = spectrum.front().length;
        for (auto& w : spectrum) {
            if (w.abs_trace() == r.trace) r.witnesses.push_back(std::move(w));
        }
        return r;
    }
}

DensityWitness verify_density_length(const Triangulation& g, int edge) {
    if (edge < 0 || edge >= g.num_edges()) fail(ErrorKind::invalid_argument, "no edge " + std::to_string(edge));
    if (g.is_loop(edge)) fail(ErrorKind::invalid_argument, "edge " + std::to_string(edge) + " is a loop");
    auto [u, w] = g.endpoints(edge);
    std::int64_t m1 = g.degree(u), m2 = g.degree(w);
    std::int64_t dens = m1 * m2;
    if (dens <= 4) {
        fail(ErrorKind::not_hyperbolic, "edge " + std::to_string(edge) + " has density " + std::to_string(dens));
    }
    DensityWitness out;
    out.edge = edge;
    out.word = "L" + std::string(m1 - 2, 'R') + "L" + std::string(m2 - 2, 'R');
    out.trace = lr_word_value(out.word).trace();
    if (out.trace != dens - 2) fail(ErrorKind::validation, "density word trace differs from D - 2");
    // The walk only ever crosses edges at u or w, never the edge itself.
    for (Dart c = 0; c < g.num_darts(); ++c) {
        auto [a0, b0] = g.endpoints(g.edge_of(c));
        if (g.edge_of(c) == edge || (a0 != u && a0 != w && b0 != u && b0 != w)) continue;
        Dart x = c;
        bool stays = true;
        for (char ch : out.word) {
            x = ch == 'L' ? turn_left(g, x) : turn_right(g, x);
            int e = g.edge_of(x);
            auto [a, b] = g.endpoints(e);
            if (e == edge || (a != u && a != w && b != u && b != w)) stays = false;
        }
        if (stays && x == c) {
            out.start = c;
            break;
        }
    }
    if (out.start < 0) fail(ErrorKind::validation, "density walk around edge " + std::to_string(edge) + " does not close");
    out.length = trace_to_length(out.trace);
    return out;
}

// ---------------------------------------------------------------------------
// Words

std::vector<WordLetter> parse_word(const std::vector<LabeledGenerator>& gens, std::string_view word) {
    std::vector<WordLetter> out;
    std::size_t i = 0;
    auto is_sep = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.'; };
    while (i < word.size()) {
        if (is_sep(word[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < word.size() && !is_sep(word[j]) && word[j] != '^') ++j;
        std::string name(word.substr(i, j - i));
        int power = 1;
        if (j < word.size() && word[j] == '^') {
            std::size_t k = ++j;
            if (k < word.size() && (word[k] == '-' || word[k] == '+')) ++k;
            while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
            std::string exp(word.substr(j, k - j));
            try {
                power = std::stoi(exp);
            } catch (const std::exception&) {
                fail(ErrorKind::parse, "bad exponent '" + exp + "' in word");
            }
            j = k;
        }
        auto it = std::find_if(gens.begin(), gens.end(), [&](const LabeledGenerator& g) { return g.name == name; });
        if (it == gens.end()) fail(ErrorKind::parse, "unknown generator '" + name + "'");
        if (power != 0) out.push_back({static_cast<int>(it - gens.begin()), power});
        i = j;
    }
    return out;
}

std::string format_word(const std::vector<LabeledGenerator>& gens, const std::vector<WordLetter>& word) {
    std::string s;
    for (const auto& l : word) {
        if (!s.empty()) s += ' ';
        s += gens.at(l.generator).name;
        if (l.power != 1) s += "^" + std::to_string(l.power);
    }
    return s;
}

Moebius word_value(const std::vector<LabeledGenerator>& gens, const std::vector<WordLetter>& word) {
    Moebius m;
    for (const auto& l : word) m = m * gens.at(l.generator).matrix.pow(l.power);
    return m;
}

Moebius word_value(const std::vector<LabeledGenerator>& gens, std::string_view word) {
    return word_value(gens, parse_word(gens, word));
}

Rational word_trace(const std::vector<LabeledGenerator>& gens, std::string_view word) {
    return word_value(gens, word).trace();
}

}  // namespace systole
