#include "systole/triangulation_io.hpp"

#include "systole/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace systole {

namespace {

std::vector<int> parse_ints(const std::string& s, int line_no) {
    std::istringstream in(s);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
        }
    }
    return out;
}

// "<vertex>: <ints>" after the keyword.
std::pair<int, std::vector<int>> parse_vertex_line(const std::string& rest, int line_no) {
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected '<vertex>: ...'");
    }
    auto head = parse_ints(rest.substr(0, colon), line_no);
    if (head.size() != 1 || head[0] < 0) {
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": bad vertex index");
    }
    return {head[0], parse_ints(rest.substr(colon + 1), line_no)};
}

template <class T>
std::vector<T> dense(const std::map<int, T>& m, const char* what) {
    std::vector<T> out;
    for (const auto& [k, v] : m) {
        if (k != static_cast<int>(out.size())) {
            fail(ErrorKind::parse, std::string("missing ") + what + " for vertex " + std::to_string(out.size()));
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

Triangulation parse_triangulation_text(std::string_view text) {
    std::map<int, std::vector<Dart>> rotations;
    std::map<int, std::vector<Vertex>> neighbors;
    std::vector<std::pair<Dart, Dart>> twins;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        std::string rest;
        std::getline(ls, rest);
        if (keyword == "rotation" || keyword == "adj") {
            auto [v, list] = parse_vertex_line(rest, line_no);
            auto& target = keyword == "rotation" ? rotations : neighbors;
            if (!target.emplace(v, list).second) {
                fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                           " given twice");
            }
        } else if (keyword == "twin") {
            auto pair = parse_ints(rest, line_no);
            if (pair.size() != 2) fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": twin needs two darts");
            twins.emplace_back(pair[0], pair[1]);
        } else {
            fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": unknown keyword '" + keyword + "'");
        }
    }
    if (!rotations.empty() && !neighbors.empty()) {
        fail(ErrorKind::parse, "cannot mix 'rotation' and 'adj' lines");
    }
    if (!neighbors.empty()) {
        if (!twins.empty()) fail(ErrorKind::parse, "'twin' lines only go with 'rotation' lines");
        return Triangulation::from_neighbor_lists(dense(neighbors, "adj line"));
    }
    if (rotations.empty()) fail(ErrorKind::parse, "no vertices given");
    return Triangulation::from_rotations(dense(rotations, "rotation line"), twins);
}

std::string format_triangulation_text(const Triangulation& g) {
    Triangulation c = g.canonical();
    std::ostringstream out;
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
        out << "rotation " << v << ":";
        for (Dart d : c.rotation(v)) out << ' ' << d;
        out << '\n';
    }
    for (auto [a, b] : c.twin_pairs()) out << "twin " << a << ' ' << b << '\n';
    return out.str();
}

nlohmann::json triangulation_to_json(const Triangulation& g) {
    Triangulation c = g.canonical();
    nlohmann::json twins = nlohmann::json::array();
    for (auto [a, b] : c.twin_pairs()) twins.push_back({a, b});
    return {{"rotations", c.rotations()}, {"twins", twins}};
}

Triangulation triangulation_from_json(const nlohmann::json& j) {
    try {
        if (j.contains("neighbors")) {
            return Triangulation::from_neighbor_lists(j.at("neighbors").get<std::vector<std::vector<Vertex>>>());
        }
        auto rot = j.at("rotations").get<std::vector<std::vector<Dart>>>();
        std::vector<std::pair<Dart, Dart>> twins;
        for (const auto& t : j.at("twins")) {
            if (!t.is_array() || t.size() != 2) fail(ErrorKind::parse, "twin entries must be pairs");
            twins.emplace_back(t[0].get<Dart>(), t[1].get<Dart>());
        }
        return Triangulation::from_rotations(rot, twins);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("malformed triangulation JSON: ") + e.what());
    }
}

Triangulation parse_triangulation(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorKind::parse, std::string("JSON parse error: ") + e.what());
        }
        return triangulation_from_json(j);
    }
    return parse_triangulation_text(text);
}

Triangulation load_triangulation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangulation(buf.str());
}

}  // namespace systole
