#include "systole/group_io.hpp"

#include "systole/error.hpp"

namespace systole {

namespace {

std::string text_of(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(ErrorKind::parse, "expected an exact number, got " + v.dump());
}

std::pair<Fraction, Fraction> side_of(const nlohmann::json& v) {
    if (!v.is_array() || v.size() != 2) fail(ErrorKind::parse, "a side is a pair of endpoints: " + v.dump());
    return {Fraction::parse(text_of(v[0])), Fraction::parse(text_of(v[1]))};
}

}  // namespace

GroupInput group_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
        fail(ErrorKind::parse, "group JSON needs a \"generators\" array");
    }
    GroupInput in;
    in.group.name = j.value("name", "input");
    for (const auto& g : j["generators"]) {
        if (!g.contains("matrix") || !g["matrix"].is_array() || g["matrix"].size() != 4) {
            fail(ErrorKind::parse, "generator needs a 4-entry \"matrix\": " + g.dump());
        }
        Rational e[4];
        for (int k = 0; k < 4; ++k) e[k] = parse_rational(text_of(g["matrix"][k]));
        std::string name = g.value("name", "g" + std::to_string(in.group.generators.size() + 1));
        in.group.generators.push_back({name, Moebius(e[0], e[1], e[2], e[3]), false});
    }
    if (j.contains("words")) {
        for (const auto& w : j["words"]) in.group.words.push_back(w.get<std::string>());
    }
    if (j.contains("polygon")) {
        const auto& p = j["polygon"];
        std::vector<Fraction> vertices;
        for (const auto& v : p.at("vertices")) vertices.push_back(Fraction::parse(text_of(v)));
        std::vector<std::pair<std::pair<Fraction, Fraction>, std::pair<Fraction, Fraction>>> sides;
        for (const auto& s : p.at("sides")) {
            if (!s.is_array() || s.size() != 2) fail(ErrorKind::parse, "side pair expected: " + s.dump());
            sides.push_back({side_of(s[0]), side_of(s[1])});
        }
        in.domain = polygon_from_pairings(vertices, in.group.generators, sides);
        auto problems = polygon_problems(*in.domain);
        if (!problems.empty()) fail(ErrorKind::validation, "polygon: " + problems.front());
    }
    return in;
}

nlohmann::json group_to_json(const GroupFixture& group, const IdealPolygon* domain) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : group.generators) {
        auto e = g.matrix.entries_str();
        gens.push_back({{"name", g.name}, {"matrix", nlohmann::json::array({e[0], e[1], e[2], e[3]})}});
    }
    nlohmann::json j{{"name", group.name}, {"generators", gens}, {"words", group.words}};
    if (domain) {
        nlohmann::json vertices = nlohmann::json::array(), sides = nlohmann::json::array();
        for (const auto& v : domain->vertices) vertices.push_back(v.str());
        int n = domain->size();
        for (std::size_t k = 0; k < group.generators.size(); ++k) {
            for (int to = 0; to < n; ++to) {
                if (domain->side_letter[to].generator != static_cast<int>(k) || domain->side_letter[to].inverse) {
                    continue;
                }
                int from = domain->partner[to];
                const Moebius& m = group.generators[k].matrix;
                Fraction a = domain->vertices[from], b = domain->vertices[(from + 1) % n];
                sides.push_back(nlohmann::json::array({nlohmann::json::array({a.str(), b.str()}),
                                                     nlohmann::json::array({m.apply(a).str(), m.apply(b).str()})}));
            }
        }
        j["polygon"] = {{"vertices", vertices}, {"sides", sides}};
    }
    return j;
}

}  // namespace systole
