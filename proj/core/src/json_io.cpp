#include "fgraph/json_io.hpp"

#include <fstream>

#include "fgraph/shape.hpp"

namespace fg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& why) {
    throw MapError("MalformedDocument", why);
}

const json& need(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing key '") + key + "'");
    return doc.at(key);
}

int need_int(const json& doc, const char* key) {
    const json& v = need(doc, key);
    if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

json graph_to_json(const CombinatorialMap& m) {
    json rot = json::array();
    for (const auto& r : m.rotation) {
        json v = json::array();
        for (const Slot& s : r) v.push_back({{"edge", s.edge}, {"end", s.end}, {"label", s.label}});
        rot.push_back(std::move(v));
    }
    json marks = json::array();
    for (const Dart& d : m.annulus_marks) marks.push_back({{"vertex", d.vertex}, {"slot", d.slot}});
    return {{"delta", m.delta},
            {"m", m.companion_count},
            {"signs", m.signs},
            {"rotation", std::move(rot)},
            {"annulus_marks", std::move(marks)}};
}

CombinatorialMap graph_from_json(const json& doc) {
    if (doc.is_string()) {
        std::string s = doc.get<std::string>();
        if (s.rfind("shape:", 0) == 0) s = s.substr(6);
        ShapeDescriptor d = parse_shape(s);
        return expand_shape(d);
    }
    if (doc.contains("shape") && doc.at("shape").is_string())
        return graph_from_json(doc.at("shape"));

    CombinatorialMap m;
    m.delta = need_int(doc, "delta");
    m.companion_count = need_int(doc, "m");
    const json& signs = need(doc, "signs");
    if (!signs.is_array()) bad("'signs' must be an array");
    for (const json& s : signs) {
        if (!s.is_number_integer()) bad("sign entries must be integers");
        m.signs.push_back(s.get<int>());
    }
    m.vertex_count = static_cast<int>(m.signs.size());
    const json& rot = need(doc, "rotation");
    if (!rot.is_array() || rot.size() != m.signs.size())
        bad("'rotation' must be one array per vertex");
    for (const json& v : rot) {
        if (!v.is_array()) bad("rotation entries must be arrays");
        std::vector<Slot> r;
        for (const json& s : v)
            r.push_back({need_int(s, "edge"), need_int(s, "end"), need_int(s, "label")});
        m.rotation.push_back(std::move(r));
    }
    if (doc.contains("annulus_marks"))
        for (const json& d : doc.at("annulus_marks"))
            m.annulus_marks.push_back({need_int(d, "vertex"), need_int(d, "slot")});
    return m;
}

json pair_to_json(const GraphPair& p) {
    json pts = json::array();
    for (int i = 0; i < p.map1.vertex_count; ++i)
        for (int j = 0; j < p.map2.vertex_count; ++j) {
            json bij = json::array();
            for (const auto& e : p.points[i][j]) bij.push_back({e[0], e[1]});
            pts.push_back({{"i", i}, {"j", j}, {"bijection", std::move(bij)}});
        }
    return {{"graph1", graph_to_json(p.map1)},
            {"graph2", graph_to_json(p.map2)},
            {"jumping_number", p.jumping_number},
            {"points", std::move(pts)}};
}

GraphPair pair_from_json(const json& doc) {
    GraphPair p;
    p.map1 = graph_from_json(need(doc, "graph1"));
    p.map2 = graph_from_json(need(doc, "graph2"));
    p.jumping_number = need_int(doc, "jumping_number");
    p.points.assign(p.map1.vertex_count,
                    std::vector<std::vector<std::array<int, 2>>>(p.map2.vertex_count));
    const json& pts = need(doc, "points");
    if (!pts.is_array()) bad("'points' must be an array");
    for (const json& cell : pts) {
        int i = need_int(cell, "i"), j = need_int(cell, "j");
        if (i < 0 || i >= p.map1.vertex_count || j < 0 || j >= p.map2.vertex_count)
            bad("cell index out of range");
        const json& bij = need(cell, "bijection");
        if (!bij.is_array()) bad("'bijection' must be an array");
        for (const json& e : bij) {
            if (!e.is_array() || e.size() != 2) bad("bijection entries must be slot pairs");
            p.points[i][j].push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    return p;
}

AbelianPresentation presentation_from_json(const json& doc,
                                           std::vector<std::vector<long long>>* extra,
                                           int* modulus) {
    AbelianPresentation pres;
    const json& gens = need(doc, "generators");
    if (!gens.is_array()) bad("'generators' must be an array");
    for (const json& g : gens) pres.generators.push_back(g.get<std::string>());
    auto rows = [&](const json& arr) {
        std::vector<std::vector<long long>> out;
        for (const json& r : arr) {
            if (!r.is_array() || r.size() != pres.generators.size())
                bad("relation width must match generator count");
            out.push_back(r.get<std::vector<long long>>());
        }
        return out;
    };
    pres.relations = rows(need(doc, "relations"));
    if (extra) *extra = doc.contains("extra") ? rows(doc.at("extra"))
                                              : std::vector<std::vector<long long>>{};
    if (modulus) *modulus = doc.contains("modulus") ? doc.at("modulus").get<int>() : 0;
    return pres;
}

json verdict_to_json(const FilterVerdict& v) {
    return {{"lemma", v.lemma_id}, {"status", status_str(v.status)}, {"witness", v.witness}};
}

json report_to_json(const FilterReport& r) {
    json verdicts = json::array();
    for (const FilterVerdict& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
    return {{"accepted", r.accepted}, {"verdicts", std::move(verdicts)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) bad("invalid JSON in '" + path + "'");
    return doc;
}

CombinatorialMap load_graph_argument(const std::string& arg) {
    CombinatorialMap m;
    if (arg.rfind("shape:", 0) == 0)
        m = graph_from_json(json(arg));
    else
        m = graph_from_json(load_json_file(arg));
    validate_map(m);
    return m;
}

}  // namespace fg
