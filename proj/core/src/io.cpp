#include <tropteich/io.hpp>

#include <algorithm>
#include <sstream>

#include <tropteich/canonical.hpp>

namespace tropteich {
namespace io {

json graph_to_json(const WeightedGraph& g) {
    const std::vector<Vertex> verts = g.vertices();
    std::map<Vertex, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);

    json j;
    json weights = json::array();
    for (Vertex v : verts) weights.push_back(g.weight.at(v));
    j["weights"] = weights;

    json edges = json::array();
    for (const Edge& e : g.edges()) {
        int u = idx.at(g.endpoint_a(e));
        int w = idx.at(g.endpoint_b(e));
        edges.push_back(json::array({std::min(u, w), std::max(u, w)}));
    }
    j["edges"] = edges;

    json legs = json::array();
    for (HalfEdge l : g.legs) legs.push_back(idx.at(g.root[l]));
    j["legs"] = legs;
    return j;
}

WeightedGraph graph_from_json(const json& j) {
    if (!j.contains("weights") || !j.contains("edges"))
        throw ParseError("graph document needs 'weights' and 'edges'");
    std::vector<int> weights;
    for (const json& w : j.at("weights")) weights.push_back(w.get<int>());
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<int> legs;
    if (j.contains("legs"))
        for (const json& l : j.at("legs")) legs.push_back(l.get<int>());
    return from_parts(weights, edges, legs);
}

std::string word_to_string(const Word& w) {
    if (w.trivial()) return "1";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        size_t run = i;
        while (run < w.letters.size() && w.letters[run] == w.letters[i]) ++run;
        int gen = std::abs(w.letters[i]);
        int power = static_cast<int>(run - i) * (w.letters[i] > 0 ? 1 : -1);
        if (!first) out << "*";
        out << "x" << gen;
        if (power != 1) out << "^" << power;
        first = false;
        i = run;
    }
    return out.str();
}

Word word_from_string(int rank, const std::string& s) {
    if (s == "1" || s.empty()) return Word{rank, {}};
    std::vector<int> letters;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, '*')) {
        if (tok.empty() || tok[0] != 'x')
            throw ParseError("word factor must look like x<k> or x<k>^<e>: '" +
                             tok + "'");
        size_t caret = tok.find('^');
        int gen, power = 1;
        try {
            gen = std::stoi(tok.substr(1, caret));
            if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw ParseError("bad number in word factor '" + tok + "'");
        }
        if (gen < 1 || gen > rank)
            throw ParseError("generator index out of range in '" + tok + "'");
        for (int k = 0; k < std::abs(power); ++k)
            letters.push_back(power > 0 ? gen : -gen);
    }
    return reduce(rank, letters);
}

std::string ext_value_to_string(const ExtValue& v) {
    if (v.infinite) return "inf";
    std::ostringstream out;
    out << v.value;
    return out.str();
}

ExtValue ext_value_from_string(const std::string& s) {
    if (s == "inf") return ExtValue::infinity();
    try {
        return ExtValue::finite(Rational(s));
    } catch (const std::exception&) {
        throw ParseError("bad rational value '" + s + "'");
    }
}

json marking_to_json(const Marking& m) {
    json j;
    j["graph"] = graph_to_json(m.presentation.graph);
    j["base"] = m.presentation.base;
    json tree = json::array();
    for (EdgeId e : m.presentation.tree) tree.push_back(e);
    j["tree"] = tree;
    json images = json::array();
    for (const Word& w : m.images.images) images.push_back(word_to_string(w));
    j["images"] = images;
    return j;
}

json top_class_to_json(const TopClass& t) {
    json j;
    j["rank_b"] = t.rank_b;
    json words = json::array();
    for (const Word& w : t.words) words.push_back(word_to_string(w));
    j["words"] = words;
    return j;
}

StableModel model_from_json(const json& j) {
    StableModel m;
    if (!j.contains("components") || !j.contains("nodes") ||
        !j.contains("valuation"))
        throw ParseError("model needs 'components', 'nodes' and 'valuation'");
    for (const json& c : j.at("components")) {
        if (!c.contains("id") || !c.contains("genus"))
            throw ParseError("component entries need 'id' and 'genus'");
        m.components.emplace_back(c.at("id").get<int>(), c.at("genus").get<int>());
    }
    for (const json& n : j.at("nodes")) {
        if (!n.contains("a") || !n.contains("b"))
            throw ParseError("node entries need 'a' and 'b'");
        StableModel::Node node;
        node.component_a = n.at("a").get<int>();
        node.component_b = n.at("b").get<int>();
        if (n.contains("parameter")) {
            std::string p = n.at("parameter").get<std::string>();
            if (p == "ZERO") {
                node.zero_parameter = true;
            } else {
                try {
                    node.parameter = Rational(p);
                } catch (const std::exception&) {
                    throw ParseError("bad node parameter '" + p + "'");
                }
            }
        }
        m.nodes.push_back(node);
    }
    const json& val = j.at("valuation");
    std::string kind = val.at("kind").get<std::string>();
    if (kind == "p-adic") {
        m.valuation = StableModel::Valuation::PAdic;
        m.prime = val.at("prime").get<long long>();
    } else if (kind == "explicit") {
        m.valuation = StableModel::Valuation::Explicit;
        for (const json& l : val.at("lengths"))
            m.explicit_lengths.push_back(
                ext_value_from_string(l.get<std::string>()));
    } else if (kind == "t-adic") {
        m.valuation = StableModel::Valuation::TAdic;
        for (const json& e : val.at("exponents"))
            m.t_exponents.push_back(e.get<int>());
    } else {
        throw ParseError("unknown valuation kind '" + kind + "'");
    }
    return m;
}

json model_to_json(const StableModel& m) {
    json j;
    json comps = json::array();
    for (const auto& [id, h] : m.components)
        comps.push_back(json{{"id", id}, {"genus", h}});
    j["components"] = comps;
    json nodes = json::array();
    for (const StableModel::Node& n : m.nodes) {
        json nd;
        nd["a"] = n.component_a;
        nd["b"] = n.component_b;
        if (n.zero_parameter) {
            nd["parameter"] = "ZERO";
        } else {
            std::ostringstream out;
            out << n.parameter;
            nd["parameter"] = out.str();
        }
        nodes.push_back(nd);
    }
    j["nodes"] = nodes;
    json val;
    switch (m.valuation) {
    case StableModel::Valuation::PAdic:
        val["kind"] = "p-adic";
        val["prime"] = m.prime;
        break;
    case StableModel::Valuation::Explicit: {
        val["kind"] = "explicit";
        json lengths = json::array();
        for (const ExtValue& v : m.explicit_lengths)
            lengths.push_back(ext_value_to_string(v));
        val["lengths"] = lengths;
        break;
    }
    case StableModel::Valuation::TAdic: {
        val["kind"] = "t-adic";
        json exps = json::array();
        for (int e : m.t_exponents) exps.push_back(e);
        val["exponents"] = exps;
        break;
    }
    }
    j["valuation"] = val;
    return j;
}

json tropical_to_json(const TropicalCurveExt& c) {
    json j;
    j["graph"] = graph_to_json(c.graph);
    json lengths = json::array();
    for (EdgeId e = 0; e < static_cast<int>(c.graph.edges().size()); ++e)
        lengths.push_back(ext_value_to_string(c.lengths.at(e)));
    j["lengths"] = lengths;
    return j;
}

json cell_location_to_json(const CellLocation& loc) {
    json j;
    j["object"] = loc.object_id;
    json coords;
    for (const auto& [label, v] : loc.point.coordinates)
        coords[std::to_string(label)] = ext_value_to_string(v);
    j["coordinates"] = coords;
    json orbit = json::array();
    for (const auto& point : loc.orbit) {
        json p;
        for (const auto& [label, v] : point)
            p[std::to_string(label)] = ext_value_to_string(v);
        orbit.push_back(p);
    }
    j["orbit"] = orbit;
    json inf = json::array();
    for (EdgeId e : loc.face_at_infinity) inf.push_back(e);
    j["face_at_infinity"] = inf;
    return j;
}

json diagram_to_json(const ConeDiagram& d) {
    json j;
    j["marked"] = d.marked;
    json objects = json::array();
    for (const ConeObject& o : d.objects) {
        json obj;
        obj["id"] = o.id;
        obj["dimension"] = o.cone.dimension();
        obj["payload"] = o.payload;
        obj["graph"] = graph_to_json(o.graph);
        objects.push_back(obj);
    }
    j["objects"] = objects;
    json homs = json::array();
    for (const auto& [key, maps] : d.homs) {
        if (maps.empty()) continue;
        json h;
        h["from"] = key.first;
        h["to"] = key.second;
        json ms = json::array();
        for (const FaceMap& f : maps) {
            json cm;
            for (const auto& [a, b] : f.coordinate_map)
                cm[std::to_string(a)] = b;
            ms.push_back(cm);
        }
        h["maps"] = ms;
        homs.push_back(h);
    }
    j["homs"] = homs;
    return j;
}

std::string diagram_to_dot(const ConeDiagram& d) {
    std::ostringstream out;
    out << "digraph cones {\n";
    out << "  rankdir=BT;\n";
    for (const ConeObject& o : d.objects)
        out << "  n" << o.id << " [label=\"" << o.id << " (dim "
            << o.cone.dimension() << ")\"];\n";
    for (const auto& [key, maps] : d.homs) {
        if (key.first == key.second || maps.empty()) continue;
        out << "  n" << key.first << " -> n" << key.second << ";\n";
    }
    out << "}\n";
    return out.str();
}

json report_to_json(const QuotientReport& r) {
    json j;
    j["genus"] = r.genus;
    j["seed"] = r.seed;
    j["samples"] = r.sample_count;
    j["passed"] = r.all_passed();
    json checks = json::array();
    for (const CheckResult& c : r.results) {
        json ch;
        ch["name"] = c.name;
        ch["passed"] = c.passed;
        ch["checks"] = c.checks;
        if (!c.detail.empty()) ch["counterexample"] = c.detail;
        checks.push_back(ch);
    }
    j["checks"] = checks;
    return j;
}

} // namespace io
} // namespace tropteich
