#include <tropteich/tropicalize.hpp>

#include <algorithm>
#include <string>

#include <tropteich/canonical.hpp>

namespace tropteich {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long count_factors(boost::multiprecision::cpp_int n, long long p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

std::optional<long long> padic_valuation(const Rational& q, long long p) {
    if (!is_prime(p)) throw NotPrime();
    if (q == 0) return std::nullopt;
    boost::multiprecision::cpp_int num = boost::multiprecision::numerator(q);
    boost::multiprecision::cpp_int den = boost::multiprecision::denominator(q);
    if (num < 0) num = -num;
    return count_factors(num, p) - count_factors(den, p);
}

TropicalCurveExt dual_tropical_curve(const StableModel& m) {
    std::map<int, int> index_of;
    std::vector<int> weights;
    for (const auto& [id, h] : m.components) {
        index_of[id] = static_cast<int>(weights.size());
        weights.push_back(h);
    }

    std::vector<std::pair<int, int>> edge_list;
    for (const StableModel::Node& n : m.nodes) {
        if (!index_of.count(n.component_a) || !index_of.count(n.component_b))
            throw UnknownVertex("node references unknown component");
        edge_list.emplace_back(index_of.at(n.component_a),
                               index_of.at(n.component_b));
    }

    TropicalCurveExt out;
    out.graph = from_parts(weights, edge_list);
    try {
        validate(out.graph);
    } catch (const Disconnected&) {
        throw;
    }
    if (!is_stable(out.graph)) throw UnstableDualGraph();

    for (size_t k = 0; k < m.nodes.size(); ++k) {
        EdgeId e = static_cast<EdgeId>(k);
        switch (m.valuation) {
        case StableModel::Valuation::PAdic: {
            if (m.nodes[k].zero_parameter) {
                out.lengths[e] = ExtValue::infinity();
                break;
            }
            std::optional<long long> v =
                padic_valuation(m.nodes[k].parameter, m.prime);
            if (!v) {
                out.lengths[e] = ExtValue::infinity();
                break;
            }
            if (*v <= 0)
                throw ZeroLengthNode("node " + std::to_string(k) +
                                     " has valuation " + std::to_string(*v));
            out.lengths[e] = ExtValue::finite(Rational(*v));
            break;
        }
        case StableModel::Valuation::Explicit: {
            if (k >= m.explicit_lengths.size())
                throw ParseError("missing explicit length for node " +
                                 std::to_string(k));
            ExtValue val = m.explicit_lengths[k];
            if (!val.infinite && val.value <= 0)
                throw ZeroLengthNode("node " + std::to_string(k));
            out.lengths[e] = val;
            break;
        }
        case StableModel::Valuation::TAdic: {
            if (m.nodes[k].zero_parameter) {
                out.lengths[e] = ExtValue::infinity();
                break;
            }
            if (k >= m.t_exponents.size())
                throw ParseError("missing exponent for node " +
                                 std::to_string(k));
            if (m.t_exponents[k] <= 0)
                throw ZeroLengthNode("node " + std::to_string(k));
            out.lengths[e] = ExtValue::finite(Rational(m.t_exponents[k]));
            break;
        }
        }
    }
    return out;
}

CellLocation locate_cell(const TropicalCurveExt& c, const ConeDiagram& space) {
    CanonicalForm cf = canonical_form(c.graph);
    WeightedGraph canon = canonical_graph(c.graph);

    int found = -1;
    for (const ConeObject& o : space.objects)
        if (o.graph == canon) {
            found = o.id;
            break;
        }
    if (found < 0) throw NoMatchingCell(cf.certificate);

    Isomorphism t{c.graph, canon, cf.canonical_labeling};
    const std::vector<Edge> src_edges = c.graph.edges();
    const std::vector<Edge> tgt_edges = canon.edges();
    std::map<HalfEdge, EdgeId> tgt_edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(tgt_edges.size()); ++e) {
        tgt_edge_of_half[tgt_edges[e].a] = e;
        tgt_edge_of_half[tgt_edges[e].b] = e;
    }

    CellLocation loc;
    loc.object_id = found;
    loc.point.object_id = found;
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e)
        loc.point.coordinates[tgt_edge_of_half.at(t.half_edge_map[src_edges[e].a])] =
            c.lengths.at(e);
    loc.face_at_infinity = loc.point.face_at_infinity();

    std::set<std::map<EdgeId, ExtValue>> orbit;
    auto it = space.homs.find({found, found});
    if (it == space.homs.end()) {
        orbit.insert(loc.point.coordinates);
    } else {
        for (const FaceMap& f : it->second) {
            std::map<EdgeId, ExtValue> moved;
            for (const auto& [label, v] : loc.point.coordinates)
                moved[f.coordinate_map.at(label)] = v;
            orbit.insert(moved);
        }
    }
    loc.orbit.assign(orbit.begin(), orbit.end());
    return loc;
}

} // namespace tropteich
