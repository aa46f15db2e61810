#include <tropteich/cone_complex.hpp>

#include <algorithm>
#include <string>

namespace tropteich {

FaceMap identity_face_map(const OrthantCone& c) {
    FaceMap f;
    f.source = c;
    f.target = c;
    for (EdgeId l : c.labels) f.coordinate_map[l] = l;
    return f;
}

FaceMap compose(const FaceMap& outer, const FaceMap& inner) {
    if (!(inner.target == outer.source)) throw Incomposable();
    FaceMap f;
    f.source = inner.source;
    f.target = outer.target;
    for (const auto& [a, b] : inner.coordinate_map)
        f.coordinate_map[a] = outer.coordinate_map.at(b);
    return f;
}

const ConeObject& ConeDiagram::object(int id) const {
    if (id < 0 || id >= static_cast<int>(objects.size()))
        throw UnknownObject(std::to_string(id));
    return objects[id];
}

FaceMap face_map_from_contraction(const EdgeContraction& c) {
    const std::vector<Edge> src_edges = c.source.edges();
    const std::vector<Edge> tgt_edges = c.target.edges();
    std::map<HalfEdge, EdgeId> src_edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e) {
        src_edge_of_half[src_edges[e].a] = e;
        src_edge_of_half[src_edges[e].b] = e;
    }

    FaceMap f;
    for (EdgeId e = 0; e < static_cast<int>(tgt_edges.size()); ++e)
        f.source.labels.push_back(e);
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e)
        f.target.labels.push_back(e);
    for (EdgeId e = 0; e < static_cast<int>(tgt_edges.size()); ++e)
        f.coordinate_map[e] = src_edge_of_half.at(c.half_edge_map.at(tgt_edges[e].a));
    return f;
}

bool is_cone_complex(const ConeDiagram& d) {
    for (const auto& [key, maps] : d.homs) {
        if (key.first == key.second) {
            FaceMap id = identity_face_map(d.object(key.first).cone);
            for (const FaceMap& f : maps)
                if (!(f.coordinate_map == id.coordinate_map)) return false;
        } else {
            std::set<std::map<EdgeId, EdgeId>> distinct;
            for (const FaceMap& f : maps) distinct.insert(f.coordinate_map);
            if (distinct.size() > 1) return false;
        }
    }
    return true;
}

ConeDiagram coarse_space(const ConeDiagram& d) {
    ConeDiagram out;
    out.marked = d.marked;
    out.objects = d.objects;
    for (const auto& [key, maps] : d.homs) {
        std::set<std::map<EdgeId, EdgeId>> seen;
        for (const FaceMap& f : maps)
            if (seen.insert(f.coordinate_map).second)
                out.homs[key].push_back(f);
    }
    return out;
}

std::vector<int> f_vector(const ConeDiagram& d) {
    int max_dim = 0;
    for (const ConeObject& o : d.objects)
        max_dim = std::max(max_dim, o.cone.dimension());
    std::vector<int> f(max_dim + 1, 0);
    for (const ConeObject& o : d.objects) ++f[o.cone.dimension()];
    return f;
}

std::vector<std::pair<int, FaceMap>> faces(const ConeDiagram& d, int id) {
    d.object(id);
    std::vector<std::pair<int, FaceMap>> out;
    for (const auto& [key, maps] : d.homs)
        if (key.second == id)
            for (const FaceMap& f : maps) out.emplace_back(key.first, f);
    return out;
}

std::vector<std::pair<int, FaceMap>> cofaces(const ConeDiagram& d, int id,
                                             int radius) {
    const ConeObject& o = d.object(id);
    std::vector<std::pair<int, FaceMap>> out;
    for (const auto& [key, maps] : d.homs) {
        if (key.first != id || key.second == id) continue;
        const ConeObject& t = d.object(key.second);
        if (t.cone.dimension() - o.cone.dimension() > radius) continue;
        for (const FaceMap& f : maps) out.emplace_back(key.second, f);
    }
    return out;
}

std::set<EdgeId> ExtendedPoint::face_at_infinity() const {
    std::set<EdgeId> s;
    for (const auto& [label, v] : coordinates)
        if (v.infinite) s.insert(label);
    return s;
}

} // namespace tropteich
