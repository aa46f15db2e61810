#include <tropteich/contraction.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace tropteich {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

std::pair<WeightedGraph, EdgeContraction> contract(const WeightedGraph& g,
                                                   const std::set<EdgeId>& s) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (EdgeId e : s)
        if (e < 0 || e >= m) throw UnknownEdge(std::to_string(e));

    const std::vector<Vertex> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    std::map<Vertex, int> vidx;
    for (int i = 0; i < n; ++i) vidx[verts[i]] = i;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (EdgeId e : s) {
        int u = find_root(parent, vidx.at(g.endpoint_a(edges[e])));
        int v = find_root(parent, vidx.at(g.endpoint_b(edges[e])));
        parent[u] = v;
    }

    // Components in order of their smallest source vertex.
    std::vector<int> comp_of(n, -1);
    std::vector<int> comp_size;
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        int r = find_root(parent, i);
        if (comp_of[r] == -1) {
            comp_of[r] = ncomp++;
            comp_size.push_back(0);
        }
        comp_of[i] = comp_of[r];
        ++comp_size[comp_of[i]];
    }

    std::vector<int> weights(ncomp, 0);
    std::vector<int> comp_edges(ncomp, 0);
    for (int i = 0; i < n; ++i) weights[comp_of[i]] += g.weight.at(verts[i]);
    for (EdgeId e : s) ++comp_edges[comp_of[vidx.at(g.endpoint_a(edges[e]))]];
    for (int cidx = 0; cidx < ncomp; ++cidx)
        weights[cidx] += comp_edges[cidx] - (comp_size[cidx] - 1); // + b1(component)

    std::vector<std::pair<int, int>> edge_list;
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < m; ++e) {
        if (s.count(e)) continue;
        kept.push_back(e);
        edge_list.push_back({comp_of[vidx.at(g.endpoint_a(edges[e]))],
                             comp_of[vidx.at(g.endpoint_b(edges[e]))]});
    }
    std::vector<int> leg_roots;
    for (HalfEdge l : g.legs) leg_roots.push_back(comp_of[vidx.at(g.root[l])]);

    WeightedGraph target = from_parts(weights, edge_list, leg_roots);

    EdgeContraction c;
    c.source = g;
    c.target = target;
    c.contracted = s;
    for (int i = 0; i < n; ++i) c.vertex_map[verts[i]] = comp_of[i];
    const int mk = static_cast<int>(kept.size());
    for (int k = 0; k < mk; ++k) {
        c.half_edge_map[ncomp + 2 * k] = edges[kept[k]].a;
        c.half_edge_map[ncomp + 2 * k + 1] = edges[kept[k]].b;
    }
    for (size_t k = 0; k < g.legs.size(); ++k)
        c.half_edge_map[ncomp + 2 * mk + static_cast<int>(k)] = g.legs[k];
    return {target, c};
}

namespace {

// Edge id in c.target of the (uncontracted) source edge, if any.
std::map<EdgeId, EdgeId> edge_correspondence(const EdgeContraction& c) {
    std::map<HalfEdge, HalfEdge> fwd; // source half -> target half
    for (const auto& [t, s] : c.half_edge_map) fwd[s] = t;
    std::map<HalfEdge, EdgeId> src_edge_of_half;
    const std::vector<Edge> src_edges = c.source.edges();
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e) {
        src_edge_of_half[src_edges[e].a] = e;
        src_edge_of_half[src_edges[e].b] = e;
    }
    std::map<EdgeId, EdgeId> corr;
    const std::vector<Edge> tgt_edges = c.target.edges();
    for (EdgeId e = 0; e < static_cast<int>(tgt_edges.size()); ++e)
        corr[src_edge_of_half.at(c.half_edge_map.at(tgt_edges[e].a))] = e;
    // returned map: source edge id -> target edge id (uncontracted only)
    std::map<EdgeId, EdgeId> out;
    for (const auto& [se, te] : corr) out[se] = te;
    return out;
}

} // namespace

EdgeContraction compose(const EdgeContraction& outer, const EdgeContraction& inner) {
    if (!(inner.target == outer.source)) throw Incomposable();
    EdgeContraction c;
    c.source = inner.source;
    c.target = outer.target;
    c.contracted = inner.contracted;
    std::map<EdgeId, EdgeId> corr = edge_correspondence(inner);
    for (const auto& [se, te] : corr)
        if (outer.contracted.count(te)) c.contracted.insert(se);
    for (const auto& [v, w] : inner.vertex_map) c.vertex_map[v] = outer.vertex_map.at(w);
    for (const auto& [t, mid] : outer.half_edge_map)
        c.half_edge_map[t] = inner.half_edge_map.at(mid);
    return c;
}

EdgeContraction identity_contraction(const WeightedGraph& g) {
    auto [target, c] = contract(g, {});
    // re-target onto g itself so the identity is strict
    auto iso = are_isomorphic(target, g);
    return compose_iso(*iso, c);
}

EdgeContraction compose_iso(const Isomorphism& iso, const EdgeContraction& c) {
    EdgeContraction out;
    out.source = c.source;
    out.target = iso.target;
    out.contracted = c.contracted;
    for (const auto& [v, w] : c.vertex_map) out.vertex_map[v] = iso.map_vertex(w);
    std::vector<HalfEdge> inv(iso.target.half_edge_count);
    for (int h = 0; h < iso.source.half_edge_count; ++h) inv[iso.half_edge_map[h]] = h;
    for (int t = 0; t < iso.target.half_edge_count; ++t) {
        auto it = c.half_edge_map.find(inv[t]);
        if (it != c.half_edge_map.end()) out.half_edge_map[t] = it->second;
    }
    return out;
}

EdgeContraction precompose_iso(const EdgeContraction& c, const Isomorphism& iso) {
    if (!(iso.target == c.source)) throw Incomposable();
    EdgeContraction out;
    out.source = iso.source;
    out.target = c.target;
    // contracted edges pull back through the half-edge bijection
    const std::vector<Edge> src_edges = iso.source.edges();
    const std::vector<Edge> mid_edges = c.source.edges();
    std::map<HalfEdge, EdgeId> mid_edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(mid_edges.size()); ++e) {
        mid_edge_of_half[mid_edges[e].a] = e;
        mid_edge_of_half[mid_edges[e].b] = e;
    }
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e)
        if (c.contracted.count(mid_edge_of_half.at(iso.half_edge_map[src_edges[e].a])))
            out.contracted.insert(e);
    for (Vertex v : iso.source.vertices())
        out.vertex_map[v] = c.vertex_map.at(iso.map_vertex(v));
    std::vector<HalfEdge> inv(iso.target.half_edge_count);
    for (int h = 0; h < iso.source.half_edge_count; ++h) inv[iso.half_edge_map[h]] = h;
    for (const auto& [t, s] : c.half_edge_map) out.half_edge_map[t] = inv[s];
    return out;
}

void validate_contraction(const EdgeContraction& c) {
    validate(c.source);
    validate(c.target);
    if (genus(c.source) != genus(c.target))
        throw AxiomViolation("contraction does not preserve genus");

    const std::vector<Edge> src_edges = c.source.edges();
    for (EdgeId e : c.contracted)
        if (e < 0 || e >= static_cast<int>(src_edges.size()))
            throw AxiomViolation("contracted set mentions a non-edge");

    // half_edge_map is injective and commutes with r and i
    std::set<HalfEdge> image;
    for (const auto& [t, s] : c.half_edge_map) {
        if (!image.insert(s).second)
            throw AxiomViolation("half-edge preimage map is not injective");
        if (c.target.is_vertex(t) || c.source.is_vertex(s))
            throw AxiomViolation("half-edge map touches a vertex");
        Vertex tv = c.target.root[t];
        Vertex sv = c.source.root[s];
        if (c.vertex_map.at(sv) != tv)
            throw AxiomViolation("half-edge map does not commute with the root map");
        HalfEdge ti = c.target.involution[t];
        HalfEdge si = c.source.involution[s];
        if (ti == t) {
            if (si != s) throw AxiomViolation("leg preimage is not a leg");
        } else {
            if (c.half_edge_map.at(ti) != si)
                throw AxiomViolation("half-edge map does not commute with the involution");
        }
    }
    // image = exactly the uncontracted non-vertex half-edges
    for (int h = 0; h < c.source.half_edge_count; ++h) {
        if (c.source.is_vertex(h)) continue;
        bool contracted_half = false;
        for (EdgeId e : c.contracted)
            if (src_edges[e].a == h || src_edges[e].b == h) contracted_half = true;
        if (contracted_half == (image.count(h) > 0))
            throw AxiomViolation("half-edge map image mismatch");
    }

    // per target vertex: preimage connected of genus h(v')
    for (Vertex tv : c.target.vertices()) {
        std::vector<Vertex> pre;
        for (const auto& [sv, w] : c.vertex_map)
            if (w == tv) pre.push_back(sv);
        if (pre.empty()) throw AxiomViolation("target vertex with empty preimage");
        std::map<Vertex, int> idx;
        for (size_t i = 0; i < pre.size(); ++i) idx[pre[i]] = static_cast<int>(i);
        std::vector<int> parent(pre.size());
        std::iota(parent.begin(), parent.end(), 0);
        int inner_edges = 0;
        int wsum = 0;
        for (Vertex v : pre) wsum += c.source.weight.at(v);
        for (EdgeId e : c.contracted) {
            Vertex a = c.source.endpoint_a(src_edges[e]);
            Vertex b = c.source.endpoint_b(src_edges[e]);
            if (!idx.count(a) || !idx.count(b)) continue;
            ++inner_edges;
            parent[find_root(parent, idx[a])] = find_root(parent, idx[b]);
        }
        int comps = 0;
        for (size_t i = 0; i < pre.size(); ++i)
            if (find_root(parent, static_cast<int>(i)) == static_cast<int>(i)) ++comps;
        if (comps != 1) throw AxiomViolation("preimage of a vertex is disconnected");
        int b1 = inner_edges - static_cast<int>(pre.size()) + 1;
        if (wsum + b1 != c.target.weight.at(tv))
            throw AxiomViolation("preimage genus does not match target weight");
    }
    // contracted edges stay within one preimage
    for (EdgeId e : c.contracted)
        if (c.vertex_map.at(c.source.endpoint_a(src_edges[e])) !=
            c.vertex_map.at(c.source.endpoint_b(src_edges[e])))
            throw AxiomViolation("contracted edge spans two target vertices");
}

namespace {

std::string expansion_key(const WeightedGraph& gplus, EdgeId new_edge) {
    CanonicalForm cf = canonical_form(gplus);
    const std::vector<Edge> edges = gplus.edges();
    const int n = static_cast<int>(gplus.vertices().size());
    auto canonical_edge_id = [&](EdgeId e) {
        int a = cf.canonical_labeling[edges[e].a];
        int b = cf.canonical_labeling[edges[e].b];
        return (std::min(a, b) - n) / 2;
    };
    std::map<HalfEdge, EdgeId> edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
        edge_of_half[edges[e].a] = e;
        edge_of_half[edges[e].b] = e;
    }
    int orbit_min = canonical_edge_id(new_edge);
    for (const Isomorphism& a : automorphisms(gplus)) {
        EdgeId img = edge_of_half.at(a.half_edge_map[edges[new_edge].a]);
        orbit_min = std::min(orbit_min, canonical_edge_id(img));
    }
    return cf.certificate + "#" + std::to_string(orbit_min);
}

} // namespace

std::vector<std::pair<WeightedGraph, EdgeContraction>> uncontractions(
    const WeightedGraph& g) {
    std::vector<std::pair<WeightedGraph, EdgeContraction>> out;
    std::set<std::string> seen;

    const std::vector<Vertex> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    std::map<Vertex, int> vidx;
    for (int i = 0; i < n; ++i) vidx[verts[i]] = i;
    const std::vector<Edge> edges = g.edges();

    auto consider = [&](const WeightedGraph& gplus, EdgeId new_edge) {
        if (!is_stable(gplus)) return;
        std::string key = expansion_key(gplus, new_edge);
        if (!seen.insert(key).second) return;
        auto [t, c0] = contract(gplus, {new_edge});
        auto iso = are_isomorphic(t, g);
        if (!iso) throw AxiomViolation("uncontraction round trip failed");
        out.push_back({gplus, compose_iso(*iso, c0)});
    };

    // loop additions at positive-weight vertices
    for (int i = 0; i < n; ++i) {
        if (g.weight.at(verts[i]) == 0) continue;
        std::vector<int> weights(n);
        for (int j = 0; j < n; ++j) weights[j] = g.weight.at(verts[j]);
        --weights[i];
        std::vector<std::pair<int, int>> edge_list;
        for (const Edge& e : edges)
            edge_list.push_back({vidx.at(g.endpoint_a(e)), vidx.at(g.endpoint_b(e))});
        edge_list.push_back({i, i});
        std::vector<int> leg_roots;
        for (HalfEdge l : g.legs) leg_roots.push_back(vidx.at(g.root[l]));
        consider(from_parts(weights, edge_list, leg_roots),
                 static_cast<int>(edge_list.size()) - 1);
    }

    // vertex splits: distribute incident half-edges and weight over an edge
    for (int i = 0; i < n; ++i) {
        Vertex v = verts[i];
        std::vector<HalfEdge> incident;
        for (int h = 0; h < g.half_edge_count; ++h)
            if (g.root[h] == v && h != v) incident.push_back(h);
        const int d = static_cast<int>(incident.size());
        const int hw = g.weight.at(v);
        for (int mask = 0; mask < (1 << d); ++mask) {
            for (int h1 = 0; h1 <= hw; ++h1) {
                int h2 = hw - h1;
                // new vertices: v1 = position i, v2 = position n (appended)
                std::set<HalfEdge> side2;
                for (int b = 0; b < d; ++b)
                    if ((mask >> b) & 1) side2.insert(incident[b]);
                auto new_root = [&](HalfEdge h) {
                    if (g.root[h] != v) return vidx.at(g.root[h]);
                    return side2.count(h) ? n : i;
                };
                std::vector<int> weights(n + 1);
                for (int j = 0; j < n; ++j) weights[j] = g.weight.at(verts[j]);
                weights[i] = h1;
                weights[n] = h2;
                std::vector<std::pair<int, int>> edge_list;
                for (const Edge& e : edges)
                    edge_list.push_back({new_root(e.a), new_root(e.b)});
                edge_list.push_back({i, n});
                std::vector<int> leg_roots;
                for (HalfEdge l : g.legs) leg_roots.push_back(new_root(l));
                consider(from_parts(weights, edge_list, leg_roots),
                         static_cast<int>(edge_list.size()) - 1);
            }
        }
    }
    return out;
}

} // namespace tropteich
