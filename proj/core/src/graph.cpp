#include <tropteich/graph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace tropteich {

std::vector<Vertex> WeightedGraph::vertices() const {
    std::vector<Vertex> vs;
    for (int h = 0; h < half_edge_count; ++h)
        if (root[h] == h) vs.push_back(h);
    return vs;
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> es;
    for (int h = 0; h < half_edge_count; ++h) {
        int j = involution[h];
        if (j > h && root[h] != h) es.push_back(Edge{h, j});
    }
    return es;
}

void validate(const WeightedGraph& g) {
    const int n = g.half_edge_count;
    if (n < 0) throw AxiomViolation("negative half-edge count");
    if (static_cast<int>(g.root.size()) != n)
        throw AxiomViolation("root map has wrong domain size");
    if (static_cast<int>(g.involution.size()) != n)
        throw AxiomViolation("involution has wrong domain size");
    for (int h = 0; h < n; ++h) {
        if (g.root[h] < 0 || g.root[h] >= n)
            throw AxiomViolation("root map out of range at " + std::to_string(h));
        if (g.involution[h] < 0 || g.involution[h] >= n)
            throw AxiomViolation("involution out of range at " + std::to_string(h));
    }
    for (int h = 0; h < n; ++h)
        if (g.root[g.root[h]] != g.root[h])
            throw AxiomViolation("root map is not idempotent at " + std::to_string(h));
    for (int h = 0; h < n; ++h)
        if (g.involution[g.involution[h]] != h)
            throw AxiomViolation("involution squared is not the identity at " +
                                 std::to_string(h));
    // The involution must preserve the vertex/half-edge split and fix every
    // vertex; half-edges of one edge may be rooted at different vertices.
    for (int h = 0; h < n; ++h)
        if (g.root[h] == h && g.involution[h] != h)
            throw AxiomViolation("involution moves the vertex " + std::to_string(h));
    for (int h = 0; h < n; ++h)
        if (g.root[h] != h && g.root[g.involution[h]] == g.involution[h])
            throw AxiomViolation("involution sends the half-edge " +
                                 std::to_string(h) + " to a vertex");

    std::vector<Vertex> vs = g.vertices();
    if (g.weight.size() != vs.size())
        throw AxiomViolation("weight map domain is not the vertex set");
    for (Vertex v : vs) {
        auto it = g.weight.find(v);
        if (it == g.weight.end())
            throw AxiomViolation("missing weight at vertex " + std::to_string(v));
        if (it->second < 0)
            throw AxiomViolation("negative weight at vertex " + std::to_string(v));
    }

    // legs = involution-fixed non-vertex half-edges; leg_order must list each once.
    std::vector<HalfEdge> legs;
    for (int h = 0; h < n; ++h)
        if (g.root[h] != h && g.involution[h] == h) legs.push_back(h);
    std::vector<HalfEdge> declared = g.legs;
    std::sort(declared.begin(), declared.end());
    if (std::adjacent_find(declared.begin(), declared.end()) != declared.end())
        throw AxiomViolation("leg order repeats a leg");
    if (declared != legs)
        throw AxiomViolation("leg order is not a total order on the set of legs");

    if (n == 0) throw AxiomViolation("empty graph has no vertex");

    // Connectivity over vertices through finite edges.
    std::vector<Vertex> comp(n, -1);
    std::vector<HalfEdge> stack{g.root[0]};
    comp[g.root[0]] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int h = 0; h < n; ++h) {
            if (g.root[h] != v || g.root[h] == h) continue;
            Vertex w = g.root[g.involution[h]];
            if (comp[w] == -1) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (Vertex v : vs)
        if (comp[v] == -1) throw Disconnected();
}

int genus(const WeightedGraph& g) {
    int edges = static_cast<int>(g.edges().size());
    int verts = static_cast<int>(g.vertices().size());
    int b1 = edges - verts + 1;
    int total = b1;
    for (const auto& [v, h] : g.weight) total += h;
    return total;
}

int valence(const WeightedGraph& g, Vertex v) {
    if (v < 0 || v >= g.half_edge_count || g.root[v] != v)
        throw UnknownVertex(std::to_string(v));
    int count = 0;
    for (int h = 0; h < g.half_edge_count; ++h)
        if (g.root[h] == v && h != v) ++count;
    return count;
}

bool is_stable(const WeightedGraph& g) {
    for (const auto& [v, h] : g.weight)
        if (2 * h - 2 + valence(g, v) <= 0) return false;
    return true;
}

WeightedGraph from_parts(const std::vector<int>& weights,
                         const std::vector<std::pair<int, int>>& edge_list,
                         const std::vector<int>& leg_roots) {
    const int n = static_cast<int>(weights.size());
    const int m = static_cast<int>(edge_list.size());
    const int l = static_cast<int>(leg_roots.size());
    WeightedGraph g;
    g.half_edge_count = n + 2 * m + l;
    g.root.resize(g.half_edge_count);
    g.involution.resize(g.half_edge_count);
    for (int v = 0; v < n; ++v) {
        g.root[v] = v;
        g.involution[v] = v;
        g.weight[v] = weights[v];
    }
    for (int k = 0; k < m; ++k) {
        int a = n + 2 * k, b = n + 2 * k + 1;
        g.root[a] = edge_list[k].first;
        g.root[b] = edge_list[k].second;
        g.involution[a] = b;
        g.involution[b] = a;
    }
    for (int k = 0; k < l; ++k) {
        int h = n + 2 * m + k;
        g.root[h] = leg_roots[k];
        g.involution[h] = h;
        g.legs.push_back(h);
    }
    return g;
}

bool check_isomorphism(const Isomorphism& iso) {
    const WeightedGraph& s = iso.source;
    const WeightedGraph& t = iso.target;
    if (s.half_edge_count != t.half_edge_count) return false;
    const auto& f = iso.half_edge_map;
    if (static_cast<int>(f.size()) != s.half_edge_count) return false;
    std::vector<bool> hit(t.half_edge_count, false);
    for (int h = 0; h < s.half_edge_count; ++h) {
        if (f[h] < 0 || f[h] >= t.half_edge_count || hit[f[h]]) return false;
        hit[f[h]] = true;
    }
    for (int h = 0; h < s.half_edge_count; ++h) {
        if (f[s.root[h]] != t.root[f[h]]) return false;
        if (f[s.involution[h]] != t.involution[f[h]]) return false;
    }
    for (const auto& [v, w] : s.weight)
        if (t.weight.at(f[v]) != w) return false;
    if (s.legs.size() != t.legs.size()) return false;
    for (size_t k = 0; k < s.legs.size(); ++k)
        if (f[s.legs[k]] != t.legs[k]) return false;
    return true;
}

WeightedGraph theta_graph() {
    return from_parts({0, 0}, {{0, 1}, {0, 1}, {0, 1}});
}

WeightedGraph dumbbell_graph() {
    return from_parts({0, 0}, {{0, 0}, {1, 1}, {0, 1}});
}

WeightedGraph rose(int loops, int weight) {
    std::vector<std::pair<int, int>> edge_list(loops, {0, 0});
    return from_parts({weight}, edge_list);
}

WeightedGraph single_vertex(int weight) {
    return from_parts({weight}, {});
}

} // namespace tropteich
