#ifndef TROPTEICH_GRAPH_HPP
#define TROPTEICH_GRAPH_HPP

#include <map>
#include <utility>
#include <vector>

#include <tropteich/errors.hpp>

namespace tropteich {

using HalfEdge = int;
using Vertex = int;
using EdgeId = int;

/// A finite edge as the unordered pair {a, i(a)} of half-edges, stored with a < b.
struct Edge {
    HalfEdge a;
    HalfEdge b;

    bool operator==(const Edge&) const = default;
};

/// Half-edge graph (X, r, i) with vertex weights and an ordered list of legs.
///
/// Half-edges are labeled 0..half_edge_count-1. Vertices are the fixed points
/// of the root map. Legs are involution-fixed non-vertex half-edges.
struct WeightedGraph {
    int half_edge_count = 0;
    std::vector<int> root;        // r: X -> X
    std::vector<int> involution;  // i: X -> X
    std::map<Vertex, int> weight; // h: V -> naturals
    std::vector<HalfEdge> legs;   // total order on the set of legs

    bool is_vertex(HalfEdge h) const { return root[h] == h; }
    bool is_leg(HalfEdge h) const { return !is_vertex(h) && involution[h] == h; }

    /// Sorted list of vertices (fixed points of r).
    std::vector<Vertex> vertices() const;

    /// Finite edges {h, i(h)} with h < i(h), sorted by smaller half-edge.
    /// The index in this list is the edge id used throughout the library.
    std::vector<Edge> edges() const;

    Vertex endpoint_a(const Edge& e) const { return root[e.a]; }
    Vertex endpoint_b(const Edge& e) const { return root[e.b]; }
    bool is_loop(const Edge& e) const { return root[e.a] == root[e.b]; }

    bool operator==(const WeightedGraph&) const = default;
};

/// Graph isomorphism as a half-edge bijection commuting with r and i,
/// preserving weights and the leg order.
struct Isomorphism {
    WeightedGraph source;
    WeightedGraph target;
    std::vector<HalfEdge> half_edge_map; // source half-edge -> target half-edge

    Vertex map_vertex(Vertex v) const { return half_edge_map[v]; }
};

/// Checks all WeightedGraph axioms, including connectivity.
/// Throws AxiomViolation naming the first failed axiom, or Disconnected.
void validate(const WeightedGraph& g);

/// b1(G) + sum of vertex weights, for a validated (connected) graph.
int genus(const WeightedGraph& g);

/// Number of half-edges rooted at v (a loop contributes 2, legs count).
int valence(const WeightedGraph& g, Vertex v);

/// True iff 2h(v) - 2 + val(v) > 0 at every vertex.
bool is_stable(const WeightedGraph& g);

/// Builds a graph from vertex weights, an edge list of vertex pairs, and
/// an ordered list of leg attachment vertices. Vertices are 0..n-1 as
/// half-edges, edge k owns half-edges n+2k and n+2k+1, legs follow.
WeightedGraph from_parts(const std::vector<int>& weights,
                         const std::vector<std::pair<int, int>>& edge_list,
                         const std::vector<int>& leg_roots = {});

/// True iff f commutes with r and i, preserves weights and leg order.
bool check_isomorphism(const Isomorphism& iso);

// Small standard graphs used as running examples.
WeightedGraph theta_graph();
WeightedGraph dumbbell_graph();
WeightedGraph rose(int loops, int weight = 0);
WeightedGraph single_vertex(int weight);

} // namespace tropteich

#endif
