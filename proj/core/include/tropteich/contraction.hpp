#ifndef TROPTEICH_CONTRACTION_HPP
#define TROPTEICH_CONTRACTION_HPP

#include <map>
#include <set>
#include <vector>

#include <tropteich/canonical.hpp>
#include <tropteich/graph.hpp>

namespace tropteich {

/// Weighted edge contraction: collapses each connected component of the
/// contracted subgraph to a vertex carrying that component's genus.
struct EdgeContraction {
    WeightedGraph source;
    WeightedGraph target;
    std::set<EdgeId> contracted;            // source edge ids
    std::map<Vertex, Vertex> vertex_map;    // source vertex -> target vertex
    std::map<HalfEdge, HalfEdge> half_edge_map; // target half-edge -> source preimage

    bool is_identity() const { return contracted.empty(); }
};

/// Contracts the given source edges. Each collapsed component becomes one
/// vertex of weight sum(h) + b1(component).
std::pair<WeightedGraph, EdgeContraction> contract(const WeightedGraph& g,
                                                   const std::set<EdgeId>& s);

/// Composition in the contraction category; inner.target must equal
/// outer.source as a value.
EdgeContraction compose(const EdgeContraction& outer, const EdgeContraction& inner);

EdgeContraction identity_contraction(const WeightedGraph& g);

/// Post-composes a contraction with an isomorphism of its target.
EdgeContraction compose_iso(const Isomorphism& iso, const EdgeContraction& c);

/// Pre-composes a contraction with an isomorphism onto its source.
EdgeContraction precompose_iso(const EdgeContraction& c, const Isomorphism& iso);

/// Checks the EdgeContraction axioms; throws AxiomViolation on failure.
void validate_contraction(const EdgeContraction& c);

/// All stable one-edge expansions of g up to isomorphism of the pair
/// (expansion, new edge), each with the contraction back onto g.
std::vector<std::pair<WeightedGraph, EdgeContraction>> uncontractions(
    const WeightedGraph& g);

} // namespace tropteich

#endif
