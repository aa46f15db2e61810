#ifndef TROPTEICH_CANONICAL_HPP
#define TROPTEICH_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <tropteich/graph.hpp>

namespace tropteich {

/// Canonical labeling plus an isomorphism-class certificate.
struct CanonicalForm {
    std::vector<HalfEdge> canonical_labeling; // original half-edge -> canonical id
    std::string certificate;                  // equal iff isomorphic
};

/// Deterministic canonical form. The certificate encodes the weighted
/// adjacency structure under the lexicographically least admissible vertex
/// ordering (invariant refinement by (weight, valence, loops, legs) followed
/// by backtracking over the remaining orderings).
CanonicalForm canonical_form(const WeightedGraph& g);

/// The graph relabeled by its canonical labeling. Two isomorphic graphs
/// produce identical canonical graphs.
WeightedGraph canonical_graph(const WeightedGraph& g);

/// Witness bijection if the graphs are isomorphic.
std::optional<Isomorphism> are_isomorphic(const WeightedGraph& g1,
                                          const WeightedGraph& g2);

/// The full automorphism group as half-edge bijections.
std::vector<Isomorphism> automorphisms(const WeightedGraph& g);

Isomorphism compose(const Isomorphism& outer, const Isomorphism& inner);
Isomorphism invert(const Isomorphism& iso);
Isomorphism identity_isomorphism(const WeightedGraph& g);

} // namespace tropteich

#endif
