#ifndef TROPTEICH_TESTS_ORACLES_HPP
#define TROPTEICH_TESTS_ORACLES_HPP

#include <vector>

#include <tropteich/graph.hpp>

namespace tropteich {
namespace oracles {

/// Isomorphism test by exhaustion over all weight-preserving vertex
/// bijections, comparing adjacency multisets. Independent of the
/// canonical-form machinery.
bool brute_force_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2);

/// Automorphism count by exhaustion over all permutations of the ground set
/// X, keeping those commuting with r and i and preserving weights and legs.
long brute_force_automorphism_count(const WeightedGraph& g);

/// Second enumeration path: closure of the single weight-g vertex under
/// one-edge expansions. Returns canonical representatives.
std::vector<WeightedGraph> enumerate_by_expansion(int genus);

} // namespace oracles
} // namespace tropteich

#endif
