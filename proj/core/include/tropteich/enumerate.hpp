#ifndef TROPTEICH_ENUMERATE_HPP
#define TROPTEICH_ENUMERATE_HPP

#include <map>
#include <vector>

#include <tropteich/contraction.hpp>

namespace tropteich {

/// One representative per isomorphism class of connected stable weighted
/// graphs of the given genus with no legs, in certificate order. The
/// representatives are canonical graphs.
std::vector<WeightedGraph> enumerate_stable_graphs(int genus);

/// The category J_g on canonical representatives. Morphism classes between
/// two objects are stored up to target automorphism; with canonical
/// contractions this means one class per contracted edge set.
struct ContractionPoset {
    std::vector<WeightedGraph> objects; // canonical, certificate order
    std::vector<std::string> certificates;
    std::map<std::pair<int, int>, std::vector<EdgeContraction>> morphisms;
    std::vector<int> dimension; // |E| per object

    int object_index(const std::string& certificate) const;
};

/// Builds the full contraction poset at genus 2, 3, or 4.
ContractionPoset contraction_poset(int genus);

} // namespace tropteich

#endif
