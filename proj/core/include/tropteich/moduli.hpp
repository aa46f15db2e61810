#ifndef TROPTEICH_MODULI_HPP
#define TROPTEICH_MODULI_HPP

#include <random>
#include <string>
#include <vector>

#include <tropteich/cone_complex.hpp>
#include <tropteich/enumerate.hpp>
#include <tropteich/marking.hpp>

namespace tropteich {

/// Object of the marked category: a canonical stable graph together with a
/// topological marking class and a representative.
struct MarkedObject {
    WeightedGraph graph; // canonical
    Marking representative;
    TopClass marking_class;
};

MarkedObject make_marked_object(const Marking& m);

/// The coarse generalized cone complex M_g^trop over the contraction poset.
ConeDiagram build_Mg(int genus);

ConeDiagram build_Mg(const ContractionPoset& poset);

/// Finite chart of T_g^trop: the seeds, all their marked faces, and marked
/// cofaces within the given uncontraction radius, with hom-sets the marked
/// contractions and automorphisms the marking-preserving graph automorphisms.
ConeDiagram build_Tg_chart(int genus, const std::vector<MarkedObject>& seeds,
                           int radius);

/// Ids of the weight-zero objects of a diagram built by build_Mg.
std::vector<int> cv_locus(const ConeDiagram& d);
std::vector<int> cv_locus(int genus);

WeightedGraph forget_marking(const MarkedObject& obj);

struct CheckResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    std::string detail; // first counterexample, if any
};

struct QuotientReport {
    int genus = 0;
    unsigned long long seed = 0;
    int sample_count = 0;
    std::vector<CheckResult> results;

    bool all_passed() const;
};

/// Random marking on the canonical presentation of g: the canonical marking
/// acted on by a product of at most `max_len` Nielsen generators.
Marking random_marking(const WeightedGraph& g, int max_len,
                       std::mt19937_64& rng);

/// Desk-scale verification of the quotient theorem: torsor transitivity of
/// the Out(F_g) action per object and fullness of pushforward along every
/// poset contraction, over seeded random samples.
QuotientReport verify_quotient(int genus, int sample_count,
                               unsigned long long seed);

} // namespace tropteich

#endif
