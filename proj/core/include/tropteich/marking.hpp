#ifndef TROPTEICH_MARKING_HPP
#define TROPTEICH_MARKING_HPP

#include <map>
#include <set>
#include <vector>

#include <tropteich/contraction.hpp>
#include <tropteich/free_group.hpp>
#include <tropteich/graph.hpp>

namespace tropteich {

/// Basis element of the spanning-tree presentation of pi_1: either the loop
/// of a non-tree edge or a vertex-group generator.
struct BasisElement {
    enum class Kind { Loop, VertexGen };
    Kind kind;
    EdgeId edge = -1;  // Loop
    Vertex vertex = -1; // VertexGen
    int index = 0;      // VertexGen: 1..h(vertex)

    bool operator==(const BasisElement&) const = default;
};

/// Token of a word in the fundamental groupoid: an oriented edge traversal
/// or a vertex-group generator.
struct Token {
    enum class Kind { Edge, VGen };
    Kind kind;
    EdgeId edge = -1;
    int dir = 1;        // +1: root(e.a) -> root(e.b)
    Vertex vertex = -1;
    int gen_index = 0;  // 1..h(vertex)
    int power = 1;      // +-1

    static Token edge_token(EdgeId e, int d) { return Token{Kind::Edge, e, d, -1, 0, 1}; }
    static Token vgen_token(Vertex v, int j, int p) {
        return Token{Kind::VGen, -1, 1, v, j, p};
    }
};

using GroupoidWord = std::vector<Token>;

GroupoidWord invert_word(const GroupoidWord& w);

/// Spanning-tree presentation of pi_1(G,h;base): one loop generator per
/// non-tree edge (by edge id), then one generator per (vertex, j <= h(v)).
struct Pi1Presentation {
    WeightedGraph graph;
    Vertex base = -1;
    std::set<EdgeId> tree;
    std::vector<BasisElement> basis;
    std::map<Vertex, GroupoidWord> path_table; // tree path base -> v

    int rank() const { return static_cast<int>(basis.size()); }
    int loop_count() const;
    int basis_position(const BasisElement& b) const;

    bool operator==(const Pi1Presentation& o) const {
        return graph == o.graph && base == o.base && tree == o.tree;
    }
};

/// Teichmueller marking phi: pi_1(G,h;base) -> F_g, stored as the images of
/// the presentation basis.
struct Marking {
    Pi1Presentation presentation;
    GroupMap images;
};

/// Image of the standard generators of F_g under q o phi^-1 in F_{b1},
/// in canonical simultaneous-conjugacy normal form.
struct TopClass {
    int rank_b = 0;
    std::vector<Word> words;

    bool operator==(const TopClass&) const = default;
};

/// Breadth-first presentation from the base vertex, edges in id order.
Pi1Presentation presentation(const WeightedGraph& g, Vertex base);

/// Presentation over a caller-supplied spanning tree.
Pi1Presentation presentation_with_tree(const WeightedGraph& g, Vertex base,
                                       const std::set<EdgeId>& tree);

/// The defining groupoid word of basis element k (a loop at the base).
GroupoidWord basis_word(const Pi1Presentation& p, int k);

/// Rewrites a groupoid loop at the base as a reduced word in the basis.
/// Validates that the token sequence is a well-formed loop.
Word eval_word(const Pi1Presentation& p, const GroupoidWord& w);

/// Marking with identity images (basis[k] -> x_k).
Marking canonical_marking(const Pi1Presentation& p);

/// Out(F_g) action: post-composition with the automorphism a.
Marking act(const Marking& m, const GroupMap& a);

/// Transfer to the presentation(graph, min vertex) along a tree path.
Marking to_canonical(const Marking& m);

/// Topological class of the marking (computed on the canonical presentation,
/// so classes of markings over the same graph are comparable).
TopClass top_class(const Marking& m);

/// Conjugacy (outer) comparison of topological classes; strict mode compares
/// the normalized tuples verbatim.
bool top_equivalent(const Marking& m1, const Marking& m2, bool strict = false);

/// True iff the markings differ by an inner automorphism of F_g: equality of
/// the full marking classes, finer than top_equivalent on weighted graphs.
bool outer_equivalent(const Marking& m1, const Marking& m2);

/// Induced marking on the contraction target, on the canonical presentation
/// based at the image of the source base.
Marking pushforward(const Marking& m, const EdgeContraction& c);

/// Induced marking on the contraction source (inverse direction of the
/// pi_1 equivalence attached to c).
Marking pullback(const Marking& m, const EdgeContraction& c);

/// Marking at the endpoint of the path, with the same topological class.
Marking change_basepoint(const Marking& m, const std::vector<std::pair<EdgeId, int>>& path);

/// Transports a marking along a graph isomorphism.
Marking transport(const Marking& m, const Isomorphism& iso);

/// alpha with act(m1, alpha) = m2 (the markings torsor difference).
GroupMap marking_difference(const Marking& m1, const Marking& m2);

/// Canonical representative of the simultaneous-conjugacy class of a tuple.
std::vector<Word> conjugacy_normal_form(const std::vector<Word>& tuple);

} // namespace tropteich

#endif
