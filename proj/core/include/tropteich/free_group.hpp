#ifndef TROPTEICH_FREE_GROUP_HPP
#define TROPTEICH_FREE_GROUP_HPP

#include <optional>
#include <vector>

#include <tropteich/errors.hpp>

namespace tropteich {

/// Freely reduced word in F_rank; letters are signed generator indices
/// in +-1..+-rank.
struct Word {
    int rank = 0;
    std::vector<int> letters;

    bool trivial() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

/// Homomorphism F_domain_rank -> F_codomain_rank given by generator images.
struct GroupMap {
    int domain_rank = 0;
    int codomain_rank = 0;
    std::vector<Word> images;

    bool operator==(const GroupMap&) const = default;
};

/// Free reduction of a raw letter sequence.
Word reduce(int rank, const std::vector<int>& letters);

Word multiply(const Word& u, const Word& v);
Word inverse(const Word& w);
Word conjugate(const Word& w, const Word& by); // by * w * by^-1
Word generator(int rank, int index);           // x_index, 1-based

/// Substitutes generator images and reduces.
Word apply_map(const GroupMap& m, const Word& w);

GroupMap identity_map(int rank);

/// compose(f, g): x -> f(g(x)).
GroupMap compose_maps(const GroupMap& f, const GroupMap& g);

/// True iff the image tuple generates F_rank (checked by Stallings folding;
/// surjective endomorphisms of a finite-rank free group are automorphisms).
bool is_automorphism(const GroupMap& m);

/// Inverse automorphism, computed by recording the Nielsen moves that carry
/// the image tuple to the standard basis.
GroupMap invert_automorphism(const GroupMap& m);

/// Simultaneous conjugator: w with t1[k] = w * t2[k] * w^-1 for all k.
std::optional<Word> tuples_conjugate(const std::vector<Word>& t1,
                                     const std::vector<Word>& t2);

/// The standard finite generating set of Aut(F_rank): transpositions,
/// single-generator inversions, and one-sided multiplications.
std::vector<GroupMap> nielsen_generators(int rank);

/// Cyclic reduction: w = prefix * core * prefix^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w); // (prefix, core)

} // namespace tropteich

#endif
