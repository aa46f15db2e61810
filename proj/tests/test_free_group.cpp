#include <doctest.h>

#include <random>

#include <tropteich/free_group.hpp>

using namespace tropteich;

namespace {

Word random_word(int rank, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k)
        letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return reduce(rank, letters);
}

GroupMap random_automorphism(int rank, int moves, std::mt19937_64& rng) {
    auto gens = nielsen_generators(rank);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    GroupMap m = identity_map(rank);
    for (int k = 0; k < moves; ++k) m = compose_maps(m, gens[pick(rng)]);
    return m;
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(reduce(2, {1, -1}).trivial());
    CHECK(reduce(2, {1, 2, -2, -1, 1}) == generator(2, 1));
    CHECK(reduce(3, {1, 2, 3}).letters == std::vector<int>{1, 2, 3});
    CHECK(reduce(2, {1, 1, -1, -1, 2, -2}).trivial());
}

TEST_CASE("multiply, inverse, conjugate") {
    Word x = generator(2, 1), y = generator(2, 2);
    CHECK(multiply(x, inverse(x)).trivial());
    CHECK(multiply(x, y).letters == std::vector<int>{1, 2});
    Word c = conjugate(x, y); // y x y^-1
    CHECK(c.letters == std::vector<int>{2, 1, -2});
    CHECK(conjugate(c, inverse(y)) == x);
}

TEST_CASE("apply_map and composition") {
    GroupMap f = identity_map(2);
    f.images[0] = reduce(2, {1, 2}); // x -> xy
    Word w = reduce(2, {1, -2});
    CHECK(apply_map(f, w).letters == std::vector<int>{1}); // xy y^-1
    GroupMap g = identity_map(2);
    g.images[1] = reduce(2, {-2}); // y -> y^-1
    GroupMap fg = compose_maps(f, g);
    CHECK(apply_map(fg, generator(2, 2)) == apply_map(f, apply_map(g, generator(2, 2))));
}

TEST_CASE("is_automorphism goldens") {
    GroupMap f = identity_map(2);
    f.images[0] = reduce(2, {1, 2});
    CHECK(is_automorphism(f));
    GroupMap bad = identity_map(2);
    bad.images[0] = reduce(2, {1, 1}); // x -> x^2 is injective, not onto
    CHECK_FALSE(is_automorphism(bad));
    GroupMap proj = identity_map(2);
    proj.images[1] = generator(2, 1); // x, x is not generating
    CHECK_FALSE(is_automorphism(proj));
}

TEST_CASE("Nielsen generators are automorphisms with correct inverses") {
    for (int rank : {2, 3}) {
        for (const GroupMap& n : nielsen_generators(rank)) {
            CHECK(is_automorphism(n));
            GroupMap ninv = invert_automorphism(n);
            CHECK(compose_maps(n, ninv) == identity_map(rank));
            CHECK(compose_maps(ninv, n) == identity_map(rank));
        }
    }
}

TEST_CASE("invert_automorphism round trips on random Nielsen products") {
    std::mt19937_64 rng(20240915ULL);
    for (int rank : {2, 3}) {
        for (int trial = 0; trial < 100; ++trial) {
            GroupMap m = random_automorphism(rank, 1 + trial % 10, rng);
            REQUIRE(is_automorphism(m));
            GroupMap minv = invert_automorphism(m);
            CHECK(compose_maps(m, minv) == identity_map(rank));
            CHECK(compose_maps(minv, m) == identity_map(rank));
        }
    }
}

TEST_CASE("invert_automorphism rejects non-automorphisms") {
    GroupMap bad = identity_map(2);
    bad.images[0] = reduce(2, {1, 1});
    CHECK_THROWS_AS(invert_automorphism(bad), NotAnAutomorphism);
}

TEST_CASE("tuples_conjugate recovers a hidden conjugator") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int rank = 2 + trial % 2;
        std::vector<Word> t2;
        for (int k = 0; k < rank; ++k) t2.push_back(random_word(rank, 1 + trial % 6, rng));
        Word w = random_word(rank, trial % 6, rng);
        std::vector<Word> t1;
        for (const Word& u : t2) t1.push_back(conjugate(u, w));
        auto found = tuples_conjugate(t1, t2);
        REQUIRE(found.has_value());
        for (size_t k = 0; k < t1.size(); ++k)
            CHECK(conjugate(t2[k], *found) == t1[k]);
    }
}

TEST_CASE("tuples_conjugate detects non-conjugate tuples") {
    // (x, y) and (y, x) are related by an automorphism but not by conjugation
    std::vector<Word> t1 = {generator(2, 1), generator(2, 2)};
    std::vector<Word> t2 = {generator(2, 2), generator(2, 1)};
    CHECK_FALSE(tuples_conjugate(t1, t2).has_value());
}

TEST_CASE("cyclic_reduce") {
    Word w = reduce(2, {1, 2, -1}); // prefix x, core y
    auto [prefix, core] = cyclic_reduce(w);
    CHECK(prefix.letters == std::vector<int>{1});
    CHECK(core.letters == std::vector<int>{2});
    CHECK(multiply(multiply(prefix, core), inverse(prefix)) == w);
    auto [p2, c2] = cyclic_reduce(generator(2, 1));
    CHECK(p2.trivial());
    CHECK(c2 == generator(2, 1));
    // the core is cyclically reduced: first and last letters are not inverse
    Word deep = reduce(3, {1, 2, 3, 2, -1, -2, 1, -2, -1});
    auto [p3, c3] = cyclic_reduce(deep);
    CHECK(multiply(multiply(p3, c3), inverse(p3)) == deep);
    if (c3.length() > 1) CHECK(c3.letters.front() != -c3.letters.back());
}
