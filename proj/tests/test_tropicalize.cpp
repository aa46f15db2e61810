#include <doctest.h>

#include <random>

#include <tropteich/moduli.hpp>
#include <tropteich/tropicalize.hpp>

using namespace tropteich;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(1, 10000);
    std::uniform_int_distribution<long long> den(1, 10000);
    std::uniform_int_distribution<int> sign(0, 1);
    Rational q(num(rng), den(rng));
    return sign(rng) ? q : -q;
}

} // namespace

TEST_CASE("p-adic valuation basics") {
    CHECK(padic_valuation(Rational(8), 2) == 3);
    CHECK(padic_valuation(Rational(1, 9), 3) == -2);
    CHECK(padic_valuation(Rational(6, 5), 5) == -1);
    CHECK(padic_valuation(Rational(7), 5) == 0);
    CHECK_FALSE(padic_valuation(Rational(0), 2).has_value()); // val(0) = infinity
    CHECK_THROWS_AS(padic_valuation(Rational(1), 4), NotPrime);
    CHECK_THROWS_AS(padic_valuation(Rational(1), 1), NotPrime);
}

TEST_CASE("valuation is a homomorphism on random pairs") {
    std::mt19937_64 rng(20240915ULL);
    const long long primes[] = {2, 3, 5, 7, 11};
    for (int trial = 0; trial < 1000; ++trial) {
        long long p = primes[trial % 5];
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        auto va = padic_valuation(a, p), vb = padic_valuation(b, p);
        REQUIRE(va.has_value());
        REQUIRE(vb.has_value());
        CHECK(padic_valuation(a * b, p) == *va + *vb);
        if (*va != *vb && !(a + b == 0))
            CHECK(padic_valuation(a + b, p) == std::min(*va, *vb));
    }
}

TEST_CASE("two genus-1 components joined at one node") {
    StableModel m;
    m.components = {{0, 1}, {1, 1}};
    m.nodes = {{0, 1, false, Rational(3)}};
    m.valuation = StableModel::Valuation::PAdic;
    m.prime = 3;
    TropicalCurveExt t = dual_tropical_curve(m);
    CHECK(genus(t.graph) == 2);
    REQUIRE(t.graph.edges().size() == 1);
    CHECK(t.lengths.at(0) == ExtValue::finite(1));
    CHECK(t.graph.weight.at(t.graph.endpoint_a(t.graph.edges()[0])) == 1);
}

TEST_CASE("genus-0 component with three self-nodes gives the weighted rose") {
    StableModel m;
    m.components = {{0, 0}};
    m.nodes = {{0, 0, false, Rational(5)},
               {0, 0, false, Rational(25)},
               {0, 0, false, Rational(125)}};
    m.prime = 5;
    TropicalCurveExt t = dual_tropical_curve(m);
    CHECK(t.graph.vertices().size() == 1);
    CHECK(t.graph.edges().size() == 3);
    CHECK(genus(t.graph) == 3);
    CHECK(is_stable(t.graph));
    std::multiset<ExtValue> lens(
        {t.lengths.at(0), t.lengths.at(1), t.lengths.at(2)});
    std::multiset<ExtValue> want({ExtValue::finite(1), ExtValue::finite(2),
                                  ExtValue::finite(3)});
    CHECK(lens == want);
}

TEST_CASE("a ZERO parameter gives an infinite length") {
    StableModel m;
    m.components = {{0, 1}, {1, 1}};
    m.nodes = {{0, 1, true, Rational(0)}};
    TropicalCurveExt t = dual_tropical_curve(m);
    CHECK(t.lengths.at(0) == ExtValue::infinity());
    ConeDiagram d = build_Mg(2);
    CellLocation loc = locate_cell(t, d);
    CHECK(loc.face_at_infinity == std::set<EdgeId>{0});
}

TEST_CASE("nonpositive valuations and instability are rejected") {
    StableModel unit;
    unit.components = {{0, 1}, {1, 1}};
    unit.nodes = {{0, 1, false, Rational(1, 2)}}; // val_2 = -1
    CHECK_THROWS_AS(dual_tropical_curve(unit), ZeroLengthNode);
    unit.nodes[0].parameter = Rational(3); // val_2 = 0
    CHECK_THROWS_AS(dual_tropical_curve(unit), ZeroLengthNode);

    StableModel unstable;
    unstable.components = {{0, 0}, {1, 1}};
    unstable.nodes = {{0, 1, false, Rational(2)}}; // genus-0 leaf component
    CHECK_THROWS_AS(dual_tropical_curve(unstable), UnstableDualGraph);
}

TEST_CASE("explicit and t-adic valuations") {
    StableModel m;
    m.components = {{0, 1}, {1, 1}};
    m.nodes = {{0, 1, false, Rational(0)}};
    m.valuation = StableModel::Valuation::Explicit;
    m.explicit_lengths = {ExtValue::finite(Rational(7, 2))};
    CHECK(dual_tropical_curve(m).lengths.at(0) == ExtValue::finite(Rational(7, 2)));
    m.valuation = StableModel::Valuation::TAdic;
    m.t_exponents = {4};
    CHECK(dual_tropical_curve(m).lengths.at(0) == ExtValue::finite(4));
}

TEST_CASE("cell location and coordinate orbit on the theta cell") {
    ConeDiagram d = build_Mg(2);
    StableModel m;
    m.components = {{0, 0}, {1, 0}};
    // three nodes joining the two components: dual graph is the theta graph
    m.nodes = {{0, 1, false, Rational(2)},
               {0, 1, false, Rational(2)},
               {0, 1, false, Rational(2)}};
    m.prime = 2;
    TropicalCurveExt t = dual_tropical_curve(m);
    CellLocation sym = locate_cell(t, d);
    CHECK(d.object(sym.object_id).payload ==
          canonical_form(theta_graph()).certificate);
    CHECK(sym.orbit.size() == 1); // (1,1,1) is fixed by every automorphism
    m.nodes[1].parameter = Rational(4);
    m.nodes[2].parameter = Rational(8);
    CellLocation asym = locate_cell(dual_tropical_curve(m), d);
    CHECK(asym.object_id == sym.object_id);
    CHECK(asym.orbit.size() == 6); // (1,2,3) has trivial stabilizer
    CHECK(asym.face_at_infinity.empty());
}

TEST_CASE("curves outside the space are reported") {
    StableModel m;
    m.components = {{0, 3}};
    m.nodes = {};
    TropicalCurveExt t = dual_tropical_curve(m); // genus 3 point
    ConeDiagram d = build_Mg(2);
    CHECK_THROWS_AS(locate_cell(t, d), NoMatchingCell);
}
