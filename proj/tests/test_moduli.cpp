#include <doctest.h>

#include <random>
#include <set>

#include <tropteich/moduli.hpp>

using namespace tropteich;

TEST_CASE("build_Mg objects match the enumeration") {
    for (int g : {2, 3}) {
        ConeDiagram d = build_Mg(g);
        auto graphs = enumerate_stable_graphs(g);
        REQUIRE(d.objects.size() == graphs.size());
        for (size_t k = 0; k < graphs.size(); ++k) {
            CHECK(d.objects[k].graph == graphs[k]);
            CHECK(d.objects[k].payload == canonical_form(graphs[k]).certificate);
            CHECK(d.objects[k].cone.dimension() ==
                  static_cast<int>(graphs[k].edges().size()));
        }
        CHECK_FALSE(d.marked);
    }
}

TEST_CASE("Teichmueller charts are cone complexes") {
    std::mt19937_64 rng(20240915ULL);
    for (int g : {2, 3}) {
        auto graphs = enumerate_stable_graphs(g);
        const WeightedGraph* top = nullptr;
        for (const auto& x : graphs)
            if (!top || x.edges().size() > top->edges().size()) top = &x;
        std::vector<MarkedObject> seeds = {make_marked_object(random_marking(*top, 4, rng))};
        ConeDiagram chart = build_Tg_chart(g, seeds, 0);
        CHECK(chart.marked);
        CHECK(is_cone_complex(chart));
        // the closure contains the seed cone and reaches dimension zero
        int max_dim = 0, min_dim = 99;
        for (const ConeObject& o : chart.objects) {
            max_dim = std::max(max_dim, o.cone.dimension());
            min_dim = std::min(min_dim, o.cone.dimension());
        }
        CHECK(max_dim == static_cast<int>(top->edges().size()));
        CHECK(min_dim == 0);
    }
}

TEST_CASE("charts of inner-equivalent seeds coincide") {
    std::mt19937_64 rng(3);
    WeightedGraph g = canonical_graph(theta_graph());
    Marking m = random_marking(g, 4, rng);
    GroupMap inner = identity_map(2);
    Word w = reduce(2, {1, 2, 1});
    for (int k = 0; k < 2; ++k)
        inner.images[k] = conjugate(generator(2, k + 1), w);
    Marking m2 = act(m, inner);
    ConeDiagram c1 = build_Tg_chart(2, {make_marked_object(m)}, 1);
    ConeDiagram c2 = build_Tg_chart(2, {make_marked_object(m2)}, 1);
    REQUIRE(c1.objects.size() == c2.objects.size());
    for (size_t k = 0; k < c1.objects.size(); ++k) {
        CHECK(c1.objects[k].graph == c2.objects[k].graph);
        CHECK(c1.objects[k].cone == c2.objects[k].cone);
    }
    CHECK(c1.homs.size() == c2.homs.size());
}

TEST_CASE("chart automorphisms are trivial while Mg has nontrivial ones") {
    std::mt19937_64 rng(9);
    WeightedGraph g = canonical_graph(theta_graph());
    ConeDiagram chart = build_Tg_chart(2, {make_marked_object(random_marking(g, 3, rng))}, 0);
    for (const ConeObject& o : chart.objects) {
        auto it = chart.homs.find({o.id, o.id});
        REQUIRE(it != chart.homs.end());
        REQUIRE(it->second.size() == 1);
        CHECK(it->second.front() == identity_face_map(o.cone));
    }
    CHECK_FALSE(is_cone_complex(build_Mg(2)));
}

TEST_CASE("forget_marking returns the underlying graph") {
    std::mt19937_64 rng(13);
    WeightedGraph g = canonical_graph(dumbbell_graph());
    MarkedObject obj = make_marked_object(random_marking(g, 4, rng));
    CHECK(forget_marking(obj) == g);
    CHECK(obj.graph == canonical_graph(obj.graph));
}

TEST_CASE("verify_quotient passes and is deterministic at genus 2") {
    QuotientReport r1 = verify_quotient(2, 8, 20240915ULL);
    QuotientReport r2 = verify_quotient(2, 8, 20240915ULL);
    CHECK(r1.all_passed());
    REQUIRE(r1.results.size() == r2.results.size());
    for (size_t k = 0; k < r1.results.size(); ++k) {
        CHECK(r1.results[k].name == r2.results[k].name);
        CHECK(r1.results[k].passed == r2.results[k].passed);
        CHECK(r1.results[k].checks == r2.results[k].checks);
        CHECK(r1.results[k].detail == r2.results[k].detail);
    }
    QuotientReport other = verify_quotient(2, 8, 1ULL);
    CHECK(other.all_passed());
}

TEST_CASE("verify_quotient with zero samples reports no checks") {
    QuotientReport r = verify_quotient(2, 0, 5ULL);
    CHECK(r.all_passed());
    for (const CheckResult& c : r.results) CHECK(c.checks == 0);
}

TEST_CASE("random_marking is a valid seeded marking") {
    std::mt19937_64 a(42), b(42);
    WeightedGraph g = canonical_graph(rose(2));
    Marking m1 = random_marking(g, 6, a);
    Marking m2 = random_marking(g, 6, b);
    CHECK(m1.images == m2.images);
    CHECK(is_automorphism(m1.images));
    CHECK(m1.presentation.graph == g);
}
