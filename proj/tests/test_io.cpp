#include <doctest.h>

#include <random>

#include <tropteich/io.hpp>

using namespace tropteich;

TEST_CASE("graph json round trip is exact") {
    for (const WeightedGraph& g :
         {theta_graph(), dumbbell_graph(), rose(2, 1),
          from_parts({0, 1}, {{0, 1}, {0, 1}}, {0, 0})}) {
        io::json j = io::graph_to_json(g);
        WeightedGraph back = io::graph_from_json(j);
        CHECK(back == g);
        CHECK(io::graph_to_json(back) == j);
    }
}

TEST_CASE("word literals round trip") {
    CHECK(io::word_to_string(reduce(2, {})) == "1");
    CHECK(io::word_from_string(2, "1").trivial());
    Word w = reduce(3, {1, 1, -2, 3, 3, 3, -1});
    std::string s = io::word_to_string(w);
    CHECK(s == "x1^2*x2^-1*x3^3*x1^-1");
    CHECK(io::word_from_string(3, s) == w);
    CHECK(io::word_from_string(2, "x1*x2^-1").letters == std::vector<int>{1, -2});
    CHECK_THROWS_AS(io::word_from_string(2, "x3"), ParseError);
    CHECK_THROWS_AS(io::word_from_string(2, "zz"), ParseError);
}

TEST_CASE("random words survive the string round trip") {
    std::mt19937_64 rng(20240915ULL);
    std::uniform_int_distribution<int> letter(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> ls;
        for (int k = 0; k < trial % 12; ++k)
            ls.push_back(sign(rng) ? letter(rng) : -letter(rng));
        Word w = reduce(3, ls);
        CHECK(io::word_from_string(3, io::word_to_string(w)) == w);
    }
}

TEST_CASE("extended value strings round trip") {
    for (const char* s : {"0", "4", "3/2", "1000000007/3", "inf"}) {
        ExtValue v = io::ext_value_from_string(s);
        CHECK(io::ext_value_to_string(v) == s);
    }
    CHECK(io::ext_value_from_string("inf") == ExtValue::infinity());
    CHECK(io::ext_value_from_string("3/2") == ExtValue::finite(Rational(3, 2)));
}

TEST_CASE("stable model json round trip") {
    StableModel m;
    m.components = {{0, 1}, {1, 0}};
    m.nodes = {{0, 1, false, Rational(3, 4)}, {1, 1, true, Rational(0)},
               {0, 1, false, Rational(9)}};
    m.valuation = StableModel::Valuation::PAdic;
    m.prime = 3;
    io::json j = io::model_to_json(m);
    StableModel back = io::model_from_json(j);
    CHECK(io::model_to_json(back) == j);
    CHECK(back.components == m.components);
    CHECK(back.nodes.size() == m.nodes.size());
    CHECK(back.nodes[1].zero_parameter);
    CHECK(back.nodes[0].parameter == Rational(3, 4));
    CHECK(back.prime == 3);

    m.valuation = StableModel::Valuation::Explicit;
    m.explicit_lengths = {ExtValue::finite(1), ExtValue::infinity(),
                          ExtValue::finite(Rational(5, 2))};
    io::json j2 = io::model_to_json(m);
    StableModel back2 = io::model_from_json(j2);
    CHECK(io::model_to_json(back2) == j2);
    CHECK(back2.explicit_lengths == m.explicit_lengths);
}

TEST_CASE("diagram export is deterministic and mentions every object") {
    ConeDiagram d = build_Mg(2);
    io::json j1 = io::diagram_to_json(d);
    io::json j2 = io::diagram_to_json(build_Mg(2));
    CHECK(j1.dump() == j2.dump());
    std::string dot = io::diagram_to_dot(d);
    CHECK(dot == io::diagram_to_dot(build_Mg(2)));
    CHECK(dot.find("digraph") != std::string::npos);
    for (const ConeObject& o : d.objects)
        CHECK(dot.find(std::to_string(o.id)) != std::string::npos);
}

TEST_CASE("marking and report serialization") {
    std::mt19937_64 rng(7);
    WeightedGraph g = canonical_graph(theta_graph());
    Marking m = random_marking(g, 4, rng);
    io::json mj = io::marking_to_json(m);
    CHECK(mj.contains("images"));
    io::json tj = io::top_class_to_json(top_class(m));
    CHECK(tj.contains("words"));
    QuotientReport r = verify_quotient(2, 2, 99ULL);
    io::json rj = io::report_to_json(r);
    CHECK(rj["genus"] == 2);
    CHECK(rj.contains("checks"));
    CHECK(rj["passed"].is_boolean());
}
