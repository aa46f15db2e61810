// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is passed as argv[1] for the determinism
// criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <tropteich/io.hpp>
#include <tropteich/moduli.hpp>
#include <tropteich/tropicalize.hpp>

#include "oracles.hpp"

using namespace tropteich;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool passed,
            const std::string& detail = "") {
    std::ostringstream line;
    line << "criterion-" << (number < 10 ? "0" : "") << number << " " << name
         << ": " << (passed ? "PASS" : "FAIL");
    if (!passed && !detail.empty()) line << " (" << detail << ")";
    std::cout << line.str() << std::endl;
    if (!passed) ++g_failures;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::set<std::string> certificate_set(const std::vector<WeightedGraph>& gs) {
    std::set<std::string> out;
    for (const auto& g : gs) out.insert(canonical_form(g).certificate);
    return out;
}

GroupMap random_aut(int rank, int moves, std::mt19937_64& rng) {
    auto gens = nielsen_generators(rank);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    GroupMap m = identity_map(rank);
    for (int k = 0; k < moves; ++k) m = compose_maps(m, gens[pick(rng)]);
    return m;
}

Word random_word(int rank, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k)
        letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return reduce(rank, letters);
}

void criterion_1() {
    std::string detail;
    bool ok = true;
    auto t0 = clock_type::now();
    auto g2 = enumerate_stable_graphs(2);
    double s2 = seconds_since(t0);
    if (g2.size() != 7) { ok = false; detail = "genus 2 count " + std::to_string(g2.size()); }
    if (certificate_set(g2) != certificate_set(oracles::enumerate_by_expansion(2))) {
        ok = false;
        detail = "genus 2 oracle mismatch";
    }
    if (s2 >= 10.0) { ok = false; detail = "genus 2 took " + std::to_string(s2) + "s"; }
    t0 = clock_type::now();
    auto g3 = enumerate_stable_graphs(3);
    double s3 = seconds_since(t0);
    if (g3.size() != 42) { ok = false; detail = "genus 3 count " + std::to_string(g3.size()); }
    if (certificate_set(g3) != certificate_set(oracles::enumerate_by_expansion(3))) {
        ok = false;
        detail = "genus 3 oracle mismatch";
    }
    if (s3 >= 300.0) { ok = false; detail = "genus 3 took " + std::to_string(s3) + "s"; }
    report(1, "enumeration goldens", ok, detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    for (int g : {2, 3}) {
        ConeDiagram d = build_Mg(g);
        int max_dim = 0;
        for (const ConeObject& o : d.objects)
            max_dim = std::max(max_dim, o.cone.dimension());
        if (max_dim != 3 * g - 3) {
            ok = false;
            detail = "genus " + std::to_string(g) + " max dim " + std::to_string(max_dim);
        }
    }
    report(2, "dimension law 3g-3", ok, detail);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    ConeDiagram d2 = build_Mg(2);
    auto cv2 = cv_locus(d2);
    if (cv2.size() != 3) { ok = false; detail = "genus 2 CV count " + std::to_string(cv2.size()); }
    std::set<std::string> certs;
    for (int id : cv2) certs.insert(d2.object(id).payload);
    std::set<std::string> expected = {canonical_form(theta_graph()).certificate,
                                      canonical_form(dumbbell_graph()).certificate,
                                      canonical_form(rose(2)).certificate};
    if (certs != expected) { ok = false; detail = "genus 2 CV certificates"; }
    ConeDiagram d3 = build_Mg(3);
    size_t oracle = 0;
    for (const auto& g : oracles::enumerate_by_expansion(3)) {
        bool all_zero = true;
        for (Vertex v : g.vertices())
            if (g.weight.at(v) != 0) all_zero = false;
        if (all_zero) ++oracle;
    }
    if (cv_locus(d3).size() != oracle) {
        ok = false;
        detail = "genus 3 CV count " + std::to_string(cv_locus(d3).size()) +
                 " vs oracle " + std::to_string(oracle);
    }
    report(3, "Culler-Vogtmann locus", ok, detail);
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    size_t a_theta = automorphisms(theta_graph()).size();
    size_t a_dumb = automorphisms(dumbbell_graph()).size();
    if (a_theta != 12) { ok = false; detail = "|Aut(theta)| = " + std::to_string(a_theta); }
    if (a_dumb != 8) { ok = false; detail = "|Aut(dumbbell)| = " + std::to_string(a_dumb); }
    if (oracles::brute_force_automorphism_count(theta_graph()) != 12) {
        ok = false;
        detail = "theta brute force disagrees";
    }
    if (oracles::brute_force_automorphism_count(dumbbell_graph()) != 8) {
        ok = false;
        detail = "dumbbell brute force disagrees";
    }
    ConeDiagram d = build_Mg(2);
    std::string cert = canonical_form(theta_graph()).certificate;
    for (const ConeObject& o : d.objects) {
        if (o.payload != cert) continue;
        auto it = d.homs.find({o.id, o.id});
        size_t n = it == d.homs.end() ? 0 : it->second.size();
        if (n != 6) {
            ok = false;
            detail = "coarse theta self-maps = " + std::to_string(n);
        }
    }
    report(4, "automorphism goldens", ok, detail);
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    auto t0 = clock_type::now();
    std::mt19937_64 master(20240915ULL);
    for (int g : {2, 3}) {
        auto graphs = enumerate_stable_graphs(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<size_t> pick(0, graphs.size() - 1);
            const WeightedGraph& base = graphs[pick(master)];
            Marking m = random_marking(base, 4, master);
            int radius = (g == 2) ? 1 : 0;
            ConeDiagram chart = build_Tg_chart(g, {make_marked_object(m)}, radius);
            if (!is_cone_complex(chart)) {
                ok = false;
                detail = "genus " + std::to_string(g) + " trial " + std::to_string(trial);
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 120.0) { ok = false; detail = "took " + std::to_string(secs) + "s"; }
    report(5, "Teichmueller charts are cone complexes", ok, detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    auto t0 = clock_type::now();
    QuotientReport r1 = verify_quotient(2, 50, 20240915ULL);
    QuotientReport r2 = verify_quotient(2, 50, 20240915ULL);
    if (!r1.all_passed()) {
        ok = false;
        for (const CheckResult& c : r1.results)
            if (!c.passed) detail = c.name + ": " + c.detail;
    }
    if (io::report_to_json(r1).dump() != io::report_to_json(r2).dump()) {
        ok = false;
        detail = "report not deterministic";
    }
    double secs = seconds_since(t0);
    if (secs >= 120.0) { ok = false; detail = "took " + std::to_string(secs) + "s"; }
    report(6, "quotient theorem checks", ok, detail);
}

void criterion_7() {
    bool ok = true;
    std::string detail;
    for (int g : {2, 3}) {
        for (const WeightedGraph& x : enumerate_stable_graphs(g)) {
            Pi1Presentation p = presentation(x, x.vertices().front());
            if (p.rank() != g) {
                ok = false;
                detail = "rank " + std::to_string(p.rank()) + " at genus " + std::to_string(g);
            }
        }
    }
    std::mt19937_64 rng(20240915ULL);
    WeightedGraph g = canonical_graph(dumbbell_graph());
    Marking base = canonical_marking(presentation(g, g.vertices().front()));
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Marking m = act(base, random_aut(2, 1 + trial % 8, rng));
        Word w = random_word(2, trial % 6, rng);
        GroupMap inner = identity_map(2);
        for (int k = 0; k < 2; ++k)
            inner.images[k] = conjugate(generator(2, k + 1), w);
        if (!(top_class(m) == top_class(act(m, inner)))) {
            ok = false;
            detail = "inner action moved a top class";
        }
    }
    ContractionPoset poset = contraction_poset(2);
    int pairs = 0;
    for (const auto& [key_bc, homs_bc] : poset.morphisms)
        for (const auto& [key_ab, homs_ab] : poset.morphisms) {
            if (key_ab.first != key_bc.second) continue;
            for (const EdgeContraction& bc : homs_bc)
                for (const EdgeContraction& ab : homs_ab) {
                    if (!(bc.source == ab.target)) continue;
                    Marking m = random_marking(poset.objects[key_ab.second], 4, rng);
                    if (!outer_equivalent(pushforward(m, compose(bc, ab)),
                                          pushforward(pushforward(m, ab), bc))) {
                        ok = false;
                        detail = "pushforward coherence";
                    }
                    ++pairs;
                }
        }
    if (pairs == 0) { ok = false; detail = "no composable pairs exercised"; }
    WeightedGraph th = canonical_graph(theta_graph());
    Marking tbase = canonical_marking(presentation(th, th.vertices().front()));
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Marking a = act(tbase, random_aut(2, 1 + trial % 6, rng));
        Marking b = act(tbase, random_aut(2, 1 + trial % 6, rng));
        Marking c = act(tbase, random_aut(2, 1 + trial % 6, rng));
        bool refl = top_equivalent(a, a);
        bool sym = top_equivalent(a, b) == top_equivalent(b, a);
        bool trans = !(top_equivalent(a, b) && top_equivalent(b, c)) || top_equivalent(a, c);
        if (!refl || !sym || !trans) {
            ok = false;
            detail = "equivalence relation axiom at trial " + std::to_string(trial);
        }
    }
    report(7, "marking invariant suite", ok, detail);
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(20240915ULL);
    for (int rank : {2, 3}) {
        for (int trial = 0; trial < 100 && ok; ++trial) {
            GroupMap m = random_aut(rank, 1 + trial % 10, rng);
            GroupMap minv = invert_automorphism(m);
            if (compose_maps(m, minv) != identity_map(rank) ||
                compose_maps(minv, m) != identity_map(rank)) {
                ok = false;
                detail = "round trip failed at rank " + std::to_string(rank);
            }
        }
    }
    for (int trial = 0; trial < 100 && ok; ++trial) {
        int rank = 2 + trial % 2;
        std::vector<Word> t2;
        for (int k = 0; k < rank; ++k) t2.push_back(random_word(rank, 1 + trial % 6, rng));
        Word w = random_word(rank, trial % 7, rng); // |w| <= 6
        std::vector<Word> t1;
        for (const Word& u : t2) t1.push_back(conjugate(u, w));
        auto found = tuples_conjugate(t1, t2);
        if (!found.has_value()) {
            ok = false;
            detail = "conjugator not recovered at trial " + std::to_string(trial);
            break;
        }
        for (size_t k = 0; k < t1.size(); ++k)
            if (!(conjugate(t2[k], *found) == t1[k])) {
                ok = false;
                detail = "recovered conjugator is wrong";
            }
    }
    report(8, "free-group suite", ok, detail);
}

void criterion_9() {
    bool ok = true;
    std::string detail;
    {
        StableModel m;
        m.components = {{0, 1}, {1, 1}};
        m.nodes = {{0, 1, false, Rational(3)}};
        m.prime = 3;
        TropicalCurveExt t = dual_tropical_curve(m);
        if (!(t.lengths.at(0) == ExtValue::finite(1)) || genus(t.graph) != 2) {
            ok = false;
            detail = "two-component example";
        }
    }
    {
        StableModel m;
        m.components = {{0, 0}};
        m.nodes = {{0, 0, false, Rational(5)},
                   {0, 0, false, Rational(25)},
                   {0, 0, false, Rational(125)}};
        m.prime = 5;
        TropicalCurveExt t = dual_tropical_curve(m);
        std::multiset<ExtValue> lens(
            {t.lengths.at(0), t.lengths.at(1), t.lengths.at(2)});
        std::multiset<ExtValue> want(
            {ExtValue::finite(1), ExtValue::finite(2), ExtValue::finite(3)});
        if (lens != want) { ok = false; detail = "rose (1,2,3) example"; }
    }
    {
        StableModel m;
        m.components = {{0, 1}, {1, 1}};
        m.nodes = {{0, 1, true, Rational(0)}};
        if (!(dual_tropical_curve(m).lengths.at(0) == ExtValue::infinity())) {
            ok = false;
            detail = "ZERO parameter example";
        }
    }
    std::mt19937_64 rng(20240915ULL);
    const long long primes[] = {2, 3, 5, 7, 11};
    std::uniform_int_distribution<long long> num(1, 100000);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        long long p = primes[trial % 5];
        Rational a(num(rng), num(rng));
        Rational b(num(rng), num(rng));
        if (sign(rng)) a = -a;
        if (sign(rng)) b = -b;
        auto va = padic_valuation(a, p), vb = padic_valuation(b, p);
        auto vab = padic_valuation(a * b, p);
        if (!va || !vb || !vab || *vab != *va + *vb) {
            ok = false;
            detail = "homomorphism property at trial " + std::to_string(trial);
        }
    }
    report(9, "tropicalization examples and valuation", ok, detail);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_10(const std::string& cli) {
    bool ok = true;
    std::string detail;
    if (cli.empty() || !fs::exists(cli)) {
        report(10, "CLI determinism", false, "CLI binary path missing");
        return;
    }
    fs::path work = fs::temp_directory_path() / "tropteich-acceptance";
    fs::remove_all(work);
    fs::create_directories(work);
    fs::path model = work / "model.json";
    {
        std::ofstream m(model);
        m << "{\"components\":[{\"id\":0,\"genus\":1},{\"id\":1,\"genus\":1}],"
             "\"nodes\":[{\"a\":0,\"b\":1,\"parameter\":\"9\"}],"
             "\"valuation\":{\"kind\":\"p-adic\",\"prime\":3}}\n";
    }
    struct Run {
        std::string name;
        std::string args;
        bool cached; // subcommand takes --cache-dir
    };
    std::vector<Run> runs = {
        {"enumerate", "enumerate --genus 2", true},
        {"space", "space --which Mg --genus 2 --format dot", false},
        {"space-chart", "space --which Tg-chart --genus 2 --seed 7", false},
        {"verify", "verify --suite quotient --genus 2 --samples 5 --seed 7", true},
        {"tropicalize", "tropicalize --model " + model.string() + " --space 2", false},
        {"export", "export --which CV --genus 2 --format json", false},
    };
    for (const Run& r : runs) {
        std::vector<std::string> outputs;
        for (int attempt = 0; attempt < 2 && ok; ++attempt) {
            fs::path cache = work / (r.name + "-cache-" + std::to_string(attempt));
            fs::path out = work / (r.name + "-out-" + std::to_string(attempt));
            fs::create_directories(cache);
            std::string cmd = cli + " " + r.args + " --out " + out.string();
            if (r.cached) cmd += " --cache-dir " + cache.string();
            cmd += " > /dev/null 2>&1";
            int rc = std::system(cmd.c_str());
            if (rc != 0) {
                ok = false;
                detail = r.name + " exited with " + std::to_string(rc);
                break;
            }
            outputs.push_back(read_file(out));
        }
        if (ok && (outputs.size() != 2 || outputs[0] != outputs[1] || outputs[0].empty())) {
            ok = false;
            detail = r.name + " reruns differ";
        }
        if (!ok) break;
    }
    report(10, "CLI determinism", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
