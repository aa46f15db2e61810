#include <tropteich/moduli.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace tropteich {

namespace {

// coordinate permutation of an automorphism: edge id -> image edge id
std::map<EdgeId, EdgeId> aut_coordinate_map(const Isomorphism& a) {
    const std::vector<Edge> edges = a.source.edges();
    std::map<HalfEdge, EdgeId> edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
        edge_of_half[edges[e].a] = e;
        edge_of_half[edges[e].b] = e;
    }
    std::map<EdgeId, EdgeId> cm;
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e)
        cm[e] = edge_of_half.at(a.half_edge_map[edges[e].a]);
    return cm;
}

OrthantCone cone_of(const WeightedGraph& g) {
    OrthantCone c;
    for (EdgeId e = 0; e < static_cast<int>(g.edges().size()); ++e)
        c.labels.push_back(e);
    return c;
}

// A contraction of a canonical object onto the canonical form of its target.
std::pair<WeightedGraph, EdgeContraction> contract_canonical(
    const WeightedGraph& g, const std::set<EdgeId>& s) {
    auto [h, c] = contract(g, s);
    CanonicalForm cf = canonical_form(h);
    Isomorphism t{h, canonical_graph(h), cf.canonical_labeling};
    return {t.target, compose_iso(t, c)};
}

} // namespace

ConeDiagram build_Mg(const ContractionPoset& poset) {
    ConeDiagram d;
    d.marked = false;

    std::vector<std::vector<FaceMap>> aut_maps(poset.objects.size());
    for (size_t i = 0; i < poset.objects.size(); ++i) {
        ConeObject o;
        o.id = static_cast<int>(i);
        o.graph = poset.objects[i];
        o.cone = cone_of(o.graph);
        o.payload = poset.certificates[i];
        d.objects.push_back(o);

        for (const Isomorphism& a : automorphisms(o.graph)) {
            FaceMap f;
            f.source = o.cone;
            f.target = o.cone;
            f.coordinate_map = aut_coordinate_map(a);
            aut_maps[i].push_back(f);
        }
        d.homs[{o.id, o.id}] = aut_maps[i];
    }

    for (const auto& [key, contractions] : poset.morphisms) {
        auto [i, j] = key;
        if (i == j) continue;
        for (const EdgeContraction& c : contractions) {
            FaceMap base = face_map_from_contraction(c);
            // close under automorphisms on both sides
            for (const FaceMap& ai : aut_maps[i])
                for (const FaceMap& aj : aut_maps[j])
                    d.homs[{j, i}].push_back(compose(ai, compose(base, aj)));
        }
    }
    return coarse_space(d);
}

ConeDiagram build_Mg(int genus) { return build_Mg(contraction_poset(genus)); }

std::vector<int> cv_locus(const ConeDiagram& d) {
    std::vector<int> ids;
    for (const ConeObject& o : d.objects) {
        bool zero = true;
        for (const auto& [v, h] : o.graph.weight)
            if (h != 0) zero = false;
        if (zero) ids.push_back(o.id);
    }
    return ids;
}

std::vector<int> cv_locus(int genus) { return cv_locus(build_Mg(genus)); }

WeightedGraph forget_marking(const MarkedObject& obj) { return obj.graph; }

MarkedObject make_marked_object(const Marking& m) {
    Marking rep = m;
    CanonicalForm cf = canonical_form(rep.presentation.graph);
    WeightedGraph cg = canonical_graph(rep.presentation.graph);
    if (!(cg == rep.presentation.graph)) {
        Isomorphism t{rep.presentation.graph, cg, cf.canonical_labeling};
        rep = transport(rep, t);
    }
    rep = to_canonical(rep);
    return MarkedObject{rep.presentation.graph, rep, top_class(rep)};
}

namespace {

bool same_marked_object(const MarkedObject& a, const MarkedObject& b) {
    if (!(a.graph == b.graph)) return false;
    for (const Isomorphism& t : automorphisms(a.graph))
        if (outer_equivalent(transport(a.representative, t), b.representative))
            return true;
    return false;
}

} // namespace

ConeDiagram build_Tg_chart(int genus, const std::vector<MarkedObject>& seeds,
                           int radius) {
    std::vector<MarkedObject> objects;
    auto find_or_add = [&](const MarkedObject& mo) -> std::pair<int, bool> {
        for (size_t k = 0; k < objects.size(); ++k)
            if (same_marked_object(objects[k], mo))
                return {static_cast<int>(k), true};
        objects.push_back(mo);
        return {static_cast<int>(objects.size()) - 1, false};
    };

    std::deque<int> face_work;
    std::vector<int> frontier; // coface search starts from the seeds
    for (const MarkedObject& s : seeds) {
        auto [id, existed] = find_or_add(s);
        if (!existed) {
            face_work.push_back(id);
            frontier.push_back(id);
        }
    }

    auto close_faces = [&]() {
        while (!face_work.empty()) {
            int id = face_work.front();
            face_work.pop_front();
            MarkedObject obj = objects[id];
            const int m = static_cast<int>(obj.graph.edges().size());
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::set<EdgeId> s;
                for (int e = 0; e < m; ++e)
                    if (mask & (1u << e)) s.insert(e);
                auto [h, c] = contract_canonical(obj.graph, s);
                MarkedObject face =
                    make_marked_object(pushforward(obj.representative, c));
                auto [fid, existed] = find_or_add(face);
                if (!existed) face_work.push_back(fid);
            }
        }
    };
    close_faces();

    for (int level = 0; level < radius; ++level) {
        std::vector<int> next;
        for (int id : frontier) {
            MarkedObject obj = objects[id];
            for (const auto& [h, c] : uncontractions(obj.graph)) {
                CanonicalForm cf = canonical_form(h);
                Isomorphism t{h, canonical_graph(h), cf.canonical_labeling};
                EdgeContraction c2 = precompose_iso(c, invert(t));
                MarkedObject up =
                    make_marked_object(pullback(obj.representative, c2));
                auto [uid, existed] = find_or_add(up);
                if (!existed) {
                    next.push_back(uid);
                    face_work.push_back(uid);
                }
            }
        }
        close_faces();
        frontier = next;
    }

    ConeDiagram d;
    d.marked = true;
    for (size_t i = 0; i < objects.size(); ++i) {
        ConeObject o;
        o.id = static_cast<int>(i);
        o.graph = objects[i].graph;
        o.cone = cone_of(o.graph);
        std::ostringstream payload;
        payload << canonical_form(o.graph).certificate << "|m" << i;
        o.payload = payload.str();
        d.objects.push_back(o);
    }

    // hom-sets: marked contractions, deduplicated as maps
    for (size_t i = 0; i < objects.size(); ++i) {
        const MarkedObject& src = objects[i];
        const int m = static_cast<int>(src.graph.edges().size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::set<EdgeId> s;
            for (int e = 0; e < m; ++e)
                if (mask & (1u << e)) s.insert(e);
            auto [h, c] = contract_canonical(src.graph, s);
            std::string cert = canonical_form(h).certificate;
            for (size_t j = 0; j < objects.size(); ++j) {
                if (!(objects[j].graph == h)) continue;
                for (const Isomorphism& b : automorphisms(h)) {
                    EdgeContraction cb = compose_iso(b, c);
                    if (!outer_equivalent(pushforward(src.representative, cb),
                                        objects[j].representative))
                        continue;
                    FaceMap f = face_map_from_contraction(cb);
                    auto& hom = d.homs[{static_cast<int>(j), static_cast<int>(i)}];
                    bool dup = false;
                    for (const FaceMap& g : hom)
                        if (g.coordinate_map == f.coordinate_map) dup = true;
                    if (!dup) hom.push_back(f);
                }
            }
        }
    }
    return d;
}

Marking random_marking(const WeightedGraph& g, int max_len,
                       std::mt19937_64& rng) {
    Pi1Presentation p = presentation(g, g.vertices().front());
    Marking m = canonical_marking(p);
    std::vector<GroupMap> gens = nielsen_generators(p.rank());
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) m = act(m, gens[pick(rng)]);
    return m;
}

bool QuotientReport::all_passed() const {
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return true;
}

QuotientReport verify_quotient(int genus, int sample_count,
                               unsigned long long seed) {
    if (genus != 2 && genus != 3) throw UnsupportedGenus(std::to_string(genus));
    ContractionPoset poset = contraction_poset(genus);
    std::mt19937_64 rng(seed);

    QuotientReport report;
    report.genus = genus;
    report.seed = seed;
    report.sample_count = sample_count;

    CheckResult torsor{"torsor-transitivity", true, 0, ""};
    CheckResult fullness{"pushforward-fullness", true, 0, ""};

    for (size_t i = 0; i < poset.objects.size(); ++i) {
        const WeightedGraph& g = poset.objects[i];
        std::vector<Marking> samples;
        for (int s = 0; s < sample_count; ++s)
            samples.push_back(random_marking(g, 8, rng));

        // (a) any two sampled markings differ by an automorphism of F_g
        for (int s = 0; s + 1 < sample_count; s += 2) {
            ++torsor.checks;
            GroupMap alpha = marking_difference(samples[s], samples[s + 1]);
            if (!is_automorphism(alpha) ||
                !(act(samples[s], alpha).images == samples[s + 1].images)) {
                torsor.passed = false;
                if (torsor.detail.empty())
                    torsor.detail = "object " + poset.certificates[i] +
                                    ", sample pair " + std::to_string(s);
            }
        }

        // (b) pushforward along every poset contraction hits the target class
        for (size_t j = 0; j < poset.objects.size(); ++j) {
            auto it = poset.morphisms.find(
                {static_cast<int>(i), static_cast<int>(j)});
            if (it == poset.morphisms.end() || i == j) continue;
            Marking target_canonical = canonical_marking(
                presentation(poset.objects[j], poset.objects[j].vertices().front()));
            for (const EdgeContraction& c : it->second) {
                for (const Marking& m : samples) {
                    ++fullness.checks;
                    bool ok = true;
                    try {
                        Marking push = pushforward(m, c);
                        if (!is_automorphism(push.images)) ok = false;
                        GroupMap beta =
                            marking_difference(to_canonical(target_canonical),
                                               to_canonical(push));
                        if (!is_automorphism(beta)) ok = false;
                    } catch (const DomainError&) {
                        ok = false;
                    }
                    if (!ok) {
                        fullness.passed = false;
                        if (fullness.detail.empty())
                            fullness.detail = "contraction " +
                                              poset.certificates[i] + " -> " +
                                              poset.certificates[j];
                    }
                }
            }
        }
    }

    report.results.push_back(torsor);
    report.results.push_back(fullness);
    return report;
}

} // namespace tropteich
