#include <tropteich/marking.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace tropteich {

GroupoidWord invert_word(const GroupoidWord& w) {
    GroupoidWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Token t = *it;
        if (t.kind == Token::Kind::Edge)
            t.dir = -t.dir;
        else
            t.power = -t.power;
        out.push_back(t);
    }
    return out;
}

int Pi1Presentation::loop_count() const {
    int c = 0;
    for (const BasisElement& b : basis)
        if (b.kind == BasisElement::Kind::Loop) ++c;
    return c;
}

int Pi1Presentation::basis_position(const BasisElement& b) const {
    for (size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == b) return static_cast<int>(k);
    throw DomainError("basis element not in presentation");
}

namespace {

void append(GroupoidWord& w, const GroupoidWord& tail) {
    w.insert(w.end(), tail.begin(), tail.end());
}

std::map<Vertex, GroupoidWord> tree_paths(const WeightedGraph& g, Vertex base,
                                          const std::set<EdgeId>& tree) {
    const std::vector<Edge> edges = g.edges();
    std::map<Vertex, GroupoidWord> paths;
    paths[base] = {};
    std::deque<Vertex> queue{base};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (EdgeId e : tree) {
            Vertex u = g.endpoint_a(edges[e]);
            Vertex w = g.endpoint_b(edges[e]);
            if (u == w) continue;
            if (u == v && !paths.count(w)) {
                paths[w] = paths[v];
                paths[w].push_back(Token::edge_token(e, 1));
                queue.push_back(w);
            } else if (w == v && !paths.count(u)) {
                paths[u] = paths[v];
                paths[u].push_back(Token::edge_token(e, -1));
                queue.push_back(u);
            }
        }
    }
    return paths;
}

void fill_basis(Pi1Presentation& p) {
    const int m = static_cast<int>(p.graph.edges().size());
    for (EdgeId e = 0; e < m; ++e)
        if (!p.tree.count(e))
            p.basis.push_back(BasisElement{BasisElement::Kind::Loop, e, -1, 0});
    for (Vertex v : p.graph.vertices())
        for (int j = 1; j <= p.graph.weight.at(v); ++j)
            p.basis.push_back(BasisElement{BasisElement::Kind::VertexGen, -1, v, j});
}

} // namespace

Pi1Presentation presentation(const WeightedGraph& g, Vertex base) {
    if (base < 0 || base >= g.half_edge_count || !g.is_vertex(base))
        throw UnknownVertex(std::to_string(base));
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());

    Pi1Presentation p;
    p.graph = g;
    p.base = base;

    std::set<Vertex> visited{base};
    std::deque<Vertex> queue{base};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (EdgeId e = 0; e < m; ++e) {
            Vertex u = g.endpoint_a(edges[e]);
            Vertex w = g.endpoint_b(edges[e]);
            if (u == w) continue;
            if (u == v && !visited.count(w)) {
                p.tree.insert(e);
                visited.insert(w);
                queue.push_back(w);
            } else if (w == v && !visited.count(u)) {
                p.tree.insert(e);
                visited.insert(u);
                queue.push_back(u);
            }
        }
    }
    p.path_table = tree_paths(g, base, p.tree);
    fill_basis(p);
    return p;
}

Pi1Presentation presentation_with_tree(const WeightedGraph& g, Vertex base,
                                       const std::set<EdgeId>& tree) {
    Pi1Presentation p;
    p.graph = g;
    p.base = base;
    p.tree = tree;
    p.path_table = tree_paths(g, base, tree);
    if (p.path_table.size() != g.vertices().size())
        throw DomainError("edge set is not a spanning tree");
    fill_basis(p);
    return p;
}

GroupoidWord basis_word(const Pi1Presentation& p, int k) {
    const BasisElement& b = p.basis.at(k);
    const std::vector<Edge> edges = p.graph.edges();
    GroupoidWord w;
    if (b.kind == BasisElement::Kind::Loop) {
        Vertex u = p.graph.endpoint_a(edges[b.edge]);
        Vertex v = p.graph.endpoint_b(edges[b.edge]);
        append(w, p.path_table.at(u));
        w.push_back(Token::edge_token(b.edge, 1));
        append(w, invert_word(p.path_table.at(v)));
    } else {
        append(w, p.path_table.at(b.vertex));
        w.push_back(Token::vgen_token(b.vertex, b.index, 1));
        append(w, invert_word(p.path_table.at(b.vertex)));
    }
    return w;
}

Word eval_word(const Pi1Presentation& p, const GroupoidWord& w) {
    const std::vector<Edge> edges = p.graph.edges();
    std::map<EdgeId, int> loop_pos;
    std::map<std::pair<Vertex, int>, int> vgen_pos;
    for (size_t k = 0; k < p.basis.size(); ++k) {
        const BasisElement& b = p.basis[k];
        if (b.kind == BasisElement::Kind::Loop)
            loop_pos[b.edge] = static_cast<int>(k);
        else
            vgen_pos[{b.vertex, b.index}] = static_cast<int>(k);
    }

    std::vector<int> letters;
    Vertex cur = p.base;
    for (const Token& t : w) {
        if (t.kind == Token::Kind::Edge) {
            Vertex u = p.graph.endpoint_a(edges[t.edge]);
            Vertex v = p.graph.endpoint_b(edges[t.edge]);
            Vertex from = (t.dir > 0) ? u : v;
            Vertex to = (t.dir > 0) ? v : u;
            if (cur != from) throw BadPath("edge does not start at the current vertex");
            cur = to;
            if (!p.tree.count(t.edge))
                letters.push_back(t.dir * (loop_pos.at(t.edge) + 1));
        } else {
            if (cur != t.vertex)
                throw BadPath("vertex generator away from the current vertex");
            letters.push_back(t.power * (vgen_pos.at({t.vertex, t.gen_index}) + 1));
        }
    }
    if (cur != p.base) throw BadPath("word is not a loop at the base");
    return reduce(p.rank(), letters);
}

Marking canonical_marking(const Pi1Presentation& p) {
    return Marking{p, identity_map(p.rank())};
}

Marking act(const Marking& m, const GroupMap& a) {
    if (a.domain_rank != m.images.codomain_rank || !is_automorphism(a))
        throw NotAnAutomorphism();
    return Marking{m.presentation, compose_maps(a, m.images)};
}

namespace {

// Transfer a marking to another presentation of the same graph, connecting
// the bases through the source presentation's tree.
Marking transfer(const Marking& m, const Pi1Presentation& p2) {
    const GroupoidWord& gamma = m.presentation.path_table.at(p2.base);
    GroupMap images;
    images.domain_rank = p2.rank();
    images.codomain_rank = m.images.codomain_rank;
    for (int k = 0; k < p2.rank(); ++k) {
        GroupoidWord w = gamma;
        append(w, basis_word(p2, k));
        append(w, invert_word(gamma));
        images.images.push_back(apply_map(m.images, eval_word(m.presentation, w)));
    }
    return Marking{p2, images};
}

} // namespace

Marking to_canonical(const Marking& m) {
    Vertex v0 = m.presentation.graph.vertices().front();
    return transfer(m, presentation(m.presentation.graph, v0));
}

std::vector<Word> conjugacy_normal_form(const std::vector<Word>& tuple) {
    int rank = 0;
    long start_total = 0;
    for (const Word& w : tuple) {
        rank = std::max(rank, w.rank);
        start_total += w.length();
    }
    if (start_total == 0) return tuple;

    auto key = [](const std::vector<Word>& t) {
        std::vector<int> k;
        for (const Word& w : t) {
            k.push_back(w.length());
            k.insert(k.end(), w.letters.begin(), w.letters.end());
        }
        return k;
    };
    auto total = [](const std::vector<Word>& t) {
        long s = 0;
        for (const Word& w : t) s += w.length();
        return s;
    };

    // breadth-first closure under non-increasing single-letter conjugations
    std::set<std::vector<int>> visited{key(tuple)};
    std::deque<std::vector<Word>> queue{tuple};
    long best_total = start_total;
    std::vector<Word> best = tuple;
    std::vector<int> best_key = key(tuple);
    const size_t state_cap = 50000;
    while (!queue.empty() && visited.size() < state_cap) {
        std::vector<Word> t = queue.front();
        queue.pop_front();
        long t_total = total(t);
        for (int a = -rank; a <= rank; ++a) {
            if (a == 0) continue;
            Word u{rank, {a}};
            std::vector<Word> t2;
            for (const Word& w : t) t2.push_back(conjugate(w, u));
            long t2_total = total(t2);
            if (t2_total > t_total) continue;
            std::vector<int> k2 = key(t2);
            if (!visited.insert(k2).second) continue;
            if (t2_total < best_total ||
                (t2_total == best_total && k2 < best_key)) {
                best_total = t2_total;
                best = t2;
                best_key = k2;
            }
            queue.push_back(t2);
        }
    }
    return best;
}

namespace {

// Unnormalized tuple of q(phi^-1(x_k)) on the canonical presentation.
std::vector<Word> top_class_raw(const Marking& m) {
    Marking mc = to_canonical(m);
    GroupMap psi = invert_automorphism(mc.images);
    const int b1 = mc.presentation.loop_count();
    std::vector<Word> words;
    for (const Word& w : psi.images) {
        std::vector<int> letters;
        for (int a : w.letters) {
            int pos = std::abs(a) - 1;
            if (pos < b1) letters.push_back(a > 0 ? pos + 1 : -(pos + 1));
        }
        words.push_back(reduce(b1, letters));
    }
    return words;
}

} // namespace

TopClass top_class(const Marking& m) {
    Marking mc = to_canonical(m);
    TopClass tc;
    tc.rank_b = mc.presentation.loop_count();
    tc.words = conjugacy_normal_form(top_class_raw(m));
    return tc;
}

bool top_equivalent(const Marking& m1, const Marking& m2, bool strict) {
    if (!(m1.presentation.graph == m2.presentation.graph))
        throw PresentationMismatch();
    std::vector<Word> t1 = top_class_raw(m1);
    std::vector<Word> t2 = top_class_raw(m2);
    if (strict) return t1 == t2;
    return tuples_conjugate(t1, t2).has_value();
}

namespace {

// Component structure of a contraction: per target vertex the collapsed
// subgraph, a spanning forest, and the canonical generator list of its
// fundamental group.
struct ComponentData {
    Vertex target_vertex;
    std::vector<Vertex> members; // sorted source vertices
    Vertex comp_base;
    std::vector<EdgeId> loop_edges; // contracted non-forest edges, by id
    std::vector<BasisElement> gens; // inherited (v, j), then loop edges
};

struct ContractionComponents {
    std::set<EdgeId> forest; // global over all components
    std::map<Vertex, ComponentData> comps; // keyed by target vertex
    std::map<Vertex, Vertex> target_of;    // source vertex -> target vertex
};

ContractionComponents build_components(const EdgeContraction& c) {
    ContractionComponents cc;
    cc.target_of = c.vertex_map;
    const std::vector<Edge> edges = c.source.edges();

    for (Vertex tv : c.target.vertices()) {
        ComponentData cd;
        cd.target_vertex = tv;
        for (const auto& [sv, w] : c.vertex_map)
            if (w == tv) cd.members.push_back(sv);
        std::sort(cd.members.begin(), cd.members.end());
        cd.comp_base = cd.members.front();

        // forest: breadth-first over contracted edges in id order
        std::set<Vertex> visited{cd.comp_base};
        std::deque<Vertex> queue{cd.comp_base};
        std::set<EdgeId> forest_here;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (EdgeId e : c.contracted) {
                Vertex u = c.source.endpoint_a(edges[e]);
                Vertex w = c.source.endpoint_b(edges[e]);
                if (u == w) continue;
                if (c.vertex_map.at(u) != tv) continue;
                if (u == v && !visited.count(w)) {
                    forest_here.insert(e);
                    visited.insert(w);
                    queue.push_back(w);
                } else if (w == v && !visited.count(u)) {
                    forest_here.insert(e);
                    visited.insert(u);
                    queue.push_back(u);
                }
            }
        }
        for (EdgeId e : c.contracted) {
            Vertex u = c.source.endpoint_a(edges[e]);
            if (c.vertex_map.at(u) != tv) continue;
            if (!forest_here.count(e)) cd.loop_edges.push_back(e);
        }
        cc.forest.insert(forest_here.begin(), forest_here.end());

        for (Vertex v : cd.members)
            for (int j = 1; j <= c.source.weight.at(v); ++j)
                cd.gens.push_back(BasisElement{BasisElement::Kind::VertexGen, -1, v, j});
        for (EdgeId e : cd.loop_edges)
            cd.gens.push_back(BasisElement{BasisElement::Kind::Loop, e, -1, 0});

        cc.comps[tv] = cd;
    }
    return cc;
}

// Path between two source vertices of one component through the forest.
GroupoidWord forest_path(const WeightedGraph& g, const std::set<EdgeId>& forest,
                         Vertex from, Vertex to) {
    if (from == to) return {};
    const std::vector<Edge> edges = g.edges();
    std::map<Vertex, GroupoidWord> paths;
    paths[from] = {};
    std::deque<Vertex> queue{from};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (v == to) return paths[v];
        for (EdgeId e : forest) {
            Vertex u = g.endpoint_a(edges[e]);
            Vertex w = g.endpoint_b(edges[e]);
            if (u == w) continue;
            if (u == v && !paths.count(w)) {
                paths[w] = paths[v];
                paths[w].push_back(Token::edge_token(e, 1));
                queue.push_back(w);
            } else if (w == v && !paths.count(u)) {
                paths[u] = paths[v];
                paths[u].push_back(Token::edge_token(e, -1));
                queue.push_back(u);
            }
        }
    }
    throw BadPath("vertices not connected in the contraction forest");
}

// half-edge correspondences of a contraction in both directions
struct EdgeCorrespondence {
    std::map<EdgeId, std::pair<EdgeId, int>> src_to_tgt; // uncontracted source edge
    std::map<EdgeId, std::pair<EdgeId, int>> tgt_to_src; // orientation sign
};

EdgeCorrespondence edge_correspondence_full(const EdgeContraction& c) {
    EdgeCorrespondence ec;
    const std::vector<Edge> src_edges = c.source.edges();
    const std::vector<Edge> tgt_edges = c.target.edges();
    std::map<HalfEdge, EdgeId> src_edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(src_edges.size()); ++e) {
        src_edge_of_half[src_edges[e].a] = e;
        src_edge_of_half[src_edges[e].b] = e;
    }
    for (EdgeId te = 0; te < static_cast<int>(tgt_edges.size()); ++te) {
        HalfEdge sa = c.half_edge_map.at(tgt_edges[te].a);
        EdgeId se = src_edge_of_half.at(sa);
        int sign = (src_edges[se].a == sa) ? 1 : -1;
        ec.src_to_tgt[se] = {te, sign};
        ec.tgt_to_src[te] = {se, sign};
    }
    return ec;
}

} // namespace

bool outer_equivalent(const Marking& m1, const Marking& m2) {
    if (!(m1.presentation.graph == m2.presentation.graph))
        throw PresentationMismatch();
    Marking a = to_canonical(m1);
    Marking b = to_canonical(m2);
    GroupMap alpha = marking_difference(a, b);
    std::vector<Word> basis;
    for (int k = 1; k <= alpha.domain_rank; ++k)
        basis.push_back(generator(alpha.domain_rank, k));
    return tuples_conjugate(alpha.images, basis).has_value();
}

Marking pushforward(const Marking& m, const EdgeContraction& c) {
    if (!(m.presentation.graph == c.source)) throw SourceMismatch();
    const WeightedGraph& g = c.source;
    const std::vector<Edge> edges = g.edges();
    ContractionComponents cc = build_components(c);

    // spanning tree of the source containing the contraction forest
    std::set<EdgeId> tree = cc.forest;
    {
        const std::vector<Vertex> verts = g.vertices();
        std::map<Vertex, int> vidx;
        for (size_t i = 0; i < verts.size(); ++i) vidx[verts[i]] = static_cast<int>(i);
        std::vector<int> parent(verts.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (EdgeId e : tree)
            parent[find(vidx.at(g.endpoint_a(edges[e])))] =
                find(vidx.at(g.endpoint_b(edges[e])));
        for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
            int u = find(vidx.at(g.endpoint_a(edges[e])));
            int v = find(vidx.at(g.endpoint_b(edges[e])));
            if (u != v) {
                parent[u] = v;
                tree.insert(e);
            }
        }
    }
    Pi1Presentation pstar = presentation_with_tree(g, m.presentation.base, tree);
    Marking mstar = transfer(m, pstar);

    Vertex tgt_base = c.vertex_map.at(m.presentation.base);
    Pi1Presentation ptgt = presentation(c.target, tgt_base);
    EdgeCorrespondence ec = edge_correspondence_full(c);
    const std::vector<Edge> src_edges = edges;
    const std::vector<Edge> tgt_edges = c.target.edges();

    auto lift_generator_loop = [&](const ComponentData& cd, int j) {
        // defining loop of generator j (1-based) at the component base
        const BasisElement& gen = cd.gens.at(j - 1);
        GroupoidWord w;
        if (gen.kind == BasisElement::Kind::VertexGen) {
            append(w, forest_path(g, cc.forest, cd.comp_base, gen.vertex));
            w.push_back(Token::vgen_token(gen.vertex, gen.index, 1));
            append(w, forest_path(g, cc.forest, gen.vertex, cd.comp_base));
        } else {
            Vertex u = g.endpoint_a(src_edges[gen.edge]);
            Vertex v = g.endpoint_b(src_edges[gen.edge]);
            append(w, forest_path(g, cc.forest, cd.comp_base, u));
            w.push_back(Token::edge_token(gen.edge, 1));
            append(w, forest_path(g, cc.forest, v, cd.comp_base));
        }
        return w;
    };

    GroupMap images;
    images.domain_rank = ptgt.rank();
    images.codomain_rank = m.images.codomain_rank;
    for (int k = 0; k < ptgt.rank(); ++k) {
        GroupoidWord lifted;
        Vertex cur = m.presentation.base;
        for (const Token& t : basis_word(ptgt, k)) {
            if (t.kind == Token::Kind::Edge) {
                auto [se, sign] = ec.tgt_to_src.at(t.edge);
                int sdir = t.dir * sign;
                Vertex u = (sdir > 0) ? g.endpoint_a(src_edges[se])
                                      : g.endpoint_b(src_edges[se]);
                Vertex w = (sdir > 0) ? g.endpoint_b(src_edges[se])
                                      : g.endpoint_a(src_edges[se]);
                append(lifted, forest_path(g, cc.forest, cur, u));
                lifted.push_back(Token::edge_token(se, sdir));
                cur = w;
            } else {
                const ComponentData& cd = cc.comps.at(t.vertex);
                append(lifted, forest_path(g, cc.forest, cur, cd.comp_base));
                GroupoidWord gen_loop = lift_generator_loop(cd, t.gen_index);
                if (t.power < 0) gen_loop = invert_word(gen_loop);
                append(lifted, gen_loop);
                cur = cd.comp_base;
            }
        }
        append(lifted, forest_path(g, cc.forest, cur, m.presentation.base));
        images.images.push_back(apply_map(mstar.images, eval_word(pstar, lifted)));
    }
    return Marking{ptgt, images};
}

Marking pullback(const Marking& m, const EdgeContraction& c) {
    if (!(m.presentation.graph == c.target)) throw SourceMismatch();
    const WeightedGraph& g = c.source;
    ContractionComponents cc = build_components(c);
    EdgeCorrespondence ec = edge_correspondence_full(c);
    const std::vector<Edge> src_edges = g.edges();

    Vertex tgt_base = m.presentation.base;
    Marking mt = transfer(m, presentation(c.target, tgt_base));
    Vertex src_base = cc.comps.at(tgt_base).comp_base;
    Pi1Presentation psrc = presentation(g, src_base);

    // generator position lookup within each component
    std::map<Vertex, std::map<std::pair<Vertex, int>, int>> vgen_idx;
    std::map<Vertex, std::map<EdgeId, int>> loop_idx;
    for (const auto& [tv, cd] : cc.comps)
        for (size_t j = 0; j < cd.gens.size(); ++j) {
            const BasisElement& b = cd.gens[j];
            if (b.kind == BasisElement::Kind::VertexGen)
                vgen_idx[tv][{b.vertex, b.index}] = static_cast<int>(j) + 1;
            else
                loop_idx[tv][b.edge] = static_cast<int>(j) + 1;
        }

    GroupMap images;
    images.domain_rank = psrc.rank();
    images.codomain_rank = mt.images.codomain_rank;
    for (int k = 0; k < psrc.rank(); ++k) {
        GroupoidWord projected;
        for (const Token& t : basis_word(psrc, k)) {
            if (t.kind == Token::Kind::Edge) {
                if (cc.forest.count(t.edge)) continue;
                auto it = ec.src_to_tgt.find(t.edge);
                if (it != ec.src_to_tgt.end()) {
                    projected.push_back(
                        Token::edge_token(it->second.first, t.dir * it->second.second));
                } else {
                    // contracted non-forest edge: a vertex-group generator
                    Vertex tv = cc.target_of.at(g.endpoint_a(src_edges[t.edge]));
                    projected.push_back(
                        Token::vgen_token(tv, loop_idx.at(tv).at(t.edge), t.dir));
                }
            } else {
                Vertex tv = cc.target_of.at(t.vertex);
                projected.push_back(Token::vgen_token(
                    tv, vgen_idx.at(tv).at({t.vertex, t.gen_index}), t.power));
            }
        }
        images.images.push_back(
            apply_map(mt.images, eval_word(mt.presentation, projected)));
    }
    return Marking{psrc, images};
}

Marking change_basepoint(const Marking& m,
                         const std::vector<std::pair<EdgeId, int>>& path) {
    const WeightedGraph& g = m.presentation.graph;
    const std::vector<Edge> edges = g.edges();
    GroupoidWord gamma;
    Vertex cur = m.presentation.base;
    for (auto [e, dir] : path) {
        if (e < 0 || e >= static_cast<int>(edges.size()))
            throw BadPath("unknown edge " + std::to_string(e));
        Vertex u = (dir > 0) ? g.endpoint_a(edges[e]) : g.endpoint_b(edges[e]);
        Vertex w = (dir > 0) ? g.endpoint_b(edges[e]) : g.endpoint_a(edges[e]);
        if (cur != u) throw BadPath("path is not connected");
        gamma.push_back(Token::edge_token(e, dir > 0 ? 1 : -1));
        cur = w;
    }

    Pi1Presentation p2 = presentation(g, cur);
    GroupMap images;
    images.domain_rank = p2.rank();
    images.codomain_rank = m.images.codomain_rank;
    for (int k = 0; k < p2.rank(); ++k) {
        GroupoidWord w = gamma;
        append(w, basis_word(p2, k));
        append(w, invert_word(gamma));
        images.images.push_back(apply_map(m.images, eval_word(m.presentation, w)));
    }
    return Marking{p2, images};
}

Marking transport(const Marking& m, const Isomorphism& iso) {
    if (!(iso.source == m.presentation.graph)) throw SourceMismatch();
    const WeightedGraph& h = iso.target;
    Isomorphism inv = invert(iso);
    const std::vector<Edge> h_edges = h.edges();
    const std::vector<Edge> g_edges = iso.source.edges();
    std::map<HalfEdge, EdgeId> g_edge_of_half;
    for (EdgeId e = 0; e < static_cast<int>(g_edges.size()); ++e) {
        g_edge_of_half[g_edges[e].a] = e;
        g_edge_of_half[g_edges[e].b] = e;
    }

    Vertex base2 = iso.map_vertex(m.presentation.base);
    Pi1Presentation p2 = presentation(h, base2);
    GroupMap images;
    images.domain_rank = p2.rank();
    images.codomain_rank = m.images.codomain_rank;
    for (int k = 0; k < p2.rank(); ++k) {
        GroupoidWord relabeled;
        for (const Token& t : basis_word(p2, k)) {
            if (t.kind == Token::Kind::Edge) {
                HalfEdge ga = inv.half_edge_map[h_edges[t.edge].a];
                EdgeId ge = g_edge_of_half.at(ga);
                int sign = (g_edges[ge].a == ga) ? 1 : -1;
                relabeled.push_back(Token::edge_token(ge, t.dir * sign));
            } else {
                relabeled.push_back(Token::vgen_token(inv.map_vertex(t.vertex),
                                                      t.gen_index, t.power));
            }
        }
        images.images.push_back(
            apply_map(m.images, eval_word(m.presentation, relabeled)));
    }
    return Marking{p2, images};
}

GroupMap marking_difference(const Marking& m1, const Marking& m2) {
    if (!(m1.presentation == m2.presentation)) throw PresentationMismatch();
    return compose_maps(m2.images, invert_automorphism(m1.images));
}

} // namespace tropteich
