#include <tropteich/canonical.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace tropteich {

namespace {

// Compressed view of a graph: vertices 0..n-1, multiplicity matrix, loops.
struct Compressed {
    std::vector<Vertex> verts;        // compressed index -> vertex half-edge id
    std::map<Vertex, int> index;      // vertex -> compressed index
    std::vector<std::vector<int>> mult; // off-diagonal multiplicities
    std::vector<int> loops;
    std::vector<int> weights;
    std::vector<int> leg_count;
    std::vector<Edge> edges;
    std::vector<int> edge_u, edge_v;  // compressed endpoints, u <= v
};

Compressed compress(const WeightedGraph& g) {
    Compressed c;
    c.verts = g.vertices();
    const int n = static_cast<int>(c.verts.size());
    for (int i = 0; i < n; ++i) c.index[c.verts[i]] = i;
    c.mult.assign(n, std::vector<int>(n, 0));
    c.loops.assign(n, 0);
    c.weights.resize(n);
    c.leg_count.assign(n, 0);
    for (int i = 0; i < n; ++i) c.weights[i] = g.weight.at(c.verts[i]);
    c.edges = g.edges();
    for (const Edge& e : c.edges) {
        int u = c.index.at(g.endpoint_a(e));
        int v = c.index.at(g.endpoint_b(e));
        if (u > v) std::swap(u, v);
        c.edge_u.push_back(u);
        c.edge_v.push_back(v);
        if (u == v)
            ++c.loops[u];
        else {
            ++c.mult[u][v];
            ++c.mult[v][u];
        }
    }
    for (HalfEdge l : g.legs) ++c.leg_count[c.index.at(g.root[l])];
    return c;
}

// Encoding of a vertex ordering: per position (weight, loops, leg count,
// multiplicities to earlier positions), then the leg root sequence.
// Lexicographic minimum over all orderings is the canonical encoding.
struct CanonSearch {
    const Compressed& c;
    int n;
    std::vector<int> order;     // position -> compressed vertex
    std::vector<int> pos;       // compressed vertex -> position (-1 unset)
    std::vector<int> enc;       // growing encoding
    std::vector<int> best_enc;
    std::vector<int> best_order;
    bool have_best = false;

    explicit CanonSearch(const Compressed& cc)
        : c(cc), n(static_cast<int>(cc.verts.size())), pos(n, -1) {}

    void run() { dfs(0); }

    void dfs(int depth) {
        if (depth == n) {
            if (!have_best || enc < best_enc) {
                best_enc = enc;
                best_order = order;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            size_t mark = enc.size();
            enc.push_back(c.weights[v]);
            enc.push_back(c.loops[v]);
            enc.push_back(c.leg_count[v]);
            for (int j = 0; j < depth; ++j) enc.push_back(c.mult[v][order[j]]);
            // prune: a partial encoding already above the best cannot improve
            if (have_best &&
                std::lexicographical_compare(best_enc.begin(),
                                             best_enc.begin() + enc.size(),
                                             enc.begin(), enc.end())) {
                enc.resize(mark);
                continue;
            }
            order.push_back(v);
            pos[v] = depth;
            dfs(depth + 1);
            pos[v] = -1;
            order.pop_back();
            enc.resize(mark);
        }
    }
};

std::string stringify(const std::vector<int>& enc, int n, int legs) {
    std::ostringstream os;
    os << "v" << n << "l" << legs << ":";
    for (size_t k = 0; k < enc.size(); ++k) {
        if (k) os << ",";
        os << enc[k];
    }
    return os.str();
}

} // namespace

CanonicalForm canonical_form(const WeightedGraph& g) {
    Compressed c = compress(g);
    const int n = static_cast<int>(c.verts.size());

    CanonSearch search(c);
    search.run();
    std::vector<int> enc = search.best_enc;
    const std::vector<int>& order = search.best_order;

    std::vector<int> vpos(n);
    for (int i = 0; i < n; ++i) vpos[order[i]] = i;

    // Leg sequence appended after the row encoding. Leg order is part of the
    // isomorphism class, so the root positions in leg order are canonical.
    for (HalfEdge l : g.legs) enc.push_back(vpos[c.index.at(g.root[l])]);

    // Canonical edge order: by (position pair), ties by original edge id.
    const int m = static_cast<int>(c.edges.size());
    std::vector<int> eorder(m);
    std::iota(eorder.begin(), eorder.end(), 0);
    auto ekey = [&](int e) {
        int pu = vpos[c.edge_u[e]], pv = vpos[c.edge_v[e]];
        if (pu > pv) std::swap(pu, pv);
        return std::pair<int, int>{pu, pv};
    };
    std::stable_sort(eorder.begin(), eorder.end(),
                     [&](int a, int b) { return ekey(a) < ekey(b); });

    std::vector<HalfEdge> lab(g.half_edge_count, -1);
    for (int i = 0; i < n; ++i) lab[c.verts[order[i]]] = i;
    for (int k = 0; k < m; ++k) {
        const Edge& e = c.edges[eorder[k]];
        int pu = vpos[c.index.at(g.root[e.a])];
        int pv = vpos[c.index.at(g.root[e.b])];
        // lower-position endpoint gets the even half-edge; loops by half-edge id
        if (pu <= pv) {
            lab[e.a] = n + 2 * k;
            lab[e.b] = n + 2 * k + 1;
        } else {
            lab[e.b] = n + 2 * k;
            lab[e.a] = n + 2 * k + 1;
        }
    }
    for (size_t k = 0; k < g.legs.size(); ++k)
        lab[g.legs[k]] = n + 2 * m + static_cast<int>(k);

    return CanonicalForm{lab, stringify(enc, n, static_cast<int>(g.legs.size()))};
}

WeightedGraph canonical_graph(const WeightedGraph& g) {
    CanonicalForm cf = canonical_form(g);
    const int n = static_cast<int>(g.vertices().size());
    const auto& lab = cf.canonical_labeling;

    std::vector<int> weights(n);
    for (const auto& [v, w] : g.weight) weights[lab[v]] = w;

    const int m = static_cast<int>(g.edges().size());
    std::vector<std::pair<int, int>> edge_list(m);
    for (const Edge& e : g.edges()) {
        int a = lab[e.a], b = lab[e.b];
        int k = (std::min(a, b) - n) / 2;
        if (a < b)
            edge_list[k] = {lab[g.root[e.a]], lab[g.root[e.b]]};
        else
            edge_list[k] = {lab[g.root[e.b]], lab[g.root[e.a]]};
    }
    std::vector<int> leg_roots;
    for (HalfEdge l : g.legs) leg_roots.push_back(lab[g.root[l]]);
    return from_parts(weights, edge_list, leg_roots);
}

std::optional<Isomorphism> are_isomorphic(const WeightedGraph& g1,
                                          const WeightedGraph& g2) {
    CanonicalForm c1 = canonical_form(g1);
    CanonicalForm c2 = canonical_form(g2);
    if (c1.certificate != c2.certificate) return std::nullopt;

    std::vector<HalfEdge> inv2(g2.half_edge_count);
    for (int h = 0; h < g2.half_edge_count; ++h) inv2[c2.canonical_labeling[h]] = h;
    std::vector<HalfEdge> f(g1.half_edge_count);
    for (int h = 0; h < g1.half_edge_count; ++h) f[h] = inv2[c1.canonical_labeling[h]];
    return Isomorphism{g1, g2, f};
}

namespace {

void extend_to_half_edges(const WeightedGraph& g, const Compressed& c,
                          const std::vector<int>& f,
                          std::vector<Isomorphism>& out) {
    // Group edge ids by unordered compressed endpoint pair.
    std::map<std::pair<int, int>, std::vector<int>> classes;
    const int m = static_cast<int>(c.edges.size());
    for (int e = 0; e < m; ++e)
        classes[{c.edge_u[e], c.edge_v[e]}].push_back(e);

    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, v] : classes) keys.push_back(k);

    std::vector<HalfEdge> hmap(g.half_edge_count, -1);
    for (int i = 0; i < static_cast<int>(c.verts.size()); ++i)
        hmap[c.verts[i]] = c.verts[f[i]];
    for (HalfEdge l : g.legs) hmap[l] = l;

    // For each class, enumerate matchings onto the image class
    // (loops additionally may flip).
    auto assign_edge = [&](int e, int e2, bool flip) {
        const Edge& src = c.edges[e];
        const Edge& dst = c.edges[e2];
        int u = c.edge_u[e];
        if (u == c.edge_v[e]) { // loop
            if (!flip) {
                hmap[src.a] = dst.a;
                hmap[src.b] = dst.b;
            } else {
                hmap[src.a] = dst.b;
                hmap[src.b] = dst.a;
            }
        } else {
            // align by endpoint: src.a roots at edge_u or edge_v side
            int src_a_side = c.index.at(g.root[src.a]);
            int dst_a_side = c.index.at(g.root[dst.a]);
            if (f[src_a_side] == dst_a_side) {
                hmap[src.a] = dst.a;
                hmap[src.b] = dst.b;
            } else {
                hmap[src.a] = dst.b;
                hmap[src.b] = dst.a;
            }
        }
    };

    std::function<void(size_t)> rec = [&](size_t ki) {
        if (ki == keys.size()) {
            out.push_back(Isomorphism{g, g, hmap});
            return;
        }
        auto [u, v] = keys[ki];
        int fu = f[u], fv = f[v];
        if (fu > fv) std::swap(fu, fv);
        const std::vector<int>& src = classes.at(keys[ki]);
        const std::vector<int>& dst = classes.at({fu, fv});
        bool loop = (u == v);
        std::vector<int> perm(src.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end());
        do {
            if (!loop) {
                for (size_t j = 0; j < src.size(); ++j)
                    assign_edge(src[j], dst[perm[j]], false);
                rec(ki + 1);
            } else {
                int k = static_cast<int>(src.size());
                for (int flips = 0; flips < (1 << k); ++flips) {
                    for (int j = 0; j < k; ++j)
                        assign_edge(src[j], dst[perm[j]], (flips >> j) & 1);
                    rec(ki + 1);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
}

} // namespace

std::vector<Isomorphism> automorphisms(const WeightedGraph& g) {
    Compressed c = compress(g);
    const int n = static_cast<int>(c.verts.size());
    std::vector<Isomorphism> out;
    std::vector<int> f(n, -1);
    std::vector<bool> used(n, false);

    std::function<void(int)> dfs = [&](int i) {
        if (i == n) {
            extend_to_half_edges(g, c, f, out);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (c.weights[w] != c.weights[i] || c.loops[w] != c.loops[i]) continue;
            // legs are individually ordered, so a vertex carrying a leg is fixed
            if (c.leg_count[i] > 0 && w != i) continue;
            if (c.leg_count[w] != c.leg_count[i]) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (c.mult[i][j] != c.mult[w][f[j]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            f[i] = w;
            used[w] = true;
            dfs(i + 1);
            used[w] = false;
            f[i] = -1;
        }
    };
    dfs(0);
    return out;
}

Isomorphism compose(const Isomorphism& outer, const Isomorphism& inner) {
    std::vector<HalfEdge> f(inner.source.half_edge_count);
    for (int h = 0; h < inner.source.half_edge_count; ++h)
        f[h] = outer.half_edge_map[inner.half_edge_map[h]];
    return Isomorphism{inner.source, outer.target, f};
}

Isomorphism invert(const Isomorphism& iso) {
    std::vector<HalfEdge> f(iso.target.half_edge_count);
    for (int h = 0; h < iso.source.half_edge_count; ++h) f[iso.half_edge_map[h]] = h;
    return Isomorphism{iso.target, iso.source, f};
}

Isomorphism identity_isomorphism(const WeightedGraph& g) {
    std::vector<HalfEdge> f(g.half_edge_count);
    std::iota(f.begin(), f.end(), 0);
    return Isomorphism{g, g, f};
}

} // namespace tropteich
