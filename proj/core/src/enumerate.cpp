#include <tropteich/enumerate.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace tropteich {

namespace {

// All adjacency multisets for a fixed vertex count and weight vector,
// pruned by the stability lower bound on vertex valences.
void adjacency_search(int n, int m, const std::vector<int>& w,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    std::vector<std::pair<int, int>> types;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) types.push_back({u, v});

    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> chosen;

    // minimum valence forced by stability: 2w - 2 + val > 0
    auto min_val = [&](int u) { return std::max(0, 3 - 2 * w[u]); };

    std::function<void(size_t, int)> rec = [&](size_t t, int rem) {
        if (t == types.size()) {
            if (rem == 0) emit(chosen);
            return;
        }
        // deficit-based prune: each remaining edge supplies two half-edges
        int deficit = 0;
        for (int u = 0; u < n; ++u) deficit += std::max(0, min_val(u) - deg[u]);
        if (deficit > 2 * rem) return;
        auto [a, b] = types[t];
        // last type incident to vertex u is (u, n-1); once passed, u is final
        if (a > 0 && deg[a - 1] < min_val(a - 1)) return;
        int added = 0;
        for (int k = 0;; ++k) {
            rec(t + 1, rem - k);
            if (k == rem) break;
            chosen.push_back(types[t]);
            deg[a] += (a == b) ? 2 : 1;
            if (a != b) ++deg[b];
            ++added;
        }
        for (int j = 0; j < added; ++j) {
            chosen.pop_back();
            deg[a] -= (a == b) ? 2 : 1;
            if (a != b) --deg[b];
        }
    };
    rec(0, m);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edge_list) parent[find(u)] = find(v);
    for (int u = 1; u < n; ++u)
        if (find(u) != find(0)) return false;
    return true;
}

} // namespace

std::vector<WeightedGraph> enumerate_stable_graphs(int g) {
    if (g < 2) throw UnsupportedGenus("genus must be at least 2");

    std::map<std::string, WeightedGraph> classes;
    for (int n = 1; n <= 2 * g - 2; ++n) {
        // non-increasing weight vectors with sum at most g
        std::vector<int> w(n, 0);
        std::function<void(int, int, int)> weights_rec = [&](int i, int maxw, int rem) {
            if (i == n) {
                int m = rem + n - 1; // b1 = g - sum(w)
                adjacency_search(n, m, w, [&](const std::vector<std::pair<int, int>>& el) {
                    if (!connected(n, el)) return;
                    WeightedGraph cand = from_parts(w, el);
                    if (!is_stable(cand)) return;
                    CanonicalForm cf = canonical_form(cand);
                    if (!classes.count(cf.certificate))
                        classes[cf.certificate] = canonical_graph(cand);
                });
                return;
            }
            for (int k = std::min(maxw, rem); k >= 0; --k) {
                w[i] = k;
                weights_rec(i + 1, k, rem - k);
            }
        };
        weights_rec(0, g, g);
    }

    std::vector<WeightedGraph> out;
    for (const auto& [cert, graph] : classes) out.push_back(graph);
    return out;
}

int ContractionPoset::object_index(const std::string& certificate) const {
    auto it = std::lower_bound(certificates.begin(), certificates.end(), certificate);
    if (it == certificates.end() || *it != certificate)
        throw UnknownObject(certificate);
    return static_cast<int>(it - certificates.begin());
}

ContractionPoset contraction_poset(int g) {
    if (g < 2 || g > 4) throw UnsupportedGenus("contraction poset supports genus 2..4");

    ContractionPoset poset;
    poset.objects = enumerate_stable_graphs(g);
    for (const WeightedGraph& obj : poset.objects) {
        poset.certificates.push_back(canonical_form(obj).certificate);
        poset.dimension.push_back(static_cast<int>(obj.edges().size()));
    }

    for (int i = 0; i < static_cast<int>(poset.objects.size()); ++i) {
        const WeightedGraph& src = poset.objects[i];
        const int m = poset.dimension[i];
        poset.morphisms[{i, i}].push_back(identity_contraction(src));
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::set<EdgeId> s;
            for (int e = 0; e < m; ++e)
                if ((mask >> e) & 1) s.insert(e);
            auto [t, c] = contract(src, s);
            int j = poset.object_index(canonical_form(t).certificate);
            auto iso = are_isomorphic(t, poset.objects[j]);
            poset.morphisms[{i, j}].push_back(compose_iso(*iso, c));
        }
    }
    return poset;
}

} // namespace tropteich
