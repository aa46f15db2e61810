#include <tropteich/free_group.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace tropteich {

Word reduce(int rank, const std::vector<int>& letters) {
    Word w;
    w.rank = rank;
    for (int a : letters) {
        if (a == 0 || a > rank || a < -rank)
            throw BadLetter(std::to_string(a) + " in rank " + std::to_string(rank));
        if (!w.letters.empty() && w.letters.back() == -a)
            w.letters.pop_back();
        else
            w.letters.push_back(a);
    }
    return w;
}

Word multiply(const Word& u, const Word& v) {
    std::vector<int> cat = u.letters;
    cat.insert(cat.end(), v.letters.begin(), v.letters.end());
    return reduce(std::max(u.rank, v.rank), cat);
}

Word inverse(const Word& w) {
    Word out;
    out.rank = w.rank;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

Word conjugate(const Word& w, const Word& by) {
    return multiply(multiply(by, w), inverse(by));
}

Word generator(int rank, int index) {
    Word w;
    w.rank = rank;
    w.letters = {index};
    return w;
}

Word apply_map(const GroupMap& m, const Word& w) {
    if (w.rank != m.domain_rank) throw RankMismatch();
    std::vector<int> out;
    for (int a : w.letters) {
        const Word& img = m.images[std::abs(a) - 1];
        if (a > 0)
            out.insert(out.end(), img.letters.begin(), img.letters.end());
        else
            for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
                out.push_back(-*it);
    }
    return reduce(m.codomain_rank, out);
}

GroupMap identity_map(int rank) {
    GroupMap m;
    m.domain_rank = m.codomain_rank = rank;
    for (int k = 1; k <= rank; ++k) m.images.push_back(generator(rank, k));
    return m;
}

GroupMap compose_maps(const GroupMap& f, const GroupMap& g) {
    if (f.domain_rank != g.codomain_rank) throw RankMismatch();
    GroupMap m;
    m.domain_rank = g.domain_rank;
    m.codomain_rank = f.codomain_rank;
    for (const Word& w : g.images) m.images.push_back(apply_map(f, w));
    return m;
}

namespace {

// Stallings folding automaton over the alphabet 1..rank.
struct FoldGraph {
    std::vector<int> parent;
    // out[v][label], in[v][label]: adjacent vertex lists per positive label
    std::vector<std::vector<std::vector<int>>> out, in;
    int rank;

    explicit FoldGraph(int r) : rank(r) {}

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    int add_vertex() {
        int v = static_cast<int>(parent.size());
        parent.push_back(v);
        out.emplace_back(rank);
        in.emplace_back(rank);
        return v;
    }

    void add_edge(int u, int v, int label) { // positive label u --label--> v
        out[u][label - 1].push_back(v);
        in[v][label - 1].push_back(u);
    }
};

// Folds the automaton and reports, per positive label, the loop count at the
// merged base and the total vertex/edge structure of the core.
bool folds_to_standard_rose(const GroupMap& m) {
    const int r = m.codomain_rank;
    FoldGraph fg(r);
    int base = fg.add_vertex();
    for (const Word& w : m.images) {
        int cur = base;
        for (size_t k = 0; k < w.letters.size(); ++k) {
            int nxt = (k + 1 == w.letters.size()) ? base : fg.add_vertex();
            int a = w.letters[k];
            if (a > 0)
                fg.add_edge(cur, nxt, a);
            else
                fg.add_edge(nxt, cur, -a);
            cur = nxt;
        }
    }

    // fold until no vertex has two same-label edges in the same direction
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(fg.parent.size()); ++v) {
            if (fg.find(v) != v) continue;
            for (int lab = 0; lab < r; ++lab) {
                for (auto* side : {&fg.out, &fg.in}) {
                    std::vector<int>& adj = (*side)[v][lab];
                    std::set<int> roots;
                    int first = -1;
                    for (int w : adj) {
                        int rw = fg.find(w);
                        if (first == -1) first = rw;
                        roots.insert(rw);
                    }
                    if (roots.size() > 1) {
                        // merge all targets into one vertex
                        int keep = *roots.begin();
                        for (int rw : roots) {
                            if (rw == keep) continue;
                            fg.parent[rw] = keep;
                            for (int lab2 = 0; lab2 < r; ++lab2) {
                                auto& o = fg.out[keep][lab2];
                                o.insert(o.end(), fg.out[rw][lab2].begin(),
                                         fg.out[rw][lab2].end());
                                auto& i = fg.in[keep][lab2];
                                i.insert(i.end(), fg.in[rw][lab2].begin(),
                                         fg.in[rw][lab2].end());
                            }
                        }
                        changed = true;
                    }
                }
            }
        }
    }

    // collect folded edges as a set of (u, v, label)
    std::set<std::tuple<int, int, int>> edges;
    std::set<int> verts;
    for (int v = 0; v < static_cast<int>(fg.parent.size()); ++v) {
        if (fg.find(v) != v) continue;
        verts.insert(v);
        for (int lab = 0; lab < r; ++lab)
            for (int w : fg.out[v][lab]) edges.insert({v, fg.find(w), lab});
    }

    // trim hanging trees (vertices of degree 1 other than the base)
    int broot = fg.find(0);
    bool trimmed = true;
    while (trimmed) {
        trimmed = false;
        std::map<int, int> degree;
        for (auto [u, v, lab] : edges) {
            ++degree[u];
            ++degree[v];
        }
        for (int v : std::set<int>(verts)) {
            if (v == broot) continue;
            if (degree[v] <= 1) {
                verts.erase(v);
                for (auto it = edges.begin(); it != edges.end();) {
                    auto [a, b, lab] = *it;
                    if (a == v || b == v)
                        it = edges.erase(it);
                    else
                        ++it;
                }
                trimmed = true;
            }
        }
    }

    // subgroup equals F_r iff the core automaton is the standard rose
    if (verts.size() != 1) return false;
    if (static_cast<int>(edges.size()) != r) return false;
    std::set<int> labels;
    for (auto [u, v, lab] : edges) {
        if (u != broot || v != broot) return false;
        labels.insert(lab);
    }
    return static_cast<int>(labels.size()) == r;
}

} // namespace

bool is_automorphism(const GroupMap& m) {
    if (m.domain_rank != m.codomain_rank) throw RankMismatch();
    for (const Word& w : m.images)
        if (w.trivial()) return false;
    return folds_to_standard_rose(m);
}

namespace {

long total_length(const std::vector<Word>& tuple) {
    long s = 0;
    for (const Word& w : tuple) s += w.length();
    return s;
}

std::vector<int> tuple_key(const std::vector<Word>& tuple) {
    std::vector<int> key;
    for (const Word& w : tuple) {
        key.push_back(w.length());
        key.insert(key.end(), w.letters.begin(), w.letters.end());
    }
    return key;
}

// Elementary Nielsen move on position i: right/left multiplication by
// tuple[j]^eps. Returns the corresponding precomposition automorphism.
GroupMap elementary_map(int rank, int i, int j, int eps, bool left) {
    GroupMap e = identity_map(rank);
    Word xj = generator(rank, j + 1);
    if (eps < 0) xj = inverse(xj);
    Word xi = generator(rank, i + 1);
    e.images[i] = left ? multiply(xj, xi) : multiply(xi, xj);
    return e;
}

// Elementary Nielsen move: invert position i.
struct NielsenMove {
    bool inversion = false;
    int i = 0, j = 0, eps = 1;
    bool left = false;
};

GroupMap move_map(int rank, const NielsenMove& mv) {
    if (!mv.inversion) return elementary_map(rank, mv.i, mv.j, mv.eps, mv.left);
    GroupMap e = identity_map(rank);
    e.images[mv.i] = inverse(generator(rank, mv.i + 1));
    return e;
}

std::vector<Word> apply_move(const std::vector<Word>& tuple,
                             const NielsenMove& mv) {
    std::vector<Word> nt = tuple;
    if (mv.inversion) {
        nt[mv.i] = inverse(tuple[mv.i]);
    } else {
        Word mult = (mv.eps > 0) ? tuple[mv.j] : inverse(tuple[mv.j]);
        nt[mv.i] = mv.left ? multiply(mult, tuple[mv.i])
                           : multiply(tuple[mv.i], mult);
    }
    return nt;
}

bool is_basis_form(const std::vector<Word>& tuple) {
    for (const Word& w : tuple)
        if (w.length() != 1) return false;
    return true;
}

} // namespace

GroupMap invert_automorphism(const GroupMap& m) {
    if (!is_automorphism(m)) throw NotAnAutomorphism();
    const int r = m.domain_rank;

    std::vector<Word> tuple = m.images;
    GroupMap accum = identity_map(r); // E_1 o ... o E_s, applied moves in order

    // Nielsen descent. Multiplication by a tuple entry never needs to grow
    // the total length, but reaching a shorter tuple can require a chain of
    // length-preserving moves first, so each round is a breadth-first search
    // over the current plateau for either a strictly shorter tuple or the
    // basis form.
    std::vector<NielsenMove> moves;
    for (int i = 0; i < r; ++i) {
        moves.push_back(NielsenMove{true, i, 0, 1, false});
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            for (int eps : {1, -1})
                for (bool left : {false, true})
                    moves.push_back(NielsenMove{false, i, j, eps, left});
        }
    }

    const size_t state_cap = 200000;
    while (!is_basis_form(tuple)) {
        const long cur_total = total_length(tuple);

        struct Node {
            std::vector<Word> tuple;
            int parent;
            NielsenMove via;
        };
        std::vector<Node> nodes{{tuple, -1, {}}};
        std::set<std::vector<int>> visited{tuple_key(tuple)};
        int goal = -1;
        for (size_t head = 0; head < nodes.size() && goal < 0; ++head) {
            for (const NielsenMove& mv : moves) {
                std::vector<Word> nt = apply_move(nodes[head].tuple, mv);
                if (nt[mv.i].trivial()) continue;
                if (total_length(nt) > cur_total) continue;
                if (!visited.insert(tuple_key(nt)).second) continue;
                nodes.push_back({nt, static_cast<int>(head), mv});
                if (total_length(nt) < cur_total || is_basis_form(nt)) {
                    goal = static_cast<int>(nodes.size()) - 1;
                    break;
                }
                if (visited.size() > state_cap) throw NotAnAutomorphism();
            }
        }
        if (goal < 0) throw NotAnAutomorphism();

        std::vector<NielsenMove> path;
        for (int k = goal; k > 0; k = nodes[k].parent) path.push_back(nodes[k].via);
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            accum = compose_maps(accum, move_map(r, *it));
        tuple = nodes[goal].tuple;
    }

    // finish: tuple[i] = x_{p(i)}^{s(i)}; m o accum = P, so m^-1 = accum o P^-1
    GroupMap pinv = identity_map(r);
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        int a = tuple[i].letters[0];
        int p = std::abs(a) - 1;
        if (seen[p]) throw NotAnAutomorphism();
        seen[p] = true;
        Word img = generator(r, i + 1);
        if (a < 0) img = inverse(img);
        pinv.images[p] = img;
    }
    return compose_maps(accum, pinv);
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
    Word prefix{w.rank, {}};
    Word core = w;
    while (core.length() >= 2 && core.letters.front() == -core.letters.back()) {
        prefix.letters.push_back(core.letters.front());
        core.letters.erase(core.letters.begin());
        core.letters.pop_back();
    }
    return {prefix, core};
}

namespace {

// Smallest period of the cyclically reduced word; the root r with core = r^k.
Word cyclic_root(const Word& core) {
    const int n = core.length();
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            if (core.letters[k] != core.letters[k % p]) ok = false;
        if (ok) {
            Word r{core.rank, {}};
            r.letters.assign(core.letters.begin(), core.letters.begin() + p);
            return r;
        }
    }
    return core;
}

} // namespace

std::optional<Word> tuples_conjugate(const std::vector<Word>& t1,
                                     const std::vector<Word>& t2) {
    if (t1.size() != t2.size()) throw LengthMismatch();
    int rank = 0;
    for (const Word& w : t1) rank = std::max(rank, w.rank);
    for (const Word& w : t2) rank = std::max(rank, w.rank);

    int pivot = -1;
    for (size_t k = 0; k < t1.size(); ++k) {
        bool a = t1[k].trivial(), b = t2[k].trivial();
        if (a != b) return std::nullopt;
        if (!a && pivot == -1) pivot = static_cast<int>(k);
    }
    if (pivot == -1) return Word{rank, {}}; // all trivial on both sides

    auto check_all = [&](const Word& w) {
        for (size_t k = 0; k < t1.size(); ++k)
            if (!(conjugate(t2[k], w) == t1[k])) return false;
        return true;
    };

    // solve the pivot equation t1 = w t2 w^-1 via cyclic words
    auto [p, uc] = cyclic_reduce(t1[pivot]);
    auto [q, vc] = cyclic_reduce(t2[pivot]);
    if (uc.length() != vc.length()) return std::nullopt;

    int shift = -1;
    for (int j = 0; j < uc.length(); ++j) {
        bool ok = true;
        for (int k = 0; k < uc.length() && ok; ++k)
            if (uc.letters[k] != vc.letters[(j + k) % vc.length()]) ok = false;
        if (ok) {
            shift = j;
            break;
        }
    }
    if (shift == -1) return std::nullopt;

    // rotation by j: rot_j(v) = d^-1 v d with d the length-j prefix,
    // so t1[pivot] = (p d^-1 q^-1) t2[pivot] (p d^-1 q^-1)^-1
    Word d{rank, {}};
    d.letters.assign(vc.letters.begin(), vc.letters.begin() + shift);
    Word w0 = multiply(multiply(p, inverse(d)), inverse(q));

    // solution set is w0 * centralizer(t2[pivot]) = w0 * q <root> q^-1
    Word root = cyclic_root(vc);
    Word root_conj = conjugate(root, q); // generator of the centralizer

    int max1 = 0, max2 = 0;
    for (const Word& w : t1) max1 = std::max(max1, w.length());
    for (const Word& w : t2) max2 = std::max(max2, w.length());
    const int bound = (max1 + max2) / 2 + 1;
    const int krange =
        (bound + w0.length() + 2 * q.length()) / std::max(1, root.length()) + 2;

    std::optional<Word> best;
    for (int k = -krange; k <= krange; ++k) {
        Word cand = w0;
        Word pw = root_conj;
        if (k < 0) pw = inverse(root_conj);
        for (int s = 0; s < std::abs(k); ++s) cand = multiply(cand, pw);
        if (!check_all(cand)) continue;
        if (!best || cand.length() < best->length() ||
            (cand.length() == best->length() && cand.letters < best->letters))
            best = cand;
    }
    return best;
}

std::vector<GroupMap> nielsen_generators(int rank) {
    std::vector<GroupMap> gens;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            GroupMap m = identity_map(rank);
            m.images[i] = generator(rank, j + 1);
            m.images[j] = generator(rank, i + 1);
            gens.push_back(m);
        }
    for (int i = 0; i < rank; ++i) {
        GroupMap m = identity_map(rank);
        m.images[i] = inverse(generator(rank, i + 1));
        gens.push_back(m);
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            for (int eps : {1, -1})
                for (bool left : {false, true})
                    gens.push_back(elementary_map(rank, i, j, eps, left));
        }
    return gens;
}

} // namespace tropteich
