#include "palinword/languages.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace palinword {

FactorLanguage extendable_core(const ConstraintSet& c, int ell, unsigned long long budget) {
    if (ell < 1) throw std::invalid_argument("core length must be >= 1");
    std::set<Word> middles;
    bool complete = enumerate_words(
        c, 3 * ell, [&](const Word& w) { middles.insert(w.substr(ell, ell)); }, budget);
    if (!complete) throw std::runtime_error("extendable_core: node budget exhausted");
    return FactorLanguage{ell, std::vector<Word>(middles.begin(), middles.end())};
}

std::set<Word> factor_set(const Word& prefix, int ell) {
    std::set<Word> out;
    if (ell == 0) {
        out.insert(Word());
        return out;
    }
    for (size_t i = 0; i + ell <= prefix.size(); ++i) out.insert(prefix.substr(i, ell));
    return out;
}

FactorLanguage stabilized_factors(const WordGenerator& gen, int ell, size_t max_prefix) {
    size_t n = 64 * static_cast<size_t>(ell);
    std::set<Word> cur = factor_set(gen(n), ell);
    int stable = 0;
    while (stable < 2) {
        if (n > max_prefix) throw std::runtime_error("factor set did not stabilize within budget");
        n *= 2;
        std::set<Word> next = factor_set(gen(n), ell);
        stable = (next == cur) ? stable + 1 : 0;
        cur.swap(next);
    }
    return FactorLanguage{ell, std::vector<Word>(cur.begin(), cur.end())};
}

RauzyGraph rauzy_graph(const FactorLanguage& language) {
    if (language.length < 2) throw std::invalid_argument("rauzy graph needs order >= 2");
    RauzyGraph g;
    g.order = language.length;
    std::set<Word> verts;
    for (const Word& w : language.members) {
        verts.insert(w.substr(0, w.size() - 1));
        verts.insert(w.substr(1));
    }
    g.vertices.assign(verts.begin(), verts.end());
    std::map<Word, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
    for (const Word& w : language.members) {
        g.arcs.emplace_back(index[w.substr(0, w.size() - 1)], index[w.substr(1)]);
        g.arc_words.push_back(w);
    }
    return g;
}

std::pair<std::vector<int>, int> weak_components(const RauzyGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.arcs) parent[find(a)] = find(b);
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = count++;
        comp[v] = comp[r];
    }
    return {comp, count};
}

std::pair<std::vector<int>, int> strong_components(const RauzyGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.arcs) adj[a].push_back(b);
    std::vector<int> comp(n, -1), low(n), idx(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0, count = 0;
    // iterative Tarjan
    struct Frame {
        int v;
        size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (idx[start] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        idx[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int u = adj[f.v][f.child++];
                if (idx[u] < 0) {
                    idx[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    frames.push_back({u, 0});
                } else if (on_stack[u]) {
                    low[f.v] = std::min(low[f.v], idx[u]);
                }
            } else {
                if (low[f.v] == idx[f.v]) {
                    while (true) {
                        int u = stack.back();
                        stack.pop_back();
                        on_stack[u] = false;
                        comp[u] = count;
                        if (u == f.v) break;
                    }
                    ++count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return {comp, count};
}

Condensation scc_condensation(const RauzyGraph& g) {
    auto [comp, count] = strong_components(g);
    Condensation c;
    c.n_components = count;
    c.component_of = comp;
    c.component_size.assign(count, 0);
    for (int x : comp) ++c.component_size[x];
    c.nontrivial.assign(count, false);
    for (int k = 0; k < count; ++k) c.nontrivial[k] = c.component_size[k] >= 2;
    std::set<std::pair<int, int>> arcs;
    for (auto [a, b] : g.arcs) {
        if (comp[a] == comp[b])
            c.nontrivial[comp[a]] = true;  // cycle (covers self-loops)
        else
            arcs.insert({comp[a], comp[b]});
    }
    c.arcs.assign(arcs.begin(), arcs.end());
    return c;
}

namespace {

RauzyGraph subgraph_by_arcs(const RauzyGraph& g, const std::vector<bool>& keep_arc) {
    RauzyGraph out;
    out.order = g.order;
    std::set<Word> verts;
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        if (!keep_arc[i]) continue;
        verts.insert(g.vertices[g.arcs[i].first]);
        verts.insert(g.vertices[g.arcs[i].second]);
    }
    out.vertices.assign(verts.begin(), verts.end());
    std::map<Word, int> index;
    for (size_t i = 0; i < out.vertices.size(); ++i) index[out.vertices[i]] = static_cast<int>(i);
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        if (!keep_arc[i]) continue;
        out.arcs.emplace_back(index[g.vertices[g.arcs[i].first]],
                              index[g.vertices[g.arcs[i].second]]);
        out.arc_words.push_back(g.arc_words[i]);
    }
    return out;
}

}  // namespace

RauzyGraph recurrent_subgraph(const RauzyGraph& g) {
    Condensation c = scc_condensation(g);
    std::vector<bool> keep(g.arcs.size(), false);
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        auto [a, b] = g.arcs[i];
        keep[i] = c.component_of[a] == c.component_of[b] && c.nontrivial[c.component_of[a]];
    }
    return subgraph_by_arcs(g, keep);
}

RauzyGraph component_subgraph(const RauzyGraph& g, const std::vector<int>& comp_of, int comp) {
    std::vector<bool> keep(g.arcs.size(), false);
    for (size_t i = 0; i < g.arcs.size(); ++i) keep[i] = comp_of[g.arcs[i].first] == comp;
    return subgraph_by_arcs(g, keep);
}

// ---------------------------------------------------------------------------
// Digraph isomorphism: iterated degree refinement, then backtracking matching
// with the refined colors as candidates.
// ---------------------------------------------------------------------------

namespace {

struct Digraph {
    int n;
    std::vector<std::vector<int>> out, in;
    std::vector<std::pair<int, int>> arcs;
};

Digraph to_digraph(const RauzyGraph& g) {
    Digraph d;
    d.n = static_cast<int>(g.vertices.size());
    d.out.resize(d.n);
    d.in.resize(d.n);
    d.arcs = g.arcs;
    for (auto [a, b] : g.arcs) {
        d.out[a].push_back(b);
        d.in[b].push_back(a);
    }
    return d;
}

std::vector<int> refine_colors(const Digraph& d) {
    std::vector<long long> color(d.n);
    for (int v = 0; v < d.n; ++v)
        color[v] = static_cast<long long>(d.out[v].size()) * 1024 + d.in[v].size();
    for (int round = 0; round < d.n; ++round) {
        std::map<std::tuple<long long, std::vector<long long>, std::vector<long long>>, int> remap;
        std::vector<long long> next(d.n);
        for (int v = 0; v < d.n; ++v) {
            std::vector<long long> os, is;
            for (int u : d.out[v]) os.push_back(color[u]);
            for (int u : d.in[v]) is.push_back(color[u]);
            std::sort(os.begin(), os.end());
            std::sort(is.begin(), is.end());
            auto key = std::make_tuple(color[v], std::move(os), std::move(is));
            auto [it, added] = remap.emplace(std::move(key), static_cast<int>(remap.size()));
            next[v] = it->second;
        }
        if (std::set<long long>(next.begin(), next.end()).size() ==
            std::set<long long>(color.begin(), color.end()).size()) {
            color = next;
            break;
        }
        color = next;
    }
    return std::vector<int>(color.begin(), color.end());
}

bool iso_backtrack(const Digraph& a, const Digraph& b, const std::vector<int>& ca,
                   const std::vector<int>& cb) {
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    // match most-constrained vertices first: rarest colors
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::sort(order.begin(), order.end(), [&](int x, int y) { return freq[ca[x]] < freq[ca[y]]; });
    std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == order.size()) return true;
        int v = order[k];
        for (int u = 0; u < b.n; ++u) {
            if (map_ba[u] >= 0 || cb[u] != ca[v]) continue;
            bool ok = true;
            for (int w : a.out[v]) {
                if (map_ab[w] >= 0) {
                    if (std::find(b.out[u].begin(), b.out[u].end(), map_ab[w]) == b.out[u].end()) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok)
                for (int w : a.in[v]) {
                    if (map_ab[w] >= 0) {
                        if (std::find(b.in[u].begin(), b.in[u].end(), map_ab[w]) == b.in[u].end()) {
                            ok = false;
                            break;
                        }
                    }
                }
            if (!ok) continue;
            map_ab[v] = u;
            map_ba[u] = v;
            if (rec(k + 1)) return true;
            map_ab[v] = -1;
            map_ba[u] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

bool digraph_isomorphic(const RauzyGraph& ga, const RauzyGraph& gb) {
    if (ga.vertices.size() != gb.vertices.size() || ga.arcs.size() != gb.arcs.size()) return false;
    Digraph a = to_digraph(ga), b = to_digraph(gb);
    auto ca = refine_colors(a), cb = refine_colors(b);
    std::map<int, int> fa, fb;
    for (int c : ca) ++fa[c];
    for (int c : cb) ++fb[c];
    if (fa != fb) return false;
    return iso_backtrack(a, b, ca, cb);
}

bool factor_sets_equal(const WordGenerator& a, const WordGenerator& b, int ell, size_t max_prefix) {
    FactorLanguage fa = stabilized_factors(a, ell, max_prefix);
    FactorLanguage fb = stabilized_factors(b, ell, max_prefix);
    return fa.members == fb.members;
}

bool images_form_code(const Morphism& m) {
    // dangling suffixes: S0 = proper suffixes u with image * u = image;
    // iterate S -> suffixes from comparing S against images; a code iff the
    // empty word never appears.
    std::set<Word> universe;  // all suffixes of images
    std::set<Word> cur;
    for (int i = 0; i < m.source_size; ++i)
        for (int j = 0; j < m.source_size; ++j) {
            if (i == j) continue;
            const Word &x = m.images[i], &y = m.images[j];
            if (x.size() < y.size() && y.compare(0, x.size(), x) == 0) cur.insert(y.substr(x.size()));
            if (x == y) return false;
        }
    std::set<Word> seen = cur;
    while (!cur.empty()) {
        std::set<Word> next;
        for (const Word& u : cur) {
            if (u.empty()) return false;
            for (const Word& img : m.images) {
                if (img.size() <= u.size()) {
                    if (u.compare(0, img.size(), img) == 0) {
                        Word rest = u.substr(img.size());
                        if (rest.empty()) return false;
                        next.insert(rest);
                    }
                } else if (img.compare(0, u.size(), u) == 0) {
                    next.insert(img.substr(u.size()));
                }
            }
        }
        cur.clear();
        for (const Word& u : next)
            if (seen.insert(u).second) cur.insert(u);
    }
    return true;
}

std::optional<Word> decompose_over_code(const Word& w, const Morphism& m) {
    if (!images_form_code(m)) throw std::invalid_argument("image set is not a code");
    // DFS over image matches; the code property makes any found parse unique.
    std::vector<std::pair<size_t, int>> stack{{0, 0}};
    Word parse;
    while (!stack.empty()) {
        auto& [at, next] = stack.back();
        if (at == w.size()) return parse;
        bool advanced = false;
        while (next < m.source_size) {
            const Word& img = m.images[next];
            int letter = next++;
            if (w.compare(at, img.size(), img) == 0) {
                parse.push_back(letter_char(letter));
                stack.emplace_back(at + img.size(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            stack.pop_back();
            if (!parse.empty()) parse.pop_back();
        }
    }
    return std::nullopt;
}

}  // namespace palinword
