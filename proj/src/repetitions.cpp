#include "palinword/repetitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace palinword {
namespace {

// Suffix array by prefix doubling; n log^2 n, plenty for 10^5-letter prefixes.
std::vector<int> suffix_array(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), 0);
    for (int i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(w[i]);
    for (int k = 1;; k <<= 1) {
        auto cmp = [&](int a, int b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            int ra = a + k < n ? rank[a + k] : -1;
            int rb = b + k < n ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (int i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

// Kasai longest-common-prefix array: lcp[i] = lcp(sa[i-1], sa[i]).
std::vector<int> lcp_array(const Word& w, const std::vector<int>& sa) {
    const int n = static_cast<int>(w.size());
    std::vector<int> rank(n), lcp(n, 0);
    for (int i = 0; i < n; ++i) rank[sa[i]] = i;
    int h = 0;
    for (int i = 0; i < n; ++i) {
        if (h > 0) --h;
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        int j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
        lcp[rank[i]] = h;
    }
    return lcp;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

}  // namespace

// The maximum factor exponent equals 1 + max over position pairs (i, j) of
// lce(i, j) / (j - i): the pair realises the repetition w[i .. j+lce) with
// period j-i, and conversely a periodic factor gives such a pair at its two
// leftmost period-aligned positions.  The pair maximum is computed over the
// suffix tree: for each internal node, string depth divided by the minimum
// position gap inside its subtree.  Subtrees are LCP-array intervals, merged
// in decreasing LCP order with small-to-large position sets.
MaxExponent max_exponent(const Word& w) {
    const long long n = static_cast<long long>(w.size());
    if (n == 0) throw std::invalid_argument("max_exponent of the empty word");
    MaxExponent best{make_rational(1, 1), Repetition{0, 1, 1}};
    if (n == 1) return best;

    auto sa = suffix_array(w);
    auto lcp = lcp_array(w, sa);

    std::vector<int> order;  // boundaries 1..n-1 sorted by lcp descending
    order.reserve(n - 1);
    for (int i = 1; i < n; ++i)
        if (lcp[i] > 0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lcp[a] > lcp[b]; });

    Dsu dsu(static_cast<int>(n));
    std::vector<std::set<int>> pos(n);
    for (int i = 0; i < n; ++i) pos[i].insert(sa[i]);

    long long best_L = 0, best_gap = 1;  // ratio 0 sentinel
    Repetition best_wit{0, 1, 1};
    for (int b : order) {
        int ra = dsu.find(b - 1), rb = dsu.find(b);
        if (ra == rb) continue;
        if (pos[ra].size() < pos[rb].size()) std::swap(ra, rb);
        const long long L = lcp[b];
        for (int p : pos[rb]) {
            auto it = pos[ra].insert(p).first;
            if (it != pos[ra].begin()) {
                long long gap = p - *std::prev(it);
                if (static_cast<__int128>(L) * best_gap > static_cast<__int128>(best_L) * gap) {
                    best_L = L;
                    best_gap = gap;
                    best_wit = Repetition{*std::prev(it), gap, gap + L};
                }
            }
            if (std::next(it) != pos[ra].end()) {
                long long gap = *std::next(it) - p;
                if (static_cast<__int128>(L) * best_gap > static_cast<__int128>(best_L) * gap) {
                    best_L = L;
                    best_gap = gap;
                    best_wit = Repetition{p, gap, gap + L};
                }
            }
        }
        pos[rb].clear();
        dsu.parent[rb] = ra;
    }
    if (best_L > 0) {
        best.exponent = make_rational(best_gap + best_L, best_gap);
        best.witness = best_wit;
    }
    return best;
}

std::optional<Repetition> freeness_violation(const Word& w, const Threshold& t) {
    if (w.empty()) return std::nullopt;
    MaxExponent m = max_exponent(w);
    if (t.violated_by(m.witness.length, m.witness.period)) return m.witness;
    return std::nullopt;
}

bool extend_free_check(const char* w, long long n, const Threshold& t) {
    // A violating repetition ending at position n-1 with period p reaches
    // length p + e where e counts matches of w[n-1-i] == w[n-1-i-p].
    for (long long p = 1; p < n; ++p) {
        // smallest violating length for this period
        const __int128 np = static_cast<__int128>(t.value.num) * p;
        long long min_len =
            t.plus ? static_cast<long long>(np / t.value.den) + 1
                   : static_cast<long long>((np + t.value.den - 1) / t.value.den);
        if (min_len <= p) min_len = p + 1;
        if (min_len > n) break;  // longer periods only need longer factors
        long long e = 0;
        while (e < n - p && w[n - 1 - e] == w[n - 1 - e - p]) {
            ++e;
            if (p + e >= min_len) return false;
        }
    }
    return true;
}

std::vector<long long> occurrences(const Word& text, const Word& pattern) {
    std::vector<long long> occ;
    if (pattern.empty()) {
        occ.resize(text.size() + 1);
        std::iota(occ.begin(), occ.end(), 0);
        return occ;
    }
    for (size_t at = text.find(pattern); at != Word::npos; at = text.find(pattern, at + 1))
        occ.push_back(static_cast<long long>(at));
    return occ;
}

ReturnWordSet return_words(const Word& prefix, const Word& anchor) {
    auto occ = occurrences(prefix, anchor);
    if (occ.size() < 2) throw std::runtime_error("anchor occurs fewer than twice");
    std::set<Word> rs;
    for (size_t k = 0; k + 1 < occ.size(); ++k)
        rs.insert(prefix.substr(occ[k], occ[k + 1] - occ[k]));
    return ReturnWordSet{anchor, std::vector<Word>(rs.begin(), rs.end())};
}

}  // namespace palinword
