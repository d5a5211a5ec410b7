#include "palinword/bispecial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "palinword/fixtures.hpp"

namespace palinword {

BigMatrix to_big(const Matrix& m) {
    BigMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
    return out;
}
BigVec to_big(const ParikhVector& v) { return BigVec(v.begin(), v.end()); }

BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b) {
    BigMatrix r(a.size(), BigVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}
BigVec mat_vec(const BigMatrix& a, const BigVec& v) {
    BigVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}
BigVec vec_add(const BigVec& a, const BigVec& b) {
    BigVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
BigInt vec_sum(const BigVec& v) {
    BigInt s = 0;
    for (const BigInt& x : v) s += x;
    return s;
}
BigMatrix identity_matrix(int d) {
    BigMatrix m(d, BigVec(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}
BigMatrix mat_pow(const BigMatrix& m, unsigned n) {
    BigMatrix result = identity_matrix(static_cast<int>(m.size()));
    BigMatrix base = m;
    while (n) {
        if (n & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return result;
}

ExtensionProfile extension_profile(const Word& prefix, const Word& w) {
    ExtensionProfile p;
    p.word = w;
    std::set<char> left, right;
    std::set<std::pair<char, char>> bi;
    const long long n = static_cast<long long>(prefix.size());
    const long long len = static_cast<long long>(w.size());
    for (long long at : occurrences(prefix, w)) {
        if (at < 1 || at + len >= n) continue;
        left.insert(prefix[at - 1]);
        right.insert(prefix[at + len]);
        bi.insert({prefix[at - 1], prefix[at + len]});
    }
    if (left.empty() || right.empty())
        throw std::runtime_error("factor lacks occurrences with two-sided context");
    p.left.assign(left.begin(), left.end());
    p.right.assign(right.begin(), right.end());
    p.bi.assign(bi.begin(), bi.end());
    p.b = static_cast<int>(p.bi.size()) - static_cast<int>(p.left.size()) -
          static_cast<int>(p.right.size()) + 1;
    return p;
}

namespace {

// Suffix array based per-length grouping: factors of length ell are the
// maximal SA intervals with lcp >= ell.
struct FactorIndex {
    const Word& text;
    std::vector<int> sa, lcp;

    explicit FactorIndex(const Word& t) : text(t) {
        const int n = static_cast<int>(t.size());
        sa.resize(n);
        std::vector<int> rank(n), tmp(n);
        std::iota(sa.begin(), sa.end(), 0);
        for (int i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(t[i]);
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
        lcp.assign(n, 0);
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[sa[i]] = i;
        int h = 0;
        for (int i = 0; i < n; ++i) {
            if (h > 0) --h;
            if (inv[i] == 0) {
                h = 0;
                continue;
            }
            int j = sa[inv[i] - 1];
            while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
            lcp[inv[i]] = h;
        }
    }

    // Calls fn(start, positions) for every distinct factor of length ell,
    // where positions are its occurrence start positions.
    template <typename Fn>
    void for_each_factor(int ell, Fn&& fn) const {
        const int n = static_cast<int>(text.size());
        std::vector<int> group;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && lcp[i] >= ell) {
                if (sa[i] + ell <= n) group.push_back(sa[i]);
            } else {
                if (!group.empty()) fn(group);
                group.clear();
                if (sa[i] + ell <= n) group.push_back(sa[i]);
            }
        }
        if (!group.empty()) fn(group);
    }
};

std::vector<Word> bispecials_from_index(const Word& prefix, const FactorIndex& idx, int max_len) {
    std::vector<Word> out;
    const long long n = static_cast<long long>(prefix.size());
    {  // the empty word
        std::set<char> letters(prefix.begin(), prefix.end());
        if (letters.size() >= 2) out.emplace_back();
    }
    for (int ell = 1; ell <= max_len; ++ell) {
        idx.for_each_factor(ell, [&](const std::vector<int>& positions) {
            std::set<char> left, right;
            for (int p : positions) {
                if (p >= 1) left.insert(prefix[p - 1]);
                if (p + ell < n) right.insert(prefix[p + ell]);
            }
            if (left.size() >= 2 && right.size() >= 2)
                out.push_back(prefix.substr(positions.front(), ell));
        });
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace

std::vector<Word> bispecial_factors_of_prefix(const Word& prefix, int max_len) {
    FactorIndex idx(prefix);
    return bispecials_from_index(prefix, idx, max_len);
}

std::vector<Word> enumerate_bispecial(const WordGenerator& gen, int max_len, size_t max_prefix) {
    size_t n = std::max<size_t>(64 * (max_len + 1), 4096);
    std::vector<Word> cur = bispecial_factors_of_prefix(gen(n), max_len);
    int stable = 0;
    while (stable < 2) {
        if (n > max_prefix)
            throw std::runtime_error("bispecial enumeration did not stabilize within budget");
        n *= 2;
        std::vector<Word> next = bispecial_factors_of_prefix(gen(n), max_len);
        stable = (next == cur) ? stable + 1 : 0;
        cur.swap(next);
    }
    return cur;
}

BispecialTriplet make_triplet(char a, char b, Word core, char c, char d) {
    if (a == b || c == d) throw std::invalid_argument("extension pairs need distinct letters");
    BispecialTriplet t;
    t.left = {std::min(a, b), std::max(a, b)};
    t.core = std::move(core);
    t.right = {std::min(c, d), std::max(c, d)};
    return t;
}

namespace {

Word longest_common_suffix(const Word& a, const Word& b) {
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
    return a.substr(a.size() - n);
}
Word longest_common_prefix(const Word& a, const Word& b) {
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return a.substr(0, n);
}

}  // namespace

BispecialTriplet f_image(const BispecialTriplet& t, const Morphism& m) {
    const Word &ia = m.image(t.left[0]), &ib = m.image(t.left[1]);
    Word u1 = longest_common_suffix(ia, ib);
    if (u1.size() == ia.size() || u1.size() == ib.size())
        throw std::runtime_error("degenerate f-image: one left image is a suffix of the other");
    char a2 = ia[ia.size() - u1.size() - 1];
    char b2 = ib[ib.size() - u1.size() - 1];
    const Word &ic = m.image(t.right[0]), &id = m.image(t.right[1]);
    Word u2 = longest_common_prefix(ic, id);
    if (u2.size() == ic.size() || u2.size() == id.size())
        throw std::runtime_error("degenerate f-image: one right image is a prefix of the other");
    char c2 = ic[u2.size()];
    char d2 = id[u2.size()];
    return make_triplet(a2, b2, u1 + palinword::apply(m, t.core) + u2, c2, d2);
}

std::vector<std::vector<BispecialTriplet>> iterate_f_images(
    const std::vector<BispecialTriplet>& initials, const Morphism& m, int n) {
    std::vector<std::vector<BispecialTriplet>> chains;
    for (const BispecialTriplet& t0 : initials) {
        std::vector<BispecialTriplet> chain{t0};
        for (int k = 0; k < n; ++k) chain.push_back(f_image(chain.back(), m));
        for (size_t k = 1; k + 3 < chain.size(); ++k)
            if (chain[k].left != chain[k + 3].left || chain[k].right != chain[k + 3].right)
                throw std::runtime_error("extension pairs do not repeat with period 3");
        chains.push_back(std::move(chain));
    }
    return chains;
}

SymbolicTriplet to_symbolic(const BispecialTriplet& t, int alphabet_size) {
    return SymbolicTriplet{t.left, to_big(parikh(t.core, alphabet_size)), t.right};
}

SymbolicTriplet f_image_symbolic(const SymbolicTriplet& t, const Morphism& m,
                                 const BigMatrix& incidence) {
    const Word &ia = m.image(t.left[0]), &ib = m.image(t.left[1]);
    Word u1 = longest_common_suffix(ia, ib);
    if (u1.size() == ia.size() || u1.size() == ib.size())
        throw std::runtime_error("degenerate f-image");
    char a2 = ia[ia.size() - u1.size() - 1];
    char b2 = ib[ib.size() - u1.size() - 1];
    const Word &ic = m.image(t.right[0]), &id = m.image(t.right[1]);
    Word u2 = longest_common_prefix(ic, id);
    if (u2.size() == ic.size() || u2.size() == id.size())
        throw std::runtime_error("degenerate f-image");
    char c2 = ic[u2.size()];
    char d2 = id[u2.size()];
    const int d = static_cast<int>(incidence.size());
    BigVec v = vec_add(vec_add(to_big(parikh(u1, d)), mat_vec(incidence, t.core_parikh)),
                       to_big(parikh(u2, d)));
    SymbolicTriplet out{{std::min(a2, b2), std::max(a2, b2)}, std::move(v),
                        {std::min(c2, d2), std::max(c2, d2)}};
    return out;
}

std::vector<BispecialTriplet> discover_initial_triplets(const Morphism& m, const Word& prefix,
                                                        int max_core_len) {
    std::vector<BispecialTriplet> out;
    std::set<Word> short_factors = factor_set(prefix, 1);
    for (int ell = 2; ell <= max_core_len + 2; ++ell) {
        auto f = factor_set(prefix, ell);
        short_factors.insert(f.begin(), f.end());
    }
    auto is_factor = [&](const Word& w) { return short_factors.count(w) > 0; };
    for (const Word& w : bispecial_factors_of_prefix(prefix, max_core_len)) {
        if (has_synchronization_point(m, prefix, w)) continue;
        ExtensionProfile p;
        if (w.empty()) {
            p.word = w;
            std::set<char> letters(prefix.begin(), prefix.end());
            p.left.assign(letters.begin(), letters.end());
            p.right = p.left;
        } else {
            p = extension_profile(prefix, w);
        }
        for (size_t i = 0; i < p.left.size(); ++i)
            for (size_t j = i + 1; j < p.left.size(); ++j)
                for (size_t k = 0; k < p.right.size(); ++k)
                    for (size_t l = k + 1; l < p.right.size(); ++l) {
                        char a = p.left[i], b = p.left[j], c = p.right[k], d = p.right[l];
                        bool straight = is_factor(a + w + c) && is_factor(b + w + d);
                        bool crossed = is_factor(a + w + d) && is_factor(b + w + c);
                        if (straight || crossed) out.push_back(make_triplet(a, b, w, c, d));
                    }
    }
    return out;
}

std::vector<Word> shortest_return_words(const Word& prefix, const Word& w) {
    auto occ = occurrences(prefix, w);
    if (occ.size() < 3) throw std::runtime_error("anchor occurs fewer than three times");
    std::set<Word> rs;
    for (size_t k = 0; k + 1 < occ.size(); ++k) rs.insert(prefix.substr(occ[k], occ[k + 1] - occ[k]));
    const int d = alphabet_of(prefix).size;
    std::vector<Word> all(rs.begin(), rs.end());
    std::vector<ParikhVector> pv;
    pv.reserve(all.size());
    for (const Word& r : all) pv.push_back(parikh(r, d));
    auto dominated = [&](size_t i) {
        for (size_t j = 0; j < all.size(); ++j) {
            if (j == i || pv[j] == pv[i]) continue;
            bool le = true;
            for (int k = 0; k < d; ++k) le = le && pv[j][k] <= pv[i][k];
            if (le) return true;
        }
        return false;
    };
    std::vector<Word> mins;
    for (size_t i = 0; i < all.size(); ++i)
        if (!dominated(i)) mins.push_back(all[i]);
    return mins;
}

ParikhVector return_word_pushforward(const Word& r, const Morphism& m) {
    return parikh(palinword::apply(m, r), m.target_size);
}

CriticalExponentAudit critical_exponent_ddp(const WordGenerator& gen, int max_len,
                                            size_t max_prefix) {
    std::vector<Word> bis = enumerate_bispecial(gen, max_len, max_prefix);
    // prefix large enough that every bispecial has stabilized returns: reuse
    // the doubling criterion on the ratio table itself
    size_t n = std::max<size_t>(64 * (max_len + 1), 1u << 15);
    auto table = [&](size_t len) {
        Word prefix = gen(len);
        std::vector<RatioRecord> recs;
        for (const Word& w : bis) {
            auto occ = occurrences(prefix, w);
            if (w.empty()) {
                recs.push_back({w, 0, 1, "brute-force"});
                continue;
            }
            if (occ.size() < 3) return std::optional<std::vector<RatioRecord>>();
            long long shortest = occ[1] - occ[0];
            for (size_t k = 1; k + 1 < occ.size(); ++k)
                shortest = std::min(shortest, occ[k + 1] - occ[k]);
            recs.push_back({w, static_cast<long long>(w.size()), shortest, "brute-force"});
        }
        return std::optional(recs);
    };
    std::optional<std::vector<RatioRecord>> cur = table(n);
    int stable = 0;
    while (stable < 2) {
        if (n > max_prefix) throw std::runtime_error("return lengths did not stabilize");
        n *= 2;
        auto next = table(n);
        stable = (next && cur &&
                  std::equal(next->begin(), next->end(), cur->begin(), cur->end(),
                             [](const RatioRecord& a, const RatioRecord& b) {
                                 return a.word == b.word && a.return_length == b.return_length;
                             }))
                     ? stable + 1
                     : 0;
        if (next) cur = std::move(next);
    }
    CriticalExponentAudit audit;
    audit.records = *cur;
    audit.max_ratio = make_rational(0, 1);
    for (const RatioRecord& r : audit.records) {
        Rational ratio = make_rational(r.word_length, r.return_length);
        if (audit.max_ratio < ratio) audit.max_ratio = ratio;
    }
    audit.exponent = add(make_rational(1, 1), audit.max_ratio);
    return audit;
}

// ---------------------------------------------------------------------------
// The 18 families of the h/g pair
// ---------------------------------------------------------------------------

namespace {

Word H(int k, const Word& w) {
    Word out = w;
    const Morphism& h = fixture_morphism("h");
    for (int i = 0; i < k; ++i) out = palinword::apply(h, out);
    return out;
}

}  // namespace

const std::vector<BispecialTriplet>& family_initial_triplets() {
    static const std::vector<BispecialTriplet> kItems = {
        make_triplet('0', '2', "", '1', '3'),      // 1
        make_triplet('1', '2', "", '2', '3'),      // 2
        make_triplet('1', '2', "", '0', '3'),      // 3
        make_triplet('2', '3', "", '0', '3'),      // 4
        make_triplet('2', '3', "", '1', '3'),      // 5
        make_triplet('0', '3', "1", '0', '2'),     // 6
        make_triplet('2', '3', "1", '0', '3'),     // 7
        make_triplet('0', '3', "1", '0', '3'),     // 8
        make_triplet('2', '3', "1", '2', '3'),     // 9
        make_triplet('1', '2', "3", '0', '1'),     // 10
        make_triplet('2', '3', "01", '2', '3'),    // 11
        make_triplet('1', '2', "01", '2', '3'),    // 12
        make_triplet('0', '3', "12", '0', '1'),    // 13
        make_triplet('0', '2', "13", '0', '1'),    // 14
        make_triplet('1', '2', "31", '0', '2'),    // 15
        make_triplet('2', '3', "012", '1', '3'),   // 16
        make_triplet('1', '3', "012", '0', '3'),   // 17
        make_triplet('0', '3', "1201", '2', '3'),  // 18
    };
    return kItems;
}

const std::vector<ReturnFixture>& family_return_fixtures() {
    static const std::vector<ReturnFixture> kFixtures = [] {
        std::vector<ReturnFixture> v;
        v.push_back({1, 2, "12" + H(1, "12") + "0121301",
                     {"12" + H(1, "12") + H(1, "01") + "01213013"}});
        v.push_back({2, 2, H(1, "012"), {H(1, "01231")}});
        v.push_back({3, 1, "0121301", {"0121301231"}});
        v.push_back({4, 1, "013120121301", {"013120121301231012"}});
        v.push_back({5, 1, "01312", {"0131201213"}});
        v.push_back({6, 1, "12" + H(1, "1") + "012", {"12" + H(1, "1") + "012013"}});
        v.push_back({7, 1, "01312" + H(1, "1") + "0121301",
                     {"01312" + H(1, "1") + "0121301231012"}});
        v.push_back({8, 1, "12" + H(1, "1") + "0121301",
                     {"12" + H(1, "1") + "0121301231012013"}});
        v.push_back({9, 1, "01312" + H(1, "1") + "012",
                     {"01312" + H(1, "1") + "0120131201213"}});
        v.push_back({10, 0, "3", {"301", "312"}});
        v.push_back({11, 1, "01312" + H(1, "01") + "012",
                     {"01312" + H(1, "01") + "012130131231012"}});
        v.push_back({12, 1, H(1, "01") + "012", {H(1, "01") + "01201312"}});
        v.push_back({13, 1, "12" + H(1, "12"), {"12" + H(1, "12") + "012130"}});
        v.push_back({14, 0, "13", {"130"}});
        v.push_back({15, 0, "31", {"312"}});
        v.push_back({16, 1, "01312" + H(1, "012"), {"01312" + H(1, "012") + "3101213"}});
        v.push_back({17, 1, H(1, "012") + "0121301", {H(1, "01231")}});
        v.push_back({18, 0, "1201", {"12013"}});
        return v;
    }();
    return kFixtures;
}

namespace {

const BigRat kRatioBound = BigRat(19, 22);

BigInt row_sum_N(const BigVec& v) {
    // (1,1,1) N v
    static const BigMatrix N = to_big(incidence_matrix(fixture_morphism("g")));
    return vec_sum(mat_vec(N, v));
}

BigVec pv4(const Word& w) { return to_big(parikh(w, 4)); }

// Affixes of the image-word bispecial W = x g(v) y from the extension pairs
// of v, with the substitutions 2 -> 12 on the left and 0 -> 01 on the right.
std::pair<Word, Word> g_side_affixes(const std::array<char, 2>& left,
                                     const std::array<char, 2>& right) {
    const Morphism& g = fixture_morphism("g");
    auto left_image = [&](char a) { return a == '2' ? palinword::apply(g, Word("12")) : palinword::apply(g, Word(1, a)); };
    auto right_image = [&](char c) { return c == '0' ? palinword::apply(g, Word("01")) : palinword::apply(g, Word(1, c)); };
    return {longest_common_suffix(left_image(left[0]), left_image(left[1])),
            longest_common_prefix(right_image(right[0]), right_image(right[1]))};
}

}  // namespace

std::vector<FamilyRatio> family_ratio_bound(int family, int n_max) {
    if (family != 1 && family != 15)
        throw std::invalid_argument("explicit recurrences cover families 1 and 15");
    const BigMatrix M = to_big(incidence_matrix(fixture_morphism("h")));
    std::vector<FamilyRatio> out;
    // per-step suffix Parikh contributions, by chain index mod 3
    if (family == 1) {
        BigVec w = pv4("12");                // core Parikh at n = 1
        BigVec r = mat_vec(M, BigVec{1, 2, 1, 1});  // shortest return Parikh at n = 2
        for (int n = 2; n <= n_max; ++n) {
            static const std::map<int, Word> kSuffix = {{2, "0121301"}, {0, "012"}, {1, ""}};
            w = vec_add(vec_add(pv4("12"), mat_vec(M, w)), pv4(kSuffix.at(n % 3)));
            if (n > 2) r = mat_vec(M, r);
            // image-word lengths: W = x g(w_n) y per the chain's extension pairs
            static const std::map<int, std::pair<BigInt, BigInt>> kAffix = {
                {1, {3, 7}}, {2, {3, 2}}, {0, {3, 1}}};  // |x| = |012|, |y| per n mod 3
            auto [xlen, ylen] = kAffix.at(n % 3);
            FamilyRatio fr;
            fr.n = n;
            fr.w_len = xlen + row_sum_N(w) + ylen;
            fr.r_len = row_sum_N(r);
            fr.ratio = BigRat(fr.w_len, fr.r_len);
            if (fr.ratio >= kRatioBound) throw std::runtime_error("family 1 ratio reaches 19/22");
            out.push_back(std::move(fr));
        }
    } else {
        BigVec w = pv4("31");  // n = 0
        BigVec r = pv4("312");
        for (int n = 0; n <= n_max; ++n) {
            static const std::map<int, std::pair<BigInt, BigInt>> kAffix = {
                {1, {2, 1}}, {2, {2, 7}}, {0, {2, 2}}};
            BigInt xlen = 2, ylen = n == 0 ? BigInt(2) : kAffix.at(n % 3).second;
            FamilyRatio fr;
            fr.n = n;
            fr.w_len = xlen + row_sum_N(w) + ylen;
            fr.r_len = row_sum_N(r);
            fr.ratio = BigRat(fr.w_len, fr.r_len);
            bool equality_allowed = n == 0;
            if (fr.ratio > kRatioBound || (!equality_allowed && fr.ratio == kRatioBound))
                throw std::runtime_error("family 15 ratio exceeds its bound");
            out.push_back(std::move(fr));
            // advance to n+1
            static const std::map<int, Word> kSuffix = {{2, ""}, {0, "0121301"}, {1, "012"}};
            w = n == 0 ? vec_add(mat_vec(M, w), pv4("012"))
                       : vec_add(mat_vec(M, w), pv4(kSuffix.at((n + 1) % 3)));
            r = mat_vec(M, r);
        }
    }
    return out;
}

std::vector<TowerSweep> sweep_all_families(int n_max, const Word& h_prefix, const Word& g_prefix) {
    const Morphism& h = fixture_morphism("h");
    const Morphism& g = fixture_morphism("g");
    const BigMatrix M = to_big(incidence_matrix(h));
    const auto& initials = family_initial_triplets();
    const auto& fixtures = family_return_fixtures();
    std::vector<TowerSweep> sweeps;

    for (size_t fam = 0; fam < initials.size(); ++fam) {
        const ReturnFixture& fx = fixtures[fam];
        TowerSweep sweep;
        sweep.family = fx.family;
        sweep.base_n = fx.base_n;

        // symbolic chain of (pairs, parikh) with real cores kept while small
        std::vector<SymbolicTriplet> chain{to_symbolic(initials[fam], 4)};
        std::vector<Word> cores{initials[fam].core};
        BispecialTriplet cur = initials[fam];
        for (int n = 1; n <= n_max; ++n) {
            chain.push_back(f_image_symbolic(chain.back(), h, M));
            if (cores.size() == static_cast<size_t>(n) && cur.core.size() < 200000) {
                cur = f_image(cur, h);
                cores.push_back(cur.core);
            }
        }

        // base checks: the fixture bispecial is the chain core at base_n, its
        // brute-forced minimal returns match, and the pushforward one step up
        // agrees with brute force.
        sweep.empirical_ok = cores.size() > static_cast<size_t>(fx.base_n) &&
                             cores[fx.base_n] == fx.bispecial;
        std::vector<BigVec> rvecs;
        for (const Word& r : fx.returns) rvecs.push_back(pv4(r));
        if (sweep.empirical_ok) {
            auto mins = shortest_return_words(h_prefix, fx.bispecial);
            std::set<Word> minset(mins.begin(), mins.end());
            for (const Word& r : fx.returns) sweep.empirical_ok &= minset.count(r) > 0;
            if (sweep.empirical_ok && cores.size() > static_cast<size_t>(fx.base_n + 1)) {
                auto next_mins = shortest_return_words(h_prefix, cores[fx.base_n + 1]);
                std::set<BigVec> pushed;
                for (const BigVec& rv : rvecs) pushed.insert(mat_vec(M, rv));
                for (const Word& r : next_mins) sweep.empirical_ok &= pushed.count(pv4(r)) > 0;
            }
            // image-word side: W at base_n occurs in the g-prefix with the
            // predicted shortest-return length
            const SymbolicTriplet& st = chain[fx.base_n];
            auto [x, y] = g_side_affixes(st.left, st.right);
            Word W = x + palinword::apply(g, cores[fx.base_n]) + y;
            BigInt rlen = row_sum_N(rvecs[0]);
            for (const BigVec& rv : rvecs) rlen = std::min(rlen, row_sum_N(rv));
            auto occ = occurrences(g_prefix, W);
            if (occ.size() < 3) {
                sweep.empirical_ok = false;
            } else {
                long long shortest = occ[1] - occ[0];
                for (size_t k = 1; k + 1 < occ.size(); ++k)
                    shortest = std::min(shortest, occ[k + 1] - occ[k]);
                sweep.empirical_ok &= BigInt(shortest) == rlen;
            }
        }

        for (int n = fx.base_n; n <= n_max; ++n) {
            const SymbolicTriplet& st = chain[n];
            auto [x, y] = g_side_affixes(st.left, st.right);
            FamilyRatio fr;
            fr.n = n;
            fr.w_len = BigInt(x.size()) + row_sum_N(st.core_parikh) + BigInt(y.size());
            BigInt rlen;
            bool first = true;
            for (const BigVec& rv : rvecs) {
                BigInt len = row_sum_N(rv);
                if (first || len < rlen) rlen = len;
                first = false;
            }
            fr.r_len = rlen;
            fr.ratio = BigRat(fr.w_len, fr.r_len);
            sweep.ratios.push_back(std::move(fr));
            for (BigVec& rv : rvecs) rv = mat_vec(M, rv);
        }
        sweeps.push_back(std::move(sweep));
    }
    return sweeps;
}

bool check_row_closed_form(int j_max) {
    const BigMatrix M = to_big(incidence_matrix(fixture_morphism("h")));
    const BigMatrix N = to_big(incidence_matrix(fixture_morphism("g")));
    BigVec row(4, 0);  // (1,1,1) N
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i) row[j] += N[i][j];
    BigMatrix Mj = identity_matrix(4);
    for (int j = 0; j <= j_max; ++j) {
        BigVec v(4, 0);
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) v[c] += row[k] * Mj[k][c];
        BigInt six = 1;
        for (int i = 0; i < j; ++i) six *= 6;
        BigVec expect{44 * six - 9, 11 * six + 9, 44 * six - 9, 55 * six};
        for (int c = 0; c < 4; ++c)
            if (5 * v[c] != expect[c]) return false;
        Mj = mat_mul(Mj, M);
    }
    return true;
}

bool check_eigen_fixture() {
    const BigMatrix M = to_big(incidence_matrix(fixture_morphism("h")));
    const BigMatrix D = {{6, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    const BigMatrix X = {{1, 2, 1, 1}, {2, -1, 1, 0}, {1, 2, 0, -1}, {1, -3, -1, 0}};
    const BigMatrix Xi15 = {{4, 1, 4, 5}, {3, -3, 3, 0}, {-5, 10, -5, -10}, {10, -5, -5, 5}};
    BigMatrix left = mat_mul(mat_mul(X, D), Xi15);  // 15 * M
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (left[i][j] != 15 * M[i][j]) return false;
    BigMatrix ident = mat_mul(X, Xi15);  // 15 * I
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (ident[i][j] != (i == j ? 15 : 0)) return false;
    return true;
}

}  // namespace palinword
