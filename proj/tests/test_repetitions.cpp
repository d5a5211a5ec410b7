#include <random>

#include "doctest.h"
#include "palinword/fixtures.hpp"
#include "palinword/morphisms.hpp"
#include "palinword/repetitions.hpp"

using namespace palinword;

namespace {

// independent oracle: longest-common-extension table, max over all pairs
Rational brute_max_exponent(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> lce(n + 1, std::vector<int>(n + 1, 0));
    for (int i = n - 1; i >= 0; --i)
        for (int j = n - 1; j > i; --j)
            if (w[i] == w[j]) lce[i][j] = lce[i + 1][j + 1] + 1;
    Rational best = make_rational(1, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lce[i][j] > 0) {
                Rational e = make_rational(j - i + lce[i][j], j - i);
                if (best < e) best = e;
            }
    return best;
}

bool witness_is_valid(const Word& w, const Repetition& r) {
    if (r.start < 0 || r.period < 1 || r.length < 1) return false;
    if (r.start + r.length > static_cast<long long>(w.size())) return false;
    for (long long i = r.start; i + r.period < r.start + r.length; ++i)
        if (w[i] != w[i + r.period]) return false;
    return true;
}

}  // namespace

TEST_CASE("threshold parsing") {
    Threshold t = parse_threshold("41/22+");
    CHECK(t.value == make_rational(41, 22));
    CHECK(t.plus);
    CHECK(parse_threshold("2+").value == make_rational(2, 1));
    CHECK(!parse_threshold("52/27").plus);
    CHECK(to_string(parse_threshold("41/22+")) == "41/22+");
    CHECK_THROWS_AS(parse_threshold("1"), std::invalid_argument);
}

TEST_CASE("max exponent on small words") {
    // kavka over letters k,a,v -> 0,1,2
    auto m = max_exponent("01201");
    CHECK(m.exponent == make_rational(5, 3));
    CHECK(m.witness.period == 3);
    CHECK(witness_is_valid("01201", m.witness));

    CHECK(max_exponent("00").exponent == make_rational(2, 1));
    CHECK(max_exponent("0").exponent == make_rational(1, 1));
    CHECK_THROWS_AS(max_exponent(""), std::invalid_argument);
}

TEST_CASE("thue-morse prefix is overlap free with squares") {
    Word tm = thue_morse_prefix(64);
    auto m = max_exponent(tm);
    CHECK(m.exponent == make_rational(2, 1));
}

TEST_CASE("max exponent agrees with brute force on random and structured words") {
    std::mt19937 rng(5);
    for (int it = 0; it < 400; ++it) {
        int len = 1 + static_cast<int>(rng() % 40);
        int d = 2 + static_cast<int>(rng() % 3);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(letter_char(rng() % d));
        auto m = max_exponent(w);
        CHECK(m.exponent == brute_max_exponent(w));
        CHECK(witness_is_valid(w, m.witness));
        CHECK(make_rational(m.witness.length, m.witness.period) == m.exponent);
    }
}

TEST_CASE("freeness checks") {
    // only candidate repetition in 010 has exponent 3/2
    CHECK(is_free("010", parse_threshold("3/2+")));
    auto v = freeness_violation("010", parse_threshold("3/2"));
    REQUIRE(v.has_value());
    CHECK(v->period == 2);
    CHECK(v->length == 3);

    Word tw = fixed_point_prefix(fixture_morphism("t"), '0', 10000);
    CHECK(is_free(tw, parse_threshold("2+")));
    CHECK(!is_free(tw, parse_threshold("2")));

    // the displayed 41/22 power embeds in a word that is not 41/22-free
    Word pw = periodic_prefix("2012101202120102012021", 41);
    CHECK(!is_free(pw, parse_threshold("41/22")));
    CHECK(is_free(pw, parse_threshold("41/22+")));
}

TEST_CASE("freeness is monotone in the threshold") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        Word w;
        for (int i = 0; i < 30; ++i) w.push_back(letter_char(rng() % 3));
        if (is_free(w, parse_threshold("9/4+")))
            CHECK(is_free(w, parse_threshold("7/3")));  // any gamma > 9/4
    }
}

TEST_CASE("extend check equals the full check when the prefix is free") {
    Threshold t = parse_threshold("2+");
    CHECK(extend_free_check(Word("010"), t));
    CHECK(extend_free_check(Word("011"), t));            // 11 is allowed at 2+
    CHECK(!extend_free_check(Word("011"), parse_threshold("2")));
    CHECK(!extend_free_check(Word("01010"), parse_threshold("7/4+")));  // exponent 5/2

    std::mt19937 rng(23);
    for (int it = 0; it < 300; ++it) {
        Threshold th = (it % 2) ? parse_threshold("2+") : parse_threshold("9/4");
        Word w;
        for (int i = 0; i < 25; ++i) {
            w.push_back(letter_char(rng() % 3));
            bool incremental = extend_free_check(w, th);
            bool full = is_free(w, th);
            if (!incremental) {
                CHECK(!full);
                w.pop_back();  // keep the prefix free so the contract applies
            } else {
                CHECK(full);  // prefix free + last position clean = word free
            }
        }
    }
}

TEST_CASE("return words") {
    Word w012 = periodic_prefix("012", 30);
    auto rs = return_words(w012, "0");
    CHECK(rs.returns == std::vector<Word>{"012"});

    Word tw = fixed_point_prefix(fixture_morphism("t"), '0', 10000);
    auto r2 = return_words(tw, "2");
    std::set<Word> r1set{"201", "2001", "2011", "20011"};
    for (const Word& r : r2.returns) CHECK(r1set.count(r) == 1);

    Word hw = fixed_point_prefix(fixture_morphism("h"), '0', 10000);
    auto r31 = return_words(hw, "31");
    CHECK(std::find(r31.returns.begin(), r31.returns.end(), "312") != r31.returns.end());

    CHECK_THROWS(return_words("0120", "00"));
}

TEST_CASE("return words of generated prefixes start with the anchor context") {
    Word hw = fixed_point_prefix(fixture_morphism("h"), '0', 20000);
    for (const Word& anchor : {Word("3"), Word("13"), Word("31")}) {
        auto rs = return_words(hw, anchor);
        for (const Word& r : rs.returns) {
            CHECK(r.substr(0, anchor.size()) == anchor.substr(0, std::min(r.size(), anchor.size())));
            if (r.size() >= anchor.size()) {
                Word rw = r + anchor;
                CHECK(rw.substr(0, anchor.size()) == anchor);
                CHECK(occurrences(rw, anchor).size() == 2);
            }
        }
    }
}
