#include <random>

#include "doctest.h"
#include "palinword/avoidance.hpp"
#include "palinword/fixtures.hpp"
#include "palinword/morphisms.hpp"

using namespace palinword;

TEST_CASE("apply and fixed points") {
    const Morphism& t = fixture_morphism("t");
    CHECK(palinword::apply(t, Word("0")) == "01120");
    CHECK(palinword::apply(t, Word("")) == "");
    const Morphism& h = fixture_morphism("h");
    CHECK(palinword::apply(h, Word("31")) == "012130131231");

    CHECK(fixed_point_prefix(parse_morphism("0 -> 01\n1 -> 10\n"), '0', 8) == "01101001");
    CHECK(fixed_point_prefix(t, '0', 21) == "011201200112001201120");
    CHECK_THROWS_AS(fixed_point_prefix(parse_morphism("0 -> 01\n1 -> 10\n"), '1', 8),
                    std::invalid_argument);
}

TEST_CASE("fixed point prefixes are nested and stable under the morphism") {
    for (const char* name : {"t", "eta", "h"}) {
        const Morphism& m = fixture_morphism(name);
        Word a = fixed_point_prefix(m, '0', 500);
        Word b = fixed_point_prefix(m, '0', 1400);
        CHECK(b.substr(0, 500) == a);
        Word img = palinword::apply(m, a);
        CHECK(img.substr(0, 500) == a);
    }
}

TEST_CASE("incidence matrices") {
    Matrix M = incidence_matrix(fixture_morphism("h"));
    CHECK(M == Matrix{{2, 0, 2, 2}, {3, 1, 3, 4}, {2, 0, 2, 2}, {1, 1, 1, 2}});
    Matrix N = incidence_matrix(fixture_morphism("g"));
    CHECK(N == Matrix{{3, 1, 2, 4}, {2, 1, 3, 4}, {2, 2, 2, 3}});
    Matrix I = incidence_matrix(parse_morphism("0 -> 0\n1 -> 1\n"));
    CHECK(I == Matrix{{1, 0}, {0, 1}});
    CHECK_THROWS(incidence_matrix(fixture_morphism("cubefree_embed")));
}

TEST_CASE("parikh commutes with the incidence matrix") {
    std::mt19937 rng(29);
    const Morphism& h = fixture_morphism("h");
    Matrix M = incidence_matrix(h);
    for (int it = 0; it < 100; ++it) {
        Word u;
        for (int i = 0; i < 30; ++i) u.push_back(letter_char(rng() % 4));
        auto pu = parikh(u, 4);
        auto pim = parikh(palinword::apply(h, u), 4);
        for (int k = 0; k < 4; ++k) {
            long long s = 0;
            for (int j = 0; j < 4; ++j) s += M[k][j] * pu[j];
            CHECK(s == pim[k]);
        }
    }
}

TEST_CASE("classification") {
    auto ch = classify(fixture_morphism("h"));
    CHECK(ch.primitive);
    CHECK(!ch.uniform_length.has_value());

    auto ct = classify(fixture_morphism("t"));
    CHECK(!ct.primitive);  // the letter 2 maps to itself
    CHECK(ct.prolongable == "01");

    auto c4 = classify(fixture_morphism("u4"));
    CHECK(c4.uniform_length == 4);
    CHECK(c4.synchronizing);

    for (const char* name : {"u25", "u609", "u121", "u87", "lp72", "lp73", "lp128"}) {
        auto c = classify(fixture_morphism(name));
        CHECK(c.uniform_length.has_value());
        CHECK(c.synchronizing);
    }
    // the thue-morse morphism is not synchronizing: 01 straddles 10|01
    auto ctm = classify(parse_morphism("0 -> 01\n1 -> 10\n"));
    CHECK(!ctm.synchronizing);
}

TEST_CASE("classification is stable under letter permutation") {
    const Morphism& m = fixture_morphism("u4");
    // swap letters 0 and 1 in both source and target
    auto swap01 = [](Word w) {
        for (char& c : w)
            if (c == '0')
                c = '1';
            else if (c == '1')
                c = '0';
        return w;
    };
    Morphism relabeled = make_morphism({swap01(m.images[1]), swap01(m.images[0]), swap01(m.images[2])});
    auto ca = classify(m), cb = classify(relabeled);
    CHECK(ca.synchronizing == cb.synchronizing);
    CHECK(ca.uniform_length == cb.uniform_length);
}

TEST_CASE("mrs bound") {
    CHECK(mrs_bound(make_rational(7, 4), make_rational(9, 4), 25) == make_rational(9, 1));
    CHECK(mrs_bound(make_rational(7, 4), make_rational(2, 1), 4) == make_rational(16, 1));
    CHECK(mrs_bound(make_rational(7, 5), make_rational(7, 4), 87) == make_rational(10, 1));
    CHECK_THROWS_AS(mrs_bound(make_rational(9, 4), make_rational(7, 4), 4), std::invalid_argument);
}

TEST_CASE("transfer verification on the small instances") {
    auto c25 = verify_transfer(fixture_morphism("u25"), parse_threshold("7/4+"),
                               parse_threshold("9/4+"), 2);
    CHECK(c25.pass);
    CHECK(c25.t_bound == make_rational(9, 1));

    auto c4 = verify_transfer(fixture_morphism("u4"), parse_threshold("7/4+"),
                              parse_threshold("2+"), 2);
    CHECK(c4.pass);
    CHECK(c4.enumeration_length == 16);

    // the identity morphism transfers nothing interesting: alpha-free words
    // with exponents in (3/2, 7/4] are counterexamples
    Morphism ident = parse_morphism("0 -> 0\n1 -> 1\n2 -> 2\n");
    auto cid = verify_transfer(ident, parse_threshold("7/4+"), parse_threshold("3/2+"), 1);
    CHECK(!cid.pass);
    REQUIRE(cid.counterexample.has_value());
    CHECK(!is_free(*cid.counterexample, parse_threshold("3/2+")));
    CHECK(is_free(*cid.counterexample, parse_threshold("7/4+")));

    CHECK_THROWS_AS(verify_transfer(fixture_morphism("h"), parse_threshold("7/4+"),
                                    parse_threshold("2+"), 1),
                    std::invalid_argument);
}

TEST_CASE("transfer pass implies images of sampled free words are free") {
    std::mt19937 rng(31);
    const Morphism& m = fixture_morphism("u4");
    Threshold alpha = parse_threshold("7/4+"), beta = parse_threshold("2+");
    for (int it = 0; it < 100; ++it) {
        // random alpha-free word of length 50 by rejection extension
        Word w;
        int guard = 0;
        while (static_cast<int>(w.size()) < 50 && guard < 4000) {
            char c = letter_char(rng() % 3);
            w.push_back(c);
            if (!extend_free_check(w, alpha)) w.pop_back();
            ++guard;
        }
        CHECK(is_free(palinword::apply(m, w), beta));
    }
}

TEST_CASE("cube-free image spot checks") {
    Morphism f = make_morphism({Word("012"), Word("0012")});
    CHECK(is_free(palinword::apply(f, Word("01")), parse_threshold("10/3+")));
    // f(00) = 012012 contains a square, so a 2+ demand must fail
    auto neg = verify_cubefree_transfer_nonuniform(parse_threshold("2+"), 6, 1);
    CHECK(!neg.pass);
}

TEST_CASE("synchronization points of the h images") {
    const Morphism& h = fixture_morphism("h");
    Word hw = fixed_point_prefix(h, '0', 30000);
    for (const Word& w : {palinword::apply(h, Word("0")), palinword::apply(h, Word("2")),
                          palinword::apply(h, Word("3"))}) {
        size_t bound = sync_locality_bound(h, w);
        CHECK(synchronization_point_check(h, hw, w, 0, bound));
        CHECK(synchronization_point_check(h, hw, w, w.size(), bound));
    }
    // h(1) = 31 alone is not synchronized: it occurs inside h(3)
    Word h1 = palinword::apply(h, Word("1"));
    CHECK(!synchronization_point_check(h, hw, h1, 0, sync_locality_bound(h, h1)));

    // thue-morse: 01 = image of 0 straddles the images in 10|01
    Morphism tm = parse_morphism("0 -> 01\n1 -> 10\n");
    Word tmw = thue_morse_prefix(5000);
    CHECK(!synchronization_point_check(tm, tmw, Word("01"), 0, sync_locality_bound(tm, Word("01"))));

    CHECK_THROWS_AS(synchronization_point_check(h, hw, palinword::apply(h, Word("0")), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("morphism file format round trip") {
    const Morphism& g = fixture_morphism("g");
    Morphism back = parse_morphism(format_morphism(g));
    CHECK(back.images == g.images);
    CHECK_THROWS(parse_morphism("0 => 01\n"));
    CHECK_THROWS(parse_morphism("0 -> 01\n0 -> 10\n"));
    Morphism commented = parse_morphism("# comment\n0 -> 01\n\n1 -> 10\n");
    CHECK(commented.images.size() == 2);
}
