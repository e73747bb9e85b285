#include "nonnest/enumerate.hpp"

#include <doctest.h>

#include "testutil.hpp"

#include <algorithm>
#include <set>

using namespace nonnest;

namespace {

std::set<Word> word_set(const std::vector<NonnestingPermutation>& v) {
    std::set<Word> out;
    for (const auto& p : v) out.insert(p.word);
    return out;
}

}  // namespace

TEST_CASE("small generations are exact") {
    auto c1 = generate_nonnesting(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].word == parse_word("11"));

    auto c2 = generate_nonnesting(2);
    std::vector<Word> expect{parse_word("1122"), parse_word("1212"),
                             parse_word("2121"), parse_word("2211")};
    REQUIRE(c2.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c2[i].word == expect[i]);

    CHECK(generate_nonnesting(3).size() == 30);
    CHECK(generate_nonnesting(0).size() == 1);  // the empty word
}

TEST_CASE("emission is lexicographic and duplicate-free") {
    for (int n = 1; n <= 5; ++n) {
        Word prev;
        bool first = true;
        long count = 0;
        for_each_nonnesting(n, [&](const Word& w) {
            if (!first) CHECK(prev < w);
            prev = w;
            first = false;
            ++count;
        });
        CHECK(BigInt(count) == factorial(2 * n) / factorial(n + 1));
    }
}

TEST_CASE("counting matches the closed forms from the worked examples") {
    CHECK(count_avoiders(3, parse_pattern_set("112")) == 5);
    CHECK(count_avoiders(4, parse_pattern_set("121")) == 24);
    CHECK(count_avoiders(5, parse_pattern_set("123,321")) == 0);
    CHECK(count_avoiders(6, parse_pattern_set("123,321")) == 0);
    CHECK(count_avoiders(7, parse_pattern_set("123,321")) == 0);
    // patterns needing three distinct values cannot occur at n = 2
    for (const char* ps : {"123", "312,231", "1234", "1123,1132"})
        CHECK(count_avoiders(2, parse_pattern_set(ps)) == 4);
}

TEST_CASE("generated avoider sets from the proofs") {
    auto dup = generate_avoiders(3, parse_pattern_set("121"));
    std::set<Word> expect{parse_word("112233"), parse_word("113322"),
                          parse_word("221133"), parse_word("223311"),
                          parse_word("331122"), parse_word("332211")};
    CHECK(word_set(dup) == expect);

    auto all1 = generate_avoiders(1, PatternSet{});
    CHECK(word_set(all1) == std::set<Word>{parse_word("11")});

    auto c2 = generate_avoiders(2, parse_pattern_set("1212"));
    CHECK(word_set(c2) ==
          std::set<Word>{parse_word("1122"), parse_word("2121"), parse_word("2211")});

    // C_n already avoids 1221 and 2112
    for (int n = 1; n <= 4; ++n)
        CHECK(count_avoiders(n, parse_pattern_set("1221,2112")) ==
              factorial(2 * n) / factorial(n + 1));
}

TEST_CASE("ordinary permutation avoiders") {
    CHECK(count_sn_avoiders(4, parse_pattern_set("123")) == 14);
    CHECK(count_sn_avoiders(5, parse_pattern_set("132,213")) == 16);
    for (int n = 1; n <= 6; ++n)
        CHECK(count_sn_avoiders(n, PatternSet{}) == factorial(n));
}

TEST_CASE("middle-repeat counts factor as |S_n(sigma)| * C_n") {
    for (const char* sigma_text : {"123", "132", "123,132", "132,213", "123,132,213"}) {
        PatternSet sigma = parse_pattern_set(sigma_text);
        std::vector<Word> doubled;
        for (const Word& s : sigma.patterns) doubled.push_back({s[0], s[1], s[1], s[2]});
        PatternSet lambda(doubled);
        for (int n = 1; n <= 5; ++n)
            CHECK(count_avoiders(n, lambda) == count_sn_avoiders(n, sigma) * catalan(n));
    }
}

TEST_CASE("pruned counting agrees with the naive oracle") {
    std::mt19937 rng(101);
    for (int i = 0; i < 25; ++i) {
        PatternSet ps = testutil::random_pattern_set(rng, 3);
        for (int n = 1; n <= 4; ++n)
            CHECK(count_avoiders(n, ps) == count_avoiders_naive(n, ps));
    }
}

TEST_CASE("counts are symmetry invariant") {
    std::mt19937 rng(202);
    std::vector<PatternSet> sets{parse_pattern_set("112"), parse_pattern_set("123,231"),
                                 parse_pattern_set("1322,2231")};
    for (int i = 0; i < 5; ++i) sets.push_back(testutil::random_pattern_set(rng, 2));
    for (const auto& ps : sets) {
        for (int n = 1; n <= 5; ++n) {
            BigInt base = count_avoiders(n, ps);
            for (const auto& image : symmetry_orbit(ps))
                CHECK(count_avoiders(n, image) == base);
        }
    }
}

TEST_CASE("adding patterns never increases the count") {
    std::mt19937 rng(303);
    for (int i = 0; i < 20; ++i) {
        PatternSet small = testutil::random_pattern_set(rng, 2);
        std::vector<Word> larger = small.patterns;
        larger.push_back(testutil::random_word(rng, 3, 4, 4));
        PatternSet big(larger);
        for (int n = 1; n <= 4; ++n)
            CHECK(count_avoiders(n, big) <= count_avoiders(n, small));
    }
}

TEST_CASE("set equalities used in the transfer arguments") {
    auto same = [](int n, const char* a, const char* b) {
        return word_set(generate_avoiders(n, parse_pattern_set(a))) ==
               word_set(generate_avoiders(n, parse_pattern_set(b)));
    };
    for (int n = 1; n <= 6; ++n) {
        CHECK(same(n, "1123,1132", "1223,1332"));
        CHECK(same(n, "1322,3122", "1332,3112"));
        CHECK(same(n, "1123,1132,2133", "1223,1332,2113"));
        CHECK(same(n, "1132,2213,2311", "1132,2113,2311"));
    }
}

TEST_CASE("parallel counting is deterministic and equal to sequential") {
    for (const char* ps_text : {"", "112", "123,132,213", "1322,2231"}) {
        PatternSet ps = parse_pattern_set(ps_text);
        for (int n : {1, 2, 5, 6}) {
            BigInt seq = count_avoiders(n, ps, 1);
            CHECK(count_avoiders(n, ps, 4) == seq);
            CHECK(count_avoiders(n, ps, 3) == seq);
        }
    }
}

TEST_CASE("descent polynomials") {
    CHECK(descent_polynomial(1, PatternSet{}) == IntPolynomial({1}));
    CHECK(descent_polynomial(2, PatternSet{}) == IntPolynomial({1, 2, 1}));
    // t = 1 recovers the plain count
    std::mt19937 rng(404);
    for (int i = 0; i < 10; ++i) {
        PatternSet ps = testutil::random_pattern_set(rng, 2);
        for (int n = 1; n <= 4; ++n)
            CHECK(descent_polynomial(n, ps).at_one() == count_avoiders(n, ps));
    }
}

TEST_CASE("single-letter and oversized patterns") {
    CHECK(count_avoiders(3, parse_pattern_set("1")) == 0);
    // a pattern needing more distinct values than n is vacuous
    CHECK(count_avoiders(2, parse_pattern_set("123456")) == 4);
}
