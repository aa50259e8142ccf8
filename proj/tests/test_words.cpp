#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulersum/numbers.hpp"
#include "eulersum/words.hpp"

using namespace eulersum;

namespace {

EulerWord w(std::initializer_list<WordEntry> entries) {
    return EulerWord(std::vector<WordEntry>(entries));
}

// Total number of quasi-shuffles of depths (a, b), counted with multiplicity:
// T(a,b) = T(a-1,b) + T(a,b-1) + T(a-1,b-1).
long shuffle_count(unsigned a, unsigned b) {
    if (a == 0 || b == 0) return 1;
    return shuffle_count(a - 1, b) + shuffle_count(a, b - 1) + shuffle_count(a - 1, b - 1);
}

}  // namespace

TEST_CASE("word admissibility and accessors") {
    EulerWord ok = w({{2, true}, {4, false}});
    CHECK(ok.depth() == 2);
    CHECK(ok.weight() == 6);
    CHECK_NOTHROW(w({{1, true}}));  // bar makes s=1 admissible
    CHECK_THROWS_AS(w({{1, false}, {2, false}}), std::domain_error);
    CHECK_THROWS_AS(w({}), std::domain_error);
    CHECK(w({{2, false}}) < w({{2, true}}));
    CHECK(w({{2, false}, {2, false}}) < w({{3, false}}));
}

TEST_CASE("word grammar") {
    CHECK(parse_word("2b,4") == w({{2, true}, {4, false}}));
    CHECK(parse_word(" 2 b , 4 ") == w({{2, true}, {4, false}}));
    CHECK(parse_word("10") == w({{10, false}}));
    CHECK(parse_word("1b") == w({{1, true}}));
    CHECK(format_word(parse_word("2b,4,6b")) == "2b,4,6b");

    CHECK_THROWS_AS(parse_word("1"), std::domain_error);           // inadmissible
    CHECK_THROWS_WITH_AS(parse_word("1,2"),
                         doctest::Contains("(s1,eps1) != (1,1)"), std::domain_error);
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("2bb"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("2,,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("2,"), std::invalid_argument);
}

TEST_CASE("compositions") {
    auto c32 = compositions(3, 2);
    REQUIRE(c32.size() == 2);
    CHECK(c32[0].parts == std::vector<unsigned>{1, 2});
    CHECK(c32[1].parts == std::vector<unsigned>{2, 1});

    auto c41 = compositions(4, 1);
    REQUIRE(c41.size() == 1);
    CHECK(c41[0].parts == std::vector<unsigned>{4});

    CHECK(compositions(10, 4).size() == 84);  // C(9,3)
    CHECK(compositions(2, 3).empty());
    // lexicographic and duplicate-free
    auto c63 = compositions(6, 3);
    CHECK(c63.size() == 10);
    for (std::size_t i = 1; i < c63.size(); ++i) CHECK(c63[i - 1] < c63[i]);
    for (const auto& c : c63) CHECK(c.sum() == 6);
}

TEST_CASE("composition text") {
    CHECK(parse_composition("1,2").parts == std::vector<unsigned>{1, 2});
    CHECK(parse_composition(" 3 , 1 ,2").parts == std::vector<unsigned>{3, 1, 2});
    CHECK_THROWS_AS(parse_composition("0,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
}

TEST_CASE("sign assignments") {
    auto p21 = sign_assignments(2, 1);
    REQUIRE(p21.size() == 2);
    CHECK(p21[0] == std::vector<bool>{true, false});
    CHECK(p21[1] == std::vector<bool>{false, true});
    CHECK(sign_assignments(3, 0) == std::vector<std::vector<bool>>{{false, false, false}});
    CHECK(sign_assignments(4, 2).size() == 6);
    CHECK(sign_assignments(2, 3).empty());
}

TEST_CASE("xi word signs") {
    CHECK(xi_word(Composition{{1, 2}}) == w({{2, true}, {4, false}}));
    CHECK(xi_word(Composition{{2, 1}}) == w({{4, false}, {2, true}}));
    CHECK(xi_word(Composition{{2, 2}}) == w({{4, false}, {4, false}}));
}

TEST_CASE("stuffle products") {
    // depth 1 x depth 1 with bars cancelling in the merge
    WordCombination p = stuffle(w({{2, true}}), w({{4, true}}));
    REQUIRE(p.size() == 3);
    CHECK(p[w({{2, true}, {4, true}})] == 1);
    CHECK(p[w({{4, true}, {2, true}})] == 1);
    CHECK(p[w({{6, false}})] == 1);

    WordCombination q = stuffle(w({{2, true}}), w({{4, false}}));
    CHECK(q[w({{6, true}})] == 1);

    WordCombination r = stuffle(w({{2, false}}), w({{2, false}, {2, false}}));
    REQUIRE(r.size() == 3);
    CHECK(r[w({{2, false}, {2, false}, {2, false}})] == 3);
    CHECK(r[w({{4, false}, {2, false}})] == 1);
    CHECK(r[w({{2, false}, {4, false}})] == 1);
}

TEST_CASE("stuffle structure on random pairs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<unsigned> depth_dist(1, 3);
    std::uniform_int_distribution<unsigned> half(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_word = [&] {
        unsigned d = depth_dist(rng);
        std::vector<WordEntry> entries;
        for (unsigned i = 0; i < d; ++i)
            entries.push_back({2 * half(rng), coin(rng) == 1});
        return EulerWord(std::move(entries));
    };
    for (int rep = 0; rep < 100; ++rep) {
        EulerWord w1 = random_word(), w2 = random_word();
        WordCombination p = stuffle(w1, w2);
        CHECK(p == stuffle(w2, w1));

        long total = 0;
        std::map<unsigned, long> by_depth;
        for (const auto& [word, mult] : p) {
            CHECK(mult > 0);
            CHECK(word.weight() == w1.weight() + w2.weight());
            CHECK(word.depth() <= w1.depth() + w2.depth());
            total += mult;
            by_depth[word.depth()] += mult;
        }
        CHECK(total == shuffle_count(w1.depth(), w2.depth()));
        // with k merges the output depth is d1+d2-k and the count is the
        // trinomial (d1+d2-k)! / ((d1-k)! (d2-k)! k!)
        for (unsigned k = 0; k <= std::min(w1.depth(), w2.depth()); ++k) {
            unsigned dep = w1.depth() + w2.depth() - k;
            mpz_class expect = factorial(dep) /
                               (factorial(w1.depth() - k) * factorial(w2.depth() - k) *
                                factorial(k));
            CHECK(by_depth[dep] == expect.get_si());
        }
    }
}

TEST_CASE("restricted words") {
    auto only = restricted_words(2, 2, 2);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == w({{2, true}, {2, true}}));

    auto four = restricted_words(3, 2, 1);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == w({{2, true}, {4, false}}));
    CHECK(four[1] == w({{2, false}, {4, true}}));
    CHECK(four[2] == w({{4, true}, {2, false}}));
    CHECK(four[3] == w({{4, false}, {2, true}}));

    CHECK(restricted_words(6, 3, 2).size() == 30);  // C(5,2) * C(3,2)
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned d = 1; d <= n; ++d)
            for (unsigned alpha = 0; alpha <= d; ++alpha) {
                mpz_class expect = binomial(n - 1, d - 1) * binomial(d, alpha);
                CHECK(restricted_words(n, d, alpha).size() ==
                      static_cast<std::size_t>(expect.get_ui()));
            }
}
