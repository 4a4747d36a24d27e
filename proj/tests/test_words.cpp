#include "doctest.h"

#include "dqp/serialize.hpp"
#include "dqp/words.hpp"

using namespace dqp;

TEST_CASE("packed word validation") {
    CHECK_NOTHROW(PackedWord({2, 1, 3, 1, 3}));
    CHECK_THROWS_AS(PackedWord({2, 3, 5, 8, 2, 2, 3}), ParseError); // gaps
    CHECK_THROWS_AS(PackedWord({0, 1}), ParseError);
    CHECK_THROWS_AS(PackedWord({2, 2}), ParseError); // missing 1
    CHECK(PackedWord({1, 2, 3}).is_permutation());
    CHECK_FALSE(PackedWord({1, 1, 2}).is_permutation());
}

TEST_CASE("word to structure") {
    const auto single = word_to_dqp(PackedWord({1}));
    CHECK(single == single_point());

    const auto fused = word_to_dqp(PackedWord({1, 1}));
    CHECK(fused.le1() == Preorder::indiscrete(2));
    CHECK(fused.le2() == Preorder::chain(2));

    const auto w21 = word_to_dqp(PackedWord({2, 1}));
    CHECK(w21.le1().lt(1, 0));
    CHECK_FALSE(w21.le1().leq(0, 1));
    CHECK(w21.is_special());
    CHECK(w21.le1().is_total());
}

TEST_CASE("compatible permutations") {
    const PackedWord perm({3, 1, 2});
    const auto only = compatible(perm);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == perm.to_perm());

    CHECK(compatible(PackedWord({1, 1})).size() == 2);

    const auto c = compatible(PackedWord({2, 1, 2}));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == perm_from_string("213"));
    CHECK(c[1] == perm_from_string("312"));
}

TEST_CASE("word internal products") {
    const PackedWord u({1, 1});
    const PackedWord v({2, 1});
    WordCombination expected;
    expected.add(PackedWord({2, 1}), Rational(1));
    expected.add(PackedWord({1, 2}), Rational(1));
    CHECK(word_internal(u, v, InternalKind::lt) == expected);
    CHECK(word_internal(u, v, InternalKind::le).is_zero());

    // Permutation words compose on both kinds.
    const PackedWord s({2, 3, 1});
    const PackedWord t({3, 1, 2});
    const auto le = word_internal(s, t, InternalKind::le);
    const auto lt = word_internal(s, t, InternalKind::lt);
    CHECK(le == lt);
    CHECK(le == WordCombination::single(word_after_perm(t, s.to_perm())));

    CHECK_THROWS_AS(word_internal(u, PackedWord({1, 2, 3}), InternalKind::lt), ParseError);
}

TEST_CASE("zeta morphisms") {
    PermCombination expected;
    expected.add(perm_from_string("12"), Rational(1));
    expected.add(perm_from_string("21"), Rational(1));
    CHECK(zeta(PackedWord({1, 1})) == expected);

    const Perm sigma = perm_from_string("21");
    CHECK(zeta(zeta_prime(sigma)) == PermCombination::single(sigma));

    // On a permutation word, zeta is just the inverse.
    const PackedWord w({2, 3, 1});
    CHECK(zeta(w) == PermCombination::single(inverse(w.to_perm())));

    // Linear extension of the section.
    PermCombination two;
    two.add(perm_from_string("12"), Rational(1, 2));
    two.add(perm_from_string("21"), Rational(3));
    CHECK(zeta(zeta_prime(two)) == two);
}

TEST_CASE("word enumeration") {
    const auto words2 = enumerate_packed_words(2);
    REQUIRE(words2.size() == 3);
    CHECK(words2[0] == PackedWord({1, 1}));
    CHECK(words2[1] == PackedWord({1, 2}));
    CHECK(words2[2] == PackedWord({2, 1}));

    CHECK(enumerate_packed_words(3, 0, true).size() == 4);
    CHECK(enumerate_packed_words(1).size() == 1);
    CHECK(enumerate_packed_words(3, 2).size() == 6);
    CHECK_THROWS_AS(enumerate_packed_words(7), SizeLimitError);
}
