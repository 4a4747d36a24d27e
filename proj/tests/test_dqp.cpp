#include "doctest.h"

#include <set>

#include "dqp/double_quasi_poset.hpp"

using namespace dqp;

namespace {

const DoubleQuasiPoset kC2{Preorder::chain(2), Preorder::chain(2)};

} // namespace

TEST_CASE("product of points") {
    const auto d1 = single_point();
    const auto pp = product(d1, d1);
    CHECK(pp.size() == 2);
    CHECK(pp.le1() == Preorder::discrete(2));
    CHECK(pp.le2() == Preorder::chain(2));

    const DoubleQuasiPoset nine(Preorder::discrete(9), Preorder::discrete(9));
    CHECK_THROWS_AS(product(nine, nine), SizeLimitError);

    const DoubleQuasiPoset empty;
    CHECK(product(d1, empty) == d1);
    CHECK(product(empty, d1) == d1);

    const auto triple = product(product(d1, d1), d1);
    CHECK(triple == product(d1, product(d1, d1)));
    CHECK(triple.le2() == Preorder::chain(3));
}

TEST_CASE("restriction") {
    const auto d1 = single_point();
    CHECK(restrict_mask(kC2, 0b11) == kC2);
    CHECK(restrict_mask(kC2, 0) == DoubleQuasiPoset{});
    CHECK(restrict_to(kC2, {1}) == d1);
    CHECK_THROWS_AS(restrict_to(kC2, {7}), std::out_of_range);
}

TEST_CASE("splitting") {
    // One point below a fused pair, second relation a chain: splitting keeps
    // the strict pairs and separates the fused vertices.
    const DoubleQuasiPoset p(Preorder::closure(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}),
                             Preorder::chain(3));
    const auto split = splitting(p);
    CHECK(split.le1() == Preorder::closure(3, {{0, 1}, {0, 2}}));
    CHECK(split.le2() == Preorder::chain(3));
    CHECK(split.is_double_poset());

    CHECK(splitting(kC2) == kC2);
    const DoubleQuasiPoset both_fused(Preorder::indiscrete(2), Preorder::indiscrete(2));
    CHECK(splitting(both_fused) ==
          DoubleQuasiPoset(Preorder::discrete(2), Preorder::discrete(2)));
}

TEST_CASE("iota") {
    const DoubleQuasiPoset p(Preorder::discrete(2), Preorder::chain(2));
    CHECK(iota(p) == DoubleQuasiPoset(Preorder::chain(2), Preorder::discrete(2)));
    CHECK(iota(iota(p)) == p);
    CHECK(iota(kC2) == kC2);
}

TEST_CASE("canonical forms and automorphisms") {
    const auto d1 = single_point();
    const auto pp = product(d1, d1);
    CHECK(automorphisms(pp).size() == 1); // the chain on the second relation is rigid

    const DoubleQuasiPoset fully_discrete(Preorder::discrete(2), Preorder::discrete(2));
    CHECK(automorphisms(fully_discrete).size() == 2);

    // Any relabeling has the same representative.
    const DoubleQuasiPoset p(Preorder::closure(3, {{0, 1}, {1, 2}, {0, 2}}),
                             Preorder::closure(3, {{2, 0}}));
    const Perm sigma{2, 0, 1};
    CHECK(canonicalize(p) == canonicalize(relabel(p, sigma)));
    CHECK(canonicalize(p) != canonicalize(iota(p)));

    const DoubleQuasiPoset big(Preorder::discrete(9), Preorder::discrete(9));
    CHECK_THROWS_AS(canonical_form(big), SizeLimitError);
}

TEST_CASE("automorphisms form a group") {
    const DoubleQuasiPoset symmetric(Preorder::indiscrete(3),
                                     Preorder::closure(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}));
    const auto auts = automorphisms(symmetric);
    CHECK(auts.size() == 2);
    const std::set<Perm> group(auts.begin(), auts.end());
    CHECK(group.count(identity_perm(3)) == 1);
    for (const auto& a : auts) {
        CHECK(group.count(inverse(a)) == 1);
        for (const auto& b : auts)
            CHECK(group.count(compose(a, b)) == 1);
    }
}

TEST_CASE("blow ups") {
    const DoubleQuasiPoset two_class(Preorder::closure(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}),
                                     Preorder::chain(3));
    const auto blows = blow_ups(two_class);
    REQUIRE(blows.size() == 3);
    const std::set<DoubleQuasiPoset> got(blows.begin(), blows.end());
    const std::set<DoubleQuasiPoset> expected{
        two_class,
        {Preorder::closure(3, {{0, 1}, {1, 2}}), Preorder::chain(3)},
        {Preorder::closure(3, {{0, 2}, {2, 1}}), Preorder::chain(3)},
    };
    CHECK(got == expected);

    CHECK(blow_ups(DoubleQuasiPoset(Preorder::indiscrete(3), Preorder::chain(3))).size() == 13);
    CHECK(blow_ups(kC2) == std::vector<DoubleQuasiPoset>{kC2});
}

TEST_CASE("blow-up order") {
    const DoubleQuasiPoset chain2(Preorder::chain(2), Preorder::chain(2));
    const DoubleQuasiPoset fused2(Preorder::indiscrete(2), Preorder::chain(2));
    CHECK(is_blowup_le(chain2, chain2));
    CHECK(is_blowup_le(fused2, chain2));
    CHECK_FALSE(is_blowup_le(chain2, fused2));

    const DoubleQuasiPoset fused3(Preorder::indiscrete(3), Preorder::chain(3));
    for (const auto& b : blow_ups(fused3))
        CHECK(is_blowup_le(fused3, b));
}

TEST_CASE("pair stats") {
    CHECK(pair_stats(single_point()).le1_pairs == 1);
    CHECK(pair_stats(single_point()).le2_pairs == 1);
    CHECK(pair_stats(kC2).le1_pairs == 3);
    CHECK(pair_stats(kC2).le2_pairs == 3);
    const DoubleQuasiPoset mixed(Preorder::indiscrete(2), Preorder::chain(2));
    CHECK(pair_stats(mixed).le1_pairs == 4);
    CHECK(pair_stats(mixed).le2_pairs == 3);
}

TEST_CASE("isoclass counts") {
    CHECK(enumerate_isoclasses(1, Family::dqp).size() == 1);
    CHECK(enumerate_isoclasses(2, Family::dqp).size() == 10);
    CHECK(enumerate_isoclasses(3, Family::dqp).size() == 166);
    CHECK(enumerate_isoclasses(1, Family::sqp).size() == 1);
    CHECK(enumerate_isoclasses(2, Family::sqp).size() == 7);
    CHECK(enumerate_isoclasses(3, Family::sqp).size() == 74);
    CHECK(enumerate_isoclasses(2, Family::tqp).size() == 3);
    CHECK_THROWS_AS(enumerate_isoclasses(5, Family::dqp), SizeLimitError);
}

TEST_CASE("family predicates") {
    const DoubleQuasiPoset triv(Preorder::discrete(2), Preorder::indiscrete(2));
    CHECK(triv.is_trivial());
    CHECK(triv.is_special());
    CHECK_FALSE(triv.is_double_poset());
    CHECK(kC2.is_strict_special());
    CHECK(kC2.is_double_poset());
}
