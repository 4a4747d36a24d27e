#include "doctest.h"

#include <algorithm>

#include "dqp/preorder.hpp"

using namespace dqp;

TEST_CASE("closure from generators") {
    const auto empty = Preorder::closure(2, {});
    CHECK(empty == Preorder::discrete(2));

    const auto chain = Preorder::closure(3, {{0, 1}, {1, 2}});
    CHECK(chain.leq(0, 2)); // forced by transitivity
    CHECK(chain == Preorder::chain(3));

    const auto fused = Preorder::closure(2, {{0, 1}, {1, 0}});
    CHECK(fused == Preorder::indiscrete(2));

    CHECK_THROWS_AS(Preorder::closure(2, {{0, 5}}), ParseError);
}

TEST_CASE("strict validator") {
    CHECK_NOTHROW(Preorder::from_closed_pairs(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_THROWS_AS(Preorder::from_closed_pairs(3, {{0, 1}, {1, 2}}), ParseError);
}

TEST_CASE("equivalence classes") {
    CHECK(Preorder::discrete(3).equivalence_classes() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(Preorder::indiscrete(3).equivalence_classes() ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    const auto mixed = Preorder::closure(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(mixed.equivalence_classes() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("strict comparison") {
    const auto chain = Preorder::chain(2);
    CHECK(chain.lt(0, 1));
    CHECK_FALSE(chain.lt(1, 0));
    CHECK_FALSE(Preorder::indiscrete(2).lt(0, 1));
    for (int i = 0; i < 2; ++i)
        CHECK_FALSE(chain.lt(i, i));
}

TEST_CASE("up sets") {
    const auto chain = Preorder::chain(2);
    CHECK(chain.up_sets(false) == std::vector<uint32_t>{0b00, 0b10, 0b11});
    CHECK(Preorder::indiscrete(2).up_sets(false) == std::vector<uint32_t>{0b00, 0b11});
    CHECK(Preorder::indiscrete(2).up_sets(true) ==
          std::vector<uint32_t>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("enumeration counts and guard") {
    CHECK(Preorder::enumerate(1).size() == 1);
    CHECK(Preorder::enumerate(2).size() == 4);
    CHECK(Preorder::enumerate(3, true).size() == 13);
    CHECK_THROWS_AS(Preorder::enumerate(6), SizeLimitError);
}

TEST_CASE("restriction and relabeling") {
    const auto chain = Preorder::chain(3);
    CHECK(chain.restrict_mask(0b101) == Preorder::chain(2));
    const Perm swap{1, 0};
    const auto swapped = Preorder::chain(2).relabel(swap);
    CHECK(swapped.leq(1, 0));
    CHECK_FALSE(swapped.leq(0, 1));
    CHECK(swapped.relabel(swap) == Preorder::chain(2));
}

TEST_CASE("predicates") {
    CHECK(Preorder::chain(3).is_total());
    CHECK(Preorder::chain(3).is_partial_order());
    CHECK(Preorder::indiscrete(2).is_total());
    CHECK_FALSE(Preorder::indiscrete(2).is_partial_order());
    CHECK(Preorder::discrete(2).is_discrete());
    CHECK_FALSE(Preorder::discrete(2).is_total());
}
