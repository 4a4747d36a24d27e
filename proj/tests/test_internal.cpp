#include "doctest.h"

#include "dqp/internal.hpp"
#include "dqp/words.hpp"

using namespace dqp;

TEST_CASE("product over a bijection") {
    const DoubleQuasiPoset p(Preorder::discrete(2), Preorder::chain(2));
    CHECK(product_over(p, p, {0, 1}) == p);

    // Pulling back a chain along the swap reverses it.
    const DoubleQuasiPoset q(Preorder::chain(2), Preorder::chain(2));
    const auto pulled = product_over(p, q, {1, 0});
    CHECK(pulled.le1() == Preorder::closure(2, {{1, 0}}));
    CHECK(pulled.le2() == p.le2());

    CHECK_THROWS_AS(product_over(p, q, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(product_over(p, q, {0}), std::invalid_argument);
}

TEST_CASE("pullbacks preserve the preorder axioms") {
    const auto basis = enumerate_isoclasses(3, Family::dqp);
    for (size_t i = 0; i < basis.size(); i += 17)
        for (size_t j = 0; j < basis.size(); j += 23) {
            Perm f{2, 0, 1};
            const auto r = product_over(basis[i], basis[j], f);
            CHECK(Preorder::closure(3, r.le1().nonreflexive_pairs()) == r.le1());
        }
}

TEST_CASE("internal products") {
    const auto d1 = to_basis(single_point());
    CHECK(internal_product(d1, d1, InternalKind::le) == d1);
    CHECK(internal_product(d1, d1, InternalKind::lt) == d1);

    // Words 11 and 21: the lt product spreads over both compatible
    // permutations.
    const auto p11 = to_basis(word_to_dqp(PackedWord({1, 1})));
    const auto p21 = to_basis(word_to_dqp(PackedWord({2, 1})));
    const auto p12 = to_basis(word_to_dqp(PackedWord({1, 2})));
    CHECK(internal_product(p11, p21, InternalKind::lt) == p12 + p21);
    CHECK(internal_product(p11, p21, InternalKind::le).is_zero());

    // Mixed sizes contribute zero rather than an error.
    const auto d2 = to_basis(product(single_point(), single_point()));
    CHECK(internal_product(d1, d2, InternalKind::le).is_zero());
    CHECK(internal_product(d1 + d2, d1, InternalKind::le) ==
          internal_product(d1, d1, InternalKind::le));
}
