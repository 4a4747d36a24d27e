#include "doctest.h"

#include "dqp/pictures.hpp"

using namespace dqp;

namespace {

DoubleQuasiPoset natural_trivial(int n) {
    return {Preorder::discrete(n), Preorder::chain(n)};
}

} // namespace

TEST_CASE("maps between trivial structures") {
    // Both relations discrete on one side: every bijection qualifies for
    // every kind.
    for (int n : {1, 2, 3}) {
        const auto p = natural_trivial(n);
        long long fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        for (MapKind kind : {MapKind::picture, MapKind::prepicture, MapKind::semistandard,
                             MapKind::semi, MapKind::semiprepicture})
            CHECK(static_cast<long long>(enumerate_maps(p, p, kind).size()) == fact);
    }
}

TEST_CASE("maps on the two-chain") {
    const DoubleQuasiPoset c2(Preorder::chain(2), Preorder::chain(2));
    const auto pics = enumerate_maps(c2, c2, MapKind::picture);
    REQUIRE(pics.size() == 1);
    CHECK(pics[0] == Perm{0, 1});
}

TEST_CASE("size mismatch yields no maps") {
    CHECK(enumerate_maps(natural_trivial(2), natural_trivial(3), MapKind::picture).empty());
    CHECK(pairing(natural_trivial(2), natural_trivial(3), PairingKind::standard) == 0);
}

TEST_CASE("prepictures factor through splitting") {
    for (const auto& p : enumerate_isoclasses(2, Family::dqp))
        for (const auto& q : enumerate_isoclasses(2, Family::dqp)) {
            CHECK(enumerate_maps(p, q, MapKind::prepicture) ==
                  enumerate_maps(splitting(p), splitting(q), MapKind::picture));
            CHECK(enumerate_maps(p, q, MapKind::prepicture) ==
                  enumerate_maps(splitting(p), splitting(q), MapKind::prepicture));
        }
}

TEST_CASE("pairing values") {
    CHECK(pairing(single_point(), single_point(), PairingKind::standard) == 1);
    CHECK(pairing(natural_trivial(3), natural_trivial(3), PairingKind::standard) == 6);
    for (const auto& p : enumerate_isoclasses(2, Family::dqp))
        CHECK(pairing(p, iota(p), PairingKind::standard) >= 1);
}

TEST_CASE("gram matrices") {
    const auto g1 = gram(1, Family::dqp, PairingKind::standard);
    REQUIRE(g1.basis.size() == 1);
    CHECK(g1.entries[0][0] == 1);
    CHECK(exact_rank(g1) == 1);

    const auto g2 = gram(2, Family::dqp, PairingKind::standard);
    CHECK(g2.basis.size() == 10);
    for (size_t i = 0; i < g2.entries.size(); ++i)
        for (size_t j = 0; j < g2.entries.size(); ++j) {
            CHECK(g2.entries[i][j] >= 0);
            CHECK(g2.entries[i][j] == g2.entries[j][i]);
        }
    CHECK(exact_rank(g2) == 10);

    CHECK_THROWS_AS(gram(4, Family::dqp, PairingKind::standard), SizeLimitError);
}

TEST_CASE("bareiss rank") {
    CHECK(bareiss_rank({{BigInt(1)}}) == 1);
    CHECK(bareiss_rank({{BigInt(0)}}) == 0);
    // Rank 2: the third row is the sum of the first two.
    std::vector<std::vector<BigInt>> m{
        {BigInt(1), BigInt(2), BigInt(3)},
        {BigInt(4), BigInt(5), BigInt(6)},
        {BigInt(5), BigInt(7), BigInt(9)},
    };
    CHECK(bareiss_rank(m) == 2);
    // Zero leading column forces a column swap.
    std::vector<std::vector<BigInt>> z{
        {BigInt(0), BigInt(1)},
        {BigInt(0), BigInt(2)},
    };
    CHECK(bareiss_rank(z) == 1);
}

TEST_CASE("patterns") {
    // All of S_2 when both automorphism groups are trivial.
    const auto p2 = natural_trivial(2);
    const auto orbits = patterns(p2, p2);
    CHECK(orbits.size() == 2);

    // The unique surjection with one fiber of size two.
    const DoubleQuasiPoset q2(Preorder::discrete(2), Preorder::indiscrete(2));
    const auto collapsed = patterns(q2, p2);
    REQUIRE(collapsed.size() == 1);
    CHECK(collapsed[0].size == 2);

    long long total = 0;
    for (const auto& orbit : patterns(q2, q2))
        total += orbit.size;
    CHECK(total ==
          static_cast<long long>(enumerate_maps(q2, q2, MapKind::semistandard).size()));
}
