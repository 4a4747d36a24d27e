#include "doctest.h"

#include "dqp/algebra.hpp"

using namespace dqp;

namespace {

const DoubleQuasiPoset kFused2{Preorder::indiscrete(2), Preorder::chain(2)};

} // namespace

TEST_CASE("multiply") {
    const auto d1 = to_basis(single_point());
    CHECK(multiply(unit_element(), d1) == d1);
    CHECK(multiply(d1, unit_element()) == d1);
    CHECK(multiply(d1, d1) == to_basis(product(single_point(), single_point())));

    // bilinearity
    const auto a = to_basis(kFused2);
    const auto b = to_basis(DoubleQuasiPoset(Preorder::chain(2), Preorder::chain(2)));
    CHECK(multiply(a + b, d1) == multiply(a, d1) + multiply(b, d1));
}

TEST_CASE("coproduct examples") {
    const auto d1 = single_point();
    const auto delta = coproduct(d1, false);
    CHECK(delta.term_count() == 2);
    CHECK(delta.coefficient({DoubleQuasiPoset{}, d1}) == 1);
    CHECK(delta.coefficient({d1, DoubleQuasiPoset{}}) == 1);

    // The fused pair is primitive for the standard coproduct.
    const auto primitive = coproduct(kFused2, false);
    CHECK(primitive.term_count() == 2);
    CHECK(primitive.coefficient({DoubleQuasiPoset{}, canonicalize(kFused2)}) == 1);

    // All four subsets are preopen, both singleton restrictions give a point.
    const auto strict = coproduct(kFused2, true);
    CHECK(strict.coefficient({d1, d1}) == 2);
    CHECK(strict.term_count() == 3);
}

TEST_CASE("counit") {
    CHECK(counit(unit_element()) == 1);
    CHECK(counit(to_basis(single_point())) == 0);
    for (const auto& p : enumerate_isoclasses(2, Family::dqp)) {
        LinearCombination left, right;
        for (const auto& [pair, c] : coproduct(p, false)) {
            if (pair.first.size() == 0)
                left.add(pair.second, c);
            if (pair.second.size() == 0)
                right.add(pair.first, c);
        }
        CHECK(left == to_basis(p));
        CHECK(right == to_basis(p));
    }
}

TEST_CASE("antipode") {
    CHECK(antipode(DoubleQuasiPoset{}, false) == unit_element());
    CHECK(antipode(single_point(), false) == -to_basis(single_point()));
    CHECK(antipode(single_point(), true) == -to_basis(single_point()));

    // S(two-chain) = -(two-chain) + point*point, from the three open sets.
    const DoubleQuasiPoset c2(Preorder::chain(2), Preorder::chain(2));
    const auto two_points = to_basis(product(single_point(), single_point()));
    CHECK(antipode(c2, false) == two_points - to_basis(c2));
    CHECK(antipode(c2, true) == two_points - to_basis(c2));

    for (bool strict : {false, true})
        for (const auto& p : enumerate_isoclasses(2, Family::dqp)) {
            LinearCombination conv;
            for (const auto& [pair, c] : coproduct(p, strict)) {
                auto t = multiply(antipode(pair.first, strict),
                                  LinearCombination::single(pair.second));
                t *= c;
                conv += t;
            }
            CHECK(conv.is_zero());
        }
}

TEST_CASE("blow-up sum") {
    const DoubleQuasiPoset c2(Preorder::chain(2), Preorder::chain(2));
    CHECK(upsilon(c2) == to_basis(c2));

    const DoubleQuasiPoset two_class(Preorder::closure(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}),
                                     Preorder::chain(3));
    const auto u = upsilon(two_class);
    CHECK(u.term_count() == 3);
    CHECK(u.coefficient(canonicalize(two_class)) == 1);

    const DoubleQuasiPoset fused3(Preorder::indiscrete(3), Preorder::chain(3));
    CHECK(upsilon(fused3).coefficient_sum() == 13);
}

TEST_CASE("splitting map") {
    for (const auto& p : enumerate_isoclasses(2, Family::dqp)) {
        const auto once = splitting_linear(to_basis(p));
        CHECK(splitting_linear(once) == once);
        for (const auto& [term, c] : once)
            CHECK(term.is_double_poset());
    }
    const auto a = to_basis(kFused2);
    const auto b = to_basis(single_point());
    CHECK(splitting_linear(multiply(a, b)) ==
          multiply(splitting_linear(a), splitting_linear(b)));
}

TEST_CASE("formal sums normalize support") {
    LinearCombination s;
    s.add(single_point(), Rational(1));
    s.add(single_point(), Rational(-1));
    CHECK(s.is_zero());
    s.add(single_point(), Rational(1, 3));
    s.add(single_point(), Rational(1, 6));
    CHECK(s.coefficient(single_point()) == Rational(1, 2));
    CHECK((-s).coefficient(single_point()) == Rational(-1, 2));
}
