#include "doctest.h"

#include "dqp/serialize.hpp"
#include "dqp/verify.hpp"

using namespace dqp;

TEST_CASE("preorder text form") {
    const auto chain = Preorder::chain(3);
    CHECK(preorder_to_text(chain) == "3; (1,2),(1,3),(2,3)");
    CHECK(preorder_from_text(preorder_to_text(chain)) == chain);
    CHECK(preorder_to_text(Preorder::discrete(2)) == "2;");
    CHECK(preorder_from_text("2;") == Preorder::discrete(2));

    CHECK_THROWS_AS(preorder_from_text("2; (1,3)"), ParseError);
    CHECK_THROWS_AS(preorder_from_text("3; (1,2),(2,3)"), ParseError); // not closed
    CHECK(preorder_from_text("3; (1,2),(2,3)", /*strict=*/false) == Preorder::chain(3));
    CHECK_THROWS_AS(preorder_from_text("junk"), ParseError);
    CHECK_THROWS_AS(preorder_from_text("99; (1,2)"), SizeLimitError);
    CHECK_THROWS_AS(preorder_from_text("99999999999999;"), ParseError);
}

TEST_CASE("dqp round trips are bit exact") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& p : enumerate_isoclasses(n, Family::dqp)) {
            CHECK(dqp_from_text(dqp_to_text(p)) == p);
            CHECK(dqp_from_json(dqp_to_json(p)) == p);
            CHECK(dqp_to_text(dqp_from_text(dqp_to_text(p))) == dqp_to_text(p));
            CHECK(dqp_to_json(dqp_from_json(dqp_to_json(p))) == dqp_to_json(p));
        }
    CHECK(dqp_to_text(DoubleQuasiPoset{}) == "dqp 0;;");
    CHECK_THROWS_AS(dqp_from_json(R"({"n":2,"le1":[[1,2],[2,3]],"le2":[]})"), ParseError);
    CHECK_THROWS_AS(dqp_from_json(R"({"n":3,"le1":[[1,2],[2,3]],"le2":[]})"), ParseError);
    CHECK_THROWS_AS(dqp_from_json("{"), ParseError);
}

TEST_CASE("combination serialization") {
    const auto d1 = to_basis(single_point());
    const auto c2 = to_basis(DoubleQuasiPoset(Preorder::chain(2), Preorder::chain(2)));
    LinearCombination a = d1 + c2;
    a *= Rational(1, 3);
    const auto parsed = combination_from_json(combination_to_json(a));
    CHECK(parsed == a);
    CHECK(combination_from_any(dqp_to_json(single_point())) == d1);
    CHECK(combination_from_any("dqp 1;;") == d1);
}

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_to_string(rational_from_string("-3/6")) == "-1/2");
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
}

TEST_CASE("word and permutation strings") {
    CHECK(packed_word_to_string(PackedWord({2, 1, 3, 1, 3})) == "21313");
    CHECK(packed_word_from_string("21313") == PackedWord({2, 1, 3, 1, 3}));
    CHECK(packed_word_from_string("2,1,3,1,3") == PackedWord({2, 1, 3, 1, 3}));
    CHECK_THROWS_AS(packed_word_from_string("241"), ParseError); // not packed
    CHECK(perm_to_string(perm_from_string("312")) == "312");
    CHECK_THROWS_AS(perm_from_string("112"), ParseError);
}

TEST_CASE("gram csv layout") {
    const auto g = gram(1, Family::dqp, PairingKind::standard);
    const auto csv = gram_to_csv(g);
    CHECK(csv == "\"dqp 1;;\"\n1\n");
}

TEST_CASE("tensor combination serialization is deterministic") {
    const DoubleQuasiPoset fused(Preorder::indiscrete(2), Preorder::chain(2));
    const auto t = coproduct(fused, true);
    const auto once = tensor_combination_to_json(t);
    CHECK(once == tensor_combination_to_json(coproduct(fused, true)));
    CHECK(once.find("\"coeff\":\"2\"") != std::string::npos);
}
