#include "doctest.h"

#include "dqp/pictures.hpp"
#include "dqp/tableaux.hpp"

using namespace dqp;

TEST_CASE("diagram validation") {
    CHECK_NOTHROW(YoungDiagram({1, 3, 3}));
    CHECK_THROWS_AS(YoungDiagram({3, 1}), ParseError);
    CHECK_THROWS_AS(YoungDiagram({0, 2}), ParseError);
    CHECK(YoungDiagram({1, 3, 3}).cell_count() == 7);
}

TEST_CASE("cell poset orientation") {
    // The hook: its lowest-left cell sits below both ends, which are
    // incomparable.
    const YoungDiagram hook({1, 2});
    CHECK(hook.cell_leq(1, 0));      // bottom-left below the top cell
    CHECK(hook.cell_leq(1, 2));      // and below its right neighbour
    CHECK_FALSE(hook.cell_leq(0, 2));
    CHECK_FALSE(hook.cell_leq(2, 0));
}

TEST_CASE("structures from shapes") {
    const YoungDiagram cell({1});
    CHECK(q_lambda(cell) == single_point());
    CHECK(p_lambda(cell) == single_point());

    const YoungDiagram paper_shape({1, 3, 3});
    const auto p = p_lambda(paper_shape);
    CHECK(p.size() == 7);
    CHECK(p.le2() == Preorder::chain(7)); // reading order labels 1..7
    CHECK(automorphisms(p).size() == 1);
}

TEST_CASE("composition structures") {
    const auto strict = q_of_composition({1, 1, 1});
    CHECK(strict.le1() == Preorder::discrete(3));
    CHECK(strict.le2() == Preorder::chain(3));

    CHECK(automorphisms(q_of_composition({2, 3, 2, 1})).size() == 24);

    const auto block = q_of_composition({3});
    CHECK(block.le2() == Preorder::indiscrete(3));
    CHECK(automorphisms(block).size() == 6);

    CHECK_THROWS_AS(q_of_composition({2, 0}), ParseError);
}

TEST_CASE("tableau oracle") {
    const DoubleQuasiPoset natural3(Preorder::discrete(3), Preorder::chain(3));
    CHECK(tableau_oracle(YoungDiagram({1, 2}), natural3, FillMode::strict) == 2);
    CHECK(tableau_oracle(YoungDiagram({1, 1, 1}), natural3, FillMode::strict) == 1);
    CHECK(tableau_oracle(YoungDiagram({3}), natural3, FillMode::strict) == 1);

    const DoubleQuasiPoset fused3(Preorder::discrete(3), Preorder::indiscrete(3));
    CHECK(tableau_oracle(YoungDiagram({1, 2}), fused3, FillMode::weak) == 6);
    CHECK(tableau_oracle(YoungDiagram({1, 2}), fused3, FillMode::strict) == 0);

    CHECK_THROWS_AS(tableau_oracle(YoungDiagram({2}), natural3, FillMode::weak),
                    std::invalid_argument);
}

TEST_CASE("content fillings") {
    // Single row: one weakly increasing arrangement per content.
    CHECK(content_filling_count(YoungDiagram({2}), {1, 1}) == 1);
    CHECK(content_filling_count(YoungDiagram({2}), {2}) == 1);
    // Column of two with two equal letters still fills weakly.
    CHECK(content_filling_count(YoungDiagram({1, 1}), {2}) == 1);
    // Hook with all letters distinct: one choice per standard-like filling.
    CHECK(content_filling_count(YoungDiagram({1, 2}), {1, 1, 1}) == 2);
    CHECK_THROWS_AS(content_filling_count(YoungDiagram({2}), {1, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("pictures match fillings on a worked case") {
    const YoungDiagram shape({2, 2});
    const DoubleQuasiPoset q(Preorder::discrete(4),
                             q_of_composition({2, 2}).le2());
    CHECK(static_cast<long long>(enumerate_maps(q_lambda(shape), q, MapKind::semistandard).size()) ==
          tableau_oracle(shape, q, FillMode::weak));
    CHECK(static_cast<long long>(enumerate_maps(q_lambda(shape), q, MapKind::picture).size()) ==
          tableau_oracle(shape, q, FillMode::strict));
}
