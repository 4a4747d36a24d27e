#pragma once

#include <tuple>
#include <utility>

#include "dqp/double_quasi_poset.hpp"
#include "dqp/formal_sum.hpp"

namespace dqp {

using LinearCombination = FormalSum<DoubleQuasiPoset>;
using DqpPair = std::pair<DoubleQuasiPoset, DoubleQuasiPoset>;
using TensorCombination = FormalSum<DqpPair>;
using DqpTriple = std::tuple<DoubleQuasiPoset, DoubleQuasiPoset, DoubleQuasiPoset>;
using TripleTensorCombination = FormalSum<DqpTriple>;

// Canonicalized basis element with coefficient 1.
LinearCombination to_basis(const DoubleQuasiPoset& p);
// The empty structure, unit of the product.
LinearCombination unit_element();

// Bilinear extension of the dqp product, terms canonicalized.
LinearCombination multiply(const LinearCombination& a, const LinearCombination& b);

// Sum over open (strict=false) or preopen (strict=true) subsets O of the
// first relation: restriction to the complement tensor restriction to O.
TensorCombination coproduct(const DoubleQuasiPoset& p, bool strict);
TensorCombination coproduct(const LinearCombination& a, bool strict);

// Coefficient of the empty structure.
Rational counit(const LinearCombination& a);

// Antipode of the graded connected bialgebra with the chosen coproduct,
// computed by the left recursion on the proper coproduct part.
LinearCombination antipode(const DoubleQuasiPoset& p, bool strict);
LinearCombination antipode(const LinearCombination& a, bool strict);

// Linear extension of the blow-up sum: each basis element maps to the sum of
// its blow-ups, canonicalized with multiplicities.
LinearCombination upsilon(const DoubleQuasiPoset& p);
LinearCombination upsilon(const LinearCombination& a);

// Linear extension of the splitting map.
LinearCombination splitting_linear(const LinearCombination& a);

// Componentwise product on tensors: (a (x) b)(c (x) d) = ac (x) bd.
TensorCombination tensor_multiply(const TensorCombination& a, const TensorCombination& b);

// (coproduct (x) id) and (id (x) coproduct) on tensor combinations.
TripleTensorCombination coproduct_first(const TensorCombination& t, bool strict);
TripleTensorCombination coproduct_second(const TensorCombination& t, bool strict);

} // namespace dqp
