#pragma once

#include <optional>
#include <string_view>

#include "dqp/algebra.hpp"
#include "dqp/pictures.hpp"

namespace dqp {

// Which bijection family indexes the internal product: le sums over
// semi-pictures, lt over semi-prepictures.
enum class InternalKind { le, lt };

const char* internal_kind_name(InternalKind k);
std::optional<InternalKind> internal_kind_from_string(std::string_view s);

// Pullback of q's first relation along f on p's ground set; p's second
// relation is kept.
DoubleQuasiPoset product_over(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q,
                              const Bijection& f);

// Bilinear sum of product_over over the chosen bijection family; term pairs
// of different sizes contribute zero.
LinearCombination internal_product(const LinearCombination& a, const LinearCombination& b,
                                   InternalKind kind);

} // namespace dqp
