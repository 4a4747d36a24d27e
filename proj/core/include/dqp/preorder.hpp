#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "dqp/errors.hpp"

namespace dqp {

// Permutation of {0,...,n-1} in one-line form: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& outer, const Perm& inner); // (outer o inner)(i) = outer[inner[i]]
Perm inverse(const Perm& p);

// Reflexive-transitive relation on {0,...,n-1}. Row i is a bitmask whose bit j
// means i <= j. The stored relation is always closed; the strict part i < j
// (i <= j and not j <= i) and the equivalence i ~ j are derived on the fly.
class Preorder {
public:
    static constexpr int max_elements = 16;

    Preorder() = default;       // empty ground set
    explicit Preorder(int n);   // discrete preorder on n elements

    static Preorder discrete(int n) { return Preorder(n); }
    static Preorder indiscrete(int n);
    static Preorder chain(int n); // 0 < 1 < ... < n-1

    // Smallest preorder containing the given pairs.
    static Preorder closure(int n, const std::vector<std::pair<int, int>>& pairs);
    // Strict validator: the pairs (reflexive ones optional) must already form
    // a closed relation, otherwise ParseError.
    static Preorder from_closed_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
    // Rows must describe a closed reflexive relation; logic_error otherwise.
    static Preorder from_rows(int n, std::vector<uint32_t> rows);

    int size() const { return n_; }
    uint32_t full_mask() const { return n_ == 0 ? 0u : (~0u >> (32 - n_)); }
    uint32_t row(int i) const { return rows_[static_cast<size_t>(i)]; }
    uint32_t strict_row(int i) const;

    bool leq(int i, int j) const { return (rows_[static_cast<size_t>(i)] >> j) & 1u; }
    bool sim(int i, int j) const { return leq(i, j) && leq(j, i); }
    bool lt(int i, int j) const { return leq(i, j) && !leq(j, i); }

    // Blocks of ~, each sorted, ordered by smallest member; their union is the
    // whole ground set.
    std::vector<std::vector<int>> equivalence_classes() const;

    // All up-sets of <= (strict=false, the open sets) or of < (strict=true,
    // the preopen sets), as bitmasks in increasing numeric order. The result
    // always contains 0 and full_mask().
    std::vector<uint32_t> up_sets(bool strict) const;

    bool is_total() const;
    bool is_partial_order() const;
    bool is_discrete() const;

    // Restriction to the elements of `mask`, relabeled order-preservingly.
    Preorder restrict_mask(uint32_t mask) const;
    // Element i becomes perm[i].
    Preorder relabel(const Perm& perm) const;

    // Non-reflexive related pairs in lexicographic order.
    std::vector<std::pair<int, int>> nonreflexive_pairs() const;

    // All preorders on n elements (n <= 5), brute force over reflexive
    // relations with a transitivity filter; deterministic order.
    static std::vector<Preorder> enumerate(int n, bool total_only = false);
    static constexpr int max_enumeration_size = 5;

    friend bool operator==(const Preorder&, const Preorder&) = default;
    friend auto operator<=>(const Preorder&, const Preorder&) = default;

private:
    int n_ = 0;
    std::vector<uint32_t> rows_;

    bool is_closed() const;
};

} // namespace dqp
