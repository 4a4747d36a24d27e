#pragma once

#include <vector>

#include "dqp/algebra.hpp"
#include "dqp/internal.hpp"

namespace dqp {

// Word over the positive integers whose letter set is an initial segment
// 1..k; encodes a surjection [n] -> [k] and a total preorder on positions.
class PackedWord {
public:
    PackedWord() = default; // empty word
    explicit PackedWord(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int max_letter() const;
    bool is_permutation() const { return max_letter() == size(); }

    // One-line form of a permutation of {0,...,n-1} as a packed word.
    static PackedWord from_perm(const Perm& p);
    // Only valid when is_permutation().
    Perm to_perm() const;

    friend bool operator==(const PackedWord&, const PackedWord&) = default;
    friend auto operator<=>(const PackedWord&, const PackedWord&) = default;

private:
    std::vector<int> letters_;
};

using WordCombination = FormalSum<PackedWord>;
using PermCombination = FormalSum<Perm>;

// First relation: position i below position j iff letter(i) <= letter(j);
// second relation: the natural chain on positions.
DoubleQuasiPoset word_to_dqp(const PackedWord& w);

// Permutations sigma with letter(i) < letter(j) => sigma(i) < sigma(j),
// lexicographic order.
std::vector<Perm> compatible(const PackedWord& w);

// Word whose i-th letter is v[sigma(i)].
PackedWord word_after_perm(const PackedWord& v, const Perm& sigma);

// Closed forms of the internal products on the word span: lt sums v o sigma
// over compatible sigma; le gives v o u for a permutation word u, else zero.
WordCombination word_internal(const PackedWord& u, const PackedWord& v, InternalKind kind);

// Sum of the inverses of the compatible permutations.
PermCombination zeta(const PackedWord& w);
PermCombination zeta(const WordCombination& a);

// The packed word of the inverse permutation.
WordCombination zeta_prime(const Perm& sigma);
WordCombination zeta_prime(const PermCombination& a);

// Group-algebra composition product, (sigma o tau)(i) = sigma(tau(i)).
PermCombination perm_compose(const PermCombination& a, const PermCombination& b);

// All packed words of length n (n <= 6), lexicographic; distinct = 0 means
// any letter count, otherwise exactly that many distinct letters.
std::vector<PackedWord> enumerate_packed_words(int n, int distinct = 0,
                                               bool increasing_only = false);
inline constexpr int max_word_length = 6;

} // namespace dqp
