#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dqp/preorder.hpp"

namespace dqp {

enum class Family { dqp, sqp, dp, tqp };

const char* family_name(Family f);
std::optional<Family> family_from_string(std::string_view s);

// A finite set {0,...,n-1} carrying two preorders.
class DoubleQuasiPoset {
public:
    DoubleQuasiPoset() = default; // empty, the algebra unit
    DoubleQuasiPoset(Preorder first, Preorder second);

    int size() const { return first_.size(); }
    const Preorder& le1() const { return first_; }
    const Preorder& le2() const { return second_; }

    bool is_special() const { return second_.is_total(); }
    bool is_strict_special() const { return second_.is_total() && second_.is_partial_order(); }
    bool is_trivial() const { return first_.is_discrete(); }
    bool is_double_poset() const { return first_.is_partial_order() && second_.is_partial_order(); }
    bool in_family(Family f) const;

    friend bool operator==(const DoubleQuasiPoset&, const DoubleQuasiPoset&) = default;
    friend auto operator<=>(const DoubleQuasiPoset&, const DoubleQuasiPoset&) = default;

private:
    Preorder first_;
    Preorder second_;
};

// The one-point structure.
DoubleQuasiPoset single_point();

// Disjoint union on the first relation; on the second, disjoint union plus
// every pair (i in p, j in q). q's elements are shifted by p's size.
DoubleQuasiPoset product(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q);

DoubleQuasiPoset restrict_mask(const DoubleQuasiPoset& p, uint32_t mask);
DoubleQuasiPoset restrict_to(const DoubleQuasiPoset& p, const std::vector<int>& elements);

// Replaces both preorders by strict-part-plus-equality, yielding a double
// poset with the same strict parts.
DoubleQuasiPoset splitting(const DoubleQuasiPoset& p);

// Swaps the two relations.
DoubleQuasiPoset iota(const DoubleQuasiPoset& p);

DoubleQuasiPoset relabel(const DoubleQuasiPoset& p, const Perm& perm);

struct CanonicalForm {
    // Lexicographically minimal relabeling of the input: equal representatives
    // iff isomorphic inputs.
    DoubleQuasiPoset representative;
    // All relabelings fixing the input, in lexicographic order.
    std::vector<Perm> automorphisms;
};

inline constexpr int max_canonical_size = 8;

// Full n! scan, n <= 8.
CanonicalForm canonical_form(const DoubleQuasiPoset& p);
DoubleQuasiPoset canonicalize(const DoubleQuasiPoset& p);
std::vector<Perm> automorphisms(const DoubleQuasiPoset& p);

// All labeled refinements of the first relation obtained by installing an
// arbitrary total preorder on each nontrivial ~1-class (cross-class pairs and
// the second relation unchanged). p itself is in the list; isomorphic but
// distinct labeled results are kept distinct.
std::vector<DoubleQuasiPoset> blow_ups(const DoubleQuasiPoset& p);

// True iff q is isomorphic to p or to a blow-up of p.
bool is_blowup_le(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q);

struct PairStats {
    long long le1_pairs = 0; // #{(i,j): i <=1 j}, reflexive pairs included
    long long le2_pairs = 0;
};
PairStats pair_stats(const DoubleQuasiPoset& p);

// One canonical representative per isomorphism class, sorted. Guarded at
// n <= 4 for dqp/sqp/dp and n <= 5 for tqp.
std::vector<DoubleQuasiPoset> enumerate_isoclasses(int n, Family family);

} // namespace dqp
