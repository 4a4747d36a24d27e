#include "dqp/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "dqp/algebra.hpp"
#include "dqp/internal.hpp"
#include "dqp/pictures.hpp"
#include "dqp/serialize.hpp"
#include "dqp/tableaux.hpp"
#include "dqp/words.hpp"

namespace dqp {

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

int VerifyReport::failed_count() const {
    int n = 0;
    for (const auto& c : checks)
        n += c.pass ? 0 : 1;
    return n;
}

namespace {

void add_check(VerifyReport& r, std::string name, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(detail)});
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Total preorders on k labeled elements.
constexpr long long kOrderedBell[] = {1, 1, 3, 13, 75, 541, 4683};
constexpr long long kLabeledPreorders[] = {1, 1, 4, 29, 355, 6942};
constexpr long long kDqpCounts[] = {1, 1, 10, 166, 5965};
constexpr long long kSqpCounts[] = {1, 1, 7, 74, 1290};
constexpr long long kTqpCounts[] = {1, 1, 3, 9, 33, 139};

std::string describe_pair(const DoubleQuasiPoset& a, const DoubleQuasiPoset& b) {
    return dqp_to_text(a) + " | " + dqp_to_text(b);
}

int class_count(const DoubleQuasiPoset& p) {
    return static_cast<int>(p.le1().equivalence_classes().size());
}

TensorCombination tensor_apply_upsilon(const TensorCombination& t) {
    TensorCombination out;
    for (const auto& [pair, c] : t)
        for (const auto& [a, ca] : upsilon(pair.first))
            for (const auto& [b, cb] : upsilon(pair.second))
                out.add({a, b}, c * ca * cb);
    return out;
}

TensorCombination tensor_apply_splitting(const TensorCombination& t) {
    TensorCombination out;
    for (const auto& [pair, c] : t)
        out.add({canonicalize(splitting(pair.first)), canonicalize(splitting(pair.second))}, c);
    return out;
}

LinearCombination counit_left(const TensorCombination& t) {
    LinearCombination out;
    for (const auto& [pair, c] : t)
        if (pair.first.size() == 0)
            out.add(pair.second, c);
    return out;
}

LinearCombination counit_right(const TensorCombination& t) {
    LinearCombination out;
    for (const auto& [pair, c] : t)
        if (pair.second.size() == 0)
            out.add(pair.first, c);
    return out;
}

std::vector<Preorder> family_first_relations(int n, Family family) {
    switch (family) {
        case Family::dqp:
        case Family::sqp:
            return Preorder::enumerate(n);
        case Family::dp: {
            std::vector<Preorder> firsts;
            for (auto& p : Preorder::enumerate(n))
                if (p.is_partial_order())
                    firsts.push_back(p);
            return firsts;
        }
        case Family::tqp:
            return {Preorder::discrete(n)};
    }
    return {};
}

std::vector<Preorder> family_second_relations(int n, Family family) {
    switch (family) {
        case Family::dqp:
        case Family::tqp:
            return Preorder::enumerate(n);
        case Family::sqp:
            return Preorder::enumerate(n, /*total_only=*/true);
        case Family::dp: {
            std::vector<Preorder> seconds;
            for (auto& p : Preorder::enumerate(n))
                if (p.is_partial_order())
                    seconds.push_back(p);
            return seconds;
        }
    }
    return {};
}

} // namespace

long long burnside_isoclass_count(int n, Family family) {
    if (n == 0)
        return 1;
    const auto firsts = family_first_relations(n, family);
    const auto seconds = family_second_relations(n, family);
    long long total = 0;
    Perm perm = identity_perm(n);
    do {
        long long fixed_first = 0;
        for (const auto& p : firsts)
            if (p.relabel(perm) == p)
                ++fixed_first;
        long long fixed_second = 0;
        for (const auto& p : seconds)
            if (p.relabel(perm) == p)
                ++fixed_second;
        total += fixed_first * fixed_second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const long long order = factorial(n);
    if (total % order != 0)
        throw std::logic_error("Burnside sum is not divisible by the group order");
    return total / order;
}

VerifyReport verify_preorder_suite(int max_n) {
    if (max_n <= 0)
        max_n = 4;
    max_n = std::min(max_n, Preorder::max_enumeration_size);
    VerifyReport rep{"preorder", {}};
    for (int n = 1; n <= max_n; ++n) {
        const auto all = Preorder::enumerate(n);
        add_check(rep, "preorder/labeled-count/n=" + std::to_string(n),
                  static_cast<long long>(all.size()) == kLabeledPreorders[n],
                  "got " + std::to_string(all.size()));

        bool idempotent = true;
        std::string why;
        for (const auto& p : all)
            if (Preorder::closure(n, p.nonreflexive_pairs()) != p) {
                idempotent = false;
                why = preorder_to_text(p);
                break;
            }
        add_check(rep, "preorder/closure-idempotent/n=" + std::to_string(n), idempotent, why);

        bool open_in_preopen = true;
        bool lattice = true;
        why.clear();
        std::string why_lattice;
        for (const auto& p : all) {
            const auto opens = p.up_sets(false);
            const auto preopens = p.up_sets(true);
            for (uint32_t o : opens)
                if (!std::binary_search(preopens.begin(), preopens.end(), o)) {
                    open_in_preopen = false;
                    why = preorder_to_text(p);
                }
            for (bool strict : {false, true}) {
                const auto& sets = strict ? preopens : opens;
                for (uint32_t a : sets)
                    for (uint32_t b : sets)
                        if (!std::binary_search(sets.begin(), sets.end(), a | b) ||
                            !std::binary_search(sets.begin(), sets.end(), a & b)) {
                            lattice = false;
                            why_lattice = preorder_to_text(p);
                        }
            }
        }
        add_check(rep, "preorder/open-sets-are-preopen/n=" + std::to_string(n), open_in_preopen,
                  why);
        add_check(rep, "preorder/up-sets-closed-under-union-intersection/n=" + std::to_string(n),
                  lattice, why_lattice);

        bool partition_ok = true;
        why.clear();
        for (const auto& p : all) {
            uint32_t seen = 0;
            for (const auto& block : p.equivalence_classes())
                for (int e : block) {
                    if (seen >> e & 1u)
                        partition_ok = false;
                    seen |= 1u << e;
                }
            if (seen != p.full_mask())
                partition_ok = false;
            if (!partition_ok) {
                why = preorder_to_text(p);
                break;
            }
        }
        add_check(rep, "preorder/equivalence-classes-partition/n=" + std::to_string(n),
                  partition_ok, why);
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto totals = Preorder::enumerate(n, /*total_only=*/true);
        const auto words = enumerate_packed_words(n);
        add_check(rep, "preorder/total-count-equals-packed-words/n=" + std::to_string(n),
                  totals.size() == words.size(),
                  std::to_string(totals.size()) + " vs " + std::to_string(words.size()));
    }
    return rep;
}

VerifyReport verify_enumeration_suite(int max_n) {
    if (max_n <= 0)
        max_n = 4;
    VerifyReport rep{"enumeration", {}};
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto basis = enumerate_isoclasses(n, Family::dqp);
        add_check(rep, "enumeration/dqp-count/n=" + std::to_string(n),
                  static_cast<long long>(basis.size()) == kDqpCounts[n],
                  "got " + std::to_string(basis.size()));
        add_check(rep, "enumeration/dqp-count-burnside/n=" + std::to_string(n),
                  burnside_isoclass_count(n, Family::dqp) == kDqpCounts[n], "oracle disagrees");
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto basis = enumerate_isoclasses(n, Family::sqp);
        add_check(rep, "enumeration/sqp-count/n=" + std::to_string(n),
                  static_cast<long long>(basis.size()) == kSqpCounts[n],
                  "got " + std::to_string(basis.size()));
        add_check(rep, "enumeration/sqp-count-burnside/n=" + std::to_string(n),
                  burnside_isoclass_count(n, Family::sqp) == kSqpCounts[n], "oracle disagrees");
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto basis = enumerate_isoclasses(n, Family::dp);
        const long long oracle = burnside_isoclass_count(n, Family::dp);
        add_check(rep, "enumeration/dp-count-matches-burnside/n=" + std::to_string(n),
                  static_cast<long long>(basis.size()) == oracle,
                  std::to_string(basis.size()) + " vs oracle " + std::to_string(oracle));
    }
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        const auto basis = enumerate_isoclasses(n, Family::tqp);
        add_check(rep, "enumeration/tqp-count/n=" + std::to_string(n),
                  static_cast<long long>(basis.size()) == kTqpCounts[n],
                  "got " + std::to_string(basis.size()));
        add_check(rep, "enumeration/tqp-count-burnside/n=" + std::to_string(n),
                  burnside_isoclass_count(n, Family::tqp) == kTqpCounts[n], "oracle disagrees");
    }
    {
        // The seven special structures of size two: chains with aligned,
        // opposite and equal labels, two antichains, two fused vertices.
        const Preorder chain = Preorder::chain(2);
        const Preorder rchain = Preorder::closure(2, {{1, 0}});
        const Preorder disc = Preorder::discrete(2);
        const Preorder indisc = Preorder::indiscrete(2);
        std::set<DoubleQuasiPoset> expected;
        expected.insert(canonicalize({chain, chain}));
        expected.insert(canonicalize({chain, rchain}));
        expected.insert(canonicalize({chain, indisc}));
        expected.insert(canonicalize({disc, chain}));
        expected.insert(canonicalize({disc, indisc}));
        expected.insert(canonicalize({indisc, chain}));
        expected.insert(canonicalize({indisc, indisc}));
        const auto basis = enumerate_isoclasses(2, Family::sqp);
        const std::set<DoubleQuasiPoset> got(basis.begin(), basis.end());
        add_check(rep, "enumeration/sqp-n=2-members", expected == got,
                  "listed classes differ from the seven expected diagrams");
    }
    return rep;
}

VerifyReport verify_blowup_suite(int max_n) {
    if (max_n <= 0)
        max_n = 3;
    max_n = std::min(max_n, 3);
    VerifyReport rep{"blowup", {}};

    {
        // One point below a fused pair: exactly three blow-ups.
        const DoubleQuasiPoset base(Preorder::closure(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}),
                                    Preorder::chain(3));
        const auto blows = blow_ups(base);
        std::set<DoubleQuasiPoset> got(blows.begin(), blows.end());
        std::set<DoubleQuasiPoset> expected{
            base,
            {Preorder::closure(3, {{0, 1}, {1, 2}}), Preorder::chain(3)},
            {Preorder::closure(3, {{0, 2}, {2, 1}}), Preorder::chain(3)},
        };
        add_check(rep, "blowup/two-class-example-has-three", blows.size() == 3 && got == expected,
                  "got " + std::to_string(blows.size()) + " blow-ups");
    }
    {
        // The fused triple: thirteen blow-ups arranged in ranks 1 + 6 + 6.
        const DoubleQuasiPoset base(Preorder::indiscrete(3), Preorder::chain(3));
        const auto blows = blow_ups(base);
        std::set<DoubleQuasiPoset> canon;
        for (const auto& b : blows)
            canon.insert(canonicalize(b));
        add_check(rep, "blowup/fused-triple-has-thirteen",
                  blows.size() == 13 && canon.size() == 13,
                  std::to_string(blows.size()) + " blow-ups, " + std::to_string(canon.size()) +
                      " classes");

        // Covering structure of the displayed diagram: the bottom is covered
        // by the six two-class elements, each of those by exactly two chains,
        // and every chain covers exactly two middles.
        std::vector<DoubleQuasiPoset> nodes(canon.begin(), canon.end());
        const int k = static_cast<int>(nodes.size());
        std::vector<std::vector<bool>> less(static_cast<size_t>(k),
                                            std::vector<bool>(static_cast<size_t>(k), false));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                less[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    i != j && is_blowup_le(nodes[static_cast<size_t>(i)],
                                           nodes[static_cast<size_t>(j)]);
        auto covers = [&](int i, int j) {
            if (!less[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
            for (int z = 0; z < k; ++z)
                if (less[static_cast<size_t>(i)][static_cast<size_t>(z)] &&
                    less[static_cast<size_t>(z)][static_cast<size_t>(j)])
                    return false;
            return true;
        };
        bool ok = true;
        std::string why;
        for (int i = 0; i < k && ok; ++i) {
            int up = 0;
            int down = 0;
            for (int j = 0; j < k; ++j) {
                up += covers(i, j) ? 1 : 0;
                down += covers(j, i) ? 1 : 0;
            }
            const int rank = class_count(nodes[static_cast<size_t>(i)]);
            const bool node_ok = (rank == 1 && up == 6 && down == 0) ||
                                 (rank == 2 && up == 2 && down == 1) ||
                                 (rank == 3 && up == 0 && down == 2);
            if (!node_ok) {
                ok = false;
                why = dqp_to_text(nodes[static_cast<size_t>(i)]) + " has " + std::to_string(up) +
                      " upper and " + std::to_string(down) + " lower covers";
            }
        }
        // Exact edges: the chain a<b<c sits above precisely the two-class
        // elements a<(b~c) and (a~b)<c. Vertices are matched through the
        // rigid second relation before comparing the first ones.
        auto le2_position = [](const DoubleQuasiPoset& p, int v) {
            int r = 0;
            for (int u = 0; u < p.size(); ++u)
                r += p.le2().leq(u, v) ? 1 : 0;
            return r;
        };
        for (int i = 0; i < k && ok; ++i) {
            if (class_count(nodes[static_cast<size_t>(i)]) != 2)
                continue;
            for (int j = 0; j < k; ++j) {
                if (class_count(nodes[static_cast<size_t>(j)]) != 3)
                    continue;
                const auto& middle = nodes[static_cast<size_t>(i)];
                const auto& chain = nodes[static_cast<size_t>(j)];
                Perm align(3);
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y)
                        if (le2_position(middle, x) == le2_position(chain, y))
                            align[static_cast<size_t>(x)] = y;
                bool refines = true;
                for (int x = 0; x < 3 && refines; ++x)
                    for (int y = 0; y < 3; ++y)
                        if (middle.le1().lt(x, y) &&
                            !chain.le1().lt(align[static_cast<size_t>(x)],
                                            align[static_cast<size_t>(y)])) {
                            refines = false;
                            break;
                        }
                if (covers(i, j) != refines) {
                    ok = false;
                    why = describe_pair(middle, chain);
                    break;
                }
            }
        }
        add_check(rep, "blowup/fused-triple-covering-structure", ok, why);
    }

    for (int n = 1; n <= max_n; ++n) {
        const auto basis = enumerate_isoclasses(n, Family::dqp);
        bool sizes_ok = true;
        bool members_ok = true;
        bool fixed_dp_ok = true;
        bool special_ok = true;
        std::string why_sizes, why_members, why_dp, why_special;
        for (const auto& p : basis) {
            const auto blows = blow_ups(p);
            long long expected = 1;
            for (const auto& block : p.le1().equivalence_classes())
                expected *= kOrderedBell[block.size()];
            if (static_cast<long long>(blows.size()) != expected) {
                sizes_ok = false;
                why_sizes = dqp_to_text(p);
            }
            bool self_found = false;
            for (const auto& b : blows) {
                if (b == p)
                    self_found = true;
                if (b.le2() != p.le2() || !is_blowup_le(p, b)) {
                    members_ok = false;
                    why_members = describe_pair(p, b);
                }
                if (p.is_special() != b.is_special()) {
                    special_ok = false;
                    why_special = describe_pair(p, b);
                }
            }
            if (!self_found) {
                members_ok = false;
                why_members = dqp_to_text(p);
            }
            if (p.is_double_poset() && !(blows.size() == 1 && blows.front() == p)) {
                fixed_dp_ok = false;
                why_dp = dqp_to_text(p);
            }
        }
        add_check(rep, "blowup/count-product-formula/n=" + std::to_string(n), sizes_ok, why_sizes);
        add_check(rep, "blowup/members-dominate-base/n=" + std::to_string(n), members_ok,
                  why_members);
        add_check(rep, "blowup/double-posets-are-fixed/n=" + std::to_string(n), fixed_dp_ok,
                  why_dp);
        add_check(rep, "blowup/specialness-preserved/n=" + std::to_string(n), special_ok,
                  why_special);
    }

    {
        // Elementary blow-ups land in the materialized set, and the set is
        // closed under iterated blow-ups (checked at n <= 3).
        bool elementary_ok = true;
        bool closed_ok = true;
        std::string why_elem, why_closed;
        for (int n = 2; n <= max_n; ++n)
            for (const auto& p : enumerate_isoclasses(n, Family::dqp)) {
                const auto blows = blow_ups(p);
                const std::set<DoubleQuasiPoset> set(blows.begin(), blows.end());
                for (const auto& block : p.le1().equivalence_classes()) {
                    if (block.size() < 2)
                        continue;
                    for (const auto& total :
                         Preorder::enumerate(static_cast<int>(block.size()), true)) {
                        std::vector<uint32_t> rows(static_cast<size_t>(n));
                        for (int i = 0; i < n; ++i)
                            rows[static_cast<size_t>(i)] = p.le1().row(i);
                        for (size_t a = 0; a < block.size(); ++a)
                            for (size_t b = 0; b < block.size(); ++b) {
                                const uint32_t bit = 1u << block[b];
                                if (total.leq(static_cast<int>(a), static_cast<int>(b)))
                                    rows[static_cast<size_t>(block[a])] |= bit;
                                else
                                    rows[static_cast<size_t>(block[a])] &= ~bit;
                            }
                        const DoubleQuasiPoset elem(Preorder::from_rows(n, std::move(rows)),
                                                    p.le2());
                        if (!set.count(elem)) {
                            elementary_ok = false;
                            why_elem = describe_pair(p, elem);
                        }
                    }
                }
                for (const auto& q : blows)
                    for (const auto& qq : blow_ups(q))
                        if (!set.count(qq)) {
                            closed_ok = false;
                            why_closed = describe_pair(p, qq);
                        }
            }
        add_check(rep, "blowup/elementary-steps-materialized", elementary_ok, why_elem);
        add_check(rep, "blowup/closed-under-iteration", closed_ok, why_closed);
    }

    for (int n = 1; n <= max_n; ++n) {
        const auto basis = enumerate_isoclasses(n, Family::dqp);
        const int d = static_cast<int>(basis.size());
        std::vector<std::vector<bool>> le(static_cast<size_t>(d),
                                          std::vector<bool>(static_cast<size_t>(d), false));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                le[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    is_blowup_le(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
        bool reflexive = true;
        bool antisym = true;
        bool transitive = true;
        std::string why;
        for (int i = 0; i < d; ++i) {
            if (!le[static_cast<size_t>(i)][static_cast<size_t>(i)])
                reflexive = false;
            for (int j = 0; j < d; ++j) {
                if (i != j && le[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    le[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                    antisym = false;
                    why = describe_pair(basis[static_cast<size_t>(i)],
                                        basis[static_cast<size_t>(j)]);
                }
                if (le[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    for (int z = 0; z < d; ++z)
                        if (le[static_cast<size_t>(j)][static_cast<size_t>(z)] &&
                            !le[static_cast<size_t>(i)][static_cast<size_t>(z)])
                            transitive = false;
            }
        }
        add_check(rep, "blowup/order-reflexive/n=" + std::to_string(n), reflexive, "");
        add_check(rep, "blowup/order-antisymmetric/n=" + std::to_string(n), antisym, why);
        add_check(rep, "blowup/order-transitive/n=" + std::to_string(n), transitive, "");

        // The four-condition characterization agrees with blow-up membership.
        bool agree = true;
        std::string why_agree;
        for (int i = 0; i < d && agree; ++i) {
            std::set<DoubleQuasiPoset> reachable;
            for (const auto& b : blow_ups(basis[static_cast<size_t>(i)]))
                reachable.insert(canonicalize(b));
            for (int j = 0; j < d; ++j) {
                const bool member = reachable.count(basis[static_cast<size_t>(j)]) > 0;
                if (member != le[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                    agree = false;
                    why_agree = describe_pair(basis[static_cast<size_t>(i)],
                                              basis[static_cast<size_t>(j)]);
                    break;
                }
            }
        }
        add_check(rep, "blowup/characterization-equals-membership/n=" + std::to_string(n), agree,
                  why_agree);
    }
    return rep;
}

VerifyReport verify_hopf_suite(int max_n) {
    if (max_n <= 0)
        max_n = 3;
    max_n = std::min(max_n, 4);
    VerifyReport rep{"hopf", {}};

    std::vector<std::vector<DoubleQuasiPoset>> bases(static_cast<size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n)
        bases[static_cast<size_t>(n)] = enumerate_isoclasses(n, Family::dqp);

    for (int n = 1; n <= max_n; ++n) {
        bool coassoc_std = true, coassoc_strict = true, counit_ok = true;
        std::string why_std, why_strict, why_counit;
        for (const auto& p : bases[static_cast<size_t>(n)]) {
            for (bool strict : {false, true}) {
                const auto delta = coproduct(p, strict);
                if (coproduct_first(delta, strict) != coproduct_second(delta, strict)) {
                    (strict ? coassoc_strict : coassoc_std) = false;
                    (strict ? why_strict : why_std) = dqp_to_text(p);
                }
            }
            const auto delta = coproduct(p, false);
            if (counit_left(delta) != to_basis(p) || counit_right(delta) != to_basis(p)) {
                counit_ok = false;
                why_counit = dqp_to_text(p);
            }
        }
        add_check(rep, "hopf/coassociativity-standard/n=" + std::to_string(n), coassoc_std,
                  why_std);
        add_check(rep, "hopf/coassociativity-strict/n=" + std::to_string(n), coassoc_strict,
                  why_strict);
        add_check(rep, "hopf/counit-axiom/n=" + std::to_string(n), counit_ok, why_counit);
    }

    {
        // Unit and labeled associativity of the product.
        const DoubleQuasiPoset d1 = single_point();
        bool unit_ok = multiply(unit_element(), to_basis(d1)) == to_basis(d1) &&
                       multiply(to_basis(d1), unit_element()) == to_basis(d1);
        add_check(rep, "hopf/product-unit", unit_ok, "");
        bool assoc_ok = true;
        std::string why;
        const auto small = enumerate_isoclasses(2, Family::dqp);
        std::vector<DoubleQuasiPoset> pool = {d1};
        pool.insert(pool.end(), small.begin(), small.end());
        for (const auto& a : pool)
            for (const auto& b : pool)
                for (const auto& c : pool)
                    if (product(product(a, b), c) != product(a, product(b, c))) {
                        assoc_ok = false;
                        why = describe_pair(a, b) + " | " + dqp_to_text(c);
                    }
        add_check(rep, "hopf/product-associative-labeled", assoc_ok, why);
    }

    {
        bool morphism_std = true, morphism_strict = true, split_prod = true;
        std::string why_std, why_strict, why_split;
        for (int na = 1; na + 1 <= max_n + 1; ++na)
            for (int nb = 1; na + nb <= max_n + 1; ++nb) {
                if (na > max_n || nb > max_n)
                    continue;
                for (const auto& a : bases[static_cast<size_t>(na)])
                    for (const auto& b : bases[static_cast<size_t>(nb)]) {
                        const auto ab = product(a, b);
                        for (bool strict : {false, true}) {
                            if (coproduct(ab, strict) !=
                                tensor_multiply(coproduct(a, strict), coproduct(b, strict))) {
                                (strict ? morphism_strict : morphism_std) = false;
                                (strict ? why_strict : why_std) = describe_pair(a, b);
                            }
                        }
                        if (splitting(ab) != product(splitting(a), splitting(b))) {
                            split_prod = false;
                            why_split = describe_pair(a, b);
                        }
                    }
            }
        add_check(rep, "hopf/coproduct-is-algebra-map-standard", morphism_std, why_std);
        add_check(rep, "hopf/coproduct-is-algebra-map-strict", morphism_strict, why_strict);
        add_check(rep, "hopf/splitting-of-product-labeled", split_prod, why_split);
    }

    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        bool antipode_std = true, antipode_strict = true;
        std::string why_std, why_strict;
        for (const auto& p : bases[static_cast<size_t>(n)])
            for (bool strict : {false, true}) {
                LinearCombination conv;
                for (const auto& [pair, c] : coproduct(p, strict)) {
                    LinearCombination t = multiply(antipode(pair.first, strict),
                                                   LinearCombination::single(pair.second));
                    t *= c;
                    conv += t;
                }
                if (!conv.is_zero()) {
                    (strict ? antipode_strict : antipode_std) = false;
                    (strict ? why_strict : why_std) = dqp_to_text(p);
                }
            }
        add_check(rep, "hopf/antipode-axiom-standard/n=" + std::to_string(n), antipode_std,
                  why_std);
        add_check(rep, "hopf/antipode-axiom-strict/n=" + std::to_string(n), antipode_strict,
                  why_strict);
    }
    add_check(rep, "hopf/antipode-of-point",
              antipode(single_point(), false) == -to_basis(single_point()) &&
                  antipode(single_point(), true) == -to_basis(single_point()),
              "");

    for (Family family : {Family::sqp, Family::dp, Family::tqp}) {
        bool stable = true;
        std::string why;
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const auto& p : enumerate_isoclasses(n, family)) {
                for (bool strict : {false, true})
                    for (const auto& [pair, c] : coproduct(p, strict))
                        if (!pair.first.in_family(family) || !pair.second.in_family(family)) {
                            stable = false;
                            why = dqp_to_text(p);
                        }
            }
        const auto basis2 = enumerate_isoclasses(2, family);
        for (const auto& a : basis2)
            for (const auto& b : basis2)
                if (!product(a, b).in_family(family)) {
                    stable = false;
                    why = describe_pair(a, b);
                }
        add_check(rep, std::string("hopf/subfamily-stable-") + family_name(family), stable, why);
    }

    {
        bool equal_on_orders = true;
        std::string why;
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const auto& p : bases[static_cast<size_t>(n)])
                if (p.le1().is_partial_order() && coproduct(p, false) != coproduct(p, true)) {
                    equal_on_orders = false;
                    why = dqp_to_text(p);
                }
        add_check(rep, "hopf/coproducts-agree-when-first-relation-is-order", equal_on_orders, why);
    }

    {
        bool lemma = true;
        std::string why;
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const auto& p : bases[static_cast<size_t>(n)])
                if (coproduct(upsilon(p), false) != tensor_apply_upsilon(coproduct(p, true))) {
                    lemma = false;
                    why = dqp_to_text(p);
                }
        add_check(rep, "hopf/blowup-sum-intertwines-coproducts", lemma, why);
    }

    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        const auto& basis = bases[static_cast<size_t>(n)];
        std::map<DoubleQuasiPoset, int> index;
        for (size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], static_cast<int>(i));
        bool unitriangular = true;
        std::string why;
        for (size_t j = 0; j < basis.size() && unitriangular; ++j) {
            const auto u = upsilon(basis[j]);
            if (u.coefficient(basis[j]) != 1) {
                unitriangular = false;
                why = dqp_to_text(basis[j]);
                break;
            }
            for (const auto& [term, c] : u)
                if (term != basis[j] &&
                    (class_count(term) <= class_count(basis[j]) ||
                     !is_blowup_le(basis[j], term))) {
                    unitriangular = false;
                    why = describe_pair(basis[j], term);
                }
        }
        add_check(rep, "hopf/blowup-sum-unitriangular/n=" + std::to_string(n), unitriangular,
                  why);
    }

    {
        bool idem = true, image_dp = true, hopf_morph = true, topology = true;
        std::string why_idem, why_img, why_morph, why_top;
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const auto& p : bases[static_cast<size_t>(n)]) {
                const auto pos_p = splitting(p);
                if (splitting(pos_p) != pos_p) {
                    idem = false;
                    why_idem = dqp_to_text(p);
                }
                if (!pos_p.is_double_poset()) {
                    image_dp = false;
                    why_img = dqp_to_text(p);
                }
                if (coproduct(canonicalize(pos_p), false) !=
                    tensor_apply_splitting(coproduct(p, true))) {
                    hopf_morph = false;
                    why_morph = dqp_to_text(p);
                }
                if (p.le1().up_sets(true) != pos_p.le1().up_sets(false)) {
                    topology = false;
                    why_top = dqp_to_text(p);
                }
            }
        add_check(rep, "hopf/splitting-idempotent", idem, why_idem);
        add_check(rep, "hopf/splitting-image-is-double-poset", image_dp, why_img);
        add_check(rep, "hopf/splitting-is-hopf-morphism", hopf_morph, why_morph);
        add_check(rep, "hopf/preopen-sets-equal-splitting-opens", topology, why_top);
    }
    return rep;
}

VerifyReport verify_pairing_suite(int max_n) {
    if (max_n <= 0)
        max_n = 3;
    const bool deep_hopf = max_n >= 4; // split triples of total size four
    max_n = std::min(max_n, 3);
    VerifyReport rep{"pairing", {}};

    std::vector<std::vector<DoubleQuasiPoset>> bases(static_cast<size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n)
        bases[static_cast<size_t>(n)] = enumerate_isoclasses(n, Family::dqp);

    for (int n = 1; n <= max_n; ++n) {
        const auto& basis = bases[static_cast<size_t>(n)];
        bool symmetric = true, pos_compat = true;
        std::string why_sym, why_pos;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j)
                for (PairingKind kind : {PairingKind::standard, PairingKind::strict})
                    if (pairing(basis[i], basis[j], kind) != pairing(basis[j], basis[i], kind)) {
                        symmetric = false;
                        why_sym = describe_pair(basis[i], basis[j]);
                    }
        for (const auto& p : basis)
            for (const auto& q : basis) {
                const long long strict_value = pairing(p, q, PairingKind::strict);
                const auto sp = splitting(p);
                const auto sq = splitting(q);
                if (strict_value != pairing(sp, sq, PairingKind::standard) ||
                    strict_value != pairing(sp, sq, PairingKind::strict)) {
                    pos_compat = false;
                    why_pos = describe_pair(p, q);
                }
            }
        add_check(rep, "pairing/symmetry/n=" + std::to_string(n), symmetric, why_sym);
        add_check(rep, "pairing/strict-equals-splitting-pairing/n=" + std::to_string(n),
                  pos_compat, why_pos);
    }

    for (int n = 1; n <= max_n; ++n) {
        const auto& basis = bases[static_cast<size_t>(n)];
        bool inequalities = true, equality_case = true, self_nonzero = true;
        std::string why_ineq, why_eq, why_self;
        for (const auto& p : basis) {
            const auto stats_p = pair_stats(p);
            for (const auto& q : basis) {
                if (pairing(p, q, PairingKind::standard) == 0)
                    continue;
                const auto stats_q = pair_stats(q);
                if (stats_p.le1_pairs > stats_q.le2_pairs ||
                    stats_q.le1_pairs > stats_p.le2_pairs) {
                    inequalities = false;
                    why_ineq = describe_pair(p, q);
                }
                if (stats_p.le1_pairs == stats_q.le2_pairs &&
                    stats_q.le1_pairs == stats_p.le2_pairs && q != canonicalize(iota(p))) {
                    equality_case = false;
                    why_eq = describe_pair(p, q);
                }
            }
            if (pairing(p, iota(p), PairingKind::standard) < 1) {
                self_nonzero = false;
                why_self = dqp_to_text(p);
            }
        }
        add_check(rep, "pairing/swap-lemma-inequalities/n=" + std::to_string(n), inequalities,
                  why_ineq);
        add_check(rep, "pairing/swap-lemma-equality-case/n=" + std::to_string(n), equality_case,
                  why_eq);
        add_check(rep, "pairing/self-swap-nonzero/n=" + std::to_string(n), self_nonzero, why_self);
    }

    {
        bool hopf_std = true, hopf_strict = true, image_open = true;
        std::string why_std, why_strict, why_open;
        for (int nr = 2; nr <= max_n; ++nr)
            for (int np = 1; np < nr; ++np) {
                const int nq = nr - np;
                for (const auto& r : bases[static_cast<size_t>(nr)])
                    for (const auto& p : bases[static_cast<size_t>(np)])
                        for (const auto& q : bases[static_cast<size_t>(nq)]) {
                            const auto pq = product(p, q);
                            for (bool strict : {false, true}) {
                                const PairingKind kind =
                                    strict ? PairingKind::strict : PairingKind::standard;
                                long long rhs = 0;
                                for (const auto& [pair, c] : coproduct(r, strict)) {
                                    long long term = pairing(p, pair.first, kind) *
                                                     pairing(q, pair.second, kind);
                                    // coefficients in a basis coproduct are 1
                                    term *= c.get_num().get_si();
                                    rhs += term;
                                }
                                if (pairing(pq, r, kind) != rhs) {
                                    (strict ? hopf_strict : hopf_std) = false;
                                    (strict ? why_strict : why_std) =
                                        describe_pair(p, q) + " | " + dqp_to_text(r);
                                }
                            }
                            for (MapKind mk : {MapKind::picture, MapKind::prepicture}) {
                                const auto opens = r.le1().up_sets(mk == MapKind::prepicture);
                                for (const auto& f : enumerate_maps(pq, r, mk)) {
                                    uint32_t image = 0;
                                    for (int i = np; i < nr; ++i)
                                        image |= 1u << f[static_cast<size_t>(i)];
                                    if (!std::binary_search(opens.begin(), opens.end(), image)) {
                                        image_open = false;
                                        why_open = describe_pair(pq, r);
                                    }
                                }
                            }
                        }
            }
        add_check(rep, "pairing/hopf-pairing-standard", hopf_std, why_std);
        add_check(rep, "pairing/hopf-pairing-strict", hopf_strict, why_strict);
        add_check(rep, "pairing/picture-image-of-right-factor-is-open", image_open, why_open);
    }

    {
        bool upsilon_pairing = true;
        std::string why;
        for (int n = 1; n <= max_n; ++n) {
            const auto basis = enumerate_isoclasses(n, Family::sqp);
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    long long lhs = 0;
                    for (const auto& [a, ca] : upsilon(x))
                        for (const auto& [b, cb] : upsilon(y))
                            lhs += ca.get_num().get_si() * cb.get_num().get_si() *
                                   pairing(a, b, PairingKind::standard);
                    if (lhs != pairing(x, y, PairingKind::strict)) {
                        upsilon_pairing = false;
                        why = describe_pair(x, y);
                    }
                }
        }
        add_check(rep, "pairing/blowup-sum-preserves-pairing-on-sqp", upsilon_pairing, why);
    }

    if (deep_hopf) {
        // Split triples of total size four, against pairing tables for the
        // small degrees.
        std::vector<std::vector<DoubleQuasiPoset>> small(4);
        std::vector<std::map<DoubleQuasiPoset, int>> index(4);
        std::vector<std::vector<std::vector<long long>>> table_std(4), table_strict(4);
        for (int n = 1; n <= 3; ++n) {
            small[static_cast<size_t>(n)] = enumerate_isoclasses(n, Family::dqp);
            const auto& basis = small[static_cast<size_t>(n)];
            for (size_t i = 0; i < basis.size(); ++i)
                index[static_cast<size_t>(n)].emplace(basis[i], static_cast<int>(i));
            auto& ts = table_std[static_cast<size_t>(n)];
            auto& tt = table_strict[static_cast<size_t>(n)];
            ts.assign(basis.size(), std::vector<long long>(basis.size(), 0));
            tt.assign(basis.size(), std::vector<long long>(basis.size(), 0));
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = i; j < basis.size(); ++j) {
                    ts[i][j] = ts[j][i] = pairing(basis[i], basis[j], PairingKind::standard);
                    tt[i][j] = tt[j][i] = pairing(basis[i], basis[j], PairingKind::strict);
                }
        }
        // All ordered split pairs and the distinct canonical products.
        struct Split {
            int np, nq, p_idx, q_idx, pq_form;
        };
        std::vector<Split> splits;
        std::vector<DoubleQuasiPoset> pq_forms;
        std::map<DoubleQuasiPoset, int> pq_index;
        for (int np = 1; np <= 3; ++np) {
            const int nq = 4 - np;
            for (size_t pi = 0; pi < small[static_cast<size_t>(np)].size(); ++pi)
                for (size_t qi = 0; qi < small[static_cast<size_t>(nq)].size(); ++qi) {
                    const auto pq = canonicalize(product(small[static_cast<size_t>(np)][pi],
                                                         small[static_cast<size_t>(nq)][qi]));
                    auto [it, inserted] = pq_index.emplace(pq, static_cast<int>(pq_forms.size()));
                    if (inserted)
                        pq_forms.push_back(pq);
                    splits.push_back({np, nq, static_cast<int>(pi), static_cast<int>(qi),
                                      it->second});
                }
        }
        bool hopf4 = true;
        std::string why;
        std::vector<long long> lhs_std(pq_forms.size()), lhs_strict(pq_forms.size());
        struct DeltaTerm {
            int size, left, right;
        };
        const auto basis4 = enumerate_isoclasses(4, Family::dqp);
        for (const auto& r : basis4) {
            for (size_t k = 0; k < pq_forms.size(); ++k) {
                lhs_std[k] = pairing(pq_forms[k], r, PairingKind::standard);
                lhs_strict[k] = pairing(pq_forms[k], r, PairingKind::strict);
            }
            for (bool strict : {false, true}) {
                std::vector<DeltaTerm> terms;
                const uint32_t full = r.le1().full_mask();
                for (uint32_t open : r.le1().up_sets(strict)) {
                    const int s = std::popcount(open);
                    if (s == 0 || s == 4)
                        continue;
                    const auto left = canonicalize(restrict_mask(r, full & ~open));
                    const auto right = canonicalize(restrict_mask(r, open));
                    terms.push_back({s, index[static_cast<size_t>(4 - s)].at(left),
                                     index[static_cast<size_t>(s)].at(right)});
                }
                const auto& tables = strict ? table_strict : table_std;
                const auto& lhs = strict ? lhs_strict : lhs_std;
                for (const auto& split : splits) {
                    long long rhs = 0;
                    for (const auto& term : terms)
                        if (term.size == split.nq)
                            rhs += tables[static_cast<size_t>(split.np)]
                                         [static_cast<size_t>(split.p_idx)]
                                         [static_cast<size_t>(term.left)] *
                                   tables[static_cast<size_t>(split.nq)]
                                         [static_cast<size_t>(split.q_idx)]
                                         [static_cast<size_t>(term.right)];
                    if (lhs[static_cast<size_t>(split.pq_form)] != rhs) {
                        hopf4 = false;
                        why = dqp_to_text(r);
                    }
                }
                if (!hopf4)
                    break;
            }
            if (!hopf4)
                break;
        }
        add_check(rep, "pairing/hopf-pairing-total-size-four", hopf4, why);
    }
    return rep;
}

VerifyReport verify_gram_suite(int max_n) {
    if (max_n <= 0)
        max_n = 3;
    VerifyReport rep{"gram", {}};
    const int dqp_max = std::min(max_n, 3);
    for (int n = 1; n <= dqp_max; ++n) {
        const auto g = gram(n, Family::dqp, PairingKind::standard);
        const long long dim = static_cast<long long>(g.basis.size());
        bool entries_ok = true;
        for (size_t i = 0; i < g.entries.size() && entries_ok; ++i)
            for (size_t j = 0; j < g.entries.size(); ++j)
                if (g.entries[i][j] < 0 || g.entries[i][j] != g.entries[j][i]) {
                    entries_ok = false;
                    break;
                }
        add_check(rep, "gram/entries-symmetric-nonnegative/n=" + std::to_string(n), entries_ok,
                  "");
        add_check(rep, "gram/dqp-dimension/n=" + std::to_string(n), dim == kDqpCounts[n],
                  "dim " + std::to_string(dim));
        const int rank = exact_rank(g);
        add_check(rep, "gram/dqp-standard-full-rank/n=" + std::to_string(n), rank == dim,
                  "rank " + std::to_string(rank) + " of " + std::to_string(dim));

        const auto gs = gram(n, Family::dqp, PairingKind::strict);
        const int strict_rank = exact_rank(gs);
        const long long dp_count = burnside_isoclass_count(n, Family::dp);
        add_check(rep, "gram/dqp-strict-rank-is-dp-count/n=" + std::to_string(n),
                  strict_rank == dp_count,
                  "rank " + std::to_string(strict_rank) + " vs dp count " +
                      std::to_string(dp_count));
    }
    for (int n = 1; n <= dqp_max; ++n) {
        const auto g = gram(n, Family::dp, PairingKind::standard);
        const long long dim = static_cast<long long>(g.basis.size());
        const long long oracle = burnside_isoclass_count(n, Family::dp);
        add_check(rep, "gram/dp-dimension-matches-burnside/n=" + std::to_string(n), dim == oracle,
                  std::to_string(dim) + " vs " + std::to_string(oracle));
        const int rank = exact_rank(g);
        add_check(rep, "gram/dp-standard-full-rank/n=" + std::to_string(n), rank == dim,
                  "rank " + std::to_string(rank) + " of " + std::to_string(dim));
    }
    {
        const auto g = gram(1, Family::dqp, PairingKind::standard);
        add_check(rep, "gram/one-point-matrix",
                  g.entries.size() == 1 && g.entries[0][0] == 1 && exact_rank(g) == 1, "");
    }
    return rep;
}

namespace {

using SparseRow = std::vector<std::pair<int, long long>>;

std::vector<std::vector<SparseRow>> internal_table(const std::vector<DoubleQuasiPoset>& basis,
                                                   const std::map<DoubleQuasiPoset, int>& index,
                                                   MapKind mk) {
    const size_t d = basis.size();
    std::vector<std::vector<SparseRow>> table(d, std::vector<SparseRow>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            std::map<int, long long> acc;
            for (const auto& f : enumerate_maps(basis[i], basis[j], mk))
                ++acc[index.at(canonicalize(product_over(basis[i], basis[j], f)))];
            table[i][j].assign(acc.begin(), acc.end());
        }
    return table;
}

} // namespace

VerifyReport verify_internal_suite(int max_n) {
    if (max_n <= 0)
        max_n = 3;
    max_n = std::min(max_n, 3);
    VerifyReport rep{"internal", {}};

    {
        const auto d1 = to_basis(single_point());
        add_check(rep, "internal/point-is-idempotent",
                  internal_product(d1, d1, InternalKind::le) == d1 &&
                      internal_product(d1, d1, InternalKind::lt) == d1,
                  "");
    }

    for (int n = 1; n <= max_n; ++n) {
        const auto basis = enumerate_isoclasses(n, Family::dqp);
        const int d = static_cast<int>(basis.size());
        std::map<DoubleQuasiPoset, int> index;
        for (int i = 0; i < d; ++i)
            index.emplace(basis[static_cast<size_t>(i)], i);
        const auto table_le = internal_table(basis, index, MapKind::semi);
        const auto table_lt = internal_table(basis, index, MapKind::semiprepicture);
        const auto g_std = gram(n, Family::dqp, PairingKind::standard);
        const auto g_strict = gram(n, Family::dqp, PairingKind::strict);

        for (const auto* table : {&table_le, &table_lt}) {
            const bool is_le = table == &table_le;
            bool assoc = true;
            std::string why;
            std::vector<long long> dense(static_cast<size_t>(d), 0);
            std::vector<int> touched;
            auto bump = [&](int k, long long v) {
                if (dense[static_cast<size_t>(k)] == 0 && v != 0)
                    touched.push_back(k);
                dense[static_cast<size_t>(k)] += v;
            };
            for (int a = 0; a < d && assoc; ++a)
                for (int b = 0; b < d && assoc; ++b) {
                    const SparseRow& t_ab = (*table)[static_cast<size_t>(a)]
                                                     [static_cast<size_t>(b)];
                    for (int c = 0; c < d; ++c) {
                        for (const auto& [k, ck] : t_ab)
                            for (const auto& [m, cm] :
                                 (*table)[static_cast<size_t>(k)][static_cast<size_t>(c)])
                                bump(m, ck * cm);
                        for (const auto& [k, ck] :
                             (*table)[static_cast<size_t>(b)][static_cast<size_t>(c)])
                            for (const auto& [m, cm] :
                                 (*table)[static_cast<size_t>(a)][static_cast<size_t>(k)])
                                bump(m, -ck * cm);
                        for (int t : touched)
                            if (dense[static_cast<size_t>(t)] != 0) {
                                assoc = false;
                                why = describe_pair(basis[static_cast<size_t>(a)],
                                                    basis[static_cast<size_t>(b)]) +
                                      " | " + dqp_to_text(basis[static_cast<size_t>(c)]);
                            }
                        for (int t : touched)
                            dense[static_cast<size_t>(t)] = 0;
                        touched.clear();
                        if (!assoc)
                            break;
                    }
                }
            add_check(rep,
                      std::string("internal/associativity-") + (is_le ? "le" : "lt") +
                          "/n=" + std::to_string(n),
                      assoc, why);
        }

        bool adj_le = true, adj_lt = true;
        std::string why_le, why_lt;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    long long lhs = 0, rhs = 0;
                    for (const auto& [k, ck] : table_le[static_cast<size_t>(a)]
                                                        [static_cast<size_t>(b)])
                        lhs += ck * g_std.entries[static_cast<size_t>(k)][static_cast<size_t>(c)];
                    for (const auto& [m, cm] : table_le[static_cast<size_t>(b)]
                                                        [static_cast<size_t>(c)])
                        rhs += cm * g_std.entries[static_cast<size_t>(a)][static_cast<size_t>(m)];
                    if (lhs != rhs) {
                        adj_le = false;
                        why_le = describe_pair(basis[static_cast<size_t>(a)],
                                               basis[static_cast<size_t>(b)]) +
                                 " | " + dqp_to_text(basis[static_cast<size_t>(c)]);
                    }
                    lhs = rhs = 0;
                    for (const auto& [k, ck] : table_lt[static_cast<size_t>(a)]
                                                        [static_cast<size_t>(b)])
                        lhs += ck *
                               g_strict.entries[static_cast<size_t>(k)][static_cast<size_t>(c)];
                    for (const auto& [m, cm] : table_lt[static_cast<size_t>(b)]
                                                        [static_cast<size_t>(c)])
                        rhs += cm *
                               g_strict.entries[static_cast<size_t>(a)][static_cast<size_t>(m)];
                    if (lhs != rhs) {
                        adj_lt = false;
                        why_lt = describe_pair(basis[static_cast<size_t>(a)],
                                               basis[static_cast<size_t>(b)]) +
                                 " | " + dqp_to_text(basis[static_cast<size_t>(c)]);
                    }
                }
        add_check(rep, "internal/adjunction-le/n=" + std::to_string(n), adj_le, why_le);
        add_check(rep, "internal/adjunction-lt/n=" + std::to_string(n), adj_lt, why_lt);

        // Blow-up sum intertwines the two internal products on sqp.
        std::vector<SparseRow> upsilon_rows(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            std::map<int, long long> acc;
            for (const auto& b : blow_ups(basis[static_cast<size_t>(i)]))
                ++acc[index.at(canonicalize(b))];
            upsilon_rows[static_cast<size_t>(i)].assign(acc.begin(), acc.end());
        }
        bool intertwines = true;
        std::string why_up;
        std::vector<long long> dense(static_cast<size_t>(d), 0);
        std::vector<int> touched;
        auto bump = [&](int k, long long v) {
            if (dense[static_cast<size_t>(k)] == 0 && v != 0)
                touched.push_back(k);
            dense[static_cast<size_t>(k)] += v;
        };
        for (int a = 0; a < d && intertwines; ++a) {
            if (!basis[static_cast<size_t>(a)].is_special())
                continue;
            for (int b = 0; b < d; ++b) {
                if (!basis[static_cast<size_t>(b)].is_special())
                    continue;
                for (const auto& [k, ck] : table_lt[static_cast<size_t>(a)][static_cast<size_t>(b)])
                    for (const auto& [m, cm] : upsilon_rows[static_cast<size_t>(k)])
                        bump(m, ck * cm);
                for (const auto& [p, cp] : upsilon_rows[static_cast<size_t>(a)])
                    for (const auto& [q, cq] : upsilon_rows[static_cast<size_t>(b)])
                        for (const auto& [m, cm] :
                             table_le[static_cast<size_t>(p)][static_cast<size_t>(q)])
                            bump(m, -cp * cq * cm);
                for (int t : touched)
                    if (dense[static_cast<size_t>(t)] != 0) {
                        intertwines = false;
                        why_up = describe_pair(basis[static_cast<size_t>(a)],
                                               basis[static_cast<size_t>(b)]);
                    }
                for (int t : touched)
                    dense[static_cast<size_t>(t)] = 0;
                touched.clear();
                if (!intertwines)
                    break;
            }
        }
        add_check(rep, "internal/blowup-sum-intertwines-products-sqp/n=" + std::to_string(n),
                  intertwines, why_up);

        bool set_identity = true;
        std::string why_sets;
        for (int a = 0; a < d && set_identity; ++a)
            for (int b = 0; b < d; ++b) {
                const auto& p = basis[static_cast<size_t>(a)];
                const auto& q = basis[static_cast<size_t>(b)];
                for (bool strict : {false, true}) {
                    const auto pics =
                        enumerate_maps(p, q, strict ? MapKind::prepicture : MapKind::picture);
                    const auto fwd =
                        enumerate_maps(p, q, strict ? MapKind::semiprepicture : MapKind::semi);
                    const auto bwd =
                        enumerate_maps(q, p, strict ? MapKind::semiprepicture : MapKind::semi);
                    std::set<Bijection> bwd_inv;
                    for (const auto& f : bwd)
                        bwd_inv.insert(inverse(f));
                    std::vector<Bijection> expected;
                    for (const auto& f : fwd)
                        if (bwd_inv.count(f))
                            expected.push_back(f);
                    if (pics != expected) {
                        set_identity = false;
                        why_sets = describe_pair(p, q);
                    }
                }
                if (!set_identity)
                    break;
            }
        add_check(rep, "internal/pictures-are-two-sided-semi-maps/n=" + std::to_string(n),
                  set_identity, why_sets);
    }

    for (Family family : {Family::dp, Family::sqp}) {
        bool stable = true;
        std::string why;
        for (int n = 1; n <= std::min(max_n, 2); ++n) {
            const auto basis = enumerate_isoclasses(n, family);
            for (const auto& a : basis)
                for (const auto& b : basis)
                    for (InternalKind kind : {InternalKind::le, InternalKind::lt})
                        for (const auto& [term, c] :
                             internal_product(to_basis(a), to_basis(b), kind))
                            if (!term.in_family(family)) {
                                stable = false;
                                why = describe_pair(a, b);
                            }
        }
        add_check(rep, std::string("internal/stability-") + family_name(family), stable, why);
    }

    {
        bool zero_cross = internal_product(to_basis(single_point()),
                                           to_basis(product(single_point(), single_point())),
                                           InternalKind::le)
                              .is_zero();
        add_check(rep, "internal/mixed-sizes-vanish", zero_cross, "");
    }
    return rep;
}

VerifyReport verify_words_suite(int max_n) {
    if (max_n <= 0)
        max_n = 4;
    max_n = std::min(max_n, 5);
    VerifyReport rep{"words", {}};

    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto words = enumerate_packed_words(n);
        add_check(rep, "words/count/n=" + std::to_string(n),
                  static_cast<long long>(words.size()) == kOrderedBell[n],
                  "got " + std::to_string(words.size()));
        add_check(rep, "words/count-equals-total-preorders/n=" + std::to_string(n),
                  words.size() == Preorder::enumerate(n, true).size(), "");

        bool formula = true;
        std::string why;
        for (const auto& w : words) {
            long long expected = 1;
            std::vector<int> fibers(static_cast<size_t>(w.max_letter()), 0);
            for (int v : w.letters())
                ++fibers[static_cast<size_t>(v - 1)];
            for (int f : fibers)
                expected *= factorial(f);
            if (static_cast<long long>(compatible(w).size()) != expected) {
                formula = false;
                why = packed_word_to_string(w);
            }
        }
        add_check(rep, "words/compatible-count-formula/n=" + std::to_string(n), formula, why);

        bool injective = true;
        std::set<DoubleQuasiPoset> images;
        for (const auto& w : words)
            images.insert(canonicalize(word_to_dqp(w)));
        injective = images.size() == words.size();
        add_check(rep, "words/embedding-injective/n=" + std::to_string(n), injective, "");

        bool special_posets = true;
        std::string why_family;
        for (const auto& w : words) {
            const auto p = word_to_dqp(w);
            if (!p.is_strict_special() || !p.le1().is_total()) {
                special_posets = false;
                why_family = packed_word_to_string(w);
            }
        }
        add_check(rep, "words/images-are-special-with-total-first/n=" + std::to_string(n),
                  special_posets, why_family);
    }

    const auto via_dqp = [](const WordCombination& wc) {
        LinearCombination out;
        for (const auto& [w, c] : wc)
            out.add(canonicalize(word_to_dqp(w)), c);
        return out;
    };

    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        const auto words = enumerate_packed_words(n);
        bool agree_lt = true, agree_le = true, zeta_mult = true;
        std::string why_lt, why_le, why_zeta;
        for (const auto& u : words)
            for (const auto& v : words) {
                const auto pu = to_basis(word_to_dqp(u));
                const auto pv = to_basis(word_to_dqp(v));
                if (via_dqp(word_internal(u, v, InternalKind::lt)) !=
                    internal_product(pu, pv, InternalKind::lt)) {
                    agree_lt = false;
                    why_lt = packed_word_to_string(u) + " | " + packed_word_to_string(v);
                }
                if (via_dqp(word_internal(u, v, InternalKind::le)) !=
                    internal_product(pu, pv, InternalKind::le)) {
                    agree_le = false;
                    why_le = packed_word_to_string(u) + " | " + packed_word_to_string(v);
                }
                if (zeta(word_internal(u, v, InternalKind::lt)) !=
                    perm_compose(zeta(u), zeta(v))) {
                    zeta_mult = false;
                    why_zeta = packed_word_to_string(u) + " | " + packed_word_to_string(v);
                }
            }
        add_check(rep, "words/lt-closed-form-matches-generic/n=" + std::to_string(n), agree_lt,
                  why_lt);
        add_check(rep, "words/le-closed-form-matches-generic/n=" + std::to_string(n), agree_le,
                  why_le);
        add_check(rep, "words/zeta-multiplicative/n=" + std::to_string(n), zeta_mult, why_zeta);

        bool zeta_prime_mult = true, section = true;
        std::string why_zp, why_sec;
        Perm sigma = identity_perm(n);
        std::vector<Perm> perms;
        do {
            perms.push_back(sigma);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        for (const auto& s : perms) {
            if (zeta(zeta_prime(s)) != PermCombination::single(s)) {
                section = false;
                why_sec = perm_to_string(s);
            }
            for (const auto& t : perms) {
                const auto composed = zeta_prime(compose(s, t));
                WordCombination via_product;
                const auto left = zeta_prime(s);
                const auto right = zeta_prime(t);
                for (const auto& [wl, cl] : left)
                    for (const auto& [wr, cr] : right) {
                        WordCombination w = word_internal(wl, wr, InternalKind::lt);
                        w *= cl * cr;
                        via_product += w;
                    }
                if (composed != via_product) {
                    zeta_prime_mult = false;
                    why_zp = perm_to_string(s) + " | " + perm_to_string(t);
                }
            }
        }
        add_check(rep, "words/zeta-prime-multiplicative/n=" + std::to_string(n), zeta_prime_mult,
                  why_zp);
        add_check(rep, "words/zeta-section/n=" + std::to_string(n), section, why_sec);
    }

    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        bool closed = true, intertwined = true;
        std::string why_closed, why_int;
        const auto words = enumerate_packed_words(n);
        std::set<DoubleQuasiPoset> word_span;
        for (const auto& w : words)
            word_span.insert(canonicalize(word_to_dqp(w)));
        for (const auto& w : words)
            for (const auto& b : blow_ups(word_to_dqp(w)))
                if (!word_span.count(canonicalize(b))) {
                    closed = false;
                    why_closed = packed_word_to_string(w);
                }
        for (const auto& u : words)
            for (const auto& v : words) {
                const auto pu = to_basis(word_to_dqp(u));
                const auto pv = to_basis(word_to_dqp(v));
                if (upsilon(internal_product(pu, pv, InternalKind::lt)) !=
                    internal_product(upsilon(pu), upsilon(pv), InternalKind::le)) {
                    intertwined = false;
                    why_int = packed_word_to_string(u) + " | " + packed_word_to_string(v);
                }
            }
        add_check(rep, "words/span-closed-under-blowups/n=" + std::to_string(n), closed,
                  why_closed);
        add_check(rep, "words/blowup-sum-is-product-isomorphism/n=" + std::to_string(n),
                  intertwined, why_int);
    }

    {
        // Frozen small cases.
        const PackedWord w11({1, 1});
        const PackedWord w21({2, 1});
        const PackedWord w12({1, 2});
        WordCombination expected;
        expected.add(w21, Rational(1));
        expected.add(w12, Rational(1));
        add_check(rep, "words/example-11-lt-21",
                  word_internal(w11, w21, InternalKind::lt) == expected, "");
        add_check(rep, "words/example-11-le-vanishes",
                  word_internal(w11, w21, InternalKind::le).is_zero(), "");
        PermCombination z;
        z.add(perm_from_string("12"), Rational(1));
        z.add(perm_from_string("21"), Rational(1));
        add_check(rep, "words/example-zeta-11", zeta(w11) == z, "");
        const auto comp212 = compatible(PackedWord({2, 1, 2}));
        add_check(rep, "words/example-compatible-212",
                  comp212.size() == 2 && comp212[0] == perm_from_string("213") &&
                      comp212[1] == perm_from_string("312"),
                  "");
        bool perm_compose_ok = true;
        for (const auto& u : enumerate_packed_words(3, 3))
            for (const auto& v : enumerate_packed_words(3, 3)) {
                const auto w = word_internal(u, v, InternalKind::le);
                const auto expected_word = word_after_perm(v, u.to_perm());
                if (w != WordCombination::single(expected_word) ||
                    word_internal(u, v, InternalKind::lt) != w)
                    perm_compose_ok = false;
            }
        add_check(rep, "words/permutation-words-compose", perm_compose_ok, "");
    }

    if (max_n >= 4) {
        // Length five: the count formula over every word, heavier agreements
        // spot-checked.
        const auto words5 = enumerate_packed_words(5);
        bool formula = true;
        std::string why;
        for (const auto& w : words5) {
            long long expected = 1;
            std::vector<int> fibers(static_cast<size_t>(w.max_letter()), 0);
            for (int v : w.letters())
                ++fibers[static_cast<size_t>(v - 1)];
            for (int f : fibers)
                expected *= factorial(f);
            if (static_cast<long long>(compatible(w).size()) != expected) {
                formula = false;
                why = packed_word_to_string(w);
            }
        }
        add_check(rep, "words/compatible-count-formula/n=5", formula, why);

        bool agree = true;
        std::string why_agree;
        for (size_t i = 0; i < 12; ++i) {
            const auto& u = words5[(i * 37) % words5.size()];
            const auto& v = words5[(i * 61 + 13) % words5.size()];
            const auto pu = to_basis(word_to_dqp(u));
            const auto pv = to_basis(word_to_dqp(v));
            if (via_dqp(word_internal(u, v, InternalKind::lt)) !=
                    internal_product(pu, pv, InternalKind::lt) ||
                via_dqp(word_internal(u, v, InternalKind::le)) !=
                    internal_product(pu, pv, InternalKind::le)) {
                agree = false;
                why_agree = packed_word_to_string(u) + " | " + packed_word_to_string(v);
            }
        }
        add_check(rep, "words/closed-forms-match-generic-spot/n=5", agree, why_agree);

        bool section = true;
        std::string why_sec;
        Perm sigma = identity_perm(5);
        int step = 0;
        do {
            if (++step % 6 != 0)
                continue;
            if (zeta(zeta_prime(sigma)) != PermCombination::single(sigma)) {
                section = false;
                why_sec = perm_to_string(sigma);
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        add_check(rep, "words/zeta-section-spot/n=5", section, why_sec);
    }
    return rep;
}

namespace {

std::vector<std::vector<int>> ascending_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Weakly decreasing suffix generation, reversed into ascending rows.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            std::vector<int> rows(cur.rbegin(), cur.rend());
            out.push_back(rows);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            cur.push_back(part);
            rec(remaining - part);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

YoungDiagram conjugate(const YoungDiagram& shape) {
    const auto& rows = shape.rows();
    const int longest = rows.back();
    std::vector<int> cols(static_cast<size_t>(longest), 0);
    for (int len : rows)
        for (int j = 0; j < len; ++j)
            ++cols[static_cast<size_t>(j)];
    std::sort(cols.begin(), cols.end());
    return YoungDiagram(cols);
}

long long surjection_count_with_fibers(const std::vector<int>& fibers) {
    const int k = static_cast<int>(fibers.size());
    const int n = std::accumulate(fibers.begin(), fibers.end(), 0);
    long long count = 0;
    std::vector<int> image(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<int> hist(static_cast<size_t>(k), 0);
        for (int v : image)
            ++hist[static_cast<size_t>(v)];
        bool match = true;
        for (int b = 0; b < k; ++b)
            if (hist[static_cast<size_t>(b)] != fibers[static_cast<size_t>(b)])
                match = false;
        if (match)
            ++count;
        int pos = n - 1;
        while (pos >= 0 && image[static_cast<size_t>(pos)] == k - 1)
            image[static_cast<size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++image[static_cast<size_t>(pos)];
    }
    return count;
}

long long multinomial(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    long long value = factorial(n);
    for (int p : parts)
        value /= factorial(p);
    return value;
}

} // namespace

VerifyReport verify_tableaux_suite(int max_cells) {
    if (max_cells <= 0)
        max_cells = 6;
    max_cells = std::min(max_cells, 6);
    VerifyReport rep{"tableaux", {}};

    auto pool = [](int n) {
        std::vector<Preorder> out;
        if (n <= 3)
            return Preorder::enumerate(n);
        out.push_back(Preorder::chain(n));
        out.push_back(Preorder::indiscrete(n));
        // Block totals from every composition, plus two partial orders.
        for (const auto& comp : compositions(n)) {
            std::vector<int> block(static_cast<size_t>(n));
            int idx = 0;
            for (size_t b = 0; b < comp.size(); ++b)
                for (int k = 0; k < comp[b]; ++k)
                    block[static_cast<size_t>(idx++)] = static_cast<int>(b);
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && block[static_cast<size_t>(i)] <= block[static_cast<size_t>(j)])
                        pairs.emplace_back(i, j);
            out.push_back(Preorder::closure(n, pairs));
        }
        out.push_back(Preorder::closure(n, {{0, 1}}));
        out.push_back(Preorder::closure(n, {{0, n - 1}, {1, n - 1}}));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    bool strict_match = true, weak_match = true, order_collapse = true, transpose_ok = true;
    std::string why_strict, why_weak, why_collapse, why_transpose;
    for (int cells = 1; cells <= max_cells; ++cells)
        for (const auto& rows : ascending_partitions(cells)) {
            const YoungDiagram shape(rows);
            const YoungDiagram conj = conjugate(shape);
            const auto source = q_lambda(shape);
            for (const auto& second : pool(cells)) {
                const DoubleQuasiPoset target(Preorder::discrete(cells), second);
                const long long strict_tableaux = tableau_oracle(shape, target, FillMode::strict);
                const long long weak_tableaux = tableau_oracle(shape, target, FillMode::weak);
                const long long pics =
                    static_cast<long long>(enumerate_maps(source, target, MapKind::picture).size());
                const long long ss = static_cast<long long>(
                    enumerate_maps(source, target, MapKind::semistandard).size());
                if (pics != strict_tableaux) {
                    strict_match = false;
                    why_strict = dqp_to_text(source) + " | " + preorder_to_text(second);
                }
                if (ss != weak_tableaux) {
                    weak_match = false;
                    why_weak = dqp_to_text(source) + " | " + preorder_to_text(second);
                }
                if (second.is_partial_order()) {
                    const long long pre = static_cast<long long>(
                        enumerate_maps(source, target, MapKind::prepicture).size());
                    if (pics != pre || pics != ss) {
                        order_collapse = false;
                        why_collapse = dqp_to_text(source) + " | " + preorder_to_text(second);
                    }
                }
                if (strict_tableaux != tableau_oracle(conj, target, FillMode::strict) ||
                    weak_tableaux != tableau_oracle(conj, target, FillMode::weak)) {
                    transpose_ok = false;
                    why_transpose = dqp_to_text(source);
                }
            }
        }
    add_check(rep, "tableaux/picture-counts-match-strict-fillings", strict_match, why_strict);
    add_check(rep, "tableaux/semistandard-counts-match-weak-fillings", weak_match, why_weak);
    add_check(rep, "tableaux/kinds-collapse-when-second-relation-is-order", order_collapse,
              why_collapse);
    add_check(rep, "tableaux/counts-invariant-under-transposed-convention", transpose_ok,
              why_transpose);

    {
        bool pattern_content = true, orbits_partition = true;
        std::string why, why_orbits;
        for (int cells = 1; cells <= max_cells; ++cells)
            for (const auto& rows : ascending_partitions(cells)) {
                const YoungDiagram shape(rows);
                const auto source = p_lambda(shape);
                for (const auto& comp : compositions(cells)) {
                    const auto target = q_of_composition(comp);
                    const auto orbits = patterns(source, target);
                    const long long fillings = content_filling_count(shape, comp);
                    if (static_cast<long long>(orbits.size()) != fillings) {
                        pattern_content = false;
                        why = dqp_to_text(source) + " | content";
                        for (int part : comp)
                            why += " " + std::to_string(part);
                    }
                    long long total = 0;
                    for (const auto& orbit : orbits)
                        total += orbit.size;
                    if (total != static_cast<long long>(
                                     enumerate_maps(source, target, MapKind::semistandard)
                                         .size())) {
                        orbits_partition = false;
                        why_orbits = dqp_to_text(source);
                    }
                }
            }
        add_check(rep, "tableaux/pattern-counts-match-content-fillings", pattern_content, why);
        add_check(rep, "tableaux/pattern-orbit-sizes-partition-semistandard-pictures",
                  orbits_partition, why_orbits);
    }

    {
        bool pattern_surjections = true, aut_orders = true;
        std::string why_pat, why_aut;
        for (int n = 1; n <= std::min(max_cells, 5); ++n) {
            const DoubleQuasiPoset natural(Preorder::discrete(n), Preorder::chain(n));
            for (const auto& comp : compositions(n)) {
                const auto q = q_of_composition(comp);
                const long long orbit_count =
                    static_cast<long long>(patterns(q, natural).size());
                const long long expected = multinomial(comp);
                const long long oracle = surjection_count_with_fibers(comp);
                if (orbit_count != expected || oracle != expected) {
                    pattern_surjections = false;
                    why_pat = "content";
                    for (int part : comp)
                        why_pat += " " + std::to_string(part);
                }
                long long aut_expected = 1;
                for (int part : comp)
                    aut_expected *= factorial(part);
                if (static_cast<long long>(automorphisms(q).size()) != aut_expected) {
                    aut_orders = false;
                    why_aut = dqp_to_text(q);
                }
            }
        }
        add_check(rep, "tableaux/pattern-counts-match-surjection-multinomials",
                  pattern_surjections, why_pat);
        add_check(rep, "tableaux/composition-automorphism-order", aut_orders, why_aut);
    }

    {
        bool rigid = true;
        std::string why;
        for (int cells = 1; cells <= max_cells; ++cells)
            for (const auto& rows : ascending_partitions(cells))
                if (automorphisms(p_lambda(YoungDiagram(rows))).size() != 1) {
                    rigid = false;
                    why = "shape";
                    for (int r : rows)
                        why += " " + std::to_string(r);
                }
        add_check(rep, "tableaux/reading-labeled-shapes-are-rigid", rigid, why);
    }

    {
        const YoungDiagram hook({1, 2});
        const DoubleQuasiPoset natural3(Preorder::discrete(3), Preorder::chain(3));
        add_check(rep, "tableaux/example-standard-hook",
                  tableau_oracle(hook, natural3, FillMode::strict) == 2, "");
        const YoungDiagram column({1, 1, 1});
        add_check(rep, "tableaux/example-column-forced",
                  tableau_oracle(column, natural3, FillMode::strict) == 1, "");
        const DoubleQuasiPoset fused3(Preorder::discrete(3), Preorder::indiscrete(3));
        add_check(rep, "tableaux/example-weak-indiscrete",
                  tableau_oracle(hook, fused3, FillMode::weak) == 6, "");
        const YoungDiagram rect({3, 3});
        const DoubleQuasiPoset natural6(Preorder::discrete(6), Preorder::chain(6));
        add_check(rep, "tableaux/example-rectangle-count",
                  tableau_oracle(rect, natural6, FillMode::strict) == 5, "");
        const auto q = q_of_composition({2, 3, 2, 1});
        add_check(rep, "tableaux/example-young-subgroup-order",
                  automorphisms(q).size() == 24, "");
        const auto q_single = q_of_composition({3});
        add_check(rep, "tableaux/example-single-block",
                  automorphisms(q_single).size() == 6 && q_single.le2() == Preorder::indiscrete(3),
                  "");
    }
    return rep;
}

std::vector<VerifyReport> verify_all(int max_n) {
    std::vector<VerifyReport> out;
    out.push_back(verify_preorder_suite(max_n <= 0 ? 0 : std::min(max_n, 5)));
    out.push_back(verify_enumeration_suite(max_n));
    out.push_back(verify_blowup_suite(max_n));
    out.push_back(verify_hopf_suite(max_n));
    out.push_back(verify_pairing_suite(max_n));
    out.push_back(verify_gram_suite(max_n));
    out.push_back(verify_internal_suite(max_n));
    out.push_back(verify_words_suite(max_n <= 0 ? 0 : std::min(max_n + 1, 5)));
    out.push_back(verify_tableaux_suite(max_n <= 0 ? 0 : std::min(max_n + 3, 6)));
    return out;
}

} // namespace dqp
