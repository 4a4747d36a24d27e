#include "dqp/double_quasi_poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

namespace dqp {

const char* family_name(Family f) {
    switch (f) {
        case Family::dqp: return "dqp";
        case Family::sqp: return "sqp";
        case Family::dp: return "dp";
        case Family::tqp: return "tqp";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
    if (s == "dqp") return Family::dqp;
    if (s == "sqp") return Family::sqp;
    if (s == "dp") return Family::dp;
    if (s == "tqp") return Family::tqp;
    return std::nullopt;
}

DoubleQuasiPoset::DoubleQuasiPoset(Preorder first, Preorder second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (first_.size() != second_.size())
        throw std::invalid_argument("the two preorders must share a ground set");
}

bool DoubleQuasiPoset::in_family(Family f) const {
    switch (f) {
        case Family::dqp: return true;
        case Family::sqp: return is_special();
        case Family::dp: return is_double_poset();
        case Family::tqp: return is_trivial();
    }
    return false;
}

DoubleQuasiPoset single_point() {
    return {Preorder(1), Preorder(1)};
}

DoubleQuasiPoset product(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q) {
    const int np = p.size();
    const int nq = q.size();
    const int n = np + nq;
    if (n > Preorder::max_elements)
        throw SizeLimitError("product exceeds the supported ground-set size");
    std::vector<uint32_t> rows1(static_cast<size_t>(n));
    std::vector<uint32_t> rows2(static_cast<size_t>(n));
    const uint32_t q_block = nq == 0 ? 0u : ((~0u >> (32 - nq)) << np);
    for (int i = 0; i < np; ++i) {
        rows1[static_cast<size_t>(i)] = p.le1().row(i);
        rows2[static_cast<size_t>(i)] = p.le2().row(i) | q_block;
    }
    for (int i = 0; i < nq; ++i) {
        rows1[static_cast<size_t>(np + i)] = q.le1().row(i) << np;
        rows2[static_cast<size_t>(np + i)] = q.le2().row(i) << np;
    }
    return {Preorder::from_rows(n, std::move(rows1)), Preorder::from_rows(n, std::move(rows2))};
}

DoubleQuasiPoset restrict_mask(const DoubleQuasiPoset& p, uint32_t mask) {
    return {p.le1().restrict_mask(mask), p.le2().restrict_mask(mask)};
}

DoubleQuasiPoset restrict_to(const DoubleQuasiPoset& p, const std::vector<int>& elements) {
    uint32_t mask = 0;
    for (int e : elements) {
        if (e < 0 || e >= p.size())
            throw std::out_of_range("restriction member out of range");
        mask |= 1u << e;
    }
    return restrict_mask(p, mask);
}

DoubleQuasiPoset splitting(const DoubleQuasiPoset& p) {
    const int n = p.size();
    std::vector<uint32_t> rows1(static_cast<size_t>(n));
    std::vector<uint32_t> rows2(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows1[static_cast<size_t>(i)] = p.le1().strict_row(i) | (1u << i);
        rows2[static_cast<size_t>(i)] = p.le2().strict_row(i) | (1u << i);
    }
    return {Preorder::from_rows(n, std::move(rows1)), Preorder::from_rows(n, std::move(rows2))};
}

DoubleQuasiPoset iota(const DoubleQuasiPoset& p) {
    return {p.le2(), p.le1()};
}

DoubleQuasiPoset relabel(const DoubleQuasiPoset& p, const Perm& perm) {
    return {p.le1().relabel(perm), p.le2().relabel(perm)};
}

namespace {

// Candidate bit rows of a relabeling, fixed-size buffers for the n! scan.
struct CandidateBits {
    std::array<uint32_t, max_canonical_size> first{};
    std::array<uint32_t, max_canonical_size> second{};

    void build(const DoubleQuasiPoset& p, const Perm& perm) {
        const int n = p.size();
        first.fill(0);
        second.fill(0);
        for (int i = 0; i < n; ++i) {
            uint32_t r = p.le1().row(i);
            uint32_t mapped = 0;
            while (r) {
                const int j = std::countr_zero(r);
                r &= r - 1;
                mapped |= 1u << perm[static_cast<size_t>(j)];
            }
            first[static_cast<size_t>(perm[static_cast<size_t>(i)])] = mapped;
            r = p.le2().row(i);
            mapped = 0;
            while (r) {
                const int j = std::countr_zero(r);
                r &= r - 1;
                mapped |= 1u << perm[static_cast<size_t>(j)];
            }
            second[static_cast<size_t>(perm[static_cast<size_t>(i)])] = mapped;
        }
    }

    int compare(const CandidateBits& o, int n) const {
        for (int i = 0; i < n; ++i) {
            if (first[static_cast<size_t>(i)] != o.first[static_cast<size_t>(i)])
                return first[static_cast<size_t>(i)] < o.first[static_cast<size_t>(i)] ? -1 : 1;
        }
        for (int i = 0; i < n; ++i) {
            if (second[static_cast<size_t>(i)] != o.second[static_cast<size_t>(i)])
                return second[static_cast<size_t>(i)] < o.second[static_cast<size_t>(i)] ? -1 : 1;
        }
        return 0;
    }
};

} // namespace

CanonicalForm canonical_form(const DoubleQuasiPoset& p) {
    const int n = p.size();
    if (n > max_canonical_size)
        throw SizeLimitError("canonical form requires n <= " + std::to_string(max_canonical_size));
    if (n == 0)
        return {p, {Perm{}}};
    CandidateBits original;
    original.build(p, identity_perm(n));
    CandidateBits best = original;
    CandidateBits candidate;
    std::vector<Perm> auts;
    Perm perm = identity_perm(n);
    do {
        candidate.build(p, perm);
        if (candidate.compare(best, n) < 0)
            best = candidate;
        if (candidate.compare(original, n) == 0)
            auts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<uint32_t> rows1(best.first.begin(), best.first.begin() + n);
    std::vector<uint32_t> rows2(best.second.begin(), best.second.begin() + n);
    DoubleQuasiPoset rep(Preorder::from_rows(n, std::move(rows1)),
                         Preorder::from_rows(n, std::move(rows2)));
    return {std::move(rep), std::move(auts)};
}

DoubleQuasiPoset canonicalize(const DoubleQuasiPoset& p) {
    return canonical_form(p).representative;
}

std::vector<Perm> automorphisms(const DoubleQuasiPoset& p) {
    return canonical_form(p).automorphisms;
}

std::vector<DoubleQuasiPoset> blow_ups(const DoubleQuasiPoset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> classes;
    for (auto& c : p.le1().equivalence_classes())
        if (c.size() >= 2)
            classes.push_back(c);
    if (classes.empty())
        return {p};
    std::vector<std::vector<Preorder>> choices;
    choices.reserve(classes.size());
    for (const auto& c : classes)
        choices.push_back(Preorder::enumerate(static_cast<int>(c.size()), true));
    std::vector<DoubleQuasiPoset> out;
    std::vector<size_t> odometer(classes.size(), 0);
    std::vector<uint32_t> base_rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        base_rows[static_cast<size_t>(i)] = p.le1().row(i);
    while (true) {
        std::vector<uint32_t> rows = base_rows;
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            const auto& cls = classes[ci];
            const Preorder& total = choices[ci][odometer[ci]];
            for (size_t a = 0; a < cls.size(); ++a)
                for (size_t b = 0; b < cls.size(); ++b) {
                    const uint32_t bit = 1u << cls[b];
                    if (total.leq(static_cast<int>(a), static_cast<int>(b)))
                        rows[static_cast<size_t>(cls[a])] |= bit;
                    else
                        rows[static_cast<size_t>(cls[a])] &= ~bit;
                }
        }
        out.emplace_back(Preorder::from_rows(n, std::move(rows)), p.le2());
        size_t k = 0;
        while (k < odometer.size() && ++odometer[k] == choices[k].size())
            odometer[k++] = 0;
        if (k == odometer.size())
            break;
    }
    return out;
}

bool is_blowup_le(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q) {
    const int n = p.size();
    if (n != q.size())
        return false;
    if (n == 0)
        return true;
    const Preorder& p1 = p.le1();
    const Preorder& p2 = p.le2();
    const Preorder& q1 = q.le1();
    const Preorder& q2 = q.le2();
    Perm f = identity_perm(n);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j) {
                const int fi = f[static_cast<size_t>(i)];
                const int fj = f[static_cast<size_t>(j)];
                const bool cmp_p = p1.leq(i, j) || p1.leq(j, i);
                const bool cmp_q = q1.leq(fi, fj) || q1.leq(fj, fi);
                if (cmp_p != cmp_q || (p1.lt(i, j) && !q1.lt(fi, fj)) ||
                    (q1.sim(fi, fj) && !p1.sim(i, j)) || p2.leq(i, j) != q2.leq(fi, fj)) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

PairStats pair_stats(const DoubleQuasiPoset& p) {
    PairStats stats;
    for (int i = 0; i < p.size(); ++i) {
        stats.le1_pairs += std::popcount(p.le1().row(i));
        stats.le2_pairs += std::popcount(p.le2().row(i));
    }
    return stats;
}

std::vector<DoubleQuasiPoset> enumerate_isoclasses(int n, Family family) {
    const int limit = family == Family::tqp ? 5 : 4;
    if (n > limit)
        throw SizeLimitError(std::string("isoclass enumeration for ") + family_name(family) +
                             " requires n <= " + std::to_string(limit));
    if (n == 0)
        return {DoubleQuasiPoset{}};
    std::vector<Preorder> firsts;
    std::vector<Preorder> seconds;
    switch (family) {
        case Family::dqp:
            firsts = Preorder::enumerate(n);
            seconds = firsts;
            break;
        case Family::sqp:
            firsts = Preorder::enumerate(n);
            seconds = Preorder::enumerate(n, /*total_only=*/true);
            break;
        case Family::dp: {
            for (auto& p : Preorder::enumerate(n))
                if (p.is_partial_order())
                    firsts.push_back(p);
            seconds = firsts;
            break;
        }
        case Family::tqp:
            firsts = {Preorder::discrete(n)};
            seconds = Preorder::enumerate(n);
            break;
    }
    std::set<DoubleQuasiPoset> reps;
    for (const auto& a : firsts)
        for (const auto& b : seconds)
            reps.insert(canonicalize(DoubleQuasiPoset(a, b)));
    return {reps.begin(), reps.end()};
}

} // namespace dqp
