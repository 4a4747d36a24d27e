#include "dqp/preorder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace dqp {

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
    Perm r(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        r[i] = outer[static_cast<size_t>(inner[i])];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

Preorder::Preorder(int n) : n_(n) {
    if (n < 0 || n > max_elements)
        throw SizeLimitError("preorder ground set must have between 0 and " +
                             std::to_string(max_elements) + " elements");
    rows_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        rows_[static_cast<size_t>(i)] = 1u << i;
}

Preorder Preorder::indiscrete(int n) {
    Preorder p(n);
    for (int i = 0; i < n; ++i)
        p.rows_[static_cast<size_t>(i)] = p.full_mask();
    return p;
}

Preorder Preorder::chain(int n) {
    Preorder p(n);
    for (int i = 0; i < n; ++i)
        p.rows_[static_cast<size_t>(i)] = p.full_mask() & ~((1u << i) - 1u);
    return p;
}

Preorder Preorder::closure(int n, const std::vector<std::pair<int, int>>& pairs) {
    Preorder p(n);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ParseError("pair out of range");
        p.rows_[static_cast<size_t>(i)] |= 1u << j;
    }
    // Warshall
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq(i, k))
                p.rows_[static_cast<size_t>(i)] |= p.rows_[static_cast<size_t>(k)];
    return p;
}

Preorder Preorder::from_closed_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Preorder p(n);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ParseError("pair out of range");
        p.rows_[static_cast<size_t>(i)] |= 1u << j;
    }
    if (!p.is_closed())
        throw ParseError("relation is not transitively closed");
    return p;
}

Preorder Preorder::from_rows(int n, std::vector<uint32_t> rows) {
    Preorder p(n);
    p.rows_ = std::move(rows);
    if (static_cast<int>(p.rows_.size()) != n)
        throw std::logic_error("row count mismatch");
    for (int i = 0; i < n; ++i)
        if (!p.leq(i, i) || (p.row(i) & ~p.full_mask()))
            throw std::logic_error("rows are not a reflexive relation on the ground set");
    if (!p.is_closed())
        throw std::logic_error("rows are not transitively closed");
    return p;
}

bool Preorder::is_closed() const {
    for (int i = 0; i < n_; ++i) {
        uint32_t r = row(i);
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            if (row(j) & ~row(i))
                return false;
        }
    }
    return true;
}

uint32_t Preorder::strict_row(int i) const {
    uint32_t s = 0;
    uint32_t r = row(i);
    while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        if (!leq(j, i))
            s |= 1u << j;
    }
    return s;
}

std::vector<std::vector<int>> Preorder::equivalence_classes() const {
    std::vector<std::vector<int>> classes;
    uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen >> i & 1u)
            continue;
        std::vector<int> block;
        for (int j = i; j < n_; ++j)
            if (sim(i, j)) {
                block.push_back(j);
                seen |= 1u << j;
            }
        classes.push_back(std::move(block));
    }
    return classes;
}

std::vector<uint32_t> Preorder::up_sets(bool strict) const {
    std::vector<uint32_t> result;
    const uint32_t full = full_mask();
    std::vector<uint32_t> out_rows(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out_rows[static_cast<size_t>(i)] = strict ? strict_row(i) : row(i);
    for (uint32_t x = 0;; ++x) {
        bool ok = true;
        uint32_t m = x;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            if (out_rows[static_cast<size_t>(i)] & ~x) {
                ok = false;
                break;
            }
        }
        if (ok)
            result.push_back(x);
        if (x == full)
            break;
    }
    return result;
}

bool Preorder::is_total() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!leq(i, j) && !leq(j, i))
                return false;
    return true;
}

bool Preorder::is_partial_order() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (leq(i, j) && leq(j, i))
                return false;
    return true;
}

bool Preorder::is_discrete() const {
    for (int i = 0; i < n_; ++i)
        if (row(i) != (1u << i))
            return false;
    return true;
}

Preorder Preorder::restrict_mask(uint32_t mask) const {
    std::vector<int> members;
    for (int i = 0; i < n_; ++i)
        if (mask >> i & 1u)
            members.push_back(i);
    const int m = static_cast<int>(members.size());
    Preorder out(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (leq(members[static_cast<size_t>(a)], members[static_cast<size_t>(b)]))
                out.rows_[static_cast<size_t>(a)] |= 1u << b;
    return out;
}

Preorder Preorder::relabel(const Perm& perm) const {
    Preorder out(n_);
    for (int i = 0; i < n_; ++i) {
        uint32_t r = row(i);
        uint32_t mapped = 0;
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            mapped |= 1u << perm[static_cast<size_t>(j)];
        }
        out.rows_[static_cast<size_t>(perm[static_cast<size_t>(i)])] = mapped;
    }
    return out;
}

std::vector<std::pair<int, int>> Preorder::nonreflexive_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq(i, j))
                pairs.emplace_back(i, j);
    return pairs;
}

std::vector<Preorder> Preorder::enumerate(int n, bool total_only) {
    if (n > max_enumeration_size)
        throw SizeLimitError("preorder enumeration requires n <= " +
                             std::to_string(max_enumeration_size));
    std::vector<Preorder> result;
    if (n == 0) {
        result.emplace_back(0);
        return result;
    }
    // Off-diagonal bit positions in row-major order.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                slots.emplace_back(i, j);
    const int bits = static_cast<int>(slots.size());
    std::vector<uint32_t> rows(static_cast<size_t>(n));
    for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        for (int i = 0; i < n; ++i)
            rows[static_cast<size_t>(i)] = 1u << i;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1ull)
                rows[static_cast<size_t>(slots[static_cast<size_t>(b)].first)] |=
                    1u << slots[static_cast<size_t>(b)].second;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i) {
            uint32_t r = rows[static_cast<size_t>(i)];
            while (r) {
                int j = std::countr_zero(r);
                r &= r - 1;
                if (rows[static_cast<size_t>(j)] & ~rows[static_cast<size_t>(i)]) {
                    transitive = false;
                    break;
                }
            }
        }
        if (!transitive)
            continue;
        Preorder p(n);
        p.rows_ = rows;
        if (total_only && !p.is_total())
            continue;
        result.push_back(std::move(p));
    }
    return result;
}

} // namespace dqp
