#include "dqp/words.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dqp {

PackedWord::PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
    int max = 0;
    for (int v : letters_) {
        if (v < 1)
            throw ParseError("packed word letters must be positive");
        max = std::max(max, v);
    }
    std::vector<bool> present(static_cast<size_t>(max), false);
    for (int v : letters_)
        present[static_cast<size_t>(v - 1)] = true;
    for (bool b : present)
        if (!b)
            throw ParseError("word is not packed: a letter below the maximum is missing");
}

int PackedWord::max_letter() const {
    int max = 0;
    for (int v : letters_)
        max = std::max(max, v);
    return max;
}

PackedWord PackedWord::from_perm(const Perm& p) {
    std::vector<int> letters(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        letters[i] = p[i] + 1;
    return PackedWord(std::move(letters));
}

Perm PackedWord::to_perm() const {
    if (!is_permutation())
        throw std::logic_error("word is not a permutation");
    Perm p(letters_.size());
    for (size_t i = 0; i < letters_.size(); ++i)
        p[i] = letters_[i] - 1;
    return p;
}

DoubleQuasiPoset word_to_dqp(const PackedWord& w) {
    const int n = w.size();
    std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.letters()[static_cast<size_t>(i)] <= w.letters()[static_cast<size_t>(j)])
                rows[static_cast<size_t>(i)] |= 1u << j;
    return {Preorder::from_rows(n, std::move(rows)), Preorder::chain(n)};
}

std::vector<Perm> compatible(const PackedWord& w) {
    const int n = w.size();
    std::vector<Perm> out;
    Perm sigma = identity_perm(n);
    if (n == 0) {
        out.push_back(sigma);
        return out;
    }
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j)
                if (w.letters()[static_cast<size_t>(i)] < w.letters()[static_cast<size_t>(j)] &&
                    sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) {
                    ok = false;
                    break;
                }
        if (ok)
            out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

PackedWord word_after_perm(const PackedWord& v, const Perm& sigma) {
    std::vector<int> letters(v.letters().size());
    for (size_t i = 0; i < letters.size(); ++i)
        letters[i] = v.letters()[static_cast<size_t>(sigma[i])];
    return PackedWord(std::move(letters));
}

WordCombination word_internal(const PackedWord& u, const PackedWord& v, InternalKind kind) {
    if (u.size() != v.size())
        throw ParseError("word internal product requires equal lengths");
    WordCombination out;
    if (kind == InternalKind::lt) {
        for (const auto& sigma : compatible(u))
            out.add(word_after_perm(v, sigma), Rational(1));
    } else if (u.is_permutation()) {
        out.add(word_after_perm(v, u.to_perm()), Rational(1));
    }
    return out;
}

PermCombination zeta(const PackedWord& w) {
    PermCombination out;
    for (const auto& sigma : compatible(w))
        out.add(inverse(sigma), Rational(1));
    return out;
}

PermCombination zeta(const WordCombination& a) {
    PermCombination out;
    for (const auto& [w, c] : a) {
        PermCombination z = zeta(w);
        z *= c;
        out += z;
    }
    return out;
}

WordCombination zeta_prime(const Perm& sigma) {
    return WordCombination::single(PackedWord::from_perm(inverse(sigma)));
}

WordCombination zeta_prime(const PermCombination& a) {
    WordCombination out;
    for (const auto& [sigma, c] : a)
        out.add(PackedWord::from_perm(inverse(sigma)), c);
    return out;
}

PermCombination perm_compose(const PermCombination& a, const PermCombination& b) {
    PermCombination out;
    for (const auto& [sigma, ca] : a)
        for (const auto& [tau, cb] : b)
            out.add(compose(sigma, tau), ca * cb);
    return out;
}

namespace {

// Letter set must be a full initial segment once the word is complete; any
// prefix is allowed, so this is a plain scan over letter tuples.
void build_words(int n, int pos, uint32_t used, int distinct, bool increasing_only,
                 std::vector<int>& letters, std::vector<PackedWord>& out) {
    if (pos == n) {
        const int max = 32 - std::countl_zero(used);
        if (used != (max == 0 ? 0u : (1u << max) - 1u))
            return;
        if (distinct == 0 || max == distinct)
            out.emplace_back(letters);
        return;
    }
    const int low = increasing_only && pos > 0 ? letters[static_cast<size_t>(pos - 1)] : 1;
    for (int v = low; v <= n; ++v) {
        letters[static_cast<size_t>(pos)] = v;
        build_words(n, pos + 1, used | (1u << (v - 1)), distinct, increasing_only, letters, out);
    }
}

} // namespace

std::vector<PackedWord> enumerate_packed_words(int n, int distinct, bool increasing_only) {
    if (n > max_word_length)
        throw SizeLimitError("packed word enumeration requires n <= " +
                             std::to_string(max_word_length));
    std::vector<PackedWord> out;
    if (n == 0) {
        if (distinct == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> letters(static_cast<size_t>(n));
    build_words(n, 0, 0, distinct, increasing_only, letters, out);
    return out;
}

} // namespace dqp
