#pragma once

#include <map>
#include <utility>

#include "dqp/rational.hpp"

namespace dqp {

// Finitely supported map from keys to exact rationals. Zero coefficients are
// never stored, so equality of supports is equality of values.
template <typename Key>
class FormalSum {
public:
    using TermMap = std::map<Key, Rational>;

    FormalSum() = default;

    static FormalSum single(Key k, Rational c = Rational(1)) {
        FormalSum s;
        s.add(std::move(k), c);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_sum() const {
        Rational total(0);
        for (const auto& [k, c] : terms_)
            total += c;
        return total;
    }

    void add(Key k, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    FormalSum& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rational& c, FormalSum s) { return s *= c; }
    FormalSum operator-() const {
        FormalSum r(*this);
        for (auto& [k, v] : r.terms_)
            v = -v;
        return r;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

} // namespace dqp
