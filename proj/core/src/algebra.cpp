#include "dqp/algebra.hpp"

namespace dqp {

LinearCombination to_basis(const DoubleQuasiPoset& p) {
    return LinearCombination::single(canonicalize(p));
}

LinearCombination unit_element() {
    return LinearCombination::single(DoubleQuasiPoset{});
}

LinearCombination multiply(const LinearCombination& a, const LinearCombination& b) {
    LinearCombination out;
    for (const auto& [p, cp] : a)
        for (const auto& [q, cq] : b)
            out.add(canonicalize(product(p, q)), cp * cq);
    return out;
}

TensorCombination coproduct(const DoubleQuasiPoset& p, bool strict) {
    TensorCombination out;
    const uint32_t full = p.le1().full_mask();
    for (uint32_t open : p.le1().up_sets(strict))
        out.add({canonicalize(restrict_mask(p, full & ~open)), canonicalize(restrict_mask(p, open))},
                Rational(1));
    return out;
}

TensorCombination coproduct(const LinearCombination& a, bool strict) {
    TensorCombination out;
    for (const auto& [p, c] : a) {
        TensorCombination t = coproduct(p, strict);
        t *= c;
        out += t;
    }
    return out;
}

Rational counit(const LinearCombination& a) {
    return a.coefficient(DoubleQuasiPoset{});
}

namespace {

LinearCombination antipode_impl(const DoubleQuasiPoset& p, bool strict,
                                std::map<DoubleQuasiPoset, LinearCombination>& memo) {
    if (p.size() == 0)
        return unit_element();
    if (auto it = memo.find(p); it != memo.end())
        return it->second;
    // S(P) = -P - sum over proper (pre)open O of S(P restricted to O^c) * P restricted to O.
    LinearCombination s = -to_basis(p);
    const uint32_t full = p.le1().full_mask();
    for (uint32_t open : p.le1().up_sets(strict)) {
        if (open == 0 || open == full)
            continue;
        const auto left = canonicalize(restrict_mask(p, full & ~open));
        const auto right = restrict_mask(p, open);
        s -= multiply(antipode_impl(left, strict, memo), to_basis(right));
    }
    memo.emplace(p, s);
    return s;
}

} // namespace

LinearCombination antipode(const DoubleQuasiPoset& p, bool strict) {
    std::map<DoubleQuasiPoset, LinearCombination> memo;
    return antipode_impl(canonicalize(p), strict, memo);
}

LinearCombination antipode(const LinearCombination& a, bool strict) {
    std::map<DoubleQuasiPoset, LinearCombination> memo;
    LinearCombination out;
    for (const auto& [p, c] : a) {
        LinearCombination s = antipode_impl(p, strict, memo);
        s *= c;
        out += s;
    }
    return out;
}

LinearCombination upsilon(const DoubleQuasiPoset& p) {
    LinearCombination out;
    for (const auto& b : blow_ups(p))
        out.add(canonicalize(b), Rational(1));
    return out;
}

LinearCombination upsilon(const LinearCombination& a) {
    LinearCombination out;
    for (const auto& [p, c] : a) {
        LinearCombination u = upsilon(p);
        u *= c;
        out += u;
    }
    return out;
}

LinearCombination splitting_linear(const LinearCombination& a) {
    LinearCombination out;
    for (const auto& [p, c] : a)
        out.add(canonicalize(splitting(p)), c);
    return out;
}

TensorCombination tensor_multiply(const TensorCombination& a, const TensorCombination& b) {
    TensorCombination out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b)
            out.add({canonicalize(product(pa.first, pb.first)),
                     canonicalize(product(pa.second, pb.second))},
                    ca * cb);
    return out;
}

TripleTensorCombination coproduct_first(const TensorCombination& t, bool strict) {
    TripleTensorCombination out;
    for (const auto& [pair, c] : t)
        for (const auto& [inner, ci] : coproduct(pair.first, strict))
            out.add({inner.first, inner.second, pair.second}, c * ci);
    return out;
}

TripleTensorCombination coproduct_second(const TensorCombination& t, bool strict) {
    TripleTensorCombination out;
    for (const auto& [pair, c] : t)
        for (const auto& [inner, ci] : coproduct(pair.second, strict))
            out.add({pair.first, inner.first, inner.second}, c * ci);
    return out;
}

} // namespace dqp
