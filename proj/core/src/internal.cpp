#include "dqp/internal.hpp"

#include <stdexcept>

namespace dqp {

const char* internal_kind_name(InternalKind k) {
    return k == InternalKind::le ? "le" : "lt";
}

std::optional<InternalKind> internal_kind_from_string(std::string_view s) {
    if (s == "le") return InternalKind::le;
    if (s == "lt") return InternalKind::lt;
    return std::nullopt;
}

DoubleQuasiPoset product_over(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q,
                              const Bijection& f) {
    const int n = p.size();
    if (static_cast<int>(f.size()) != n || q.size() != n)
        throw std::invalid_argument("product_over requires a bijection between equal ground sets");
    uint32_t hit = 0;
    for (int v : f) {
        if (v < 0 || v >= n || (hit >> v & 1u))
            throw std::invalid_argument("product_over requires a bijection");
        hit |= 1u << v;
    }
    std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.le1().leq(f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]))
                rows[static_cast<size_t>(i)] |= 1u << j;
    return {Preorder::from_rows(n, std::move(rows)), p.le2()};
}

LinearCombination internal_product(const LinearCombination& a, const LinearCombination& b,
                                   InternalKind kind) {
    const MapKind mk = kind == InternalKind::le ? MapKind::semi : MapKind::semiprepicture;
    LinearCombination out;
    for (const auto& [p, cp] : a)
        for (const auto& [q, cq] : b) {
            if (p.size() != q.size())
                continue;
            const Rational c = cp * cq;
            for (const auto& f : enumerate_maps(p, q, mk))
                out.add(canonicalize(product_over(p, q, f)), c);
        }
    return out;
}

} // namespace dqp
