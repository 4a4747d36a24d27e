#include "dqp/pictures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dqp {

const char* map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::picture: return "picture";
        case MapKind::prepicture: return "prepicture";
        case MapKind::semistandard: return "semistandard";
        case MapKind::semi: return "semi";
        case MapKind::semiprepicture: return "semiprepicture";
    }
    return "?";
}

std::optional<MapKind> map_kind_from_string(std::string_view s) {
    if (s == "picture") return MapKind::picture;
    if (s == "prepicture") return MapKind::prepicture;
    if (s == "semistandard") return MapKind::semistandard;
    if (s == "semi") return MapKind::semi;
    if (s == "semiprepicture") return MapKind::semiprepicture;
    return std::nullopt;
}

const char* pairing_kind_name(PairingKind k) {
    return k == PairingKind::standard ? "standard" : "strict";
}

std::optional<PairingKind> pairing_kind_from_string(std::string_view s) {
    if (s == "standard") return PairingKind::standard;
    if (s == "strict") return PairingKind::strict;
    return std::nullopt;
}

namespace {

// Both implication directions for the ordered pair (i, j) -> (fi, fj).
bool pair_ok(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q, MapKind kind, int i, int j,
             int fi, int fj) {
    const Preorder& p1 = p.le1();
    const Preorder& p2 = p.le2();
    const Preorder& q1 = q.le1();
    const Preorder& q2 = q.le2();
    switch (kind) {
        case MapKind::picture:
            return (!p1.leq(i, j) || q2.leq(fi, fj)) && (!p1.lt(i, j) || q2.lt(fi, fj)) &&
                   (!q1.leq(fi, fj) || p2.leq(i, j)) && (!q1.lt(fi, fj) || p2.lt(i, j));
        case MapKind::prepicture:
            return (!p1.lt(i, j) || q2.lt(fi, fj)) && (!q1.lt(fi, fj) || p2.lt(i, j));
        case MapKind::semistandard:
            return (!p1.lt(i, j) || q2.leq(fi, fj)) && (!q1.lt(fi, fj) || p2.leq(i, j));
        case MapKind::semi:
            return (!p1.leq(i, j) || q2.leq(fi, fj)) && (!p1.lt(i, j) || q2.lt(fi, fj));
        case MapKind::semiprepicture:
            return !p1.lt(i, j) || q2.lt(fi, fj);
    }
    return false;
}

void extend(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q, MapKind kind, Bijection& f,
            uint32_t used, int i, std::vector<Bijection>& out) {
    const int n = p.size();
    if (i == n) {
        out.push_back(f);
        return;
    }
    for (int target = 0; target < n; ++target) {
        if (used >> target & 1u)
            continue;
        bool ok = true;
        for (int k = 0; k < i; ++k)
            if (!pair_ok(p, q, kind, k, i, f[static_cast<size_t>(k)], target) ||
                !pair_ok(p, q, kind, i, k, target, f[static_cast<size_t>(k)])) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        f[static_cast<size_t>(i)] = target;
        extend(p, q, kind, f, used | (1u << target), i + 1, out);
    }
}

} // namespace

std::vector<Bijection> enumerate_maps(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q,
                                      MapKind kind) {
    std::vector<Bijection> out;
    if (p.size() != q.size())
        return out;
    if (p.size() == 0) {
        out.push_back({});
        return out;
    }
    Bijection f(static_cast<size_t>(p.size()), -1);
    extend(p, q, kind, f, 0, 0, out);
    return out;
}

long long pairing(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q, PairingKind kind) {
    const MapKind mk = kind == PairingKind::standard ? MapKind::picture : MapKind::prepicture;
    return static_cast<long long>(enumerate_maps(p, q, mk).size());
}

GramMatrix gram(int n, Family family, PairingKind kind) {
    const int limit = family == Family::dqp ? 3 : 4;
    if (n > limit)
        throw SizeLimitError(std::string("gram matrix for ") + family_name(family) +
                             " requires n <= " + std::to_string(limit));
    GramMatrix m;
    m.kind = kind;
    m.basis = enumerate_isoclasses(n, family);
    const size_t dim = m.basis.size();
    m.entries.assign(dim, std::vector<long long>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i; j < dim; ++j) {
            const long long value = pairing(m.basis[i], m.basis[j], kind);
            m.entries[i][j] = value;
            m.entries[j][i] = value;
        }
    return m;
}

int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    BigInt prev(1);
    for (int k = 0; k < rows && k < cols; ++k) {
        int pr = -1;
        int pc = -1;
        for (int i = k; i < rows && pr < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pr)]);
        if (pc != k)
            for (int i = 0; i < rows; ++i)
                std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(k)],
                          m[static_cast<size_t>(i)][static_cast<size_t>(pc)]);
        const BigInt pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        BigInt quotient, remainder;
        for (int i = k + 1; i < rows; ++i)
            for (int j = k + 1; j < cols; ++j) {
                const BigInt value = m[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                                     m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                         m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                // The previous pivot divides every 2x2 update exactly; a
                // nonzero remainder would mean the elimination state is
                // corrupt, so fail loudly instead of continuing.
                mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), value.get_mpz_t(),
                            prev.get_mpz_t());
                if (remainder != 0)
                    throw std::logic_error("fraction-free elimination lost exact divisibility");
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = quotient;
            }
        prev = pivot;
        ++rank;
    }
    return rank;
}

int exact_rank(const GramMatrix& g) {
    std::vector<std::vector<BigInt>> m(g.entries.size());
    for (size_t i = 0; i < g.entries.size(); ++i) {
        m[i].reserve(g.entries[i].size());
        for (long long v : g.entries[i])
            m[i].emplace_back(static_cast<long>(v));
    }
    return bareiss_rank(std::move(m));
}

std::vector<PatternClass> patterns(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q) {
    const auto maps = enumerate_maps(p, q, MapKind::semistandard);
    const auto aut_p = automorphisms(p);
    const auto aut_q = automorphisms(q);
    std::map<Bijection, size_t> index;
    for (size_t i = 0; i < maps.size(); ++i)
        index.emplace(maps[i], i);
    std::vector<bool> seen(maps.size(), false);
    std::vector<PatternClass> out;
    for (size_t start = 0; start < maps.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<size_t> stack{start};
        seen[start] = true;
        Bijection rep = maps[start];
        long long orbit_size = 0;
        while (!stack.empty()) {
            const size_t cur = stack.back();
            stack.pop_back();
            ++orbit_size;
            rep = std::min(rep, maps[cur]);
            for (const auto& psi : aut_q)
                for (const auto& phi : aut_p) {
                    const Bijection g = compose(psi, compose(maps[cur], phi));
                    const size_t gi = index.at(g);
                    if (!seen[gi]) {
                        seen[gi] = true;
                        stack.push_back(gi);
                    }
                }
        }
        out.push_back({std::move(rep), orbit_size});
    }
    std::sort(out.begin(), out.end(),
              [](const PatternClass& a, const PatternClass& b) {
                  return a.representative < b.representative;
              });
    return out;
}

} // namespace dqp
