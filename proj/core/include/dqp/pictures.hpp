#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dqp/double_quasi_poset.hpp"
#include "dqp/rational.hpp"

namespace dqp {

// The five bijection classes between two structures of equal size. The first
// relation of the source and the second relation of the target drive the
// forward implications; "reflected" conditions run the other way.
//   picture:        <=1 -> <=2, <1 -> <2, and both reflected
//   prepicture:     <1 -> <2 and reflected <1 -> <2
//   semistandard:   <1 -> <=2 and reflected <1 -> <=2
//   semi:           forward only, <=1 -> <=2 and <1 -> <2
//   semiprepicture: forward only, <1 -> <2
enum class MapKind { picture, prepicture, semistandard, semi, semiprepicture };

enum class PairingKind { standard, strict };

const char* map_kind_name(MapKind k);
std::optional<MapKind> map_kind_from_string(std::string_view s);
const char* pairing_kind_name(PairingKind k);
std::optional<PairingKind> pairing_kind_from_string(std::string_view s);

using Bijection = Perm;

// All bijections of the given kind, in lexicographic order; empty when the
// sizes differ. Backtracking with incremental constraint checks.
std::vector<Bijection> enumerate_maps(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q,
                                      MapKind kind);

// Number of pictures (standard) or prepictures (strict); 0 when sizes differ.
long long pairing(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q, PairingKind kind);

struct GramMatrix {
    std::vector<DoubleQuasiPoset> basis; // canonical isoclass representatives, sorted
    std::vector<std::vector<long long>> entries;
    PairingKind kind = PairingKind::standard;
};

// Pairing matrix over enumerate_isoclasses(n, family). Guarded at n <= 3 for
// dqp and n <= 4 otherwise.
GramMatrix gram(int n, Family family, PairingKind kind);

// Rank over the rationals, via fraction-free (Bareiss) elimination.
int exact_rank(const GramMatrix& m);
int bareiss_rank(std::vector<std::vector<BigInt>> m);

struct PatternClass {
    Bijection representative; // lexicographic minimum of the orbit
    long long size = 0;
};

// Double cosets of semistandard pictures under post-composition by Aut(q) and
// pre-composition by Aut(p), sorted by representative.
std::vector<PatternClass> patterns(const DoubleQuasiPoset& p, const DoubleQuasiPoset& q);

} // namespace dqp
