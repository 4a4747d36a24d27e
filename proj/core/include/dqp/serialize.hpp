#pragma once

#include <string>

#include "dqp/algebra.hpp"
#include "dqp/pictures.hpp"
#include "dqp/words.hpp"

namespace dqp {

// Pair-list text form, 1-based: "n; (i,j),(k,l)". Only non-reflexive pairs of
// the closed relation appear, sorted lexicographically. In strict mode the
// parser rejects relations that are not already closed; otherwise it closes
// them.
std::string preorder_to_text(const Preorder& p);
Preorder preorder_from_text(const std::string& s, bool strict = true);

// "dqp n; <le1 pairs>; <le2 pairs>".
std::string dqp_to_text(const DoubleQuasiPoset& p);
DoubleQuasiPoset dqp_from_text(const std::string& s, bool strict = true);

// {"n": int, "le1": [[i,j],...], "le2": [[i,j],...]}, 1-based sorted
// non-reflexive pairs. parse(print(x)) == x bit-exactly.
std::string dqp_to_json(const DoubleQuasiPoset& p);
DoubleQuasiPoset dqp_from_json(const std::string& s, bool strict = true);

// [{"coeff": "p/q", "term": {...}}, ...] sorted by term.
std::string combination_to_json(const LinearCombination& a);
LinearCombination combination_from_json(const std::string& s);

// [{"coeff": "p/q", "left": {...}, "right": {...}}, ...].
std::string tensor_combination_to_json(const TensorCombination& t);

// Accepts a dqp JSON object, a combination JSON array, or the dqp text form.
LinearCombination combination_from_any(const std::string& s);
DoubleQuasiPoset dqp_from_any(const std::string& s);

// Compact digits when every letter is below 10 ("21313"), otherwise
// comma-separated ("2,1,3,1,3"); the parser accepts both.
std::string packed_word_to_string(const PackedWord& w);
PackedWord packed_word_from_string(const std::string& s);

// One-line permutation form, 1-based, same digit conventions as words.
std::string perm_to_string(const Perm& p);
Perm perm_from_string(const std::string& s);

std::string word_combination_to_json(const WordCombination& a);
std::string perm_combination_to_json(const PermCombination& a);

// Integer CSV; the header row holds the quoted canonical text form of each
// basis element.
std::string gram_to_csv(const GramMatrix& m);

} // namespace dqp
