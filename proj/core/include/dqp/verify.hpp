#pragma once

#include <string>
#include <vector>

#include "dqp/double_quasi_poset.hpp"

namespace dqp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample description, empty when passing
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int failed_count() const;
};

// Every suite clamps its bound to the enumeration guards it needs; passing a
// non-positive bound selects the suite default. Checks appear in a fixed
// order and counterexamples are rendered deterministically.
VerifyReport verify_preorder_suite(int max_n = 0);    // default 4
VerifyReport verify_enumeration_suite(int max_n = 0); // default 4
VerifyReport verify_blowup_suite(int max_n = 0);      // default 3
VerifyReport verify_hopf_suite(int max_n = 0);        // default 3
VerifyReport verify_pairing_suite(int max_n = 0);     // default 3
VerifyReport verify_gram_suite(int max_n = 0);        // default 3
VerifyReport verify_internal_suite(int max_n = 0);    // default 3
VerifyReport verify_words_suite(int max_n = 0);       // default 4
VerifyReport verify_tableaux_suite(int max_cells = 0); // default 6

// All suites in a fixed order; max_n <= 0 keeps per-suite defaults.
std::vector<VerifyReport> verify_all(int max_n = 0);

// Isoclass count by Burnside's lemma over explicit relabelings; shares no
// code with the canonical-form path beyond the raw labeled enumerations.
long long burnside_isoclass_count(int n, Family family);

} // namespace dqp
