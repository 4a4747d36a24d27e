// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is exact (integer/rational); the two stated runtime targets
// are measured and enforced.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dqp/double_quasi_poset.hpp"
#include "dqp/verify.hpp"

using namespace dqp;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int number, const std::string& label, bool pass, size_t checks, double elapsed,
            const std::string& detail = "") {
    const std::string suffix = detail.empty() ? std::string{} : "  [" + detail + "]";
    std::printf("criterion %d: %s - %s (%zu checks, %.2fs)%s\n", number, pass ? "PASS" : "FAIL",
                label.c_str(), checks, elapsed, suffix.c_str());
    if (!pass)
        ++g_failures;
}

std::string failed_names(const VerifyReport& rep) {
    std::string out;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            if (!out.empty())
                out += ", ";
            out += c.name;
        }
    return out;
}

void suite_criterion(int number, const std::string& label, const VerifyReport& rep,
                     double elapsed, bool extra_ok = true, const std::string& extra_detail = "") {
    const bool pass = rep.all_pass() && extra_ok;
    std::string detail = failed_names(rep);
    if (!extra_ok) {
        if (!detail.empty())
            detail += ", ";
        detail += extra_detail;
    }
    report(number, label, pass, rep.checks.size(), elapsed, detail);
}

} // namespace

int main() {
    const auto total_start = std::chrono::steady_clock::now();

    {
        // 1. Isoclass counts reproduce the reference table exactly.
        const auto start = std::chrono::steady_clock::now();
        const long long dqp_expected[] = {0, 1, 10, 166, 5965};
        const long long sqp_expected[] = {0, 1, 7, 74, 1290};
        bool pass = true;
        std::string detail;
        for (int n = 1; n <= 4; ++n) {
            const auto d = enumerate_isoclasses(n, Family::dqp).size();
            const auto s = enumerate_isoclasses(n, Family::sqp).size();
            if (static_cast<long long>(d) != dqp_expected[n] ||
                static_cast<long long>(s) != sqp_expected[n]) {
                pass = false;
                detail = "n=" + std::to_string(n) + " gave dqp " + std::to_string(d) + ", sqp " +
                         std::to_string(s);
            }
        }
        const double elapsed = seconds_since(start);
        if (elapsed > 120.0) {
            pass = false;
            detail += (detail.empty() ? "" : ", ") + std::string("exceeded 120s");
        }
        report(1, "isoclass counts 1,10,166,5965 and 1,7,74,1290", pass, 8, elapsed, detail);
    }

    {
        // 2. Blow-up examples: the 2-class example has 3 blow-ups, the fused
        // triple has 13 arranged in the displayed covering structure.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_blowup_suite(3);
        suite_criterion(2, "blow-up examples and blow-up order", rep, seconds_since(start));
    }

    {
        // 3. Hopf suite, exhaustive at n <= 3 with products of total size 4.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_hopf_suite(3);
        suite_criterion(3, "Hopf suite (coassociativity, antipode, stability, blow-up sum, "
                           "splitting)",
                        rep, seconds_since(start));
    }

    {
        // 4. Pairing suite, exhaustive at n <= 3.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_pairing_suite(3);
        suite_criterion(4, "pairing suite (symmetry, Hopf pairing, swap lemma, blow-up sum)", rep,
                        seconds_since(start));
    }

    {
        // 5. Non-degeneracy certificates by exact rank, within one minute.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_gram_suite(3);
        const double elapsed = seconds_since(start);
        suite_criterion(5, "Gram rank certificates (full rank 1,10,166; strict rank = dp count)",
                        rep, elapsed, elapsed <= 60.0, "exceeded 60s");
    }

    {
        // 6. Internal-product suite, exhaustive equal-size triples at n <= 3.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_internal_suite(3);
        suite_criterion(6, "internal products (associativity, adjunction, blow-up sum, "
                           "two-sided sets)",
                        rep, seconds_since(start));
    }

    {
        // 7. Words suite, exhaustive at n <= 4 with spot checks at n = 5.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_words_suite(4);
        suite_criterion(7, "packed words (compatible counts, closed forms, zeta morphisms)", rep,
                        seconds_since(start));
    }

    {
        // 8. Tableaux and pattern suite over shapes with at most six cells.
        const auto start = std::chrono::steady_clock::now();
        const auto rep = verify_tableaux_suite(6);
        suite_criterion(8, "tableaux oracles (fillings, patterns, multinomials, Young subgroups)",
                        rep, seconds_since(start));
    }

    const double total = seconds_since(total_start);
    std::printf("acceptance total: %s (%d criterion failures, %.2fs)\n",
                g_failures == 0 ? "PASS" : "FAIL", g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
