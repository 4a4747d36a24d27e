#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dqp/internal.hpp"
#include "dqp/serialize.hpp"
#include "dqp/tableaux.hpp"
#include "dqp/verify.hpp"
#include "dqp/words.hpp"

using nlohmann::json;
using namespace dqp;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitInternal = 4;

// Bijection scans are factorial; keep direct CLI inputs at desk scale.
constexpr int kMaxPictureSize = 10;

std::string read_value(const std::string& arg) {
    if (arg != "-")
        return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    if (out.empty())
        throw ParseError("expected a non-empty integer list");
    return out;
}

void check_picture_size(const DoubleQuasiPoset& p) {
    if (p.size() > kMaxPictureSize)
        throw SizeLimitError("bijection enumeration requires n <= " +
                             std::to_string(kMaxPictureSize));
}

json combination_json(const LinearCombination& a) {
    return json::parse(combination_to_json(a));
}

void print_combination(const LinearCombination& a, bool as_text) {
    if (!as_text) {
        std::cout << combination_to_json(a) << "\n";
        return;
    }
    if (a.is_zero())
        std::cout << "0\n";
    for (const auto& [p, c] : a)
        std::cout << rational_to_string(c) << "  " << dqp_to_text(p) << "\n";
}

void print_tensor(const TensorCombination& t, bool as_text) {
    if (!as_text) {
        std::cout << tensor_combination_to_json(t) << "\n";
        return;
    }
    if (t.is_zero())
        std::cout << "0\n";
    for (const auto& [pair, c] : t)
        std::cout << rational_to_string(c) << "  " << dqp_to_text(pair.first) << "  (x)  "
                  << dqp_to_text(pair.second) << "\n";
}

Family parse_family(const std::string& s) {
    const auto f = family_from_string(s);
    if (!f)
        throw ParseError("unknown family '" + s + "'");
    return *f;
}

Family parse_gram_family(const std::string& s) {
    const Family f = parse_family(s);
    if (f == Family::tqp)
        throw ParseError("gram matrices cover the dqp, sqp and dp families");
    return f;
}

PairingKind parse_pairing_kind(bool strict) {
    return strict ? PairingKind::strict : PairingKind::standard;
}

int run_verify(const std::string& suite, int max_n, bool as_text) {
    std::vector<VerifyReport> reports;
    if (suite == "all") {
        reports = verify_all(max_n);
    } else if (suite == "preorder") {
        reports.push_back(verify_preorder_suite(max_n));
    } else if (suite == "enumeration") {
        reports.push_back(verify_enumeration_suite(max_n));
    } else if (suite == "blowup") {
        reports.push_back(verify_blowup_suite(max_n));
    } else if (suite == "hopf") {
        reports.push_back(verify_hopf_suite(max_n));
    } else if (suite == "pairing") {
        reports.push_back(verify_pairing_suite(max_n));
    } else if (suite == "gram") {
        reports.push_back(verify_gram_suite(max_n));
    } else if (suite == "internal") {
        reports.push_back(verify_internal_suite(max_n));
    } else if (suite == "words") {
        reports.push_back(verify_words_suite(max_n));
    } else if (suite == "tableaux") {
        reports.push_back(verify_tableaux_suite(max_n));
    } else {
        throw ParseError("unknown suite '" + suite + "'");
    }

    int failed = 0;
    if (as_text) {
        for (const auto& rep : reports)
            for (const auto& check : rep.checks) {
                std::cout << (check.pass ? "PASS " : "FAIL ") << check.name;
                if (!check.pass && !check.detail.empty())
                    std::cout << "  [" << check.detail << "]";
                std::cout << "\n";
                failed += check.pass ? 0 : 1;
            }
        std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks failed")
                  << "\n";
    } else {
        json out = json::array();
        for (const auto& rep : reports) {
            json checks = json::array();
            for (const auto& check : rep.checks) {
                json entry{{"name", check.name}, {"pass", check.pass}};
                if (!check.pass)
                    entry["counterexample"] = check.detail;
                checks.push_back(std::move(entry));
                failed += check.pass ? 0 : 1;
            }
            out.push_back(json{{"suite", rep.suite},
                               {"checks", std::move(checks)},
                               {"failed", rep.failed_count()}});
        }
        std::cout << out.dump() << "\n";
    }
    return failed == 0 ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with double quasi-posets: Hopf structures, "
                 "pictures, pairings, internal products, words and tableaux"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List isoclass representatives");
    std::string family_name_arg = "dqp";
    int enum_n = 0;
    bool count_only = false;
    enumerate_cmd->add_option("--family", family_name_arg, "dqp, sqp, dp or tqp")->required();
    enumerate_cmd->add_option("--n", enum_n, "Ground-set size")->required();
    enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of classes");

    // product
    auto* product_cmd = app.add_subcommand("product", "Multiply two elements");
    std::string lhs_arg, rhs_arg;
    product_cmd->add_option("lhs", lhs_arg, "dqp JSON/text or combination JSON")->required();
    product_cmd->add_option("rhs", rhs_arg, "dqp JSON/text or combination JSON")->required();

    // coproduct / antipode / upsilon / splitting
    bool strict_flag = false;
    std::string value_arg;
    auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct of an element");
    coproduct_cmd->add_flag("--strict", strict_flag, "Use the preopen-set coproduct");
    coproduct_cmd->add_option("value", value_arg, "dqp JSON/text or combination JSON")->required();
    auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of an element");
    antipode_cmd->add_flag("--strict", strict_flag, "Use the preopen-set coproduct");
    antipode_cmd->add_option("value", value_arg, "dqp JSON/text or combination JSON")->required();
    auto* upsilon_cmd = app.add_subcommand("upsilon", "Blow-up sum of an element");
    upsilon_cmd->add_option("value", value_arg, "dqp JSON/text or combination JSON")->required();
    auto* splitting_cmd = app.add_subcommand("splitting", "Splitting map of an element");
    splitting_cmd->add_option("value", value_arg, "dqp JSON/text or combination JSON")->required();

    // pictures
    auto* pictures_cmd = app.add_subcommand("pictures", "Enumerate bijections of a kind");
    std::string kind_arg = "picture";
    pictures_cmd->add_option("--kind", kind_arg,
                             "picture, prepicture, semistandard, semi or semiprepicture");
    pictures_cmd->add_option("lhs", lhs_arg, "source dqp")->required();
    pictures_cmd->add_option("rhs", rhs_arg, "target dqp")->required();

    // pairing
    auto* pairing_cmd = app.add_subcommand("pairing", "Picture count of a pair");
    pairing_cmd->add_flag("--strict", strict_flag, "Count prepictures instead");
    pairing_cmd->add_option("lhs", lhs_arg, "first dqp")->required();
    pairing_cmd->add_option("rhs", rhs_arg, "second dqp")->required();

    // gram / rank
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a graded piece as CSV");
    std::string gram_kind = "standard";
    gram_cmd->add_option("--family", family_name_arg, "dqp, sqp or dp")->required();
    gram_cmd->add_option("--n", enum_n, "Ground-set size")->required();
    gram_cmd->add_option("--kind", gram_kind, "standard or strict")
        ->check(CLI::IsMember({"standard", "strict"}));
    auto* rank_cmd = app.add_subcommand("rank", "Exact rank of a Gram matrix");
    rank_cmd->add_option("--family", family_name_arg, "dqp, sqp or dp")->required();
    rank_cmd->add_option("--n", enum_n, "Ground-set size")->required();
    rank_cmd->add_option("--kind", gram_kind, "standard or strict")
        ->check(CLI::IsMember({"standard", "strict"}));

    // patterns
    auto* patterns_cmd = app.add_subcommand("patterns", "Double cosets of semistandard pictures");
    patterns_cmd->add_option("lhs", lhs_arg, "source dqp")->required();
    patterns_cmd->add_option("rhs", rhs_arg, "target dqp")->required();

    // internal-prod
    auto* internal_cmd = app.add_subcommand("internal-prod", "Internal product of two elements");
    std::string internal_kind_arg = "lt";
    internal_cmd->add_option("--kind", internal_kind_arg, "le or lt")
        ->check(CLI::IsMember({"le", "lt"}));
    internal_cmd->add_option("lhs", lhs_arg, "dqp JSON/text or combination JSON")->required();
    internal_cmd->add_option("rhs", rhs_arg, "dqp JSON/text or combination JSON")->required();

    // words
    auto* words_cmd = app.add_subcommand("words", "Packed-word operations");
    words_cmd->require_subcommand(1);
    std::string word_arg, word_rhs_arg;
    auto* words_to_dqp = words_cmd->add_subcommand("to-dqp", "Structure of a packed word");
    words_to_dqp->add_option("word", word_arg, "packed word")->required();
    auto* words_compatible = words_cmd->add_subcommand("compatible", "Compatible permutations");
    words_compatible->add_option("word", word_arg, "packed word")->required();
    auto* words_internal = words_cmd->add_subcommand("internal", "Internal product of two words");
    words_internal->add_option("--kind", internal_kind_arg, "le or lt")
        ->check(CLI::IsMember({"le", "lt"}));
    words_internal->add_option("lhs", word_arg, "packed word")->required();
    words_internal->add_option("rhs", word_rhs_arg, "packed word")->required();
    auto* words_zeta = words_cmd->add_subcommand("zeta", "Sum of inverse compatible permutations");
    words_zeta->add_option("word", word_arg, "packed word")->required();
    auto* words_zeta_prime = words_cmd->add_subcommand("zeta-prime", "Word of the inverse");
    words_zeta_prime->add_option("perm", word_arg, "permutation in one-line form")->required();
    auto* words_enumerate = words_cmd->add_subcommand("enumerate", "List packed words");
    int word_n = 0;
    int word_distinct = 0;
    bool word_increasing = false;
    words_enumerate->add_option("--n", word_n, "length")->required();
    words_enumerate->add_option("--distinct", word_distinct, "exact number of letters");
    words_enumerate->add_flag("--increasing", word_increasing, "weakly increasing words only");

    // tableaux
    auto* tableaux_cmd = app.add_subcommand("tableaux", "Young diagram operations");
    tableaux_cmd->require_subcommand(1);
    std::string shape_arg, content_arg, q_arg, mode_arg = "strict";
    auto* tab_q = tableaux_cmd->add_subcommand("q-lambda", "Cell poset with reading-order chain");
    tab_q->add_option("--shape", shape_arg, "comma-separated row lengths")->required();
    auto* tab_p = tableaux_cmd->add_subcommand("p-lambda", "Cell poset with strict reading order");
    tab_p->add_option("--shape", shape_arg, "comma-separated row lengths")->required();
    auto* tab_comp = tableaux_cmd->add_subcommand("q-comp", "Structure of a composition");
    tab_comp->add_option("--composition", content_arg, "comma-separated parts")->required();
    auto* tab_count = tableaux_cmd->add_subcommand("count", "Count fillings by a structure");
    tab_count->add_option("--shape", shape_arg, "comma-separated row lengths")->required();
    tab_count->add_option("--q", q_arg, "target dqp")->required();
    tab_count->add_option("--mode", mode_arg, "strict or weak")
        ->check(CLI::IsMember({"strict", "weak"}));
    auto* tab_content = tableaux_cmd->add_subcommand("content-count",
                                                     "Count weakly increasing content fillings");
    tab_content->add_option("--shape", shape_arg, "comma-separated row lengths")->required();
    tab_content->add_option("--content", content_arg, "comma-separated letter multiplicities")
        ->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite");
    std::string suite_arg = "all";
    int max_n = 0;
    verify_cmd->add_option("--suite", suite_arg,
                           "all, preorder, enumeration, blowup, hopf, pairing, gram, internal, "
                           "words or tableaux");
    verify_cmd->add_option("--max-n", max_n, "Override the suite's size bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    const bool as_text = format == "text";
    try {
        if (*enumerate_cmd) {
            const auto basis = enumerate_isoclasses(enum_n, parse_family(family_name_arg));
            if (count_only) {
                std::cout << basis.size() << "\n";
            } else if (as_text) {
                for (const auto& p : basis)
                    std::cout << dqp_to_text(p) << "\n";
            } else {
                json out = json::array();
                for (const auto& p : basis)
                    out.push_back(json::parse(dqp_to_json(p)));
                std::cout << out.dump() << "\n";
            }
        } else if (*product_cmd) {
            print_combination(multiply(combination_from_any(read_value(lhs_arg)),
                                       combination_from_any(read_value(rhs_arg))),
                              as_text);
        } else if (*coproduct_cmd) {
            print_tensor(coproduct(combination_from_any(read_value(value_arg)), strict_flag),
                         as_text);
        } else if (*antipode_cmd) {
            print_combination(antipode(combination_from_any(read_value(value_arg)), strict_flag),
                              as_text);
        } else if (*upsilon_cmd) {
            print_combination(upsilon(combination_from_any(read_value(value_arg))), as_text);
        } else if (*splitting_cmd) {
            print_combination(splitting_linear(combination_from_any(read_value(value_arg))),
                              as_text);
        } else if (*pictures_cmd) {
            const auto kind = map_kind_from_string(kind_arg);
            if (!kind)
                throw ParseError("unknown map kind '" + kind_arg + "'");
            const auto p = dqp_from_any(read_value(lhs_arg));
            const auto q = dqp_from_any(read_value(rhs_arg));
            check_picture_size(p);
            const auto maps = enumerate_maps(p, q, *kind);
            if (as_text) {
                for (const auto& f : maps)
                    std::cout << perm_to_string(f) << "\n";
                std::cout << maps.size() << " maps\n";
            } else {
                json out = json::array();
                for (const auto& f : maps)
                    out.push_back(perm_to_string(f));
                std::cout << json{{"count", maps.size()}, {"maps", out}}.dump() << "\n";
            }
        } else if (*pairing_cmd) {
            const auto p = dqp_from_any(read_value(lhs_arg));
            const auto q = dqp_from_any(read_value(rhs_arg));
            check_picture_size(p);
            std::cout << pairing(p, q, parse_pairing_kind(strict_flag)) << "\n";
        } else if (*gram_cmd) {
            const auto kind = pairing_kind_from_string(gram_kind);
            std::cout << gram_to_csv(gram(enum_n, parse_gram_family(family_name_arg), *kind));
        } else if (*rank_cmd) {
            const auto kind = pairing_kind_from_string(gram_kind);
            const auto g = gram(enum_n, parse_gram_family(family_name_arg), *kind);
            const int rank = exact_rank(g);
            json out{{"n", enum_n},
                     {"family", family_name_arg},
                     {"kind", gram_kind},
                     {"dim", g.basis.size()},
                     {"rank", rank}};
            std::cout << out.dump() << "\n";
        } else if (*patterns_cmd) {
            const auto p = dqp_from_any(read_value(lhs_arg));
            const auto q = dqp_from_any(read_value(rhs_arg));
            check_picture_size(p);
            const auto orbits = patterns(p, q);
            if (as_text) {
                for (const auto& orbit : orbits)
                    std::cout << perm_to_string(orbit.representative) << "  size "
                              << orbit.size << "\n";
                std::cout << orbits.size() << " patterns\n";
            } else {
                json list = json::array();
                for (const auto& orbit : orbits)
                    list.push_back(json{{"representative", perm_to_string(orbit.representative)},
                                        {"size", orbit.size}});
                std::cout << json{{"count", orbits.size()}, {"orbits", list}}.dump() << "\n";
            }
        } else if (*internal_cmd) {
            const auto kind = internal_kind_from_string(internal_kind_arg);
            print_combination(internal_product(combination_from_any(read_value(lhs_arg)),
                                               combination_from_any(read_value(rhs_arg)), *kind),
                              as_text);
        } else if (*words_cmd) {
            if (*words_to_dqp) {
                const auto p = word_to_dqp(packed_word_from_string(word_arg));
                std::cout << (as_text ? dqp_to_text(p) : dqp_to_json(p)) << "\n";
            } else if (*words_compatible) {
                const auto perms = compatible(packed_word_from_string(word_arg));
                if (as_text) {
                    for (const auto& s : perms)
                        std::cout << perm_to_string(s) << "\n";
                } else {
                    json out = json::array();
                    for (const auto& s : perms)
                        out.push_back(perm_to_string(s));
                    std::cout << out.dump() << "\n";
                }
            } else if (*words_internal) {
                const auto kind = internal_kind_from_string(internal_kind_arg);
                const auto result = word_internal(packed_word_from_string(word_arg),
                                                  packed_word_from_string(word_rhs_arg), *kind);
                if (as_text) {
                    if (result.is_zero())
                        std::cout << "0\n";
                    for (const auto& [w, c] : result)
                        std::cout << rational_to_string(c) << "  " << packed_word_to_string(w)
                                  << "\n";
                } else {
                    std::cout << word_combination_to_json(result) << "\n";
                }
            } else if (*words_zeta) {
                const auto result = zeta(packed_word_from_string(word_arg));
                if (as_text) {
                    for (const auto& [s, c] : result)
                        std::cout << rational_to_string(c) << "  " << perm_to_string(s) << "\n";
                } else {
                    std::cout << perm_combination_to_json(result) << "\n";
                }
            } else if (*words_zeta_prime) {
                const auto result = zeta_prime(perm_from_string(word_arg));
                if (as_text) {
                    for (const auto& [w, c] : result)
                        std::cout << rational_to_string(c) << "  " << packed_word_to_string(w)
                                  << "\n";
                } else {
                    std::cout << word_combination_to_json(result) << "\n";
                }
            } else if (*words_enumerate) {
                const auto words = enumerate_packed_words(word_n, word_distinct, word_increasing);
                if (as_text) {
                    for (const auto& w : words)
                        std::cout << packed_word_to_string(w) << "\n";
                    std::cout << words.size() << " words\n";
                } else {
                    json out = json::array();
                    for (const auto& w : words)
                        out.push_back(packed_word_to_string(w));
                    std::cout << out.dump() << "\n";
                }
            }
        } else if (*tableaux_cmd) {
            if (*tab_q || *tab_p) {
                const YoungDiagram shape(parse_int_list(shape_arg));
                const auto p = *tab_q ? q_lambda(shape) : p_lambda(shape);
                std::cout << (as_text ? dqp_to_text(p) : dqp_to_json(p)) << "\n";
            } else if (*tab_comp) {
                const auto p = q_of_composition(parse_int_list(content_arg));
                std::cout << (as_text ? dqp_to_text(p) : dqp_to_json(p)) << "\n";
            } else if (*tab_count) {
                const YoungDiagram shape(parse_int_list(shape_arg));
                const auto q = dqp_from_any(read_value(q_arg));
                const auto mode = mode_arg == "strict" ? FillMode::strict : FillMode::weak;
                std::cout << tableau_oracle(shape, q, mode) << "\n";
            } else if (*tab_content) {
                const YoungDiagram shape(parse_int_list(shape_arg));
                std::cout << content_filling_count(shape, parse_int_list(content_arg)) << "\n";
            }
        } else if (*verify_cmd) {
            return run_verify(suite_arg, max_n, as_text);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
