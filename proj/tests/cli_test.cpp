#include "doctest.h"

#include <cstdio>
#include <string>

#include "json.hpp"

#include "dqp/serialize.hpp"

using nlohmann::json;
using namespace dqp;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    const std::string cmd = std::string(DQP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int wait_status = pclose(pipe);
    result.status = WIFEXITED(wait_status) ? WEXITSTATUS(wait_status) : -1;
    return result;
}

std::string quoted(const std::string& s) {
    return "'" + s + "'";
}

} // namespace

TEST_CASE("enumerate command") {
    const auto count = run_cli("enumerate --family dqp --n 3 --count-only");
    CHECK(count.status == 0);
    CHECK(count.output == "166\n");

    const auto listing = run_cli("enumerate --family sqp --n 2");
    CHECK(listing.status == 0);
    const json parsed = json::parse(listing.output);
    CHECK(parsed.size() == 7);

    // Every emitted object round-trips through the strict parser.
    for (const auto& entry : parsed)
        CHECK_NOTHROW(dqp_from_json(entry.dump()));
}

TEST_CASE("pairing command") {
    const DoubleQuasiPoset trivial3(Preorder::discrete(3), Preorder::chain(3));
    const std::string arg = quoted(dqp_to_json(trivial3));
    const auto result = run_cli("pairing " + arg + " " + arg);
    CHECK(result.status == 0);
    CHECK(result.output == "6\n");

    const auto strict = run_cli("pairing --strict " + arg + " " + arg);
    CHECK(strict.status == 0);
    CHECK(strict.output == "6\n");
}

TEST_CASE("product command accepts text and json forms") {
    const auto result = run_cli("product 'dqp 0;;' 'dqp 1;;'");
    CHECK(result.status == 0);
    CHECK(combination_from_json(result.output) == to_basis(single_point()));
}

TEST_CASE("coproduct command") {
    const DoubleQuasiPoset fused(Preorder::indiscrete(2), Preorder::chain(2));
    const auto result = run_cli("coproduct --strict " + quoted(dqp_to_json(fused)));
    CHECK(result.status == 0);
    CHECK(result.output.find("\"coeff\":\"2\"") != std::string::npos);
}

TEST_CASE("rank command") {
    const auto result = run_cli("rank --family dqp --n 2");
    CHECK(result.status == 0);
    const json parsed = json::parse(result.output);
    CHECK(parsed["dim"] == 10);
    CHECK(parsed["rank"] == 10);
    CHECK(parsed["kind"] == "standard");
}

TEST_CASE("gram command emits csv") {
    const auto result = run_cli("gram --family dqp --n 2");
    CHECK(result.status == 0);
    size_t lines = 0;
    for (char c : result.output)
        lines += c == '\n' ? 1 : 0;
    CHECK(lines == 11); // header plus ten rows
}

TEST_CASE("words commands") {
    const auto internal = run_cli("words internal --kind lt 11 21");
    CHECK(internal.status == 0);
    const json parsed = json::parse(internal.output);
    CHECK(parsed.size() == 2);

    const auto zeta_out = run_cli("words zeta 11");
    CHECK(zeta_out.status == 0);
    CHECK(json::parse(zeta_out.output).size() == 2);

    const auto enum_out = run_cli("words enumerate --n 2");
    CHECK(enum_out.status == 0);
    CHECK(json::parse(enum_out.output) == json::parse(R"(["11","12","21"])"));

    const auto increasing = run_cli("words enumerate --n 3 --increasing");
    CHECK(increasing.status == 0);
    CHECK(json::parse(increasing.output).size() == 4);

    const auto to_dqp = run_cli("words to-dqp 11");
    CHECK(to_dqp.status == 0);
    CHECK(dqp_from_json(to_dqp.output) ==
          DoubleQuasiPoset(Preorder::indiscrete(2), Preorder::chain(2)));
}

TEST_CASE("tableaux commands") {
    const auto count = run_cli("tableaux count --shape 1,2 --q 'dqp 3;; (1,2),(1,3),(2,3)'");
    CHECK(count.status == 0);
    CHECK(count.output == "2\n");

    const auto content = run_cli("tableaux content-count --shape 1,2 --content 1,1,1");
    CHECK(content.status == 0);
    CHECK(content.output == "2\n");

    const auto comp = run_cli("tableaux q-comp --composition 2,1");
    CHECK(comp.status == 0);
    const auto q = dqp_from_json(comp.output);
    CHECK(q.is_trivial());
    CHECK(q.le2() == Preorder::closure(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}));

    const auto shape = run_cli("tableaux p-lambda --shape 1,2");
    CHECK(shape.status == 0);
    CHECK(dqp_from_json(shape.output).le2() == Preorder::chain(3));
}

TEST_CASE("verify command exit codes") {
    const auto ok = run_cli("verify --suite hopf --max-n 2");
    CHECK(ok.status == 0);
    const json parsed = json::parse(ok.output);
    CHECK(parsed[0]["failed"] == 0);

    const auto text = run_cli("--format text verify --suite words --max-n 2");
    CHECK(text.status == 0);
    CHECK(text.output.find("PASS") != std::string::npos);
}

TEST_CASE("error statuses") {
    CHECK(run_cli("pairing 'dqp 1;;' 'garbage'").status == 2);
    CHECK(run_cli("enumerate --family dqp --n 5 --count-only").status == 3);
    CHECK(run_cli("enumerate --family nosuch --n 2").status == 2);
    CHECK(run_cli("gram --family tqp --n 2").status == 2);
    CHECK(run_cli("nonsense-command").status == 2);
}

TEST_CASE("verify output is deterministic") {
    const auto a = run_cli("verify --suite blowup --max-n 2");
    const auto b = run_cli("verify --suite blowup --max-n 2");
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
}
