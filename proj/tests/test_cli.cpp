#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "schubert/json_io.hpp"
#include "test_util.hpp"

using namespace schubert;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("product prints the worked S7 example") {
    const auto r = run_cli("product --n 7 --k 4 --m 2 --w \"s4 s3 s5 s4\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("u=s2 s4 s3 s5 s4 : a2 + 2*a3 + 2*a4 + a5") != std::string::npos);
}

TEST_CASE("product for the identity") {
    const auto r = run_cli("product --n 3 --k 2 --m 1 --w \"\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("s2 : 1") != std::string::npos);
    CHECK(r.output.find("(1 terms)") != std::string::npos);
}

TEST_CASE("product accepts one-line and digit input forms") {
    const auto a = run_cli("product --n 3 --k 2 --m 1 --w \"[1,3,2]\"");
    const auto b = run_cli("product --n 3 --k 2 --m 1 --w 132");
    const auto c = run_cli("product --n 3 --k 2 --m 1 --w s2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    CHECK(a.output.find("u=s2 : a2") != std::string::npos);
    CHECK(a.output.find("u=s1 s2 : 1") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string args = "product --n 4 --k 3 --m 2 --w \"s2 s3\" --format json";
    CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("every oracle agrees through the cli") {
    for (const std::string oracle : {"pieri", "recursion", "solve"}) {
        const auto r = run_cli("product --n 4 --k 2 --m 2 --w \"s1 s3\" --oracle " + oracle);
        CHECK(r.exit_code == 0);
    }
    const auto all = run_cli("product --n 4 --k 2 --m 2 --w \"s1 s3\" --oracle all");
    CHECK(all.exit_code == 0);
}

TEST_CASE("coeff text output") {
    const auto golden = run_cli(
        "coeff --n 7 --k 4 --m 2 --w \"s4 s3 s5 s4\" --u \"s2 s4 s3 s5 s4\"");
    CHECK(golden.exit_code == 0);
    CHECK(golden.output == "a2 + 2*a3 + 2*a4 + a5\n");

    // u that is not superior for any p <= m
    const auto zero = run_cli("coeff --n 3 --k 2 --m 1 --w s2 --u \"s2 s1\"");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output == "0\n");

    // xi^{c[k,m]}(e) vanishes
    const auto diag = run_cli("coeff --n 3 --k 2 --m 1 --w \"\" --u \"\"");
    CHECK(diag.exit_code == 0);
    CHECK(diag.output == "0\n");
}

TEST_CASE("coeff json round trips through the library") {
    const auto r = run_cli(
        "coeff --n 7 --k 4 --m 2 --w \"s4 s3 s5 s4\" --u \"s2 s4 s3 s5 s4\" --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("trace").at("lambda") == nlohmann::json({1, 1, 0}));
    const Permutation w = permutation_from_word({4, 3, 5, 4}, 7);
    const Permutation u = permutation_from_word({2, 4, 3, 5, 4}, 7);
    CHECK(polynomial_from_json(j.at("coeff"), 6) == pieri_coefficient(4, 2, w, u));
}

TEST_CASE("product json round trips exactly") {
    const auto r = run_cli("product --n 4 --k 3 --m 1 --w \"s1 s2\" --format json");
    CHECK(r.exit_code == 0);
    const Permutation w = permutation_from_word({1, 2}, 4);
    CHECK(expansion_from_json(nlohmann::json::parse(r.output)) == pieri_expand(3, 1, w));
}

TEST_CASE("table covers the whole group") {
    const auto r = run_cli("table --n 3 --k 2 --m 1 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("rows").size() == 6);
    for (const auto& row : j.at("rows")) {
        const SchubertExpansion e = expansion_from_json(row);
        const Permutation w = parse_permutation(row.at("w").get<std::string>(), 3);
        CHECK(e == pieri_expand(2, 1, w));
    }
}

TEST_CASE("parameter errors exit with code 2") {
    CHECK(run_cli("product --n 3 --k 2 --m 3 --w \"\"").exit_code == 2);
    CHECK(run_cli("product --n 3 --k 5 --m 1 --w \"\"").exit_code == 2);
    CHECK(run_cli("product --n 3 --k 2 --m 1 --w \"[1,2]\"").exit_code == 2);
    CHECK(run_cli("product --n 3 --k 2 --m 1 --w \"\" --format yaml").exit_code == 2);
    CHECK(run_cli("coeff --n 3 --k 2 --m 1 --w \"\"").exit_code == 2);  // missing --u
    CHECK(run_cli("verify --n 3 --suite nonsense").exit_code == 2);
    CHECK(run_cli("verify --n 6").exit_code == 2);  // above the default bound
    CHECK(run_cli("nope").exit_code == 2);
}

TEST_CASE("verify runs clean at rank three") {
    const auto r = run_cli("verify --n 3 --suite all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("suite billey-independence: PASS") != std::string::npos);
    CHECK(r.output.find("suite oracle-agreement: PASS") != std::string::npos);
    CHECK(r.output.find("suite positivity: PASS") != std::string::npos);
    CHECK(r.output.find("suite lemmas: PASS") != std::string::npos);
    CHECK(r.output.find("suite classical-limit: PASS") != std::string::npos);

    CHECK(run_cli("verify --n 4 --suite oracle-agreement").exit_code == 0);
    CHECK(run_cli("verify --n 4 --suite positivity").exit_code == 0);
}
