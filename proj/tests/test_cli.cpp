#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include "charmorph/checks.hpp"
#include "charmorph/classify.hpp"

using nlohmann::json;
using namespace charmorph;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string binary() {
    const char* bin = std::getenv("CHARMORPH_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CHARMORPH_BIN must point at the CLI binary");
    return bin;
}

CliResult run_cli(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& contents, const std::string& tag) {
    const std::string path = "/tmp/charmorph_cli_" + tag + "_" +
                             std::to_string(static_cast<unsigned long>(getpid())) + ".txt";
    std::ofstream out(path);
    out << contents;
    return path;
}

std::vector<json> jsonl_lines(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(json::parse(line));
    return lines;
}

}  // namespace

TEST_CASE("exit-code contract on the fixtures") {
    SUBCASE("example 1: char passes, hom fails, exit 1") {
        const CliResult r = run_cli("check --fixture example1 --a 1 --b 1 --checks char,hom");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("char: pass") != std::string::npos);
        CHECK(r.output.find("hom: fail") != std::string::npos);
    }
    SUBCASE("diagonal homomorphism: everything passes, exit 0") {
        const CliResult r =
            run_cli("check --fixture diag_hom --d 3 --dim 3 --checks hom,char,minchar,nc");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("lemma at n = 12: exit 0 with no counterexamples") {
        const CliResult r = run_cli("lemma --n 12");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("0 counterexamples") != std::string::npos);
    }
}

TEST_CASE("jsonl output round-trips and reproduces the verdicts") {
    const CliResult r = run_cli(
        "check --fixture example1 --a 1 --b 1 --checks char,hom,minchar,nc --output jsonl");
    CHECK(r.exit_code == 1);
    const auto lines = jsonl_lines(r.output);
    REQUIRE(lines.size() == 4);

    const LinearMap phi = fixture_example1(Field::rationals(), 1, 1);
    const std::vector<std::pair<std::string, bool>> expected{
        {"char", characteristic_check(phi).passed()},
        {"hom", is_algebra_homomorphism(phi).passed()},
        {"minchar", minimal_characteristic_check(phi).passed()},
        {"nc", nc_characteristic_check(phi).passed()},
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const json& line = lines[i];
        CHECK(line.at("type") == "check");
        CHECK(line.at("name") == expected[i].first);
        CHECK(line.at("verdict") == (expected[i].second ? "pass" : "fail"));
        CHECK(line.at("violations").is_array());
        CHECK((line.at("verdict") == "pass") == line.at("violations").empty());
        CHECK(line.at("stats").at("equations").get<std::uint64_t>() > 0);
    }
}

TEST_CASE("preconditions and usage errors exit with 2") {
    SUBCASE("nc refuses characteristic <= d") {
        const CliResult r =
            run_cli("check --fixture diag_hom --d 3 --dim 3 --field gf:3 --checks nc");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("fixture precondition violations") {
        // a + b = 0 in GF(2)
        const CliResult r =
            run_cli("check --fixture example1 --field gf:2 --a 1 --b 1 --checks char");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("roots without --n") {
        const CliResult r = run_cli("check --fixture example2 --checks roots");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("missing --checks is a usage error") {
        const CliResult r = run_cli("check --fixture example2");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("unknown check name") {
        const CliResult r = run_cli("check --fixture example2 --checks frobnicate");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("parse errors in input documents") {
        const std::string path =
            write_temp("field rational\nd 2\ndim 2\nmatrix 1\n1 z\n0 0\nmatrix 2\n0 1\n0 1\n",
                       "badscalar");
        const CliResult r = run_cli("check --input " + path + " --checks char");
        CHECK(r.exit_code == 2);
        std::remove(path.c_str());
    }
}

TEST_CASE("fixture documents feed back into check --input") {
    const CliResult doc = run_cli("fixtures --name example2");
    REQUIRE(doc.exit_code == 0);
    const std::string path = write_temp(doc.output, "example2");
    const CliResult r = run_cli("check --input " + path + " --checks char,hom");
    CHECK(r.exit_code == 1);  // char passes, hom fails
    CHECK(r.output.find("char: pass") != std::string::npos);
    CHECK(r.output.find("hom: fail") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("diag_hom flags: explicit multiplicities") {
    const CliResult r = run_cli(
        "check --fixture diag_hom --d 2 --dim 3 --multiplicities 2,1 --checks hom,minchar");
    CHECK(r.exit_code == 0);
    // multiplicities must sum to dim
    const CliResult bad = run_cli(
        "check --fixture diag_hom --d 2 --dim 3 --multiplicities 2,2 --checks hom");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("roots check through the CLI") {
    const CliResult pass = run_cli(
        "check --fixture diag_hom --d 2 --dim 2 --field cyclotomic:3 --checks roots --n 3");
    CHECK(pass.exit_code == 0);
    const CliResult fail = run_cli(
        "check --fixture example1 --field cyclotomic:3 --a 1 --b 1 --checks roots --n 3");
    CHECK(fail.exit_code == 1);
    // rational field cannot host n = 3: precondition error
    const CliResult err = run_cli("check --fixture example2 --checks roots --n 3");
    CHECK(err.exit_code == 2);
}

TEST_CASE("search through the CLI emits a parseable summary") {
    const CliResult r =
        run_cli("search --field gf:3 --d 2 --dim 1 --mode exhaustive --output jsonl");
    CHECK(r.exit_code == 0);
    const auto lines = jsonl_lines(r.output);
    REQUIRE(!lines.empty());
    const json& summary = lines.back();
    CHECK(summary.at("type") == "search_summary");
    CHECK(summary.at("enumerated") == 9);
    CHECK(summary.at("results") == 2);
    // the two result lines carry the full matrices
    int result_lines = 0;
    for (const auto& line : lines)
        if (line.at("type") == "search_result") {
            ++result_lines;
            CHECK(line.at("is_hom") == true);
            CHECK(line.at("irreducibility") == "irreducible");
        }
    CHECK(result_lines == 2);
}
