#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "charmorph/checks.hpp"
#include "charmorph/classify.hpp"
#include "charmorph/error.hpp"
#include "charmorph/parse.hpp"

using nlohmann::json;
using namespace charmorph;

namespace {

enum : int { kExitPass = 0, kExitViolations = 1, kExitUsage = 2 };

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str(true));
        rows.push_back(std::move(row));
    }
    return rows;
}

json report_json(const CheckReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json item{{"kind", v.kind}};
        if (v.matrix_witness) item["witness"] = matrix_json(*v.matrix_witness);
        if (v.scalar_witness) item["witness"] = v.scalar_witness->str(true);
        violations.push_back(std::move(item));
    }
    return json{{"type", "check"},
                {"name", report.check_name},
                {"verdict", report.verdict()},
                {"violations", std::move(violations)},
                {"stats",
                 {{"equations", report.stats.equations},
                  {"elapsed_seconds", report.stats.elapsed_seconds}}}};
}

void print_report_text(const CheckReport& report) {
    std::cout << report.check_name << ": " << report.verdict() << " ("
              << report.stats.equations << " equations, "
              << report.stats.elapsed_seconds * 1000 << " ms)";
    if (!report.passed()) std::cout << "; " << report.violations.size() << " violation(s)";
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
    for (std::size_t i = 0; i < shown; ++i)
        std::cout << "  " << report.violations[i].kind << ": residual "
                  << report.violations[i].witness_str() << "\n";
    if (report.violations.size() > shown)
        std::cout << "  ... and " << report.violations.size() - shown << " more\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct FixtureFlags {
    std::string name;
    std::string field_spec = "rational";
    std::string a = "1", b = "1";
    std::size_t d = 2, dim = 2;
    std::string multiplicities;  // comma list; optional
};

LinearMap build_fixture(const FixtureFlags& flags) {
    const FieldPtr f = parse_field(flags.field_spec);
    if (flags.name == "example1")
        return fixture_example1(f, Scalar::parse(f, flags.a), Scalar::parse(f, flags.b));
    if (flags.name == "example2") return fixture_example2(f);
    if (flags.name == "diag_hom") {
        std::vector<std::size_t> mult;
        if (!flags.multiplicities.empty()) {
            for (const auto& tok : split_list(flags.multiplicities))
                mult.push_back(std::stoul(tok));
            if (mult.size() != flags.d)
                throw BadParams("need exactly d multiplicities");
        } else {
            // spread dim over the d blocks as evenly as possible
            if (flags.dim < 1) throw BadParams("diag_hom needs dim >= 1");
            mult.assign(flags.d, flags.dim / flags.d);
            for (std::size_t i = 0; i < flags.dim % flags.d; ++i) ++mult[i];
        }
        std::size_t total = 0;
        for (std::size_t m : mult) total += m;
        if (total != flags.dim) throw BadParams("multiplicities must sum to dim");
        return fixture_diag_hom(f, mult);
    }
    throw BadParams("unknown fixture '" + flags.name +
                    "' (expected example1, example2 or diag_hom)");
}

std::string irred_str(const IrreducibilityVerdict& v) {
    switch (v.status) {
        case IrredStatus::Irreducible: return "irreducible";
        case IrredStatus::Reducible: return "reducible";
        case IrredStatus::Unknown: return "unknown";
    }
    return "?";
}

int run_check(const LinearMap& map, const std::vector<std::string>& checks, unsigned n,
              NcMode nc_mode, const std::string& roots_mode, bool jsonl) {
    bool all_passed = true;
    for (const auto& name : checks) {
        CheckReport report;
        if (name == "hom") {
            report = is_algebra_homomorphism(map);
        } else if (name == "char") {
            report = characteristic_check(map);
        } else if (name == "minchar") {
            report = minimal_characteristic_check(map);
        } else if (name == "nc") {
            report = nc_characteristic_check(map, nc_mode);
        } else if (name == "roots") {
            if (n == 0) throw BadParams("the roots check requires --n");
            RootsMode mode;
            if (roots_mode == "full") {
                mode = RootsMode::Full;
            } else if (roots_mode == "proof_path") {
                mode = RootsMode::ProofPath;
            } else if (roots_mode == "auto") {
                mode = RootsMode::Full;
                if (roots_full_cost(map, n) > 1e6) {
                    mode = RootsMode::ProofPath;
                    std::cerr << "note: n^d exceeds 1e6; falling back to the proof-path "
                                 "element family\n";
                }
            } else {
                throw NoSuchMode("unknown roots mode '" + roots_mode + "'");
            }
            report = roots_of_unity_check(map, n, mode);
        } else {
            throw BadParams("unknown check '" + name +
                            "' (expected hom, char, minchar, nc or roots)");
        }
        if (jsonl)
            std::cout << report_json(report).dump() << "\n";
        else
            print_report_text(report);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? kExitPass : kExitViolations;
}

int run_search(const std::string& field_spec, std::size_t d, std::size_t dim,
               const std::string& mode_name, std::uint64_t budget, std::uint64_t seed,
               bool jsonl) {
    SearchMode mode;
    if (mode_name == "exhaustive")
        mode = SearchMode::Exhaustive;
    else if (mode_name == "random")
        mode = SearchMode::Random;
    else
        throw NoSuchMode("unknown search mode '" + mode_name + "'");

    const FieldPtr f = parse_field(field_spec);
    const SearchOutput out = search(f, d, dim, mode, budget, seed);

    if (jsonl) {
        for (std::size_t i = 0; i < out.results.size(); ++i) {
            const SearchResult& r = out.results[i];
            json alphas = json::array();
            for (const auto& a : r.map.alphas()) alphas.push_back(matrix_json(a));
            json line{{"type", "search_result"},
                      {"index", i},
                      {"is_hom", r.is_hom},
                      {"is_characteristic", r.is_characteristic},
                      {"irreducibility", irred_str(r.irreducibility)},
                      {"signature", r.signature},
                      {"alphas", std::move(alphas)}};
            std::cout << line.dump() << "\n";
        }
        json summary{{"type", "search_summary"},
                     {"enumerated", out.stats.enumerated},
                     {"characteristic_passes", out.stats.characteristic_passes},
                     {"distinct", out.stats.distinct_signatures},
                     {"results", out.results.size()}};
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "searched " << out.stats.enumerated << " tuples, "
                  << out.stats.characteristic_passes << " characteristic, "
                  << out.results.size() << " up to signature\n";
        for (std::size_t i = 0; i < out.results.size(); ++i) {
            const SearchResult& r = out.results[i];
            std::cout << "#" << i << " " << (r.is_hom ? "hom" : "non-hom") << " "
                      << irred_str(r.irreducibility);
            for (const auto& a : r.map.alphas()) std::cout << " " << a.str();
            std::cout << "\n";
        }
    }
    return kExitPass;
}

int run_lemma(unsigned n, const std::string& field_spec, bool jsonl) {
    const FieldPtr f =
        field_spec.empty() ? Field::cyclotomic(n) : parse_field(field_spec);
    const auto violations = verify_root_ratio_lemma(n, f);
    if (jsonl) {
        json quads = json::array();
        for (const auto& q : violations)
            quads.push_back(json::array({q.a, q.b, q.c, q.d}));
        std::cout << json{{"type", "lemma"},
                          {"n", n},
                          {"field", f->name()},
                          {"counterexamples", std::move(quads)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "n=" << n << " over " << f->name() << ": " << violations.size()
                  << " counterexamples\n";
        for (const auto& q : violations)
            std::cout << "  (a,b,c,d) = (" << q.a << "," << q.b << "," << q.c << "," << q.d
                      << ")\n";
    }
    return violations.empty() ? kExitPass : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of characteristic morphisms on k^d"};
    app.require_subcommand(1);

    // --- check ---
    auto* check = app.add_subcommand("check", "run certification checks on a linear map");
    std::string input_path, checks_list, field_spec = "rational";
    std::string nc_mode_name = "fast", roots_mode = "auto", output = "text";
    unsigned roots_n = 0;
    FixtureFlags fixture;
    check->add_option("--input", input_path, "linear-map document ('-' for stdin)");
    check->add_option("--fixture", fixture.name, "fixture name: example1, example2, diag_hom");
    check->add_option("--field", field_spec, "field for fixtures: rational, cyclotomic:N, gf:P");
    check->add_option("--a", fixture.a, "example1 parameter a");
    check->add_option("--b", fixture.b, "example1 parameter b");
    check->add_option("--d", fixture.d, "diag_hom block count");
    check->add_option("--dim", fixture.dim, "diag_hom total dimension");
    check->add_option("--multiplicities", fixture.multiplicities,
                      "diag_hom block sizes, comma-separated");
    check->add_option("--checks", checks_list, "comma list of hom, char, minchar, nc, roots")
        ->required();
    check->add_option("--n", roots_n, "torsion order for the roots check");
    check->add_option("--nc-mode", nc_mode_name, "fast (default) or naive");
    check->add_option("--roots-mode", roots_mode, "auto (default), full or proof_path");
    check->add_option("--output", output, "text (default) or jsonl");

    // --- search ---
    auto* search_cmd = app.add_subcommand("search", "survey characteristic morphisms");
    std::string search_field = "gf:3", search_mode = "exhaustive";
    std::size_t search_d = 2, search_dim = 1;
    std::uint64_t budget = 1000, seed = 0;
    search_cmd->add_option("--field", search_field, "coefficient field");
    search_cmd->add_option("--d", search_d, "number of idempotents");
    search_cmd->add_option("--dim", search_dim, "module dimension");
    search_cmd->add_option("--mode", search_mode, "exhaustive or random");
    search_cmd->add_option("--budget", budget, "trial count in random mode");
    search_cmd->add_option("--seed", seed, "random-mode seed");
    search_cmd->add_option("--output", output, "text (default) or jsonl");

    // --- lemma ---
    auto* lemma_cmd = app.add_subcommand("lemma", "verify the root-ratio dichotomy exhaustively");
    unsigned lemma_n = 0;
    std::string lemma_field;
    lemma_cmd->add_option("--n", lemma_n, "root-of-unity order")->required();
    lemma_cmd->add_option("--field", lemma_field, "field override (default cyclotomic:n)");
    lemma_cmd->add_option("--output", output, "text (default) or jsonl");

    // --- fixtures ---
    auto* fixtures_cmd = app.add_subcommand("fixtures", "print a fixture document");
    fixtures_cmd->add_option("--name", fixture.name, "example1, example2 or diag_hom")
        ->required();
    fixtures_cmd->add_option("--field", fixture.field_spec, "field for the fixture");
    fixtures_cmd->add_option("--a", fixture.a, "example1 parameter a");
    fixtures_cmd->add_option("--b", fixture.b, "example1 parameter b");
    fixtures_cmd->add_option("--d", fixture.d, "diag_hom block count");
    fixtures_cmd->add_option("--dim", fixture.dim, "diag_hom total dimension");
    fixtures_cmd->add_option("--multiplicities", fixture.multiplicities,
                             "diag_hom block sizes, comma-separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool jsonl = output == "jsonl";
    if (output != "text" && output != "jsonl") {
        std::cerr << "error: unknown output format '" << output << "'\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            if (input_path.empty() == fixture.name.empty()) {
                std::cerr << "error: give exactly one of --input or --fixture\n";
                return kExitUsage;
            }
            const std::vector<std::string> checks = split_list(checks_list);
            if (checks.empty()) {
                std::cerr << "error: --checks must select at least one check\n";
                return kExitUsage;
            }
            NcMode nc_mode;
            if (nc_mode_name == "fast")
                nc_mode = NcMode::Fast;
            else if (nc_mode_name == "naive")
                nc_mode = NcMode::Naive;
            else
                throw NoSuchMode("unknown nc mode '" + nc_mode_name + "'");

            fixture.field_spec = field_spec;
            const LinearMap map = input_path.empty()
                                      ? build_fixture(fixture)
                                      : parse_linear_map(read_input(input_path));
            return run_check(map, checks, roots_n, nc_mode, roots_mode, jsonl);
        }
        if (search_cmd->parsed())
            return run_search(search_field, search_d, search_dim, search_mode, budget, seed,
                              jsonl);
        if (lemma_cmd->parsed()) return run_lemma(lemma_n, lemma_field, jsonl);
        if (fixtures_cmd->parsed()) {
            std::cout << render_linear_map(build_fixture(fixture));
            return kExitPass;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
