// hameig: exact construction, verification and search for minimum-support
// eigenfunctions of Hamming graphs H(n,q) and 1-perfect bitrades.
//
// Batch-oriented: every subcommand reads flags (and optionally a JSON
// document from a file or stdin) and prints a single-line JSON result.
// Exit codes: 0 success, 1 failed verification, 2 usage or input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hameig/bitrades.hpp"
#include "hameig/blocks.hpp"
#include "hameig/bounds.hpp"
#include "hameig/families.hpp"
#include "hameig/oracle.hpp"
#include "hameig/reduce.hpp"
#include "hameig/selftest.hpp"
#include "hameig/serialize.hpp"
#include "hameig/spectra.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    bool pretty = false;
    bool report = false;
    int jobs = 0;  // 0 = one worker per hardware thread
};

int effective_jobs(const GlobalOptions& opts) {
    if (opts.jobs > 0) return opts.jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

hameig::HammingFunction load_function(const std::string& path) {
    return hameig::deserialize(read_input(path));
}

// value as a JSON number when it fits, else a decimal string
ordered_json json_int(const hameig::Int& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

void emit(const GlobalOptions& opts, const std::string& command, const ordered_json& params,
          const ordered_json& result, bool ok,
          std::chrono::steady_clock::time_point started) {
    ordered_json out;
    if (opts.report) {
        const auto elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        out["command"] = command;
        out["params"] = params;
        out["result"] = result;
        out["elapsed_ms"] = elapsed;
        out["status"] = ok ? "ok" : "fail";
    } else {
        out = result;
    }
    if (opts.pretty) std::cout << out.dump(2) << "\n";
    else std::cout << out.dump() << "\n";
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
    const char* text = std::getenv(name);
    if (text == nullptr || *text == '\0') return fallback;
    return std::strtoull(text, nullptr, 10);
}

hameig::SearchBudget budget_from_env() {
    hameig::SearchBudget budget;
    budget.max_vertices = env_cap("HAMEIG_MAX_VERTICES", budget.max_vertices);
    budget.max_subsets = env_cap("HAMEIG_MAX_SUBSETS", budget.max_subsets);
    return budget;
}

std::vector<int> parse_coordinate_perm(const std::string& text, int n) {
    std::vector<int> pi;
    for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad coordinate digit in permutation");
        pi.push_back(c - '0');
    }
    if (static_cast<int>(pi.size()) != n) {
        throw std::invalid_argument("permutation must list all of 1.." + std::to_string(n));
    }
    return pi;
}

std::vector<int> parse_symbol_perm(const std::string& text, int q) {
    std::vector<int> sigma;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad symbol digit in permutation");
        sigma.push_back(c - '0');
    }
    if (static_cast<int>(sigma.size()) != q) {
        throw std::invalid_argument("symbol permutation must list all of 0.." + std::to_string(q - 1));
    }
    return sigma;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum-support eigenfunctions and 1-perfect bitrades on H(n,q)"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --pretty/--report/--jobs after the subcommand too

    GlobalOptions opts;
    app.add_flag("--pretty", opts.pretty, "pretty-print the JSON output");
    app.add_flag("--report", opts.report, "wrap the result in a command report envelope");
    app.add_option("--jobs", opts.jobs, "worker cap for the search (0 = hardware)");

    // block
    auto* block_cmd = app.add_subcommand("block", "emit a building-block function document");
    std::string block_kind;
    int block_q = 3, block_k = 0, block_m = 0;
    std::string block_perm, block_s1, block_s2, block_s3;
    block_cmd->add_option("--kind", block_kind, "one of a, b, c, d, e")->required();
    block_cmd->add_option("--q", block_q, "alphabet size");
    block_cmd->add_option("--k", block_k, "first parameter (a, c, d)");
    block_cmd->add_option("--m", block_m, "second parameter (a, c)");
    block_cmd->add_option("--perm", block_perm, "b only: coordinate permutation, e.g. 231");
    block_cmd->add_option("--sigma1", block_s1, "b only: symbol permutation of coordinate 1");
    block_cmd->add_option("--sigma2", block_s2, "b only: symbol permutation of coordinate 2");
    block_cmd->add_option("--sigma3", block_s3, "b only: symbol permutation of coordinate 3");

    // family construct
    auto* family_cmd = app.add_subcommand("family", "minimum-support family constructions");
    auto* family_construct = family_cmd->add_subcommand("construct", "build a family member");
    std::string family_name;
    int fam_n = 0, fam_i = 0, fam_j = 0;
    std::string fam_c = "1";
    std::uint64_t fam_seed = 0;
    family_construct->add_option("--family", family_name, "F1, F2, F3 or F4")->required();
    family_construct->add_option("--n", fam_n)->required();
    family_construct->add_option("--i", fam_i)->required();
    family_construct->add_option("--j", fam_j)->required();
    family_construct->add_option("--c", fam_c, "nonzero rational scale (default 1)");
    auto* fam_seed_opt =
        family_construct->add_option("--seed", fam_seed, "randomize block choices reproducibly");

    // member
    auto* member_cmd = app.add_subcommand("member", "interval membership of a function document");
    int mem_i = 0, mem_j = 0;
    std::string mem_file;
    member_cmd->add_option("--i", mem_i)->required();
    member_cmd->add_option("--j", mem_j)->required();
    member_cmd->add_option("--file", mem_file, "function document (default stdin)");

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "spectral components of a function");
    std::string dec_file;
    decompose_cmd->add_option("--file", dec_file, "function document (default stdin)");

    // restrict
    auto* restrict_cmd = app.add_subcommand("restrict", "fix one coordinate of a function");
    int res_r = 0, res_k = 0;
    std::string res_file;
    restrict_cmd->add_option("--r", res_r, "coordinate, 1-indexed")->required();
    restrict_cmd->add_option("--k", res_k, "symbol")->required();
    restrict_cmd->add_option("--file", res_file, "function document (default stdin)");

    // uniform
    auto* uniform_cmd = app.add_subcommand("uniform", "uniformity test with witnesses");
    std::string uni_file;
    uniform_cmd->add_option("--file", uni_file, "function document (default stdin)");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "minimum-support bound for U_[i,j](n,q)");
    int bnd_n = 0, bnd_q = 0, bnd_i = 0, bnd_j = 0;
    bound_cmd->add_option("--n", bnd_n)->required();
    bound_cmd->add_option("--q", bnd_q)->required();
    bound_cmd->add_option("--i", bnd_i)->required();
    bound_cmd->add_option("--j", bnd_j)->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive minimum-support search");
    int srch_n = 0, srch_q = 0, srch_i = 0, srch_j = 0;
    std::uint64_t srch_max_support = 0, srch_max_subsets = 0, srch_max_vertices = 0;
    bool srch_prune = false;
    search_cmd->add_option("--n", srch_n)->required();
    search_cmd->add_option("--q", srch_q)->required();
    search_cmd->add_option("--i", srch_i)->required();
    search_cmd->add_option("--j", srch_j)->required();
    search_cmd->add_option("--max-support", srch_max_support, "largest support size to try");
    search_cmd->add_option("--max-subsets", srch_max_subsets, "enumeration budget");
    search_cmd->add_option("--max-vertices", srch_max_vertices, "refuse larger graphs");
    search_cmd->add_flag("--prune", srch_prune, "pin vertex 0 by vertex-transitivity");

    // bitrade
    auto* bitrade_cmd = app.add_subcommand("bitrade", "1-perfect bitrade construction and checks");
    auto* bitrade_construct = bitrade_cmd->add_subcommand("construct", "minimum bitrade in H(3m+1,3)");
    int bit_m = 1;
    bitrade_construct->add_option("--m", bit_m, "builds in H(3m+1,3)")->required();
    auto* bitrade_verify = bitrade_cmd->add_subcommand("verify", "verify a bitrade document");
    std::string bit_file;
    bitrade_verify->add_option("file", bit_file, "bitrade document (default stdin)");

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in invariant battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (*block_cmd) {
            hameig::BlockSpec spec;
            spec.q = block_q;
            spec.k = block_k;
            spec.m = block_m;
            if (block_kind == "a") spec.kind = hameig::BlockKind::A;
            else if (block_kind == "b") spec.kind = hameig::BlockKind::B;
            else if (block_kind == "c") spec.kind = hameig::BlockKind::C;
            else if (block_kind == "d") spec.kind = hameig::BlockKind::D;
            else if (block_kind == "e") spec.kind = hameig::BlockKind::E;
            else throw std::invalid_argument("unknown block kind '" + block_kind + "'");
            if (spec.kind == hameig::BlockKind::B) {
                spec.q = 3;
                if (!block_perm.empty()) spec.pi = parse_coordinate_perm(block_perm, 3);
                if (!block_s1.empty() || !block_s2.empty() || !block_s3.empty()) {
                    auto sigma = [&](const std::string& text) {
                        return text.empty() ? std::vector<int>{0, 1, 2}
                                            : parse_symbol_perm(text, 3);
                    };
                    spec.sigmas = {sigma(block_s1), sigma(block_s2), sigma(block_s3)};
                }
            }
            const auto f = hameig::make_block(spec);
            emit(opts, "block", {{"kind", block_kind}, {"q", spec.q}},
                 hameig::function_to_json(f), true, started);
            return 0;
        }

        if (*family_construct) {
            hameig::FamilySpec spec;
            spec.family = hameig::family_from_string(family_name);
            spec.n = fam_n;
            spec.i = fam_i;
            spec.j = fam_j;
            if (fam_seed_opt->count() > 0) {
                spec = hameig::random_spec(spec.family, fam_n, fam_i, fam_j, fam_seed);
            }
            spec.c = hameig::parse_rational(fam_c);
            const auto f = hameig::construct(spec);
            emit(opts, "family construct",
                 {{"family", family_name}, {"n", fam_n}, {"i", fam_i}, {"j", fam_j}},
                 hameig::function_to_json(f), true, started);
            return 0;
        }

        if (*member_cmd) {
            const auto f = load_function(mem_file);
            const hameig::SpectrumInterval interval{f.n(), f.q(), mem_i, mem_j};
            const bool member = hameig::is_member(f, interval);
            emit(opts, "member", {{"i", mem_i}, {"j", mem_j}},
                 {{"n", f.n()}, {"q", f.q()}, {"i", mem_i}, {"j", mem_j}, {"member", member}},
                 member, started);
            return member ? 0 : 1;
        }

        if (*decompose_cmd) {
            const auto f = load_function(dec_file);
            const auto components = hameig::decompose(f);
            ordered_json list = ordered_json::array();
            for (int level = 0; level < static_cast<int>(components.size()); ++level) {
                const auto& component = components[static_cast<std::size_t>(level)];
                if (component.is_zero()) continue;
                list.push_back({{"level", level},
                                {"eigenvalue", hameig::eigenvalue(f.n(), f.q(), level)},
                                {"support", component.support_size()},
                                {"function", hameig::function_to_json(component)}});
            }
            emit(opts, "decompose", ordered_json::object(),
                 {{"n", f.n()}, {"q", f.q()}, {"components", list}}, true, started);
            return 0;
        }

        if (*restrict_cmd) {
            const auto f = load_function(res_file);
            emit(opts, "restrict", {{"r", res_r}, {"k", res_k}},
                 hameig::function_to_json(hameig::restrict(f, res_r, res_k)), true, started);
            return 0;
        }

        if (*uniform_cmd) {
            const auto f = load_function(uni_file);
            const auto report = hameig::is_uniform(f);
            ordered_json witnesses = ordered_json::array();
            for (const auto& l : report.l) {
                if (l.has_value()) witnesses.push_back(*l);
                else witnesses.push_back(nullptr);
            }
            emit(opts, "uniform", ordered_json::object(),
                 {{"uniform", report.uniform}, {"l", witnesses}}, true, started);
            return 0;
        }

        if (*bound_cmd) {
            const auto result = hameig::minsupp(bnd_n, bnd_q, bnd_i, bnd_j);
            ordered_json payload;
            if (result.known()) payload["value"] = json_int(*result.value);
            else payload["value"] = "unknown";
            payload["source"] = result.source;
            emit(opts, "bound",
                 {{"n", bnd_n}, {"q", bnd_q}, {"i", bnd_i}, {"j", bnd_j}}, payload, true,
                 started);
            return 0;
        }

        if (*search_cmd) {
            hameig::SearchBudget budget = budget_from_env();
            if (srch_max_support != 0) budget.max_support = srch_max_support;
            if (srch_max_subsets != 0) budget.max_subsets = srch_max_subsets;
            if (srch_max_vertices != 0) budget.max_vertices = srch_max_vertices;
            const hameig::SpectrumInterval interval{srch_n, srch_q, srch_i, srch_j};
            const auto result =
                hameig::min_support_search(interval, budget, effective_jobs(opts), srch_prune);
            ordered_json payload;
            switch (result.status) {
                case hameig::SearchStatus::Found:
                    payload["status"] = "found";
                    payload["size"] = result.size;
                    payload["witness"] = hameig::function_to_json(*result.witness);
                    break;
                case hameig::SearchStatus::SupportCapReached:
                    payload["status"] = "support-cap-reached";
                    break;
                case hameig::SearchStatus::SubsetCapReached:
                    payload["status"] = "budget-exceeded";
                    break;
            }
            payload["last_completed"] = result.last_completed;
            payload["verified_lower_bound"] = result.last_completed + 1;
            payload["subsets_examined"] = result.subsets_examined;
            emit(opts, "search",
                 {{"n", srch_n}, {"q", srch_q}, {"i", srch_i}, {"j", srch_j}}, payload, true,
                 started);
            return 0;
        }

        if (*bitrade_construct) {
            const auto b = hameig::minimal_bitrade_q3(bit_m);
            emit(opts, "bitrade construct", {{"m", bit_m}}, hameig::bitrade_to_json(b), true,
                 started);
            return 0;
        }

        if (*bitrade_verify) {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(read_input(bit_file));
            } catch (const nlohmann::json::parse_error& e) {
                throw std::invalid_argument(std::string("malformed document: ") + e.what());
            }
            const auto b = hameig::bitrade_from_json(doc);
            const auto verdict = hameig::verify_bitrade(b);
            ordered_json payload;
            payload["valid"] = verdict.valid;
            payload["size"] = verdict.size;
            payload["reason"] = verdict.reason;
            if (verdict.counterexample) {
                payload["counterexample"] =
                    hameig::word_to_string(hameig::unrank(*verdict.counterexample, b.n, b.q));
            }
            emit(opts, "bitrade verify", {{"file", bit_file}}, payload, verdict.valid, started);
            return verdict.valid ? 0 : 1;
        }

        if (*selftest_cmd) {
            const auto checks = hameig::run_selftest();
            bool all = true;
            if (opts.pretty) {
                for (const auto& check : checks) {
                    all = all && check.pass;
                    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.tag << " — "
                              << check.detail << "\n";
                }
                std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            } else {
                ordered_json payload;
                ordered_json matrix = ordered_json::array();
                for (const auto& check : checks) {
                    all = all && check.pass;
                    matrix.push_back({{"tag", check.tag},
                                      {"pass", check.pass},
                                      {"detail", check.detail}});
                }
                payload["checks"] = matrix;
                payload["all_passed"] = all;
                emit(opts, "selftest", ordered_json::object(), payload, all, started);
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
