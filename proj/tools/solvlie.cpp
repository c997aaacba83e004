#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvlie/generators.hpp"
#include "solvlie/report.hpp"

using namespace solvlie;

namespace {

// exit codes: 0 ok/is-A, 1 invalid algebra, 2 parse error, 3 not-A,
// 4 undecided, 5 theorem-suite failure
enum exit_code { kOk = 0, kInvalid = 1, kParse = 2, kNotA = 3, kUndecided = 4, kSuiteFail = 5 };

FieldSpec field_from_name(const std::string& name) {
    std::string s = name;
    for (auto& c : s) c = static_cast<char>(std::tolower(c));
    if (s == "q") return FieldSpec::rationals();
    if (s.rfind("gf", 0) != 0) throw parse_error("unknown field \"" + name + "\" (use q or gfN)");
    std::uint64_t order = std::stoull(s.substr(2));
    for (std::uint64_t p = 2; p * p <= order || p <= order; ++p) {
        if (order % p != 0) continue;
        std::uint64_t m = order;
        unsigned k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1) throw parse_error("field order " + std::to_string(order) + " is not a prime power");
        return k == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension_field(p, k);
    }
    throw parse_error("field order must be at least 2");
}

struct CommonOpts {
    std::uint64_t seed = 0;
    int threads = 0;
    EnumBudget budget;
    std::string mutate;
};

void apply_common(const CommonOpts& c) {
    if (c.threads > 0) {
#ifdef _OPENMP
        omp_set_num_threads(c.threads);
#endif
        fpk::set_parallel_scans(c.threads != 1);
    }
    if (c.mutate.empty())
        set_mutation(mutation_kind::none);
    else if (c.mutate == "cor32-complement")
        set_mutation(mutation_kind::cor32_complement);
    else
        throw parse_error("unknown mutation \"" + c.mutate + "\"");
}

int cmd_check(const std::string& path) {
    try {
        LieAlgebra L = load_algebra(path);
        std::cout << "ok: dimension " << L.dim() << " over " << L.field().describe() << "\n";
        return kOk;
    } catch (const jacobi_violation& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const alternating_violation& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const parse_error& e) {
        std::cout << "parse error: " << e.what() << "\n";
        return kParse;
    }
}

int cmd_analyze(const std::string& path, const CommonOpts& c, const std::string& method,
                const std::string& out, bool with_theorems, bool with_timings,
                const std::string& dump_subspaces) {
    LieAlgebra L = load_algebra(path);
    if (!dump_subspaces.empty()) {
        std::ofstream dump(dump_subspaces);
        dump << subspace_jsonl(enum_subspaces(L, c.budget));
    }
    ReportOptions opt;
    opt.method = method;
    opt.seed = c.seed;
    opt.budget = c.budget;
    opt.with_theorems = with_theorems;
    opt.with_timings = with_timings;
    opt.input_desc = path;
    json j = run_report(L, opt);
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json(out, j);
    return kOk;
}

int cmd_is_a(const std::string& path, const CommonOpts& c, const std::string& method) {
    LieAlgebra L = load_algebra(path);
    a_method m = a_method::auto_pick;
    if (method == "oracle") m = a_method::oracle_pairs;
    if (method == "structural") m = a_method::structural;
    try {
        ACertificate cert = is_A(L, m, c.budget, c.seed);
        std::cout << certificate_to_json(cert).dump(2) << "\n";
        return cert.verdict ? kOk : kNotA;
    } catch (const undecided& e) {
        std::cout << json{{"undecided", e.what()}}.dump(2) << "\n";
        return kUndecided;
    }
}

int cmd_decompose(const std::string& path, const CommonOpts& c, const std::string& out) {
    LieAlgebra L = load_algebra(path);
    try {
        json j = decomposition_to_json(triangular_decomposition(L, c.seed));
        if (out.empty())
            std::cout << j.dump(2) << "\n";
        else
            save_json(out, j);
        return kOk;
    } catch (const split_failed& e) {
        std::cout << json{{"failed", e.what()}}.dump(2) << "\n";
        return kNotA;  // a failed split signals a non-A input
    } catch (const not_solvable& e) {
        std::cout << json{{"failed", e.what()}}.dump(2) << "\n";
        return kInvalid;
    }
}

int cmd_generate(const CommonOpts& c, const std::string& kind, const std::string& field_name,
                 int dim, int n_blocks, const std::vector<long long>& lambda, int count,
                 const std::string& out, const std::string& out_dir) {
    FieldSpec f = field_from_name(field_name);
    auto build = [&](std::uint64_t seed) -> LieAlgebra {
        if (kind == "example24") return example_2_4(f);
        if (kind == "two-dim") return two_dim_nonabelian(f);
        if (kind == "heisenberg") return heisenberg(f);
        if (kind == "abelian") return abelian_algebra(f, dim);
        if (kind == "thm61") {
            Theorem61Params p;
            p.m = dim;
            p.n = n_blocks;
            size_t idx = 0;
            for (int i = 0; i < p.m; ++i) {
                p.lambda.emplace_back();
                for (int j = 0; j < p.n; ++j)
                    p.lambda.back().push_back(Scalar::from_int(
                        f, idx < lambda.size() ? lambda[idx++] : 0));
            }
            return theorem_6_1_algebra(p, f);
        }
        if (kind == "thm66") {
            std::vector<Scalar> ls;
            for (int i = 0; i < n_blocks; ++i)
                ls.push_back(Scalar::from_int(
                    f, i < static_cast<int>(lambda.size()) ? lambda[i] : 0));
            return theorem_6_6_algebra(f.characteristic(), n_blocks, ls, f);
        }
        if (kind == "random-solvable") return random_solvable(seed, dim, f);
        if (kind == "random-a") return random_A_candidate(seed, f);
        throw parse_error("unknown generator kind \"" + kind + "\"");
    };
    for (int i = 0; i < count; ++i) {
        LieAlgebra L = build(c.seed + static_cast<std::uint64_t>(i));
        json j = algebra_to_json(L);
        std::string path;
        if (count == 1 && !out.empty()) {
            path = out;
        } else {
            std::string dir = out_dir.empty() ? "." : out_dir;
            path = dir + "/" + kind + "_" + std::to_string(c.seed + i) + ".json";
        }
        save_json(path, j);
        std::cout << path << "\n";
    }
    return kOk;
}

int cmd_verify(const CommonOpts& c, const std::string& corpus, const std::string& field_name,
               int dim_max, int count, const std::vector<std::string>& files) {
    std::vector<LieAlgebra> items;
    std::vector<std::string> labels;
    if (corpus == "files") {
        for (const auto& p : files) {
            items.push_back(load_algebra(p));
            labels.push_back(p);
        }
    } else {
        FieldSpec f = field_from_name(field_name);
        for (int i = 0; i < count; ++i) {
            std::uint64_t s = c.seed + static_cast<std::uint64_t>(i);
            if (corpus == "random") {
                items.push_back(random_solvable(s, dim_max, f));
                labels.push_back("random_solvable(seed=" + std::to_string(s) + ")");
            } else if (corpus == "lemma53") {
                items.push_back(random_A_candidate(s, f));
                labels.push_back("random_A_candidate(seed=" + std::to_string(s) + ")");
            } else if (corpus == "mixed") {
                if (i % 2 == 0) {
                    items.push_back(random_solvable(s, dim_max, f));
                    labels.push_back("random_solvable(seed=" + std::to_string(s) + ")");
                } else {
                    items.push_back(random_A_candidate(s, f));
                    labels.push_back("random_A_candidate(seed=" + std::to_string(s) + ")");
                }
            } else {
                throw parse_error("unknown corpus \"" + corpus + "\"");
            }
        }
    }

    std::vector<TheoremReport> reports(items.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i)
        reports[i] = verify_theorems(items[i], c.budget, c.seed);

    std::map<std::string, std::array<int, 3>> tally;  // pass, fail, n/a
    for (const std::string& id : theorem_ids()) tally[id] = {0, 0, 0};
    bool any_fail = false;
    for (size_t i = 0; i < reports.size(); ++i) {
        for (const auto& [id, v] : reports[i]) {
            if (v.kind == verdict_kind::pass) ++tally[id][0];
            if (v.kind == verdict_kind::fail) {
                ++tally[id][1];
                any_fail = true;
                std::cerr << "FAIL\t" << labels[i] << "\t" << id << "\t" << v.detail << "\n";
            }
            if (v.kind == verdict_kind::not_applicable) ++tally[id][2];
        }
    }
    std::cout << "theorem\tpass\tfail\tnot_applicable\n";
    for (const auto& [id, t] : tally)
        std::cout << id << "\t" << t[0] << "\t" << t[1] << "\t" << t[2] << "\n";
    return any_fail ? kSuiteFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure analysis for solvable Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // common options may follow the subcommand

    CommonOpts common;
    app.add_option("--seed", common.seed, "seed for all randomized searches");
    app.add_option("--threads", common.threads, "worker threads (1 forces the serial scans)");
    app.add_option("--budget-pairs", common.budget.max_pairs, "generator-pair scan budget");
    app.add_option("--budget-subspaces", common.budget.max_subspaces, "subspace lattice budget");
    app.add_option("--budget-wall-ms", common.budget.wall_ms, "wall-clock budget per oracle sweep");
    app.add_option("--mutate", common.mutate,
                   "testing hook: deliberately corrupt a named step (cor32-complement)");

    std::string path, out, method = "auto", field_name = "gf3", kind = "example24";
    std::string corpus = "random";
    bool with_theorems = false, with_timings = false;
    int dim = 3, n_blocks = 1, count = 1, dim_max = 5;
    std::vector<long long> lambda;
    std::vector<std::string> files;
    std::string out_dir;

    auto* check = app.add_subcommand("check", "validate an algebra file");
    check->add_option("path", path)->required();

    auto* analyze = app.add_subcommand("analyze", "full structure report");
    analyze->add_option("path", path)->required();
    analyze->add_option("--method", method, "auto|oracle|structural");
    analyze->add_option("--out", out, "write the report here instead of stdout");
    analyze->add_flag("--theorems", with_theorems, "include the theorem verdict map");
    analyze->add_flag("--timings", with_timings, "include wall-clock timings (non-reproducible)");
    std::string dump_subspaces;
    analyze->add_option("--dump-subspaces", dump_subspaces,
                        "write the full subspace inventory as JSON lines");

    auto* isa = app.add_subcommand("is-a", "decide the A-property");
    isa->add_option("path", path)->required();
    isa->add_option("--method", method, "auto|oracle|structural");

    auto* dec = app.add_subcommand("decompose", "triangular decomposition into abelian parts");
    dec->add_option("path", path)->required();
    dec->add_option("--out", out);

    auto* gen = app.add_subcommand("generate", "emit algebra JSON files");
    gen->add_option("--kind", kind,
                    "example24|two-dim|heisenberg|abelian|thm61|thm66|random-solvable|random-a");
    gen->add_option("--field", field_name, "q or gfN (N a prime power)");
    gen->add_option("--dim", dim, "dimension (abelian, thm61 m, random budget)");
    gen->add_option("--n", n_blocks, "block count (thm61 n, thm66 n)");
    gen->add_option("--lambda", lambda, "eigenvalue parameters");
    gen->add_option("--count", count, "how many instances");
    gen->add_option("--out", out, "output file (single instance)");
    gen->add_option("--out-dir", out_dir, "output directory (multiple instances)");

    auto* ver = app.add_subcommand("verify", "run the theorem suite over a corpus");
    ver->add_option("--corpus", corpus, "random|lemma53|mixed|files");
    ver->add_option("--field", field_name, "q or gfN");
    ver->add_option("--dim-max", dim_max, "dimension budget for random corpora");
    ver->add_option("--count", count, "corpus size");
    ver->add_option("files", files, "algebra files (with --corpus files)");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_common(common);
        if (check->parsed()) return cmd_check(path);
        if (analyze->parsed())
            return cmd_analyze(path, common, method, out, with_theorems, with_timings,
                               dump_subspaces);
        if (isa->parsed()) return cmd_is_a(path, common, method);
        if (dec->parsed()) return cmd_decompose(path, common, out);
        if (gen->parsed())
            return cmd_generate(common, kind, field_name, dim, n_blocks, lambda, count, out,
                                out_dir);
        if (ver->parsed()) return cmd_verify(common, corpus, field_name, dim_max, count, files);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const jacobi_violation& e) {
        std::cerr << "invalid algebra: " << e.what() << "\n";
        return kInvalid;
    } catch (const alternating_violation& e) {
        std::cerr << "invalid algebra: " << e.what() << "\n";
        return kInvalid;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
