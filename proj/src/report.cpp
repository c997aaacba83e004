#include "solvlie/report.hpp"

#include <chrono>

namespace solvlie {

json run_report(const LieAlgebra& L, const ReportOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    json j;
    j["version"] = kToolVersion;
    j["seed"] = opt.seed;
    j["budgets"] = json{{"max_subspaces", opt.budget.max_subspaces},
                        {"max_pairs", opt.budget.max_pairs},
                        {"wall_ms", opt.budget.wall_ms}};
    if (!opt.input_desc.empty()) j["input"] = opt.input_desc;
    j["field"] = field_to_json(L.field());
    j["dim"] = L.dim();
    j["method"] = opt.method;

    SeriesChain ds = derived_series(L);
    json dims = json::array();
    for (const Subspace& t : ds.terms) dims.push_back(t.dim());
    j["series"] = json{{"derived_dims", dims},
                       {"solvable", ds.reaches_zero()},
                       {"nilpotent", is_nilpotent(L)}};

    j["structure"] = structure_report_to_json(structure_report(L, opt.budget, opt.seed));

    a_method m = a_method::auto_pick;
    if (opt.method == "oracle") m = a_method::oracle_pairs;
    if (opt.method == "structural") m = a_method::structural;
    try {
        j["certificate"] = certificate_to_json(is_A(L, m, opt.budget, opt.seed));
    } catch (const undecided& e) {
        j["certificate"] = json{{"undecided", e.what()}};
    } catch (const budget_exceeded& e) {
        j["certificate"] = json{{"undecided", std::string("budget: ") + e.what()}};
    }

    if (ds.reaches_zero()) {
        try {
            j["decomposition"] = decomposition_to_json(triangular_decomposition(L, opt.seed));
        } catch (const error& e) {
            j["decomposition"] = json{{"absent", e.what()}};
        }
    } else {
        j["decomposition"] = json{{"absent", "not solvable"}};
    }

    if (opt.with_theorems)
        j["theorems"] = theorem_report_to_json(verify_theorems(L, opt.budget, opt.seed));

    if (opt.with_timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        j["timing_ms"] = ms;
    }
    return j;
}

}  // namespace solvlie
