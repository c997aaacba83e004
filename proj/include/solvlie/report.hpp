#ifndef SOLVLIE_REPORT_HPP
#define SOLVLIE_REPORT_HPP

#include "solvlie/io.hpp"

namespace solvlie {

inline constexpr const char* kToolVersion = "solvlie 0.1.0";

struct ReportOptions {
    std::string method = "auto";  // auto | oracle | structural
    bool with_theorems = false;
    bool with_timings = false;  // off by default: reports must be byte-reproducible
    std::uint64_t seed = 0;
    EnumBudget budget;
    std::string input_desc;
};

// The full analysis record: structure report, A-certificate, decomposition,
// optional theorem verdicts. Deterministic given (input, seed, budgets,
// version); every seed and budget used is recorded for replay.
json run_report(const LieAlgebra& L, const ReportOptions& opt);

}  // namespace solvlie

#endif
