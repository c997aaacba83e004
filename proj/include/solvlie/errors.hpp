#ifndef SOLVLIE_ERRORS_HPP
#define SOLVLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solvlie {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- field layer ----
struct invalid_field : error { using error::error; };
struct mixed_fields : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct infinite_field : error { using error::error; };
struct not_positive_characteristic : error { using error::error; };

// ---- linear algebra layer ----
struct ambient_mismatch : error { using error::error; };
struct not_contained : error { using error::error; };

// ---- Lie algebra layer ----
struct jacobi_violation : error {
    jacobi_violation(int i_, int j_, int k_, std::string what_)
        : error(std::move(what_)), i(i_), j(j_), k(k_) {}
    int i, j, k;
};
struct alternating_violation : error { using error::error; };
struct not_closed : error { using error::error; };

// ---- decomposition layer ----
struct not_nilpotent_action : error { using error::error; };
struct split_failed : error { using error::error; };
struct not_solvable : error { using error::error; };
struct field_too_small : error {
    explicit field_too_small(std::string what_, unsigned suggested = 0)
        : error(std::move(what_)), suggested_degree(suggested) {}
    unsigned suggested_degree;  // 0 = unknown
};
struct decomposition_mismatch : error { using error::error; };

// ---- structure / oracle / aclass layer ----
struct budget_exceeded : error { using error::error; };
struct method_inapplicable : error { using error::error; };
struct verification_failed : error { using error::error; };
struct not_monolithic : error { using error::error; };
struct not_metabelian : error { using error::error; };
struct undecided : error { using error::error; };
struct characteristic_excluded : error { using error::error; };
struct sampling_inconclusive : error { using error::error; };

// ---- generators ----
struct characteristic_zero : error { using error::error; };
struct characteristic_mismatch : error { using error::error; };
struct generation_failed : error { using error::error; };

// ---- io / cli ----
struct parse_error : error { using error::error; };

}  // namespace solvlie

#endif
