#ifndef SOLVLIE_ACLASS_HPP
#define SOLVLIE_ACLASS_HPP

#include <map>

#include "solvlie/decomp.hpp"
#include "solvlie/structure.hpp"

namespace solvlie {

// A-property verdict with a replayable certificate. A negative verdict
// always carries a witness pair (x, y): [x,y] != 0 and the subalgebra the
// pair generates is nilpotent.
struct ACertificate {
    bool verdict = true;
    std::string method;  // oracle_pairs | nilpotent | lemma_5_3 | theorem_5_4 | theorem_6_6
    std::optional<std::pair<Vec, Vec>> witness;
    std::optional<Subspace> q_space;  // filled when the q_set was computed alongside
};

enum class a_method { oracle_pairs, structural, auto_pick };

// Decides whether every nilpotent subalgebra is abelian.
//   oracle_pairs  exhaustive two-generator scan (finite field, budget)
//   structural    nilpotent short-circuit, then the metabelian certificate
//                 (invertible action), the monolithic converse, and the
//                 phi-free non-strongly-solvable route; throws undecided
//                 when nothing applies
ACertificate is_A(const LieAlgebra& L, a_method m = a_method::auto_pick,
                  const EnumBudget& b = {}, std::uint64_t seed = 0);

// replay a negative certificate: [x,y] != 0 and <x,y> nilpotent
bool recheck_witness(const LieAlgebra& L, const Vec& x, const Vec& y);

struct QSetResult {
    bool char_excluded = false;  // characteristic 2 or 3: the nilradical assertion is off
    std::optional<bool> closed;  // the raw set is a subspace (finite fields)
    std::optional<Subspace> space;
    std::vector<Vec> elements;                // finite fields: the raw set
    std::optional<bool> contains_nilradical;  // rationals: polarized containment only
};

// {c : (ad c)^2 = 0}; over characteristic != 2,3 on an A-algebra this is a
// subspace equal to the nilradical (asserted by the callers/tests, not here)
QSetResult q_set(const LieAlgebra& L, const EnumBudget& b = {});

enum class tri_bool { no, yes, yes_on_samples };

// [L^2, b] = L^2 for every nonzero b in the computed complement B
// (quantifier implemented over nonzero b; vacuously yes when L^2 = 0).
// Over the rationals only sampling is possible: yes_on_samples.
tri_bool lemma_5_3_check(const LieAlgebra& L, std::uint64_t seed = 0);

// lhs = strongly solvable and A (oracle); rhs = metabelian split with every
// nonzero b acting invertibly on L^2; the containing theorem asserts
// lhs == rhs on monolithic algebras
std::pair<bool, bool> theorem_5_4_check(const LieAlgebra& L, const EnumBudget& b = {},
                                        std::uint64_t seed = 0);

struct Theorem63Result {
    int case_id = 0;  // 1 or 2
    // case 1: L = L^2 + F b with L^2 (ad b - lambda)^k = 0
    Vec b;
    Scalar lambda;
    int k = 0;
    // case 2 extras: L^(1) = L^(2) + F n, B = F n + F b, [n, b] = n,
    // L^(2)(ad n - lambda)^k = 0 and L^(2)((ad b)^p - ad b - mu^p)^k = 0
    std::optional<Vec> n_elem;
    std::optional<Scalar> mu;
    std::optional<Subspace> b_subalg;
    std::optional<int> monolith_dim;
};

Theorem63Result theorem_6_3_classify(const LieAlgebra& L, const EnumBudget& budget = {},
                                     std::uint64_t seed = 0);

// true iff a basis is found realizing the simultaneously-diagonal form
// [a_i, b_j] = lambda_ij a_i with all other products zero
bool theorem_6_5_form_check(const LieAlgebra& L, const EnumBudget& b = {},
                            std::uint64_t seed = 0);

struct Theorem66Params {
    Subspace c_part, b_part;            // the abelian complements
    std::vector<Subspace> min_ideals;   // the A_i
    std::vector<Vec> c_elems, b_elems;  // c_i, b_i per minimal ideal
    std::vector<std::vector<Vec>> bases;  // a_{i1}..a_{ip} per minimal ideal
    std::vector<Scalar> lambdas;
};

struct Theorem66Verdict {
    bool conditions[4] = {false, false, false, false};
    bool is_A_conclusion = false;
    std::optional<Theorem66Params> params;  // filled when condition (iv) verifies
};

// Evaluates the four characterization conditions literally on a phi-free
// solvable algebra that is not strongly solvable (finite field standing in
// for the algebraic closure); the conclusion is their conjunction.
Theorem66Verdict theorem_6_6_check(const LieAlgebra& L, const EnumBudget& b = {},
                                   std::uint64_t seed = 0);

// ---- the verification harness ----

enum class verdict_kind { pass, fail, not_applicable };

struct TheoremVerdict {
    verdict_kind kind = verdict_kind::not_applicable;
    std::string detail;  // witness description or the failed guard
};

using TheoremReport = std::map<std::string, TheoremVerdict>;

// Runs every implemented statement against L: applicable ones are tested,
// the rest are marked with the failed guard. A fail on an applicable
// A-algebra signals an implementation bug and carries a witness.
TheoremReport verify_theorems(const LieAlgebra& L, const EnumBudget& b = {},
                              std::uint64_t seed = 0);

// keys that verify_theorems emits, in report order
const std::vector<std::string>& theorem_ids();

// reinterpret an algebra over GF(p) inside GF(p^deg) (same constants)
LieAlgebra extend_scalars(const LieAlgebra& L, unsigned deg);

}  // namespace solvlie

#endif
