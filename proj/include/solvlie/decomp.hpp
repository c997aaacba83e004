#ifndef SOLVLIE_DECOMP_HPP
#define SOLVLIE_DECOMP_HPP

#include "solvlie/liealg.hpp"

namespace solvlie {

struct FittingPair {
    Subspace null_part;   // eventually-annihilated component (L_0)
    Subspace image_part;  // stable image (L_1)
    std::string acting;   // description of the acting element/subalgebra
};

// Fitting decomposition of L relative to ad x: L_0 = stable kernel of
// (ad x)^n, L_1 = stable image; L = L_0 (+) L_1, both ad x-invariant.
FittingPair fitting_single(const LieAlgebra& L, const Vec& x);

// Relative to a nilpotent subalgebra C: L_1 is the stabilized iterate of
// [ . , C], L_0 the stabilized joint kernel of all ad-words over C's basis.
// Throws not_nilpotent_action when C is not nilpotent or the sum fails to
// be direct.
FittingPair fitting_subalgebra(const LieAlgebra& L, const SubalgebraHandle& c);

// A nilpotent self-normalizing subalgebra. Strategy: nilpotent algebras are
// their own Cartan; over small finite fields every generalized null
// component of a single ad is scanned; otherwise seeded random descent
// through Engel subalgebras, with a subalgebra-lattice sweep as the last
// finite-field resort. Both postconditions are re-verified before return.
SubalgebraHandle cartan_subalgebra(const LieAlgebra& L, std::uint64_t seed = 0);

// L = L^(n) (+) B with B a subalgebra, for solvable L with terminal derived
// term L^(n). The postcondition is checked, not assumed: a failure raises
// split_failed and usually means the input is not an A-algebra.
std::pair<IdealHandle, SubalgebraHandle> split_over_terminal_derived(const LieAlgebra& L,
                                                                     std::uint64_t seed = 0);

struct TriangularDecomposition {
    std::vector<Subspace> parts;        // [A_n, ..., A_0]
    std::vector<Subspace> complements;  // [B_n, ..., B_1]: successive split complements
    int derived_len = 0;                // n+1
    bool verified = false;
};

// L = A_n (+) ... (+) A_0 with every A_i abelian and
// L^(i) = A_n (+) ... (+) A_i; all postconditions verified.
TriangularDecomposition triangular_decomposition(const LieAlgebra& L, std::uint64_t seed = 0);

// [K n A_n, ..., K n A_0]; verifies the pieces rebuild K exactly and raises
// decomposition_mismatch otherwise (a non-A signal).
std::vector<Subspace> ideal_decomposition(const LieAlgebra& L, const IdealHandle& k,
                                          const TriangularDecomposition& t);

// Sentinel hook: deliberately corrupts the complement step of the
// triangular construction so the verification suite can prove it detects
// broken decompositions. Never enabled outside the sentinel path.
enum class mutation_kind { none, cor32_complement };
void set_mutation(mutation_kind m);
mutation_kind current_mutation();

}  // namespace solvlie

#endif
