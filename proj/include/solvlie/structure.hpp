#ifndef SOLVLIE_STRUCTURE_HPP
#define SOLVLIE_STRUCTURE_HPP

#include <string>

#include "solvlie/oracle.hpp"

namespace solvlie {

enum class nilradical_method { oracle, a_series, traceform, auto_pick };

// The largest nilpotent ideal.
//   oracle     exhaustive ideal sweep (finite field, budget)
//   a_series   sum of the centers of the derived terms; valid on solvable
//              A-algebras and re-verified to be an abelian ideal
//   traceform  radical of the associative envelope of ad L through the
//              trace form (characteristic zero), then re-verified
// out_method, when given, receives the method that produced the result.
Subspace nilradical(const LieAlgebra& L, nilradical_method m = nilradical_method::auto_pick,
                    const EnumBudget& b = {}, std::string* out_method = nullptr);

enum class min_ideal_method { oracle, chop, auto_pick };

// All minimal ideals (oracle), or a maximal independent family of them
// decomposing the socle (chop: random submodule descent inside the
// nilradical; exhaustive vector scan on finite fields, seeded sampling
// over the rationals).
std::vector<Subspace> minimal_ideals(const LieAlgebra& L,
                                     min_ideal_method m = min_ideal_method::auto_pick,
                                     const EnumBudget& b = {}, std::uint64_t seed = 0,
                                     std::string* out_method = nullptr);

// maximal independent family of irreducible L-submodules of the module w
// (exhaustive vector scan on small finite fields, seeded sampling otherwise)
std::vector<Subspace> socle_decomposition(const LieAlgebra& L, const Subspace& w,
                                          std::uint64_t seed = 0);

Subspace abelian_socle(const LieAlgebra& L, min_ideal_method m = min_ideal_method::auto_pick,
                       const EnumBudget& b = {}, std::uint64_t seed = 0);
// unique minimal ideal; throws not_monolithic when the count differs from one
Subspace monolith(const LieAlgebra& L, min_ideal_method m = min_ideal_method::auto_pick,
                  const EnumBudget& b = {}, std::uint64_t seed = 0);

enum class phi_method { oracle, structural };

// Frattini ideal: intersection of all maximal subalgebras, then the largest
// contained ideal. Only the oracle computes phi itself; the structural
// equivalences decide phi-freeness only.
Subspace frattini(const LieAlgebra& L, phi_method m = phi_method::oracle,
                  const EnumBudget& b = {});

// phi(L) = 0?  structural routes: L^2 <= Asoc (strongly solvable A-algebra)
// or W = N (monolithic solvable A-algebra); known_A short-circuits the
// A-property guard when the caller holds a certificate.
bool is_phi_free(const LieAlgebra& L, phi_method m = phi_method::oracle,
                 const EnumBudget& b = {}, std::optional<bool> known_A = std::nullopt);

// L^2 nilpotent
bool strongly_solvable(const LieAlgebra& L);

template <class T>
struct Tagged {
    std::optional<T> value;
    std::string tag;  // producing method, or the reason the value is absent
};

struct StructureReport {
    Tagged<Subspace> nilrad;
    Subspace centre;
    Tagged<Subspace> asoc;
    Tagged<std::vector<Subspace>> min_ideals;
    Tagged<Subspace> mono;  // present iff exactly one minimal ideal
    Tagged<Subspace> phi;
    Tagged<bool> phi_free;
    bool solvable = false;
    bool strongly_solv = false;
    std::optional<int> der_length;
};

// Fills every field with the best applicable method and records the tags;
// failures land as absent-with-reason instead of escaping.
StructureReport structure_report(const LieAlgebra& L, const EnumBudget& b = {},
                                 std::uint64_t seed = 0);

}  // namespace solvlie

#endif
