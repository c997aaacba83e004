#ifndef SOLVLIE_ORACLE_HPP
#define SOLVLIE_ORACLE_HPP

#include "solvlie/fpkernel.hpp"
#include "solvlie/liealg.hpp"

// Exhaustive ground truth over small finite fields. Everything here is
// brute force by construction and budgeted loudly: a truncated enumeration
// is worthless as an oracle, so budget overruns throw instead of clipping.
namespace solvlie {

struct EnumBudget {
    std::uint64_t max_subspaces = 1'000'000;
    std::uint64_t max_pairs = 10'000'000;  // generator pairs = 2-dim subspaces scanned
    std::uint64_t wall_ms = 3'600'000;
};

std::vector<SubalgebraHandle> enum_subalgebras(const LieAlgebra& L, const EnumBudget& b = {});
std::vector<IdealHandle> enum_ideals(const LieAlgebra& L, const EnumBudget& b = {});
std::vector<SubalgebraHandle> enum_nilpotent_subalgebras(const LieAlgebra& L,
                                                         const EnumBudget& b = {});
// maximality decided inside the full enumerated lattice (proper subalgebras)
std::vector<SubalgebraHandle> maximal_subalgebras(const LieAlgebra& L, const EnumBudget& b = {});
std::vector<SubalgebraHandle> maximal_nilpotent_subalgebras(const LieAlgebra& L,
                                                            const EnumBudget& b = {});
// every subspace of the underlying space (lattice sanity / dumps)
std::vector<Subspace> enum_subspaces(const LieAlgebra& L, const EnumBudget& b = {});

struct OracleAVerdict {
    bool is_A = true;
    // a non-commuting pair generating a nilpotent subalgebra
    std::optional<std::pair<Vec, Vec>> witness;
    std::uint64_t scanned = 0;
};

// Two-generator scan: every subalgebra generated by a pair (x,y) is the
// closure of the plane span{x,y}, so the scan runs over 2-dimensional
// subspaces; a closure that is nilpotent and non-abelian refutes the
// A-property and the plane's canonical basis is the witness.
OracleAVerdict oracle_is_A(const LieAlgebra& L, const EnumBudget& b = {});
// reference route via the full nilpotent-subalgebra inventory
OracleAVerdict oracle_is_A_by_inventory(const LieAlgebra& L, const EnumBudget& b = {});

Subspace oracle_nilradical(const LieAlgebra& L, const EnumBudget& b = {});
// intersection of all maximal subalgebras, then its largest contained ideal
Subspace oracle_frattini(const LieAlgebra& L, const EnumBudget& b = {});
std::vector<Subspace> oracle_minimal_ideals(const LieAlgebra& L, const EnumBudget& b = {});
// phi(B) = 0 for every enumerated subalgebra B
bool oracle_is_elementary(const LieAlgebra& L, const EnumBudget& b = {});

}  // namespace solvlie

#endif
