#ifndef SOLVLIE_LIEALG_HPP
#define SOLVLIE_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "solvlie/linalg.hpp"

namespace solvlie {

// Structure-constant table for building algebras. Entries are stored for
// i < j only; [x,x] = 0 is structural, so the alternating law holds by
// construction (strictly stronger than antisymmetry in characteristic 2).
class BracketTable {
public:
    BracketTable(const FieldSpec& f, int n);
    // set [b_i, b_j] = v (any i != j; normalized to i < j with sign)
    void set(int i, int j, const Vec& v);
    // set the b_k coefficient of [b_i, b_j]
    void set(int i, int j, int k, const Scalar& c);

    const FieldSpec& field() const { return field_; }
    int dim() const { return n_; }
    const Vec& entry(int i, int j) const;  // i < j

private:
    FieldSpec field_;
    int n_;
    std::vector<Vec> c_;  // index i*n+j for i<j
    friend class LieAlgebra;
};

class LieAlgebra {
public:
    // Validates eagerly: Jacobi identity on all basis triples.
    // Throws jacobi_violation with the offending triple.
    static LieAlgebra make(const BracketTable& table, std::vector<std::string> names = {});

    int dim() const { return n_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<std::string>& names() const { return names_; }

    const Vec& c(int i, int j) const;  // i < j
    Vec bracket_basis(int i, int j) const;

    Vec bracket(const Vec& x, const Vec& y) const;
    // matrix of y -> [y, x] (right action: row * ad_matrix = bracket)
    Matrix ad_matrix(const Vec& x) const;

    Subspace full_space() const { return Subspace::full(field_, n_); }
    Subspace zero_space() const { return Subspace::zero(field_, n_); }

private:
    int n_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Vec> c_;
    std::vector<std::string> names_;
};

// ---- closure certificates ----

struct SubalgebraHandle {
    Subspace space;
};
struct IdealHandle {
    Subspace space;
};

bool is_subalgebra(const LieAlgebra& L, const Subspace& u);
bool is_ideal(const LieAlgebra& L, const Subspace& u);
// throw not_closed when the containment fails
SubalgebraHandle certify_subalgebra(const LieAlgebra& L, const Subspace& u);
IdealHandle certify_ideal(const LieAlgebra& L, const Subspace& u);

// ---- subspace bracket machinery ----

// span of pairwise brackets of basis vectors
Subspace bracket_spaces(const LieAlgebra& L, const Subspace& u, const Subspace& v);

Subspace centralizer(const LieAlgebra& L, const Subspace& b);
Subspace center(const LieAlgebra& L);
// {x : [x, u] <= u}
Subspace normalizer(const LieAlgebra& L, const Subspace& u);

bool is_abelian(const LieAlgebra& L);
bool is_abelian_subspace(const LieAlgebra& L, const Subspace& u);

// ---- series ----

enum class series_kind { derived, lower_central, lower_nilpotent };

struct SeriesChain {
    series_kind kind;
    std::vector<Subspace> terms;  // descending, starting at L; last term repeated never
    int stabilization_index = 0;  // first index whose term equals all later ones

    const Subspace& terminal() const { return terms.back(); }
    bool reaches_zero() const { return terms.back().is_zero(); }
};

SeriesChain derived_series(const LieAlgebra& L);
SeriesChain lower_central_series(const LieAlgebra& L);

bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
// number n with L^(n) = 0, L^(n-1) != 0; nullopt when not solvable
std::optional<int> derived_length(const LieAlgebra& L);

// gamma_inf: the stabilized term of the lower central series
Subspace nilpotent_residual(const LieAlgebra& L);
Subspace nilpotent_residual(const LieAlgebra& L, const SubalgebraHandle& u);
// N_0 = L, N_{i+1} = gamma_inf(N_i), each term re-extracted standalone
SeriesChain lower_nilpotent_series(const LieAlgebra& L);

// derived series term L^(i) (computed via the chain, i past the end clamps)
Subspace derived_term(const LieAlgebra& L, int i);

// nilpotency of the induced algebra on a certified subalgebra
bool is_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& u);

// ---- derived algebras ----

struct InducedAlgebra {
    LieAlgebra alg;
    Matrix embedding;  // dim(alg) x dim(L): rows are the subspace basis
};
struct QuotientAlgebra {
    LieAlgebra alg;
    Matrix projection;          // dim(L) x dim(alg)
    Subspace complement_basis;  // the deterministic complement used as the quotient basis
};

InducedAlgebra induced_algebra(const LieAlgebra& L, const SubalgebraHandle& u);
QuotientAlgebra quotient_algebra(const LieAlgebra& L, const IdealHandle& i);

// push a subspace of an induced algebra back into the ambient coordinates
Subspace embed_subspace(const Subspace& sub, const Matrix& embedding);
// image of a subspace of L in the quotient coordinates
Subspace project_subspace(const Subspace& sub, const Matrix& projection);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// matrix of ad x restricted to an ad x-invariant subspace W (basis coords);
// nullopt when W is not invariant
std::optional<Matrix> ad_restricted(const LieAlgebra& L, const Vec& x, const Subspace& w);

// largest ideal of L contained in v: iterate w -> {x in w : [x,L] <= w}
Subspace ideal_core(const LieAlgebra& L, const Subspace& v);

}  // namespace solvlie

#endif
