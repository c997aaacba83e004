#ifndef SOLVLIE_FPKERNEL_HPP
#define SOLVLIE_FPKERNEL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "solvlie/liealg.hpp"

// Flat table-driven kernels for exhaustive scans over small finite fields.
// Elements are packed as their enumeration indices (0..q-1); all arithmetic
// goes through precomputed tables, and the structure constants live in one
// flat array. These kernels carry the oracle's inner loops; everything here
// is cross-checked against the generic Scalar path in the tests.
namespace solvlie::fpk {

constexpr std::uint32_t kMaxPackedOrder = 1024;

bool packable(const FieldSpec& f);

struct PackedField {
    std::uint32_t q = 0;
    std::uint32_t one = 1;             // packed index of the unit (p^(k-1) on extensions)
    std::vector<std::uint32_t> add_t;  // q*q
    std::vector<std::uint32_t> mul_t;  // q*q
    std::vector<std::uint32_t> neg_t;  // q
    std::vector<std::uint32_t> inv_t;  // q (inv_t[0] unused)

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_t[a * q + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_t[a * q + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_t[a]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_t[a]; }
    // a - b
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_t[a * q + neg_t[b]]; }

    static PackedField build(const FieldSpec& f);
};

using PackedVec = std::vector<std::uint32_t>;

struct PackedAlgebra {
    PackedField F;
    FieldSpec field = FieldSpec::rationals();
    int n = 0;
    // c[(i*n + j)*n + k]: coefficient of basis k in [b_i, b_j]; filled for
    // all i, j with the alternating law baked in
    std::vector<std::uint32_t> c;

    static PackedAlgebra build(const LieAlgebra& L);

    void bracket(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    bool bracket_is_zero(const std::uint32_t* x, const std::uint32_t* y) const;
};

// Span accumulator kept in reduced row echelon form; rows are packed vectors.
struct RowSpan {
    const PackedField* F = nullptr;
    int n = 0;
    std::vector<std::uint32_t> rows;  // rank * n
    std::vector<int> pivots;          // strictly increasing

    RowSpan() = default;
    RowSpan(const PackedField& f, int dim) : F(&f), n(dim) {}
    int rank() const { return static_cast<int>(pivots.size()); }
    const std::uint32_t* row(int i) const { return rows.data() + static_cast<size_t>(i) * n; }

    // reduce v in place against the span; returns true when v reduces to zero
    bool reduce(std::uint32_t* v) const;
    bool contains(const std::uint32_t* v) const;
    // insert v (destroyed); returns true when the span grew
    bool insert(std::uint32_t* v);
    bool equals(const RowSpan& o) const { return pivots == o.pivots && rows == o.rows; }
};

// ---- conversions ----
PackedVec pack_vec(const PackedAlgebra& A, const Vec& v);
Vec unpack_vec(const PackedAlgebra& A, const std::uint32_t* v);
RowSpan pack_subspace(const PackedAlgebra& A, const Subspace& s);
Subspace unpack_span(const PackedAlgebra& A, const RowSpan& s);

// ---- structural predicates on packed spans ----
bool span_is_subalgebra(const PackedAlgebra& A, const RowSpan& s);
bool span_is_ideal(const PackedAlgebra& A, const RowSpan& s);
bool span_is_abelian(const PackedAlgebra& A, const RowSpan& s);
// lower central series of the (assumed closed) span reaches zero
bool span_is_nilpotent(const PackedAlgebra& A, const RowSpan& s);
// bracket-closure of the span; grows until [S,S] <= S (at most n insertions)
RowSpan span_closure(const PackedAlgebra& A, RowSpan s);

// generalized null component and stable image of ad x (x packed):
// L0 = left kernel of (ad x)^n, L1 = row space of (ad x)^n
void fitting_of_ad(const PackedAlgebra& A, const std::uint32_t* x, RowSpan& null_part,
                   RowSpan& image_part);

// ---- index spaces ----

// q^n, or UINT64_MAX on overflow / above 2^62
std::uint64_t vector_space_size(std::uint32_t q, int n);
void vector_from_index(std::uint64_t idx, std::uint32_t q, int n, std::uint32_t* out);

// Enumeration of all subspaces of F_q^n in a canonical deterministic order:
// by dimension, then pivot-column set (lexicographic), then the base-q
// odometer over the free RREF entries. Index <-> subspace is O(n^2).
struct SubspaceIndex {
    std::uint32_t q = 0;
    int n = 0;
    struct Shape {
        std::vector<int> pivots;
        std::vector<std::pair<int, int>> free_pos;  // row-major free positions
        std::uint64_t count = 0;                    // q^(#free_pos)
        std::uint64_t offset = 0;                   // global starting index
    };
    std::vector<Shape> shapes;
    std::uint64_t total = 0;

    static SubspaceIndex build(std::uint32_t q, int n);
    // build, restricted to one rank
    static SubspaceIndex build_rank(std::uint32_t q, int n, int rank);
    // decode into an existing RowSpan (resized/overwritten)
    void decode(std::uint64_t idx, RowSpan& out) const;
};

// ---- scan drivers (OpenMP; serial reference used by the tests/benchmark) ----

// smallest index in [0,total) where pred holds, or UINT64_MAX
std::uint64_t scan_min_index(std::uint64_t total, const std::function<bool(std::uint64_t)>& pred);
std::uint64_t scan_min_index_serial(std::uint64_t total,
                                    const std::function<bool(std::uint64_t)>& pred);
// all indices where pred holds, ascending
std::vector<std::uint64_t> scan_collect(std::uint64_t total,
                                        const std::function<bool(std::uint64_t)>& pred);
std::vector<std::uint64_t> scan_collect_serial(std::uint64_t total,
                                               const std::function<bool(std::uint64_t)>& pred);

// process-wide switch; the CLI maps --threads 1 onto "serial"
void set_parallel_scans(bool on);
bool parallel_scans_enabled();

}  // namespace solvlie::fpk

#endif
