#ifndef SOLVLIE_LINALG_HPP
#define SOLVLIE_LINALG_HPP

#include <optional>
#include <vector>

#include "solvlie/field.hpp"

namespace solvlie {

// Vectors are row vectors throughout; maps act on the right (x -> x*M).
using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, int rows, int cols);  // zero-filled
    static Matrix identity(const FieldSpec& f, int n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Scalar> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vec operator*(const Vec& x, const Matrix& m);  // row action
Matrix mat_pow(const Matrix& a, unsigned e);

struct RrefResult {
    Matrix mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

// Exact Gauss-Jordan. Zero rows are dropped from the result when
// drop_zero_rows is set (the Subspace convention).
RrefResult rref(const Matrix& m, bool drop_zero_rows = false);

// {v : M v^T = 0}, dim = cols - rank
class Subspace;
Subspace kernel(const Matrix& m);
// {x : x M = 0}, dim = rows - rank
Subspace left_kernel(const Matrix& m);
// row space of m
Subspace image(const Matrix& m);
// one x with x*m = rhs (free coordinates set to zero), or nullopt
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

// Canonical subspace of F^n: basis in reduced row echelon form, so equal
// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(const FieldSpec& f, int ambient);
    static Subspace full(const FieldSpec& f, int ambient);
    static Subspace span(const FieldSpec& f, int ambient, const std::vector<Vec>& gens);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const FieldSpec& field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    Vec basis_row(int i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    // coordinates of v in this basis, or nullopt if v is outside
    std::optional<Vec> coordinates(const Vec& v) const;
    // residual of v after elimination against the basis (linear in v)
    Vec reduce(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // lexicographic on (dim, basis payload); a deterministic total order
    // for sorting enumeration output
    static bool lex_less(const Subspace& a, const Subspace& b);

private:
    int ambient_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    Matrix basis_;  // RREF, no zero rows
};

Subspace sum(const Subspace& u, const Subspace& v);
// Zassenhaus construction
Subspace intersect(const Subspace& u, const Subspace& v);
// deterministic complement c with u (+) c = w; requires u <= w
Subspace complement(const Subspace& u, const Subspace& w);

// characteristic polynomial det(xI - M), constant-first coefficients;
// Leibniz expansion, intended for the desk-scale dims used here (n <= 8)
std::vector<Scalar> char_poly(const Matrix& m);

}  // namespace solvlie

#endif
