#include "solvlie/linalg.hpp"

#include <algorithm>

namespace solvlie {

Vec vec_zero(const FieldSpec& f, int n) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : rows_(rows), cols_(cols), field_(f), e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw ambient_mismatch("row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

void Matrix::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ambient_mismatch("matrix product shape mismatch");
    Matrix r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) *= c;
    return r;
}

Vec operator*(const Vec& x, const Matrix& m) {
    if (static_cast<int>(x.size()) != m.rows()) throw ambient_mismatch("vector-matrix shape mismatch");
    Vec r = vec_zero(m.field(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) r[j] += x[i] * m.at(i, j);
    }
    return r;
}

Matrix mat_pow(const Matrix& a, unsigned e) {
    Matrix r = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RrefResult rref(const Matrix& m, bool drop_zero_rows) {
    Matrix a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar s = inv(a.at(r, c));
        for (int j = c; j < cols; ++j) a.at(r, j) *= s;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    if (drop_zero_rows) {
        Matrix b(a.field(), r, cols);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) b.at(i, j) = a.at(i, j);
        out.mat = std::move(b);
    } else {
        out.mat = std::move(a);
    }
    return out;
}

Subspace kernel(const Matrix& m) {
    // reduce m, then read one kernel vector per free column
    RrefResult rr = rref(m, true);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(m.field(), cols);
        v[c] = Scalar::one(m.field());
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.mat.at(i, c);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.field(), cols, gens);
}

Subspace left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Subspace image(const Matrix& m) {
    std::vector<Vec> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace::span(m.field(), m.cols(), rows);
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.cols()) throw ambient_mismatch("solve: rhs length mismatch");
    // x*m = rhs  <=>  m^T x^T = rhs^T; eliminate on [m^T | rhs^T]
    Matrix aug(m.field(), m.cols(), m.rows() + 1);
    for (int i = 0; i < m.cols(); ++i) {
        for (int j = 0; j < m.rows(); ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, m.rows()) = rhs[i];
    }
    RrefResult rr = rref(aug, true);
    Vec x = vec_zero(m.field(), m.rows());
    for (int i = 0; i < rr.rank; ++i) {
        int p = rr.pivots[i];
        if (p == m.rows()) return std::nullopt;  // pivot in the rhs column: inconsistent
        x[p] = rr.mat.at(i, m.rows());
    }
    return x;
}

Subspace Subspace::zero(const FieldSpec& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = f;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const FieldSpec& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = f;
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

Subspace Subspace::span(const FieldSpec& f, int ambient, const std::vector<Vec>& gens) {
    Matrix m = Matrix::from_rows(f, gens, ambient);
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = f;
    s.basis_ = rref(m, true).mat;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    int col = 0;
    for (int i = 0; i < basis_.rows(); ++i) {
        while (col < ambient_ && basis_.at(i, col).is_zero()) ++col;
        if (col >= ambient_) break;
        if (!r[col].is_zero()) {
            Scalar c = r[col];
            for (int j = col; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
        }
        ++col;
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw ambient_mismatch("contains: vector length");
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw ambient_mismatch("contains: ambient mismatch");
    for (int i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c = vec_zero(field_, dim());
    // pivot entries of v read the coordinates directly (basis is RREF)
    Vec r = v;
    int col = 0;
    for (int i = 0; i < basis_.rows(); ++i) {
        while (col < ambient_ && basis_.at(i, col).is_zero()) ++col;
        c[i] = r[col];
        Scalar f = r[col];
        for (int j = col; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
        ++col;
    }
    return c;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

bool Subspace::lex_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) {
            const Scalar &x = a.basis().at(i, j), &y = b.basis().at(i, j);
            if (x != y) {
                // compare payload indices over finite fields, rationals via mpq
                if (a.field().is_finite()) return scalar_index(x) < scalar_index(y);
                return x.rat() < y.rat();
            }
        }
    return false;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw ambient_mismatch("sum: ambient/field mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
    for (int i = 0; i < v.dim(); ++i) rows.push_back(v.basis_row(i));
    return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw ambient_mismatch("intersect: ambient/field mismatch");
    const int n = u.ambient();
    const FieldSpec& f = u.field();
    // Zassenhaus: reduce [[U,U],[V,0]]; rows with zero left half carry the
    // intersection in their right half
    Matrix big(f, u.dim() + v.dim(), 2 * n);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            big.at(i, j) = u.basis().at(i, j);
            big.at(i, n + j) = u.basis().at(i, j);
        }
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < n; ++j) big.at(u.dim() + i, j) = v.basis().at(i, j);
    RrefResult rr = rref(big, true);
    std::vector<Vec> gens;
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = rr.mat.at(i, j).is_zero();
        if (!left_zero) continue;
        Vec w;
        w.reserve(n);
        for (int j = 0; j < n; ++j) w.push_back(rr.mat.at(i, n + j));
        gens.push_back(std::move(w));
    }
    return Subspace::span(f, n, gens);
}

Subspace complement(const Subspace& u, const Subspace& w) {
    if (!w.contains(u)) throw not_contained("complement: u is not contained in w");
    Subspace acc = u;
    std::vector<Vec> chosen;
    for (int i = 0; i < w.dim(); ++i) {
        Vec cand = w.basis_row(i);
        if (!acc.contains(cand)) {
            chosen.push_back(cand);
            std::vector<Vec> rows = chosen;
            for (int k = 0; k < u.dim(); ++k) rows.push_back(u.basis_row(k));
            acc = Subspace::span(u.field(), u.ambient(), rows);
        }
    }
    return Subspace::span(u.field(), u.ambient(), chosen);
}

std::vector<Scalar> char_poly(const Matrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw ambient_mismatch("char_poly: square matrix required");
    if (n > 8) throw method_inapplicable("char_poly: Leibniz expansion capped at n = 8");
    const FieldSpec& f = m.field();
    // polynomials constant-first over the field
    auto pmul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> c(a.size() + b.size() - 1, Scalar::zero(f));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<Scalar> acc(n + 1, Scalar::zero(f));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        // sign of the permutation
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<Scalar> term{inversions % 2 == 0 ? Scalar::one(f) : -Scalar::one(f)};
        for (int i = 0; i < n; ++i) {
            // entry (i, perm[i]) of xI - M
            std::vector<Scalar> entry;
            if (i == perm[i])
                entry = {-m.at(i, perm[i]), Scalar::one(f)};
            else
                entry = {-m.at(i, perm[i])};
            term = pmul(term, entry);
        }
        for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace solvlie
