#include "solvlie/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace solvlie {

BracketTable::BracketTable(const FieldSpec& f, int n)
    : field_(f), n_(n), c_(static_cast<size_t>(n) * n, vec_zero(f, n)) {}

void BracketTable::set(int i, int j, const Vec& v) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw error("bracket index out of range");
    if (static_cast<int>(v.size()) != n_) throw ambient_mismatch("bracket value length mismatch");
    if (i == j) {
        if (!vec_is_zero(v)) throw alternating_violation("[x,x] must be zero");
        return;
    }
    if (i < j)
        c_[static_cast<size_t>(i) * n_ + j] = v;
    else
        c_[static_cast<size_t>(j) * n_ + i] = vec_scale(-Scalar::one(field_), v);
}

void BracketTable::set(int i, int j, int k, const Scalar& c) {
    if (k < 0 || k >= n_) throw error("bracket coefficient index out of range");
    if (i == j) {
        if (!c.is_zero()) throw alternating_violation("[x,x] must be zero");
        return;
    }
    Vec v = i < j ? c_[static_cast<size_t>(i) * n_ + j] : c_[static_cast<size_t>(j) * n_ + i];
    v[k] = i < j ? c : -c;
    if (i < j)
        c_[static_cast<size_t>(i) * n_ + j] = v;
    else
        c_[static_cast<size_t>(j) * n_ + i] = v;
}

const Vec& BracketTable::entry(int i, int j) const { return c_[static_cast<size_t>(i) * n_ + j]; }

LieAlgebra LieAlgebra::make(const BracketTable& table, std::vector<std::string> names) {
    LieAlgebra L;
    L.n_ = table.n_;
    L.field_ = table.field_;
    L.c_ = table.c_;
    if (!names.empty() && static_cast<int>(names.size()) != L.n_)
        throw error("basis name count mismatch");
    L.names_ = std::move(names);
    // Jacobi on all basis triples
    for (int i = 0; i < L.n_; ++i)
        for (int j = i + 1; j < L.n_; ++j)
            for (int k = j + 1; k < L.n_; ++k) {
                Vec bij = L.bracket_basis(i, j);
                Vec bjk = L.bracket_basis(j, k);
                Vec bki = L.bracket_basis(k, i);
                Vec ek = vec_zero(L.field_, L.n_), ei = ek, ej = ek;
                ei[i] = Scalar::one(L.field_);
                ej[j] = Scalar::one(L.field_);
                ek[k] = Scalar::one(L.field_);
                Vec jac = vec_add(vec_add(L.bracket(bij, ek), L.bracket(bjk, ei)),
                                  L.bracket(bki, ej));
                if (!vec_is_zero(jac)) {
                    std::ostringstream os;
                    os << "Jacobi identity fails on basis triple (" << i << "," << j << "," << k
                       << "); residual = [";
                    for (int t2 = 0; t2 < L.n_; ++t2) os << (t2 ? "," : "") << jac[t2].str();
                    os << "]";
                    throw jacobi_violation(i, j, k, os.str());
                }
            }
    return L;
}

const Vec& LieAlgebra::c(int i, int j) const { return c_[static_cast<size_t>(i) * n_ + j]; }

Vec LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return vec_zero(field_, n_);
    if (i < j) return c(i, j);
    return vec_scale(-Scalar::one(field_), c(j, i));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw ambient_mismatch("bracket: vector length mismatch");
    Vec r = vec_zero(field_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            Scalar coef = x[i] * y[j] - x[j] * y[i];
            if (coef.is_zero()) continue;
            const Vec& cij = c(i, j);
            for (int k = 0; k < n_; ++k) r[k] += coef * cij[k];
        }
    }
    return r;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
    Matrix m(field_, n_, n_);
    for (int i = 0; i < n_; ++i) {
        Vec ei = vec_zero(field_, n_);
        ei[i] = Scalar::one(field_);
        Vec bi = bracket(ei, x);
        m.set_row(i, bi);
    }
    return m;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& u) {
    for (int i = 0; i < u.dim(); ++i)
        for (int j = i + 1; j < u.dim(); ++j)
            if (!u.contains(L.bracket(u.basis_row(i), u.basis_row(j)))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& u) {
    for (int i = 0; i < L.dim(); ++i) {
        Vec ei = vec_zero(L.field(), L.dim());
        ei[i] = Scalar::one(L.field());
        for (int j = 0; j < u.dim(); ++j)
            if (!u.contains(L.bracket(ei, u.basis_row(j)))) return false;
    }
    return true;
}

SubalgebraHandle certify_subalgebra(const LieAlgebra& L, const Subspace& u) {
    if (!is_subalgebra(L, u)) throw not_closed("[U,U] is not contained in U");
    return SubalgebraHandle{u};
}

IdealHandle certify_ideal(const LieAlgebra& L, const Subspace& u) {
    if (!is_ideal(L, u)) throw not_closed("[L,U] is not contained in U");
    return IdealHandle{u};
}

Subspace bracket_spaces(const LieAlgebra& L, const Subspace& u, const Subspace& v) {
    if (u.ambient() != L.dim() || v.ambient() != L.dim())
        throw ambient_mismatch("bracket_spaces: ambient mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) gens.push_back(L.bracket(u.basis_row(i), v.basis_row(j)));
    return Subspace::span(L.field(), L.dim(), gens);
}

Subspace centralizer(const LieAlgebra& L, const Subspace& b) {
    const int n = L.dim();
    if (b.dim() == 0) return L.full_space();
    Matrix stacked(L.field(), n, n * b.dim());
    for (int k = 0; k < b.dim(); ++k) {
        Matrix adk = L.ad_matrix(b.basis_row(k));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked.at(i, k * n + j) = adk.at(i, j);
    }
    return left_kernel(stacked);
}

Subspace center(const LieAlgebra& L) { return centralizer(L, L.full_space()); }

Subspace normalizer(const LieAlgebra& L, const Subspace& u) {
    const int n = L.dim();
    if (u.dim() == 0) return L.full_space();
    // x * (ad(u_k) . reduce_mod_u) = 0 for all k
    Matrix red(L.field(), n, n);
    for (int i = 0; i < n; ++i) {
        Vec ei = vec_zero(L.field(), n);
        ei[i] = Scalar::one(L.field());
        red.set_row(i, u.reduce(ei));
    }
    Matrix stacked(L.field(), n, n * u.dim());
    for (int k = 0; k < u.dim(); ++k) {
        Matrix m = L.ad_matrix(u.basis_row(k)) * red;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked.at(i, k * n + j) = m.at(i, j);
    }
    return left_kernel(stacked);
}

bool is_abelian(const LieAlgebra& L) { return is_abelian_subspace(L, L.full_space()); }

bool is_abelian_subspace(const LieAlgebra& L, const Subspace& u) {
    for (int i = 0; i < u.dim(); ++i)
        for (int j = i + 1; j < u.dim(); ++j)
            if (!vec_is_zero(L.bracket(u.basis_row(i), u.basis_row(j)))) return false;
    return true;
}

namespace {
SeriesChain run_series(const LieAlgebra& L, series_kind kind) {
    SeriesChain s;
    s.kind = kind;
    s.terms.push_back(L.full_space());
    for (;;) {
        const Subspace& cur = s.terms.back();
        Subspace next = kind == series_kind::derived ? bracket_spaces(L, cur, cur)
                                                     : bracket_spaces(L, cur, s.terms.front());
        if (next == cur) {
            s.stabilization_index = static_cast<int>(s.terms.size()) - 1;
            return s;
        }
        s.terms.push_back(next);
        if (next.is_zero()) {
            s.stabilization_index = static_cast<int>(s.terms.size()) - 1;
            return s;
        }
    }
}
}  // namespace

SeriesChain derived_series(const LieAlgebra& L) { return run_series(L, series_kind::derived); }
SeriesChain lower_central_series(const LieAlgebra& L) {
    return run_series(L, series_kind::lower_central);
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).reaches_zero(); }
bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).reaches_zero(); }

std::optional<int> derived_length(const LieAlgebra& L) {
    SeriesChain s = derived_series(L);
    if (!s.reaches_zero()) return std::nullopt;
    return static_cast<int>(s.terms.size()) - 1;
}

Subspace nilpotent_residual(const LieAlgebra& L) { return lower_central_series(L).terminal(); }

Subspace nilpotent_residual(const LieAlgebra& L, const SubalgebraHandle& u) {
    InducedAlgebra ind = induced_algebra(L, u);
    return embed_subspace(nilpotent_residual(ind.alg), ind.embedding);
}

SeriesChain lower_nilpotent_series(const LieAlgebra& L) {
    SeriesChain s;
    s.kind = series_kind::lower_nilpotent;
    s.terms.push_back(L.full_space());
    for (;;) {
        const Subspace& cur = s.terms.back();
        SubalgebraHandle h = certify_subalgebra(L, cur);
        Subspace next = nilpotent_residual(L, h);
        if (next == cur) {
            s.stabilization_index = static_cast<int>(s.terms.size()) - 1;
            return s;
        }
        s.terms.push_back(next);
        if (next.is_zero()) {
            s.stabilization_index = static_cast<int>(s.terms.size()) - 1;
            return s;
        }
    }
}

Subspace derived_term(const LieAlgebra& L, int i) {
    SeriesChain s = derived_series(L);
    if (i < 0) throw error("derived_term: negative index");
    if (i >= static_cast<int>(s.terms.size())) return s.terminal();
    return s.terms[i];
}

bool is_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& u) {
    if (!is_subalgebra(L, u)) return false;
    InducedAlgebra ind = induced_algebra(L, SubalgebraHandle{u});
    return is_nilpotent(ind.alg);
}

InducedAlgebra induced_algebra(const LieAlgebra& L, const SubalgebraHandle& u) {
    const Subspace& s = u.space;
    const int m = s.dim();
    BracketTable t(L.field(), m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec br = L.bracket(s.basis_row(i), s.basis_row(j));
            auto coords = s.coordinates(br);
            if (!coords) throw not_closed("induced_algebra: subspace is not closed under the bracket");
            t.set(i, j, *coords);
        }
    InducedAlgebra out{LieAlgebra::make(t), s.basis()};
    return out;
}

namespace {
std::optional<Matrix> mat_inverse(const Matrix& a) {
    const int n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    RrefResult rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (rr.mat.at(i, i).is_zero()) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}
}  // namespace

QuotientAlgebra quotient_algebra(const LieAlgebra& L, const IdealHandle& ideal) {
    const Subspace& I = ideal.space;
    const int n = L.dim();
    Subspace comp = complement(I, L.full_space());
    const int m = comp.dim();
    // projection: express x in the basis (I rows, comp rows); keep the comp part
    Matrix big(L.field(), n, n);
    for (int i = 0; i < I.dim(); ++i) big.set_row(i, I.basis_row(i));
    for (int i = 0; i < m; ++i) big.set_row(I.dim() + i, comp.basis_row(i));
    auto binv = mat_inverse(big);
    if (!binv) throw error("quotient_algebra: ideal + complement is not the full space");
    Matrix proj(L.field(), n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) proj.at(i, j) = binv->at(i, I.dim() + j);
    BracketTable t(L.field(), m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec br = L.bracket(comp.basis_row(a), comp.basis_row(b));
            t.set(a, b, br * proj);
        }
    return QuotientAlgebra{LieAlgebra::make(t), proj, comp};
}

Subspace embed_subspace(const Subspace& sub, const Matrix& embedding) {
    std::vector<Vec> rows;
    for (int i = 0; i < sub.dim(); ++i) rows.push_back(sub.basis_row(i) * embedding);
    return Subspace::span(embedding.field(), embedding.cols(), rows);
}

Subspace project_subspace(const Subspace& sub, const Matrix& projection) {
    std::vector<Vec> rows;
    for (int i = 0; i < sub.dim(); ++i) rows.push_back(sub.basis_row(i) * projection);
    return Subspace::span(projection.field(), projection.cols(), rows);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.field() != b.field()) throw mixed_fields("direct_sum: fields differ");
    const int n = a.dim() + b.dim();
    BracketTable t(a.field(), n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            Vec v = vec_zero(a.field(), n);
            const Vec& src = a.c(i, j);
            for (int k = 0; k < a.dim(); ++k) v[k] = src[k];
            t.set(i, j, v);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j) {
            Vec v = vec_zero(a.field(), n);
            const Vec& src = b.c(i, j);
            for (int k = 0; k < b.dim(); ++k) v[a.dim() + k] = src[k];
            t.set(a.dim() + i, a.dim() + j, v);
        }
    std::vector<std::string> names;
    if (!a.names().empty() && !b.names().empty()) {
        for (const auto& s : a.names()) names.push_back(s + ".l");
        for (const auto& s : b.names()) names.push_back(s + ".r");
    }
    return LieAlgebra::make(t, std::move(names));
}

Subspace ideal_core(const LieAlgebra& L, const Subspace& v) {
    const int n = L.dim();
    Subspace w = v;
    for (;;) {
        if (w.is_zero()) return w;
        // {x : [x, b_i] in w for all i}, intersected with w
        Matrix red(L.field(), n, n);
        for (int i = 0; i < n; ++i) {
            Vec ei = vec_zero(L.field(), n);
            ei[i] = Scalar::one(L.field());
            red.set_row(i, w.reduce(ei));
        }
        Matrix stacked(L.field(), n, n * n);
        for (int k = 0; k < n; ++k) {
            Vec bk = vec_zero(L.field(), n);
            bk[k] = Scalar::one(L.field());
            Matrix m = L.ad_matrix(bk) * red;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) stacked.at(i, k * n + j) = m.at(i, j);
        }
        Subspace next = intersect(left_kernel(stacked), w);
        if (next == w) return w;
        w = next;
    }
}

std::optional<Matrix> ad_restricted(const LieAlgebra& L, const Vec& x, const Subspace& w) {
    Matrix m(L.field(), w.dim(), w.dim());
    for (int i = 0; i < w.dim(); ++i) {
        Vec img = L.bracket(w.basis_row(i), x);
        auto coords = w.coordinates(img);
        if (!coords) return std::nullopt;
        m.set_row(i, *coords);
    }
    return m;
}

}  // namespace solvlie
