#include "solvlie/generators.hpp"

#include <algorithm>

namespace solvlie {

LieAlgebra example_2_4(const FieldSpec& f) {
    const std::uint64_t p = f.characteristic();
    if (p == 0) throw characteristic_zero("example_2_4 requires characteristic p > 0");
    const int n = static_cast<int>(p) + 2;
    BracketTable t(f, n);
    // basis: 0 = e, 1 = f, 2..p+1 = x_1..x_p
    t.set(0, 1, 0, Scalar::one(f));  // [e,f] = e
    for (std::uint64_t i = 1; i <= p; ++i) {
        const int xi = static_cast<int>(i) + 1;
        const int xnext = static_cast<int>(i % p) + 2;  // x_{i+1 mod p}
        t.set(xi, 0, xnext, Scalar::one(f));            // [x_i, e] = x_{i+1}
        t.set(xi, 1, xi, Scalar::from_int(f, static_cast<long long>(i) - 1));  // [x_i, f]
    }
    std::vector<std::string> names{"e", "f"};
    for (std::uint64_t i = 1; i <= p; ++i) names.push_back("x" + std::to_string(i));
    return LieAlgebra::make(t, std::move(names));
}

LieAlgebra two_dim_nonabelian(const FieldSpec& f) {
    BracketTable t(f, 2);
    t.set(0, 1, 0, Scalar::one(f));
    return LieAlgebra::make(t, {"b1", "b2"});
}

LieAlgebra heisenberg(const FieldSpec& f) {
    BracketTable t(f, 3);
    t.set(0, 1, 2, Scalar::one(f));
    return LieAlgebra::make(t, {"x", "y", "z"});
}

LieAlgebra abelian_algebra(const FieldSpec& f, int dim) {
    BracketTable t(f, dim);
    return LieAlgebra::make(t);
}

LieAlgebra theorem_6_1_algebra(const Theorem61Params& params, const FieldSpec& f) {
    const int m = params.m, n = params.n;
    if (static_cast<int>(params.lambda.size()) != m)
        throw error("theorem_6_1_algebra: lambda must be m x n");
    BracketTable t(f, m + n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(params.lambda[i].size()) != n)
            throw error("theorem_6_1_algebra: lambda must be m x n");
        for (int j = 0; j < n; ++j) t.set(i, m + j, i, params.lambda[i][j]);
    }
    return LieAlgebra::make(t);
}

LieAlgebra theorem_6_6_algebra(std::uint64_t p, int n, const std::vector<Scalar>& lambda,
                               const FieldSpec& f) {
    if (f.characteristic() != p)
        throw characteristic_mismatch("theorem_6_6_algebra: field characteristic must equal p");
    if (static_cast<int>(lambda.size()) != n) throw error("theorem_6_6_algebra: need n lambdas");
    const int P = static_cast<int>(p);
    const int dim = n * P + 2 * n;
    BracketTable t(f, dim);
    auto a_idx = [&](int i, int j) { return i * P + (j - 1); };  // i in [0,n), j in [1,p]
    auto c_idx = [&](int i) { return n * P + i; };
    auto b_idx = [&](int i) { return n * P + n + i; };
    for (int i = 0; i < n; ++i) {
        t.set(c_idx(i), b_idx(i), c_idx(i), Scalar::one(f));  // [c_i, b_i] = c_i
        for (int j = 1; j <= P; ++j) {
            const int jn = j % P + 1;  // j+1 with wraparound in 1..p
            t.set(a_idx(i, j), c_idx(i), a_idx(i, jn), Scalar::one(f));
            t.set(a_idx(i, j), b_idx(i), a_idx(i, j), lambda[i] + Scalar::from_int(f, j));
        }
    }
    std::vector<std::string> names(dim);
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= P; ++j)
            names[a_idx(i, j)] = "a" + std::to_string(i + 1) + "_" + std::to_string(j);
        names[c_idx(i)] = "c" + std::to_string(i + 1);
        names[b_idx(i)] = "b" + std::to_string(i + 1);
    }
    return LieAlgebra::make(t, std::move(names));
}

namespace {

Scalar random_scalar(Rng& rng, const FieldSpec& f) {
    if (f.is_finite()) return scalar_from_index(f, rng.below(f.order()));
    // small rationals keep the closures desk-sized
    long long num = static_cast<long long>(rng.below(7)) - 3;
    long long den = 1 + static_cast<long long>(rng.below(3));
    return Scalar::rational(f, mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

Matrix random_matrix(Rng& rng, const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, f);
    return m;
}

// random invertible matrix, by retry
Matrix random_gl(Rng& rng, const FieldSpec& f, int n) {
    for (int tries = 0; tries < 256; ++tries) {
        Matrix m = random_matrix(rng, f, n);
        if (rref(m).rank == n) return m;
    }
    throw generation_failed("could not sample an invertible matrix");
}

// rewrite L in the basis given by the rows of T (T invertible)
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& T) {
    const int n = L.dim();
    // coords in the new basis: solve x = y * T
    BracketTable t(L.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec br = L.bracket(T.row(i), T.row(j));
            auto y = solve(T, br);
            if (!y) throw generation_failed("basis change: T is singular");
            t.set(i, j, *y);
        }
    return LieAlgebra::make(t);
}

Matrix poly_in(const Matrix& d, const std::vector<Scalar>& coeffs) {
    Matrix acc(d.field(), d.rows(), d.rows());
    Matrix pw = Matrix::identity(d.field(), d.rows());
    for (const Scalar& c : coeffs) {
        acc = acc + c * pw;
        pw = pw * d;
    }
    return acc;
}

}  // namespace

LieAlgebra random_solvable(std::uint64_t seed, int dim_budget, const FieldSpec& f) {
    if (dim_budget < 1) throw error("random_solvable: dim_budget must be positive");
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
    int start = 1 + static_cast<int>(rng.below(2));
    start = std::min(start, dim_budget);
    LieAlgebra L = abelian_algebra(f, start);

    while (L.dim() < dim_budget) {
        const int room = dim_budget - L.dim();
        const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(room, 2))));
        const int m = L.dim();
        // commuting action of L/L^2 on the new abelian ideal: polynomials in
        // one fixed random matrix
        Matrix d = random_matrix(rng, f, a);
        Subspace l2 = bracket_spaces(L, L.full_space(), L.full_space());
        QuotientAlgebra abel = quotient_algebra(L, IdealHandle{l2});
        std::vector<Matrix> comp_action;
        for (int s = 0; s < abel.alg.dim(); ++s) {
            std::vector<Scalar> coeffs;
            for (int deg = 0; deg < a; ++deg) coeffs.push_back(random_scalar(rng, f));
            comp_action.push_back(poly_in(d, coeffs));
        }
        // representation of each old basis vector: the action of its image
        // in the abelianization
        std::vector<Matrix> rep;
        for (int t2 = 0; t2 < m; ++t2) {
            Vec e = vec_zero(f, m);
            e[t2] = Scalar::one(f);
            Vec coords = e * abel.projection;
            Matrix acts(f, a, a);
            for (int s = 0; s < abel.alg.dim(); ++s) acts = acts + coords[s] * comp_action[s];
            rep.push_back(std::move(acts));
        }
        const int nn = a + m;
        BracketTable t(f, nn);
        for (int r = 0; r < a; ++r)
            for (int t2 = 0; t2 < m; ++t2) {
                Vec v = vec_zero(f, nn);
                for (int k = 0; k < a; ++k) v[k] = rep[t2].at(r, k);
                t.set(r, a + t2, v);  // [v_r, old_t] = v_r * rep_t
            }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Vec v = vec_zero(f, nn);
                const Vec& src = L.c(i, j);
                for (int k = 0; k < m; ++k) v[a + k] = src[k];
                t.set(a + i, a + j, v);
            }
        L = LieAlgebra::make(t);
        if (rng.below(3) == 0) break;  // occasionally stop below the budget
    }
    return change_basis(L, random_gl(rng, f, L.dim()));
}

LieAlgebra scrambled_copy(const LieAlgebra& L, std::uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x082efa98ec4e6c89ull);
    return change_basis(L, random_gl(rng, L.field(), L.dim()));
}

LieAlgebra random_A_candidate(std::uint64_t seed, const FieldSpec& f) {
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x13198a2e03707344ull);
    const int d = 1 + static_cast<int>(rng.below(3));   // module dimension
    const int bdim = 1 + static_cast<int>(rng.below(2) % static_cast<std::uint64_t>(d));

    // companion matrix of a monic irreducible polynomial of degree d
    std::vector<Scalar> minpoly;  // constant-first, length d (the monic lead implied)
    if (!f.is_finite()) {
        // x^d - 2 is irreducible over Q
        minpoly.assign(d, Scalar::zero(f));
        minpoly[0] = Scalar::from_int(f, -2);
    } else if (d == 1) {
        minpoly = {Scalar::from_int(f, 1)};  // x - (-1), any linear works
    } else {
        std::vector<Scalar> elems = enumerate_field(f);
        bool found = false;
        for (int tries = 0; tries < 512 && !found; ++tries) {
            minpoly.assign(d, Scalar::zero(f));
            for (int i = 0; i < d; ++i) minpoly[i] = random_scalar(rng, f);
            // irreducible for d in {2,3} iff rootless
            bool rootless = true;
            for (const Scalar& x : elems) {
                Scalar acc = Scalar::one(f);  // monic lead
                for (int i = d - 1; i >= 0; --i) acc = acc * x + minpoly[i];
                if (acc.is_zero()) { rootless = false; break; }
            }
            found = rootless;
        }
        if (!found) throw generation_failed("no irreducible polynomial found");
    }
    Matrix comp(f, d, d);
    for (int i = 0; i + 1 < d; ++i) comp.at(i, i + 1) = Scalar::one(f);
    for (int i = 0; i < d; ++i) comp.at(d - 1, i) = -minpoly[i];

    // regular commuting family: linearly independent polynomials in comp
    std::vector<Matrix> betas;
    std::vector<Vec> coeff_rows;
    for (int tries = 0; tries < 256 && static_cast<int>(betas.size()) < bdim; ++tries) {
        std::vector<Scalar> coeffs;
        bool all_zero = true;
        for (int i = 0; i < d; ++i) {
            coeffs.push_back(random_scalar(rng, f));
            all_zero = all_zero && coeffs.back().is_zero();
        }
        if (all_zero) continue;
        coeff_rows.push_back(coeffs);
        if (static_cast<int>(Subspace::span(f, d, coeff_rows).dim()) !=
            static_cast<int>(coeff_rows.size())) {
            coeff_rows.pop_back();
            continue;
        }
        betas.push_back(poly_in(comp, coeffs));
    }
    if (static_cast<int>(betas.size()) < bdim)
        throw generation_failed("could not sample an independent commuting family");

    const int n = d + bdim;
    BracketTable t(f, n);
    for (int j = 0; j < bdim; ++j)
        for (int r = 0; r < d; ++r) {
            Vec v = vec_zero(f, n);
            for (int k = 0; k < d; ++k) v[k] = betas[j].at(r, k);
            t.set(r, d + j, v);
        }
    LieAlgebra L = LieAlgebra::make(t);
    return change_basis(L, random_gl(rng, f, n));
}

}  // namespace solvlie
