#include "solvlie/aclass.hpp"

#include <algorithm>
#include <sstream>

#include "solvlie/generators.hpp"

namespace solvlie {

LieAlgebra extend_scalars(const LieAlgebra& L, unsigned deg) {
    if (L.field().kind() != field_kind::prime)
        throw method_inapplicable("scalar extension is implemented from prime fields only");
    FieldSpec ext = FieldSpec::extension_field(L.field().p(), deg);
    BracketTable t(ext, L.dim());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            Vec v;
            for (const Scalar& s : L.c(i, j))
                v.push_back(Scalar::from_int(ext, static_cast<long long>(s.res())));
            t.set(i, j, v);
        }
    return LieAlgebra::make(t, L.names());
}

bool recheck_witness(const LieAlgebra& L, const Vec& x, const Vec& y) {
    if (vec_is_zero(L.bracket(x, y))) return false;
    Subspace cur = Subspace::span(L.field(), L.dim(), {x, y});
    for (;;) {
        Subspace next = sum(cur, bracket_spaces(L, cur, cur));
        if (next == cur) break;
        cur = next;
    }
    return is_nilpotent_subalgebra(L, cur);
}

namespace {

Subspace l2_of(const LieAlgebra& L) {
    return bracket_spaces(L, L.full_space(), L.full_space());
}

// L = L^2 (+) B for a metabelian algebra; split_failed propagates
Subspace metabelian_complement(const LieAlgebra& L, std::uint64_t seed) {
    return split_over_terminal_derived(L, seed).second.space;
}

// enumerate the elements of a subspace (finite field), capped
constexpr std::uint64_t kElemScanCap = 1 << 16;

bool for_each_element(const LieAlgebra& L, const Subspace& w,
                      const std::function<bool(const Vec&)>& fn, bool skip_zero = true) {
    // returns false when the space is too large to enumerate
    const FieldSpec& f = L.field();
    if (!f.is_finite()) return false;
    std::uint64_t total = 1;
    for (int i = 0; i < w.dim(); ++i) {
        total *= f.order();
        if (total > kElemScanCap) return false;
    }
    for (std::uint64_t idx = skip_zero ? 1 : 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        Vec v = vec_zero(f, L.dim());
        for (int i = 0; i < w.dim(); ++i) {
            Scalar c = scalar_from_index(f, rem % f.order());
            rem /= f.order();
            if (!c.is_zero()) v = vec_add(v, vec_scale(c, w.basis_row(i)));
        }
        if (!fn(v)) return true;  // early stop requested
    }
    return true;
}

bool matrix_is_invertible(const Matrix& m) { return rref(m).rank == m.rows(); }

bool matrix_is_zero(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

Matrix lift_matrix(const Matrix& m, const FieldSpec& ext) {
    Matrix out(ext, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = Scalar::from_int(ext, static_cast<long long>(m.at(i, j).res()));
    return out;
}

// smallest k with (theta - lambda I)^k = 0, or nullopt
std::optional<int> annihilation_index(const Matrix& theta, const Scalar& lambda) {
    const int m = theta.rows();
    Matrix shifted = theta;
    for (int i = 0; i < m; ++i) shifted.at(i, i) -= lambda;
    Matrix pw = Matrix::identity(theta.field(), m);
    for (int k = 1; k <= m; ++k) {
        pw = pw * shifted;
        if (matrix_is_zero(pw)) return k;
    }
    return std::nullopt;
}

// scan the field for lambda with (theta - lambda)^k = 0; nonzero_only skips 0
std::optional<std::pair<Scalar, int>> primary_eigenvalue(const Matrix& theta, bool nonzero_only) {
    const FieldSpec& f = theta.field();
    for (std::uint64_t i = nonzero_only ? 1 : 0; i < field_order(f); ++i) {
        Scalar lam = scalar_from_index(f, i);
        if (auto k = annihilation_index(theta, lam)) return std::make_pair(lam, *k);
    }
    return std::nullopt;
}

// probe extension degrees until the matrix acquires an eigenvalue, for the
// field_too_small suggestion
unsigned suggest_extension_degree(const Matrix& theta, bool nonzero_only) {
    if (theta.field().kind() != field_kind::prime) return 0;
    for (unsigned d = 2; d <= 4; ++d) {
        FieldSpec ext = FieldSpec::extension_field(theta.field().p(), d);
        Matrix lifted = lift_matrix(theta, ext);
        for (std::uint64_t i = nonzero_only ? 1 : 0; i < field_order(ext); ++i) {
            Matrix sh = lifted;
            Scalar lam = scalar_from_index(ext, i);
            for (int r = 0; r < sh.rows(); ++r) sh.at(r, r) -= lam;
            if (left_kernel(sh).dim() > 0) return d;
        }
    }
    return 0;
}

}  // namespace

QSetResult q_set(const LieAlgebra& L, const EnumBudget& b) {
    QSetResult r;
    const auto ch = L.field().characteristic();
    r.char_excluded = (ch == 2 || ch == 3);
    const int n = L.dim();
    if (!L.field().is_finite()) {
        // polarized containment N <= Q(L): (ad x)^2 = 0 on a basis of N plus
        // the mixed products
        Subspace nil = nilradical(L, nilradical_method::auto_pick, b);
        std::vector<Matrix> ads;
        for (int i = 0; i < nil.dim(); ++i) ads.push_back(L.ad_matrix(nil.basis_row(i)));
        bool ok = true;
        for (size_t i = 0; i < ads.size() && ok; ++i)
            for (size_t j = i; j < ads.size() && ok; ++j)
                ok = matrix_is_zero(ads[i] * ads[j] + ads[j] * ads[i]);
        // characteristic zero: 2 is invertible, so the polarization argument
        // covers the squares as well
        r.contains_nilradical = ok;
        return r;
    }
    const std::uint64_t total = fpk::vector_space_size(
        static_cast<std::uint32_t>(L.field().order()), n);
    if (total == UINT64_MAX || total > b.max_pairs)
        throw budget_exceeded("q_set element scan exceeds the budget");
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    auto ad_square_zero = [&](std::uint64_t idx) {
        std::vector<std::uint32_t> x(n), row(n), out(n), e(n);
        fpk::vector_from_index(idx, A.F.q, n, x.data());
        for (int i = 0; i < n; ++i) {
            e.assign(n, 0);
            e[i] = A.F.one;
            A.bracket(e.data(), x.data(), row.data());
            A.bracket(row.data(), x.data(), out.data());
            for (int j = 0; j < n; ++j)
                if (out[j]) return false;
        }
        return true;
    };
    auto hits = fpk::scan_collect(total, ad_square_zero);
    std::vector<Vec> elems;
    std::vector<Vec> gens;
    for (std::uint64_t idx : hits) {
        std::vector<std::uint32_t> x(n);
        fpk::vector_from_index(idx, A.F.q, n, x.data());
        elems.push_back(fpk::unpack_vec(A, x.data()));
        gens.push_back(elems.back());
    }
    Subspace spanned = Subspace::span(L.field(), n, gens);
    std::uint64_t span_size = 1;
    for (int i = 0; i < spanned.dim(); ++i) span_size *= L.field().order();
    r.closed = (span_size == hits.size());
    if (*r.closed) r.space = spanned;
    r.elements = std::move(elems);
    return r;
}

tri_bool lemma_5_3_check(const LieAlgebra& L, std::uint64_t seed) {
    Subspace l2 = l2_of(L);
    if (!is_abelian_subspace(L, l2)) throw not_metabelian("lemma_5_3_check needs a metabelian algebra");
    if (l2.is_zero()) return tri_bool::yes;  // vacuous by convention
    Subspace B = metabelian_complement(L, seed);
    auto invertible_for = [&](const Vec& b) {
        auto theta = ad_restricted(L, b, l2);
        return theta.has_value() && matrix_is_invertible(*theta);
    };
    if (B.dim() == 1) {
        // every nonzero b is a scalar multiple of the basis vector
        return invertible_for(B.basis_row(0)) ? tri_bool::yes : tri_bool::no;
    }
    bool all_ok = true;
    bool exhaustive = for_each_element(L, B, [&](const Vec& b) {
        if (!invertible_for(b)) {
            all_ok = false;
            return false;
        }
        return true;
    });
    if (exhaustive) return all_ok ? tri_bool::yes : tri_bool::no;
    // sampling only: basis vectors plus seeded combinations
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xbe5466cf34e90c6cull);
    for (int i = 0; i < B.dim(); ++i)
        if (!invertible_for(B.basis_row(i))) return tri_bool::no;
    for (int it = 0; it < 24; ++it) {
        Vec v = vec_zero(L.field(), L.dim());
        for (int i = 0; i < B.dim(); ++i) {
            Scalar c = L.field().is_finite()
                           ? scalar_from_index(L.field(), rng.below(field_order(L.field())))
                           : Scalar::from_int(L.field(), static_cast<long long>(rng.below(9)) - 4);
            v = vec_add(v, vec_scale(c, B.basis_row(i)));
        }
        if (!vec_is_zero(v) && !invertible_for(v)) return tri_bool::no;
    }
    return tri_bool::yes_on_samples;
}

std::pair<bool, bool> theorem_5_4_check(const LieAlgebra& L, const EnumBudget& b,
                                        std::uint64_t seed) {
    auto mins = minimal_ideals(L, min_ideal_method::auto_pick, b, seed);
    if (mins.size() != 1) throw not_monolithic("theorem_5_4_check needs a monolithic algebra");
    bool lhs = strongly_solvable(L) && oracle_is_A(L, b).is_A;
    bool rhs;
    try {
        rhs = (lemma_5_3_check(L, seed) == tri_bool::yes);
    } catch (const not_metabelian&) {
        rhs = false;
    } catch (const split_failed&) {
        rhs = false;
    }
    return {lhs, rhs};
}

// ------------------------------------------------------------------- is_A

namespace {

std::optional<std::pair<Vec, Vec>> noncommuting_pair(const LieAlgebra& L, const Subspace& u) {
    for (int i = 0; i < u.dim(); ++i)
        for (int j = i + 1; j < u.dim(); ++j)
            if (!vec_is_zero(L.bracket(u.basis_row(i), u.basis_row(j))))
                return std::make_pair(u.basis_row(i), u.basis_row(j));
    return std::nullopt;
}

// negative certificate on a monolithic metabelian split: some nonzero b in B
// acts singularly, so L^2 + Fb is nilpotent and non-abelian
std::optional<std::pair<Vec, Vec>> monolithic_witness(const LieAlgebra& L, const Subspace& l2,
                                                      const Vec& bad_b) {
    Subspace u = sum(l2, Subspace::span(L.field(), L.dim(), {bad_b}));
    if (!is_nilpotent_subalgebra(L, u)) return std::nullopt;
    for (int i = 0; i < l2.dim(); ++i)
        if (!vec_is_zero(L.bracket(l2.basis_row(i), bad_b)))
            return std::make_pair(l2.basis_row(i), bad_b);
    return std::nullopt;
}

}  // namespace

ACertificate is_A(const LieAlgebra& L, a_method m, const EnumBudget& b, std::uint64_t seed) {
    ACertificate cert;
    if (m == a_method::oracle_pairs) {
        OracleAVerdict v = oracle_is_A(L, b);
        cert.verdict = v.is_A;
        cert.method = "oracle_pairs";
        cert.witness = v.witness;
        return cert;
    }

    // nilpotent algebras decide immediately
    if (is_nilpotent(L)) {
        cert.method = "nilpotent";
        if (is_abelian(L)) {
            cert.verdict = true;
        } else {
            cert.verdict = false;
            cert.witness = noncommuting_pair(L, L.full_space());
        }
        return cert;
    }

    // metabelian certificate: every nonzero b acts invertibly on L^2
    Subspace l2 = l2_of(L);
    const bool metab = is_abelian_subspace(L, l2);
    if (metab) {
        try {
            tri_bool r = lemma_5_3_check(L, seed);
            if (r == tri_bool::yes) {
                cert.verdict = true;
                cert.method = "lemma_5_3";
                return cert;
            }
            if (r == tri_bool::no) {
                // the converse needs a monolith
                try {
                    auto mins = minimal_ideals(L, min_ideal_method::auto_pick, b, seed);
                    if (mins.size() == 1) {
                        Subspace B = metabelian_complement(L, seed);
                        std::optional<std::pair<Vec, Vec>> witness;
                        for_each_element(L, B, [&](const Vec& cand) {
                            auto theta = ad_restricted(L, cand, l2);
                            if (theta && !matrix_is_invertible(*theta)) {
                                witness = monolithic_witness(L, l2, cand);
                                if (witness) return false;
                            }
                            return true;
                        });
                        if (!witness) {
                            // rationals: sample candidates for a singular action
                            Rng rng(seed + 0xc0ac29b7c97c50ddull);
                            for (int it = 0; it < 64 && !witness; ++it) {
                                Vec v = vec_zero(L.field(), L.dim());
                                for (int i = 0; i < B.dim(); ++i) {
                                    Scalar c =
                                        L.field().is_finite()
                                            ? scalar_from_index(L.field(),
                                                                rng.below(field_order(L.field())))
                                            : Scalar::from_int(
                                                  L.field(),
                                                  static_cast<long long>(rng.below(9)) - 4);
                                    v = vec_add(v, vec_scale(c, B.basis_row(i)));
                                }
                                if (vec_is_zero(v)) continue;
                                auto theta = ad_restricted(L, v, l2);
                                if (theta && !matrix_is_invertible(*theta))
                                    witness = monolithic_witness(L, l2, v);
                            }
                        }
                        if (witness) {
                            cert.verdict = false;
                            cert.method = "theorem_5_4";
                            cert.witness = witness;
                            return cert;
                        }
                    }
                } catch (const error&) {
                    // monolith unknown: fall through
                }
            }
        } catch (const error&) {
            // no split: fall through to the oracle
        }
    }

    // oracle fallback when feasible
    const bool oracle_ok = L.field().is_finite() && fpk::packable(L.field());
    if (m != a_method::structural && oracle_ok) {
        try {
            OracleAVerdict v = oracle_is_A(L, b);
            cert.verdict = v.is_A;
            cert.method = "oracle_pairs";
            cert.witness = v.witness;
            return cert;
        } catch (const budget_exceeded&) {
            // continue to the closed-field route
        }
    }

    // phi-free, not strongly solvable, finite field: the characterization route
    if (L.field().is_finite() && is_solvable(L) && !strongly_solvable(L)) {
        try {
            if (is_phi_free(L, phi_method::oracle, b)) {
                Theorem66Verdict v66 = theorem_6_6_check(L, b, seed);
                if (v66.is_A_conclusion) {
                    cert.verdict = true;
                    cert.method = "theorem_6_6";
                    return cert;
                }
            }
        } catch (const error&) {
            // fall through to undecided
        }
    }
    throw undecided("no structural route applies and the oracle is infeasible");
}

// ----------------------------------------------------- theorem 6.3 classify

Theorem63Result theorem_6_3_classify(const LieAlgebra& L, const EnumBudget& budget,
                                     std::uint64_t seed) {
    if (L.dim() <= 1) throw method_inapplicable("theorem_6_3_classify requires dim > 1");
    if (!L.field().is_finite())
        throw method_inapplicable("theorem_6_3_classify runs over finite fields");
    if (!is_solvable(L)) throw not_solvable("theorem_6_3_classify requires solvability");
    auto mins = minimal_ideals(L, min_ideal_method::auto_pick, budget, seed);
    if (mins.size() != 1) throw not_monolithic("theorem_6_3_classify needs a monolithic algebra");
    const Subspace W = mins.front();

    Theorem63Result res;
    Subspace l2 = l2_of(L);
    if (strongly_solvable(L)) {
        res.case_id = 1;
        Subspace B = metabelian_complement(L, seed);
        if (B.dim() != 1)
            throw field_too_small(
                "the complement has dimension " + std::to_string(B.dim()) +
                "; the monolith is not absolutely irreducible, so the closed-field shape "
                "only appears after extension",
                W.dim() <= 4 ? static_cast<unsigned>(W.dim()) : 0);
        res.b = B.basis_row(0);
        auto theta = ad_restricted(L, res.b, l2);
        if (!theta) throw verification_failed("L^2 is not invariant under the complement");
        auto hit = primary_eigenvalue(*theta, /*nonzero_only=*/true);
        if (!hit)
            throw field_too_small("no nonzero primary eigenvalue in the ground field",
                                  suggest_extension_degree(*theta, true));
        res.lambda = hit->first;
        res.k = hit->second;
        res.monolith_dim = W.dim();
        if (W.dim() != 1)
            throw verification_failed("case (i) expects a one-dimensional monolith");
        return res;
    }

    // case (ii): derived length 3, N = L^(1) = L^(2) + Fn
    res.case_id = 2;
    SeriesChain ds = derived_series(L);
    if (static_cast<int>(ds.terms.size()) - 1 != 3)
        throw verification_failed("non-strongly-solvable case expects derived length 3");
    const Subspace& l2nd = ds.terms[2];  // L^(2)
    const Subspace& l1st = ds.terms[1];  // L^(1)
    // nilradical of L/L^(2), pulled back
    QuotientAlgebra quo = quotient_algebra(L, certify_ideal(L, l2nd));
    Subspace nq = nilradical(quo.alg, nilradical_method::auto_pick, budget);
    Matrix red(L.field(), L.dim(), quo.alg.dim());
    for (int i = 0; i < L.dim(); ++i) {
        Vec ei = vec_zero(L.field(), L.dim());
        ei[i] = Scalar::one(L.field());
        red.set_row(i, nq.reduce(ei * quo.projection));
    }
    Subspace pullback = left_kernel(red);
    if (!(pullback == l1st))
        throw verification_failed("the pulled-back nilradical is not L^(1)");
    Subspace ncomp = complement(l2nd, l1st);
    if (ncomp.dim() != 1) throw verification_failed("dim L^(1)/L^(2) is not 1");
    Vec n_elem = ncomp.basis_row(0);
    FittingPair fp = fitting_single(L, n_elem);
    Subspace B = fp.null_part;
    if (B.dim() != 2) throw verification_failed("Fitting null component of ad n is not 2-dim");
    if (!is_subalgebra(L, B)) throw verification_failed("Fitting null component is not closed");
    // b in B with [n, b] = n
    Matrix sys(L.field(), B.dim(), L.dim());
    for (int i = 0; i < B.dim(); ++i) sys.set_row(i, L.bracket(n_elem, B.basis_row(i)));
    auto coeffs = solve(sys, n_elem);
    if (!coeffs) throw verification_failed("no b in B with [n,b] = n");
    Vec b_elem = vec_zero(L.field(), L.dim());
    for (int i = 0; i < B.dim(); ++i)
        b_elem = vec_add(b_elem, vec_scale((*coeffs)[i], B.basis_row(i)));
    res.n_elem = n_elem;
    res.b = b_elem;
    res.b_subalg = B;
    res.monolith_dim = W.dim();

    auto theta_n = ad_restricted(L, n_elem, l2nd);
    if (!theta_n) throw verification_failed("L^(2) is not ad n-invariant");
    auto hit = primary_eigenvalue(*theta_n, /*nonzero_only=*/true);
    if (!hit)
        throw field_too_small("no nonzero primary eigenvalue for ad n",
                              suggest_extension_degree(*theta_n, true));
    res.lambda = hit->first;
    res.k = hit->second;

    // b is determined modulo Fn; scan the coset for a representative with a
    // nonzero mu in L^(2)((ad b)^p - ad b - mu^p)^k = 0
    const std::uint64_t p = L.field().characteristic();
    std::optional<std::pair<Scalar, int>> muhit;
    for (std::uint64_t ti = 0; ti < field_order(L.field()) && !muhit; ++ti) {
        Vec cand = vec_add(b_elem, vec_scale(scalar_from_index(L.field(), ti), n_elem));
        auto theta_b = ad_restricted(L, cand, l2nd);
        if (!theta_b) continue;
        Matrix frob = mat_pow(*theta_b, static_cast<unsigned>(p)) - *theta_b;
        for (std::uint64_t i = 1; i < field_order(L.field()) && !muhit; ++i) {
            Scalar t = scalar_from_index(L.field(), i);
            if (auto k2 = annihilation_index(frob, t)) {
                muhit = std::make_pair(pth_root(t), *k2);
                res.b = cand;
                b_elem = cand;
            }
        }
    }
    if (!muhit) {
        unsigned suggest = 0;
        if (L.field().kind() == field_kind::prime) {
            for (unsigned d = 2; d <= 4 && suggest == 0; ++d) {
                try {
                    theorem_6_3_classify(extend_scalars(L, d), budget, seed);
                    suggest = d;
                } catch (const error&) {
                }
            }
        }
        throw field_too_small("no mu with L^(2)((ad b)^p - ad b - mu^p)^k = 0", suggest);
    }
    res.mu = muhit->first;
    res.k = std::max(res.k, muhit->second);
    if (static_cast<std::uint64_t>(W.dim()) != p)
        throw verification_failed("case (ii) expects dim W = p");
    return res;
}

// --------------------------------------------------- theorem 6.5 form check

bool theorem_6_5_form_check(const LieAlgebra& L, const EnumBudget&, std::uint64_t seed) {
    if (!L.field().is_finite())
        throw method_inapplicable("form check runs over finite fields (closed-field proxy)");
    if (!is_solvable(L) || !strongly_solvable(L))
        throw method_inapplicable("form check applies to strongly solvable algebras");
    Subspace l2 = l2_of(L);
    if (l2.is_zero()) return true;  // abelian: m = dim L a's with all lambda zero? B empty
    TriangularDecomposition tri = triangular_decomposition(L, seed);
    Subspace a0 = tri.parts.back();
    Subspace zc = center(L);
    // N = L^2 (+) Z(L); B = complement of Z inside A_0
    Subspace nrad = sum(l2, zc);
    Subspace zin = intersect(zc, a0);
    Subspace B = complement(zin, a0);
    if (sum(nrad, B).dim() != L.dim())
        return false;  // the split does not cover L: not of the stated form
    // simultaneous eigenspace refinement of the B-action on N
    std::vector<Subspace> parts{nrad};
    for (int bi = 0; bi < B.dim(); ++bi) {
        Vec bv = B.basis_row(bi);
        std::vector<Subspace> next;
        for (const Subspace& part : parts) {
            auto theta = ad_restricted(L, bv, part);
            if (!theta) return false;
            int covered = 0;
            for (std::uint64_t i = 0; i < field_order(L.field()); ++i) {
                Scalar lam = scalar_from_index(L.field(), i);
                Matrix shifted = *theta;
                for (int d = 0; d < shifted.rows(); ++d) shifted.at(d, d) -= lam;
                Subspace eig = left_kernel(shifted);
                if (eig.dim() == 0) continue;
                // lift eigenspace coordinates back into L
                std::vector<Vec> rows;
                for (int r = 0; r < eig.dim(); ++r) {
                    Vec v = vec_zero(L.field(), L.dim());
                    for (int c = 0; c < part.dim(); ++c)
                        v = vec_add(v, vec_scale(eig.basis().at(r, c), part.basis_row(c)));
                    rows.push_back(std::move(v));
                }
                next.push_back(Subspace::span(L.field(), L.dim(), rows));
                covered += eig.dim();
            }
            if (covered != part.dim()) {
                // missing eigenvalues: diagonalizable over an extension, or
                // genuinely non-semisimple (then the form does not exist)
                if (theta->field().kind() == field_kind::prime) {
                    for (unsigned d = 2; d <= 4; ++d) {
                        Matrix lifted = lift_matrix(*theta, FieldSpec::extension_field(
                                                                theta->field().p(), d));
                        int cov = 0;
                        for (std::uint64_t i = 0; i < field_order(lifted.field()); ++i) {
                            Matrix sh = lifted;
                            Scalar lam = scalar_from_index(lifted.field(), i);
                            for (int dd = 0; dd < sh.rows(); ++dd) sh.at(dd, dd) -= lam;
                            cov += left_kernel(sh).dim();
                        }
                        if (cov == lifted.rows())
                            throw field_too_small(
                                "the diagonalizing eigenvalues live in an extension", d);
                    }
                }
                return false;
            }
        }
        parts = std::move(next);
    }
    // collect the common eigenvectors and verify the multiplication form
    std::vector<Vec> a_basis;
    for (const Subspace& part : parts)
        for (int i = 0; i < part.dim(); ++i) a_basis.push_back(part.basis_row(i));
    for (const Vec& a : a_basis) {
        for (const Vec& a2 : a_basis)
            if (!vec_is_zero(L.bracket(a, a2))) return false;
        for (int i = 0; i < B.dim(); ++i) {
            Vec br = L.bracket(a, B.basis_row(i));
            // must be a scalar multiple of a
            Subspace line = Subspace::span(L.field(), L.dim(), {a});
            if (!line.contains(br)) return false;
        }
    }
    for (int i = 0; i < B.dim(); ++i)
        for (int j = i + 1; j < B.dim(); ++j)
            if (!vec_is_zero(L.bracket(B.basis_row(i), B.basis_row(j)))) return false;
    return static_cast<int>(a_basis.size()) + B.dim() == L.dim();
}

// ----------------------------------------------------- theorem 6.6 checker

Theorem66Verdict theorem_6_6_check(const LieAlgebra& L, const EnumBudget& budget,
                                   std::uint64_t seed) {
    if (!L.field().is_finite())
        throw method_inapplicable("the characterization check runs over finite fields");
    if (!is_solvable(L)) throw method_inapplicable("the characterization needs solvability");
    if (strongly_solvable(L))
        throw method_inapplicable("the characterization covers non-strongly-solvable algebras");

    Theorem66Verdict v;
    SeriesChain ds = derived_series(L);
    const int dl = static_cast<int>(ds.terms.size()) - 1;

    // (i) L = L^(2) (+) C (+) B with abelian subalgebras, L^(1) = L^(2) (+) C
    Subspace C, B;
    if (dl == 3 && is_abelian_subspace(L, ds.terms[2])) {
        try {
            TriangularDecomposition tri = triangular_decomposition(L, seed);
            if (tri.parts.size() == 3) {
                C = tri.parts[1];
                B = tri.parts[2];
                v.conditions[0] = true;
            }
        } catch (const error&) {
            // no decomposition found: condition (i) stays false
        }
    }
    if (!v.conditions[0]) return v;

    const Subspace& l2nd = ds.terms[2];

    // (ii) C + B is a strongly solvable phi-free A-algebra
    Subspace D = sum(C, B);
    if (is_subalgebra(L, D)) {
        InducedAlgebra ind = induced_algebra(L, SubalgebraHandle{D});
        try {
            v.conditions[1] = strongly_solvable(ind.alg) &&
                              oracle_frattini(ind.alg, budget).is_zero() &&
                              oracle_is_A(ind.alg, budget).is_A;
        } catch (const budget_exceeded&) {
            v.conditions[1] = false;
        }
    }

    // (iii) L^(2) = A_1 (+) ... (+) A_n, minimal ideals of dimension p
    const std::uint64_t p = L.field().characteristic();
    std::vector<Subspace> family = socle_decomposition(L, l2nd, seed);
    Subspace fam_sum = L.zero_space();
    for (const Subspace& a : family) fam_sum = sum(fam_sum, a);
    bool dims_ok = !family.empty() && fam_sum == l2nd;
    for (const Subspace& a : family) {
        if (static_cast<std::uint64_t>(a.dim()) != p) dims_ok = false;
        if (!is_ideal(L, a)) dims_ok = false;
    }
    v.conditions[2] = dims_ok;

    // (iv) per minimal ideal: some c in L^(1), b outside L^(1) satisfy
    // [c,b] = c and the cyclic ladder on A_i, with Z_L(A_i) of codimension
    // two completed by exactly these directions. The search runs in the
    // quotient by the other minimal ideals, which makes it independent of
    // the particular complements produced for condition (i).
    if (v.conditions[2]) {
        Theorem66Params params;
        params.c_part = C;
        params.b_part = B;
        params.min_ideals = family;
        bool all_ok = true;
        for (size_t idx = 0; idx < family.size() && all_ok; ++idx) {
            Subspace others = L.zero_space();
            for (size_t j = 0; j < family.size(); ++j)
                if (j != idx) others = sum(others, family[j]);
            QuotientAlgebra quo = quotient_algebra(L, certify_ideal(L, others));
            const LieAlgebra& Q = quo.alg;
            Subspace aq = project_subspace(family[idx], quo.projection);
            Subspace l1q = project_subspace(ds.terms[1], quo.projection);
            Subspace zq = centralizer(Q, aq);
            if (zq.dim() != Q.dim() - 2) { all_ok = false; break; }
            const std::uint64_t qsize = fpk::vector_space_size(
                static_cast<std::uint32_t>(L.field().order()), Q.dim());
            if (qsize == UINT64_MAX || qsize > (1u << 20))
                throw budget_exceeded("condition (iv) candidate scan exceeds the budget");
            bool found = false;
            Vec chosen_c, chosen_b;
            Scalar found_lambda = Scalar::zero(L.field());
            std::vector<Vec> found_basis;
            for_each_element(Q, l1q, [&](const Vec& c) {
                if (found) return false;
                if (aq.contains(c)) return true;  // must project onto the C-direction
                for_each_element(Q, Q.full_space(), [&](const Vec& bb) {
                    if (found) return false;
                    if (l1q.contains(bb)) return true;
                    if (!(Q.bracket(c, bb) == c)) return true;  // [c_i, b_i] = c_i
                    if (sum(sum(zq, Subspace::span(Q.field(), Q.dim(), {c})),
                            Subspace::span(Q.field(), Q.dim(), {bb}))
                            .dim() != Q.dim())
                        return true;
                    auto theta_b = ad_restricted(Q, bb, aq);
                    if (!theta_b) return true;
                    for (std::uint64_t li = 0; li < field_order(L.field()) && !found; ++li) {
                        Scalar lam = scalar_from_index(L.field(), li);
                        Matrix shifted = *theta_b;
                        for (int d = 0; d < shifted.rows(); ++d) shifted.at(d, d) -= lam;
                        Subspace eig = left_kernel(shifted);
                        for (int er = 0; er < eig.dim() && !found; ++er) {
                            Vec w = vec_zero(Q.field(), Q.dim());
                            for (int ec = 0; ec < aq.dim(); ++ec)
                                w = vec_add(w,
                                            vec_scale(eig.basis().at(er, ec), aq.basis_row(ec)));
                            // a_{i1} = w carries eigenvalue lambda_i + 1
                            Scalar lam_i = lam - Scalar::one(Q.field());
                            std::vector<Vec> basis{w};
                            for (std::uint64_t j = 1; j < p; ++j)
                                basis.push_back(Q.bracket(basis.back(), c));
                            bool ok = Q.bracket(basis.back(), c) == basis.front();
                            for (std::uint64_t j = 1; j <= p && ok; ++j) {
                                Scalar expect = lam_i +
                                                Scalar::from_int(Q.field(),
                                                                 static_cast<long long>(j));
                                ok = Q.bracket(basis[j - 1], bb) ==
                                     vec_scale(expect, basis[j - 1]);
                            }
                            if (ok && Subspace::span(Q.field(), Q.dim(), basis).dim() ==
                                          static_cast<int>(p)) {
                                found = true;
                                chosen_c = c;
                                chosen_b = bb;
                                found_lambda = lam_i;
                                found_basis = basis;
                            }
                        }
                    }
                    return !found;
                });
                return !found;
            });
            if (!found) { all_ok = false; break; }
            params.c_elems.push_back(chosen_c);
            params.b_elems.push_back(chosen_b);
            params.lambdas.push_back(found_lambda);
            params.bases.push_back(found_basis);
        }
        v.conditions[3] = all_ok;
        if (all_ok) v.params = std::move(params);
    }

    v.is_A_conclusion = v.conditions[0] && v.conditions[1] && v.conditions[2] && v.conditions[3];
    return v;
}

}  // namespace solvlie
