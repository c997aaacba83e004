#include "solvlie/structure.hpp"

#include <algorithm>

#include "solvlie/generators.hpp"

namespace solvlie {

namespace {

// ---- trace-form nilradical (characteristic zero) ----

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
    Scalar t = Scalar::zero(a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) t += a.at(i, k) * b.at(k, i);
    return t;
}

Subspace nilradical_traceform(const LieAlgebra& L) {
    if (L.field().characteristic() != 0)
        throw method_inapplicable("trace-form nilradical requires characteristic zero");
    const int n = L.dim();
    if (n == 0) return L.zero_space();
    // associative envelope of ad L
    std::vector<Matrix> envelope;
    Subspace span_flat = Subspace::zero(L.field(), n * n);
    std::vector<Matrix> ads;
    for (int i = 0; i < n; ++i) {
        Vec ei = vec_zero(L.field(), n);
        ei[i] = Scalar::one(L.field());
        Matrix ad = L.ad_matrix(ei);
        ads.push_back(ad);
        Subspace grown = sum(span_flat, Subspace::span(L.field(), n * n, {flatten(ad)}));
        if (grown.dim() > span_flat.dim()) {
            envelope.push_back(ad);
            span_flat = grown;
        }
    }
    for (size_t i = 0; i < envelope.size(); ++i)
        for (size_t j = 0; j < envelope.size(); ++j) {
            Matrix prod = envelope[i] * envelope[j];
            Subspace grown = sum(span_flat, Subspace::span(L.field(), n * n, {flatten(prod)}));
            if (grown.dim() > span_flat.dim()) {
                envelope.push_back(prod);
                span_flat = grown;
            }
        }
    // N = {x : tr(ad x . E_j) = 0 for every envelope element}
    Matrix cond(L.field(), n, static_cast<int>(envelope.size()));
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < envelope.size(); ++j)
            cond.at(i, static_cast<int>(j)) = trace_of_product(ads[i], envelope[j]);
    Subspace cand = left_kernel(cond);
    if (!is_ideal(L, cand) || !is_nilpotent_subalgebra(L, cand))
        throw verification_failed("trace-form nilradical candidate failed the re-check");
    return cand;
}

Subspace nilradical_a_series(const LieAlgebra& L) {
    SeriesChain ds = derived_series(L);
    if (!ds.reaches_zero())
        throw method_inapplicable("a_series nilradical requires a solvable algebra");
    Subspace acc = L.zero_space();
    for (const Subspace& term : ds.terms) {
        if (term.is_zero()) break;
        InducedAlgebra ind = induced_algebra(L, certify_subalgebra(L, term));
        acc = sum(acc, embed_subspace(center(ind.alg), ind.embedding));
    }
    if (!is_ideal(L, acc) || !is_abelian_subspace(L, acc))
        throw verification_failed(
            "a_series nilradical is not an abelian ideal; the input is likely not an A-algebra");
    // the maximal abelian ideal is its own centralizer; anything short of
    // that cannot be the nilradical of an A-algebra
    if (!(centralizer(L, acc) == acc))
        throw verification_failed(
            "a_series nilradical is not self-centralizing; the input is likely not an A-algebra");
    return acc;
}

}  // namespace

Subspace nilradical(const LieAlgebra& L, nilradical_method m, const EnumBudget& b,
                    std::string* out_method) {
    auto tag = [&](const char* t) {
        if (out_method) *out_method = t;
    };
    switch (m) {
        case nilradical_method::oracle: {
            Subspace r = oracle_nilradical(L, b);
            tag("oracle");
            return r;
        }
        case nilradical_method::a_series: {
            Subspace r = nilradical_a_series(L);
            tag("a_series");
            return r;
        }
        case nilradical_method::traceform: {
            Subspace r = nilradical_traceform(L);
            tag("traceform");
            return r;
        }
        case nilradical_method::auto_pick: {
            if (L.field().characteristic() == 0) {
                Subspace r = nilradical_traceform(L);
                tag("traceform");
                return r;
            }
            try {
                Subspace r = oracle_nilradical(L, b);
                tag("oracle");
                return r;
            } catch (const budget_exceeded&) {
                Subspace r = nilradical_a_series(L);
                tag("a_series");
                return r;
            }
        }
    }
    throw error("unreachable");
}

namespace {

// smallest L-submodule containing v
Subspace submodule_generated(const LieAlgebra& L, const Vec& v) {
    Subspace cur = Subspace::span(L.field(), L.dim(), {v});
    for (;;) {
        Subspace next = sum(cur, bracket_spaces(L, cur, L.full_space()));
        if (next == cur) return cur;
        cur = next;
    }
}

constexpr std::uint64_t kChopScanCap = 1 << 16;

// candidate vectors of a module W: exhaustive on small finite fields,
// basis plus seeded samples otherwise
std::vector<Vec> module_candidates(const LieAlgebra& L, const Subspace& w, std::uint64_t seed) {
    std::vector<Vec> out;
    const FieldSpec& f = L.field();
    if (f.is_finite()) {
        std::uint64_t total = 1;
        bool small = true;
        for (int i = 0; i < w.dim() && small; ++i) {
            total *= f.order();
            small = total <= kChopScanCap;
        }
        if (small) {
            for (std::uint64_t idx = 1; idx < total; ++idx) {
                std::uint64_t rem = idx;
                Vec v = vec_zero(f, L.dim());
                for (int i = 0; i < w.dim(); ++i) {
                    Scalar c = scalar_from_index(f, rem % f.order());
                    rem /= f.order();
                    if (!c.is_zero()) v = vec_add(v, vec_scale(c, w.basis_row(i)));
                }
                out.push_back(std::move(v));
            }
            return out;
        }
    }
    for (int i = 0; i < w.dim(); ++i) out.push_back(w.basis_row(i));
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x452821e638d01377ull);
    for (int extra = 0; extra < w.dim() + 8; ++extra) {
        Vec v = vec_zero(f, L.dim());
        for (int i = 0; i < w.dim(); ++i) {
            Scalar c = f.is_finite() ? scalar_from_index(f, rng.below(f.order()))
                                     : Scalar::from_int(f, static_cast<long long>(rng.below(7)) - 3);
            v = vec_add(v, vec_scale(c, w.basis_row(i)));
        }
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

Subspace find_irreducible(const LieAlgebra& L, Subspace w, std::uint64_t seed) {
    for (;;) {
        bool shrunk = false;
        for (const Vec& v : module_candidates(L, w, seed)) {
            Subspace gen = submodule_generated(L, v);
            if (gen.dim() > 0 && gen.dim() < w.dim()) {
                w = gen;
                shrunk = true;
                break;
            }
        }
        if (!shrunk) return w;
    }
}

}  // namespace

std::vector<Subspace> socle_decomposition(const LieAlgebra& L, const Subspace& w,
                                          std::uint64_t seed) {
    std::vector<Subspace> family;
    Subspace acc = L.zero_space();
    for (const Vec& v : module_candidates(L, w, seed)) {
        if (acc.contains(v)) continue;
        Subspace a = find_irreducible(L, submodule_generated(L, v), seed);
        // an irreducible meets acc trivially or is inside it
        if (acc.contains(a)) continue;
        // a genuine irreducible meets acc in 0 or lies inside; a nonzero
        // partial overlap means the sampling missed a proper submodule
        if (intersect(acc, a).dim() != 0) continue;
        family.push_back(a);
        acc = sum(acc, a);
        if (acc == w) break;
    }
    return family;
}

std::vector<Subspace> minimal_ideals(const LieAlgebra& L, min_ideal_method m, const EnumBudget& b,
                                     std::uint64_t seed, std::string* out_method) {
    auto tag = [&](const char* t) {
        if (out_method) *out_method = t;
    };
    if (m == min_ideal_method::oracle) {
        auto r = oracle_minimal_ideals(L, b);
        tag("oracle");
        return r;
    }
    if (m == min_ideal_method::auto_pick && L.field().is_finite() && fpk::packable(L.field())) {
        try {
            auto r = oracle_minimal_ideals(L, b);
            tag("oracle");
            return r;
        } catch (const budget_exceeded&) {
            // fall through to chop
        }
    }
    if (!is_solvable(L))
        throw method_inapplicable("chop minimal ideals requires a solvable algebra");
    Subspace n = nilradical(L, nilradical_method::auto_pick, b);
    auto r = socle_decomposition(L, n, seed);
    tag("chop");
    return r;
}

Subspace abelian_socle(const LieAlgebra& L, min_ideal_method m, const EnumBudget& b,
                       std::uint64_t seed) {
    Subspace acc = L.zero_space();
    for (const Subspace& a : minimal_ideals(L, m, b, seed)) acc = sum(acc, a);
    return acc;
}

Subspace monolith(const LieAlgebra& L, min_ideal_method m, const EnumBudget& b,
                  std::uint64_t seed) {
    auto mins = minimal_ideals(L, m, b, seed);
    if (mins.size() != 1)
        throw not_monolithic("algebra has " + std::to_string(mins.size()) + " minimal ideals");
    return mins.front();
}

Subspace frattini(const LieAlgebra& L, phi_method m, const EnumBudget& b) {
    if (m == phi_method::structural)
        throw method_inapplicable(
            "only the phi-free decision is available structurally; the full Frattini ideal "
            "needs the oracle");
    return oracle_frattini(L, b);
}

bool strongly_solvable(const LieAlgebra& L) {
    Subspace l2 = bracket_spaces(L, L.full_space(), L.full_space());
    return is_nilpotent_subalgebra(L, l2);
}

bool is_phi_free(const LieAlgebra& L, phi_method m, const EnumBudget& b,
                 std::optional<bool> known_A) {
    if (m == phi_method::oracle) return oracle_frattini(L, b).is_zero();
    // structural equivalences, licensed on A-algebras only
    bool a_alg;
    if (known_A.has_value()) {
        a_alg = *known_A;
    } else if (L.field().is_finite() && fpk::packable(L.field())) {
        a_alg = oracle_is_A(L, b).is_A;
    } else {
        throw method_inapplicable("structural phi-free check needs an A-property certificate");
    }
    if (!a_alg || !is_solvable(L))
        throw method_inapplicable("structural phi-free routes require a solvable A-algebra");
    Subspace l2 = bracket_spaces(L, L.full_space(), L.full_space());
    if (strongly_solvable(L)) {
        // phi-free iff L^2 <= Asoc
        return abelian_socle(L, min_ideal_method::auto_pick, b).contains(l2);
    }
    auto mins = minimal_ideals(L, min_ideal_method::auto_pick, b);
    if (mins.size() == 1) {
        // monolithic: phi-free iff W = N
        Subspace w = mins.front();
        Subspace n = nilradical(L, nilradical_method::auto_pick, b);
        return w == n;
    }
    throw method_inapplicable(
        "structural phi-free routes cover strongly solvable or monolithic A-algebras");
}

StructureReport structure_report(const LieAlgebra& L, const EnumBudget& b, std::uint64_t seed) {
    StructureReport r;
    r.solvable = is_solvable(L);
    if (r.solvable) r.der_length = derived_length(L);
    r.centre = center(L);
    r.strongly_solv = strongly_solvable(L);

    try {
        std::string tag;
        r.nilrad.value = nilradical(L, nilradical_method::auto_pick, b, &tag);
        r.nilrad.tag = tag;
    } catch (const error& e) {
        r.nilrad.tag = e.what();
    }

    try {
        std::string mtag;
        r.min_ideals.value = minimal_ideals(L, min_ideal_method::auto_pick, b, seed, &mtag);
        r.min_ideals.tag = mtag;
        Subspace acc = L.zero_space();
        for (const Subspace& a : *r.min_ideals.value) acc = sum(acc, a);
        r.asoc.value = acc;
        r.asoc.tag = r.min_ideals.tag;
        if (r.min_ideals.value->size() == 1) {
            r.mono.value = r.min_ideals.value->front();
            r.mono.tag = r.min_ideals.tag;
        } else {
            r.mono.tag = "absent: " + std::to_string(r.min_ideals.value->size()) +
                         " minimal ideals";
        }
    } catch (const error& e) {
        r.min_ideals.tag = e.what();
        r.asoc.tag = e.what();
        r.mono.tag = e.what();
    }

    try {
        r.phi.value = frattini(L, phi_method::oracle, b);
        r.phi.tag = "oracle";
        r.phi_free.value = r.phi.value->is_zero();
        r.phi_free.tag = "oracle";
    } catch (const error& e) {
        r.phi.tag = e.what();
        r.phi_free.tag = e.what();
    }
    return r;
}

}  // namespace solvlie
