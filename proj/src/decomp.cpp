#include "solvlie/decomp.hpp"

#include <algorithm>

#include "solvlie/fpkernel.hpp"
#include "solvlie/generators.hpp"
#include "solvlie/oracle.hpp"

namespace solvlie {

namespace {
mutation_kind g_mutation = mutation_kind::none;
}

void set_mutation(mutation_kind m) { g_mutation = m; }
mutation_kind current_mutation() { return g_mutation; }

FittingPair fitting_single(const LieAlgebra& L, const Vec& x) {
    Matrix adn = mat_pow(L.ad_matrix(x), L.dim());
    FittingPair fp;
    fp.null_part = left_kernel(adn);
    fp.image_part = image(adn);
    fp.acting = "ad of a single element";
    if (intersect(fp.null_part, fp.image_part).dim() != 0 ||
        sum(fp.null_part, fp.image_part).dim() != L.dim())
        throw error("fitting_single: decomposition failed to be direct");
    return fp;
}

FittingPair fitting_subalgebra(const LieAlgebra& L, const SubalgebraHandle& c) {
    if (!is_nilpotent_subalgebra(L, c.space))
        throw not_nilpotent_action("fitting_subalgebra: acting subalgebra is not nilpotent");
    const int n = L.dim();
    FittingPair fp;
    fp.acting = "ad of a nilpotent subalgebra of dimension " + std::to_string(c.space.dim());
    if (c.space.dim() == 0) {
        fp.null_part = L.full_space();
        fp.image_part = L.zero_space();
        return fp;
    }
    // stable image: descending iterates of [ . , C]
    Subspace img = L.full_space();
    for (;;) {
        Subspace next = bracket_spaces(L, img, c.space);
        if (next == img) break;
        img = next;
    }
    // joint null component: ascending preimages T_{k+1} = {x : [x,C] <= T_k}
    Subspace nul = L.zero_space();
    for (;;) {
        Matrix red(L.field(), n, n);
        for (int i = 0; i < n; ++i) {
            Vec ei = vec_zero(L.field(), n);
            ei[i] = Scalar::one(L.field());
            red.set_row(i, nul.reduce(ei));
        }
        Matrix stacked(L.field(), n, n * c.space.dim());
        for (int k = 0; k < c.space.dim(); ++k) {
            Matrix m = L.ad_matrix(c.space.basis_row(k)) * red;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) stacked.at(i, k * n + j) = m.at(i, j);
        }
        Subspace next = left_kernel(stacked);
        if (next == nul) break;
        nul = next;
    }
    fp.null_part = nul;
    fp.image_part = img;
    if (intersect(nul, img).dim() != 0 || sum(nul, img).dim() != n)
        throw not_nilpotent_action("fitting_subalgebra: L0 + L1 is not a direct decomposition");
    // both components are invariant under the acting set
    if (!nul.contains(bracket_spaces(L, nul, c.space)) ||
        !img.contains(bracket_spaces(L, img, c.space)))
        throw not_nilpotent_action("fitting_subalgebra: components are not invariant");
    return fp;
}

namespace {

// Engel subalgebra of a single element, generically
Subspace engel_of(const LieAlgebra& L, const Vec& x) {
    return left_kernel(mat_pow(L.ad_matrix(x), L.dim()));
}

bool is_cartan(const LieAlgebra& L, const Subspace& u) {
    return is_subalgebra(L, u) && is_nilpotent_subalgebra(L, u) && normalizer(L, u) == u;
}

std::optional<Subspace> cartan_by_scan(const LieAlgebra& L) {
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    const std::uint64_t total = fpk::vector_space_size(A.F.q, A.n);
    auto engel_nilpotent = [&](std::uint64_t idx) {
        if (idx == 0) return false;
        std::vector<std::uint32_t> x(A.n);
        fpk::vector_from_index(idx, A.F.q, A.n, x.data());
        fpk::RowSpan nul, img;
        fpk::fitting_of_ad(A, x.data(), nul, img);
        return fpk::span_is_subalgebra(A, nul) && fpk::span_is_nilpotent(A, nul);
    };
    std::uint64_t hit = fpk::scan_min_index(total, engel_nilpotent);
    if (hit == UINT64_MAX) return std::nullopt;
    std::vector<std::uint32_t> x(A.n);
    fpk::vector_from_index(hit, A.F.q, A.n, x.data());
    fpk::RowSpan nul, img;
    fpk::fitting_of_ad(A, x.data(), nul, img);
    return fpk::unpack_span(A, nul);
}

std::optional<Subspace> cartan_by_descent(const LieAlgebra& L, std::uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xa4093822299f31d0ull);
    // attempt 0 walks the basis vectors in order, so small canonical inputs
    // get canonical answers; later attempts draw random elements
    for (int attempt = 0; attempt < 32; ++attempt) {
        LieAlgebra cur = L;
        Matrix emb = Matrix::identity(L.field(), L.dim());
        for (int depth = 0; depth <= L.dim(); ++depth) {
            if (is_nilpotent(cur)) {
                Subspace cand = embed_subspace(cur.full_space(), emb);
                if (is_cartan(L, cand)) return cand;
                break;  // nilpotent but not self-normalizing: bad descent, retry
            }
            std::optional<Subspace> shrunk;
            if (attempt == 0) {
                for (int i = 0; i < cur.dim() && !shrunk; ++i) {
                    Vec x = vec_zero(cur.field(), cur.dim());
                    x[i] = Scalar::one(cur.field());
                    Subspace e = engel_of(cur, x);
                    if (e.dim() < cur.dim() && is_subalgebra(cur, e)) shrunk = e;
                }
                if (!shrunk) break;  // deterministic pass stalled
            } else {
                Vec x;
                for (int i = 0; i < cur.dim(); ++i) {
                    if (cur.field().is_finite())
                        x.push_back(
                            scalar_from_index(cur.field(), rng.below(field_order(cur.field()))));
                    else
                        x.push_back(Scalar::from_int(cur.field(),
                                                     static_cast<long long>(rng.below(19)) - 9));
                }
                Subspace e = engel_of(cur, x);
                if (e.dim() == cur.dim()) continue;  // unlucky element, stay and retry
                if (!is_subalgebra(cur, e)) break;
                shrunk = e;
            }
            InducedAlgebra ind = induced_algebra(cur, SubalgebraHandle{*shrunk});
            emb = ind.embedding * emb;
            cur = ind.alg;
        }
    }
    return std::nullopt;
}

std::optional<Subspace> cartan_by_lattice(const LieAlgebra& L) {
    EnumBudget b;
    try {
        auto subs = enum_subalgebras(L, b);
        for (const auto& h : subs)
            if (is_cartan(L, h.space)) return h.space;
    } catch (const budget_exceeded&) {
        return std::nullopt;
    }
    return std::nullopt;
}

constexpr std::uint64_t kScanCap = 1ull << 22;

}  // namespace

SubalgebraHandle cartan_subalgebra(const LieAlgebra& L, std::uint64_t seed) {
    if (!is_solvable(L)) throw not_solvable("cartan_subalgebra requires a solvable algebra");
    if (is_nilpotent(L)) return SubalgebraHandle{L.full_space()};

    std::optional<Subspace> cand;
    if (L.field().is_finite() && fpk::packable(L.field()) &&
        fpk::vector_space_size(static_cast<std::uint32_t>(L.field().order()), L.dim()) <= kScanCap)
        cand = cartan_by_scan(L);
    if (!cand) cand = cartan_by_descent(L, seed);
    if (!cand && L.field().is_finite()) cand = cartan_by_lattice(L);
    if (!cand)
        throw field_too_small(
            "cartan_subalgebra: the element scan and descent both stalled; "
            "retry over an extension field",
            2);
    if (!is_cartan(L, *cand))
        throw verification_failed("cartan_subalgebra: candidate failed the re-check");
    return SubalgebraHandle{*cand};
}

std::pair<IdealHandle, SubalgebraHandle> split_over_terminal_derived(const LieAlgebra& L,
                                                                     std::uint64_t seed) {
    SeriesChain ds = derived_series(L);
    if (!ds.reaches_zero()) throw not_solvable("split requires a solvable algebra");
    const int len = static_cast<int>(ds.terms.size()) - 1;  // derived length
    if (len <= 1) {
        // abelian: L = L (+) 0
        return {IdealHandle{L.full_space()}, SubalgebraHandle{L.zero_space()}};
    }
    const int n = len - 1;  // terminal nonzero term is L^(n)
    const Subspace& terminal = ds.terms[n];
    // Cartan subalgebra of L^(n-1), taken inside the induced algebra
    InducedAlgebra prev = induced_algebra(L, certify_subalgebra(L, ds.terms[n - 1]));
    SubalgebraHandle cartan_prev = cartan_subalgebra(prev.alg, seed);
    Subspace c_in_L = embed_subspace(cartan_prev.space, prev.embedding);
    FittingPair fp = fitting_subalgebra(L, certify_subalgebra(L, c_in_L));

    Subspace b = fp.null_part;
    if (g_mutation == mutation_kind::cor32_complement && b.dim() > 0) {
        // sentinel: drop the last basis vector of the complement
        std::vector<Vec> rows;
        for (int i = 0; i + 1 < b.dim(); ++i) rows.push_back(b.basis_row(i));
        b = Subspace::span(L.field(), L.dim(), rows);
    }

    if (intersect(terminal, b).dim() != 0 || sum(terminal, b).dim() != L.dim())
        throw split_failed("split_over_terminal_derived: L != L^(n) (+) B");
    if (!is_subalgebra(L, b))
        throw split_failed("split_over_terminal_derived: complement is not a subalgebra");
    return {IdealHandle{terminal}, SubalgebraHandle{b}};
}

TriangularDecomposition triangular_decomposition(const LieAlgebra& L, std::uint64_t seed) {
    SeriesChain ds = derived_series(L);
    if (!ds.reaches_zero()) throw not_solvable("triangular decomposition requires solvability");
    TriangularDecomposition t;
    t.derived_len = static_cast<int>(ds.terms.size()) - 1;

    LieAlgebra cur = L;
    Matrix emb = Matrix::identity(L.field(), L.dim());
    while (derived_length(cur).value() >= 2) {
        auto [a, bsub] = split_over_terminal_derived(cur, seed);
        t.parts.push_back(embed_subspace(a.space, emb));
        t.complements.push_back(embed_subspace(bsub.space, emb));
        InducedAlgebra ind = induced_algebra(cur, bsub);
        emb = ind.embedding * emb;
        cur = ind.alg;
    }
    t.parts.push_back(embed_subspace(cur.full_space(), emb));  // A_0

    // postconditions: abelian parts, partial sums realize the derived series
    if (static_cast<int>(t.parts.size()) != std::max(t.derived_len, 1))
        throw split_failed("triangular decomposition: wrong number of parts");
    int total = 0;
    for (const auto& a : t.parts) {
        if (!is_abelian_subspace(L, a))
            throw split_failed("triangular decomposition: a part is not abelian");
        total += a.dim();
    }
    if (total != L.dim()) throw split_failed("triangular decomposition: parts do not fill L");
    Subspace acc = L.zero_space();
    for (int i = 0; i < static_cast<int>(t.parts.size()); ++i) {
        int expected_dim = acc.dim() + t.parts[i].dim();
        acc = sum(acc, t.parts[i]);
        if (acc.dim() != expected_dim)
            throw split_failed("triangular decomposition: parts overlap");
        // partial sum A_n + ... + A_i equals L^(i); parts[i] carries A_{n-i}
        int series_idx = t.derived_len - 1 - i;
        if (series_idx >= 0 && series_idx < static_cast<int>(ds.terms.size())) {
            if (!(acc == ds.terms[series_idx]))
                throw split_failed("triangular decomposition: partial sums miss the derived series");
        }
    }
    t.verified = true;
    return t;
}

std::vector<Subspace> ideal_decomposition(const LieAlgebra& L, const IdealHandle& k,
                                          const TriangularDecomposition& t) {
    std::vector<Subspace> pieces;
    int total = 0;
    Subspace acc = L.zero_space();
    for (const auto& a : t.parts) {
        Subspace piece = intersect(k.space, a);
        total += piece.dim();
        acc = sum(acc, piece);
        pieces.push_back(std::move(piece));
    }
    if (total != k.space.dim() || !(acc == k.space))
        throw decomposition_mismatch(
            "ideal_decomposition: intersections do not rebuild the ideal");
    return pieces;
}

}  // namespace solvlie
