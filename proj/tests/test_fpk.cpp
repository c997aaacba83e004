#include <doctest.h>

#include "solvlie/fpkernel.hpp"
#include "solvlie/generators.hpp"

using namespace solvlie;

TEST_SUITE_BEGIN("fpk");

namespace {
Vec random_vec(Rng& rng, const FieldSpec& f, int n) {
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(scalar_from_index(f, rng.below(field_order(f))));
    return v;
}
}  // namespace

TEST_CASE("packed brackets agree with the generic path") {
    for (auto f : {FieldSpec::prime_field(3), FieldSpec::prime_field(5),
                   FieldSpec::extension_field(2, 2)}) {
        LieAlgebra L = example_2_4(FieldSpec::prime_field(f.characteristic()));
        if (f.kind() == field_kind::extension) L = heisenberg(f);
        fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
        Rng rng(17);
        for (int it = 0; it < 300; ++it) {
            Vec x = random_vec(rng, L.field(), L.dim());
            Vec y = random_vec(rng, L.field(), L.dim());
            fpk::PackedVec px = fpk::pack_vec(A, x), py = fpk::pack_vec(A, y), out(L.dim());
            A.bracket(px.data(), py.data(), out.data());
            CHECK(fpk::unpack_vec(A, out.data()) == L.bracket(x, y));
        }
    }
}

TEST_CASE("packed spans mirror generic subspaces") {
    auto f = FieldSpec::prime_field(3);
    LieAlgebra L = example_2_4(f);
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        std::vector<Vec> gens;
        int g = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < g; ++i) gens.push_back(random_vec(rng, f, L.dim()));
        Subspace s = Subspace::span(f, L.dim(), gens);
        fpk::RowSpan r(A.F, A.n);
        for (auto& v : gens) {
            fpk::PackedVec pv = fpk::pack_vec(A, v);
            r.insert(pv.data());
        }
        CHECK(fpk::unpack_span(A, r) == s);
        CHECK(r.rank() == s.dim());
        // membership agrees
        Vec probe = random_vec(rng, f, L.dim());
        fpk::PackedVec pp = fpk::pack_vec(A, probe);
        CHECK(r.contains(pp.data()) == s.contains(probe));
    }
}

TEST_CASE("packed structural predicates agree with generic recomputation") {
    auto f = FieldSpec::prime_field(2);
    LieAlgebra L = example_2_4(f);
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    fpk::SubspaceIndex si = fpk::SubspaceIndex::build(A.F.q, A.n);
    fpk::RowSpan s(A.F, A.n);
    for (std::uint64_t idx = 0; idx < si.total; ++idx) {
        si.decode(idx, s);
        Subspace u = fpk::unpack_span(A, s);
        CHECK(fpk::span_is_subalgebra(A, s) == is_subalgebra(L, u));
        CHECK(fpk::span_is_ideal(A, s) == is_ideal(L, u));
        if (fpk::span_is_subalgebra(A, s)) {
            CHECK(fpk::span_is_abelian(A, s) == is_abelian_subspace(L, u));
            CHECK(fpk::span_is_nilpotent(A, s) == is_nilpotent_subalgebra(L, u));
        }
    }
}

TEST_CASE("subspace enumeration is a bijection") {
    auto f = FieldSpec::prime_field(3);
    LieAlgebra L = heisenberg(f);
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    fpk::SubspaceIndex si = fpk::SubspaceIndex::build(3, 3);
    std::vector<Subspace> seen;
    fpk::RowSpan s(A.F, A.n);
    for (std::uint64_t idx = 0; idx < si.total; ++idx) {
        si.decode(idx, s);
        Subspace u = fpk::unpack_span(A, s);
        CHECK(u.dim() == s.rank());  // decode emits canonical RREF rows
        for (const auto& prev : seen) CHECK(!(prev == u));
        seen.push_back(u);
    }
    // 1 + 13 + 13 + 1 subspaces of F_3^3
    CHECK(si.total == 28);
}

TEST_CASE("fitting_of_ad matches the generic stable kernel and image") {
    auto f = FieldSpec::prime_field(5);
    LieAlgebra L = example_2_4(f);
    fpk::PackedAlgebra A = fpk::PackedAlgebra::build(L);
    Rng rng(23);
    for (int it = 0; it < 50; ++it) {
        Vec x = random_vec(rng, f, L.dim());
        Matrix ad = L.ad_matrix(x);
        Matrix adn = mat_pow(ad, L.dim());
        Subspace null_ref = left_kernel(adn);
        Subspace img_ref = image(adn);
        fpk::PackedVec px = fpk::pack_vec(A, x);
        fpk::RowSpan n0, n1;
        fpk::fitting_of_ad(A, px.data(), n0, n1);
        CHECK(fpk::unpack_span(A, n0) == null_ref);
        CHECK(fpk::unpack_span(A, n1) == img_ref);
    }
}

TEST_CASE("parallel scans equal the serial reference") {
    auto pred = [](std::uint64_t i) { return i % 7 == 3 || i == 12345; };
    for (bool par : {false, true}) {
        fpk::set_parallel_scans(par);
        CHECK(fpk::scan_min_index(100000, pred) == 3);
        auto all = fpk::scan_collect(20000, pred);
        CHECK(all == fpk::scan_collect_serial(20000, pred));
        CHECK(fpk::scan_min_index(2, [](std::uint64_t) { return false; }) == UINT64_MAX);
    }
    fpk::set_parallel_scans(true);
}

TEST_SUITE_END();
