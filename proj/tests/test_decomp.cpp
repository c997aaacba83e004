#include <doctest.h>

#include "solvlie/decomp.hpp"
#include "solvlie/generators.hpp"
#include "solvlie/oracle.hpp"

using namespace solvlie;

TEST_SUITE_BEGIN("decomp");

namespace {
Vec basis_vec(const FieldSpec& f, int n, int i) {
    Vec v = vec_zero(f, n);
    v[i] = Scalar::one(f);
    return v;
}
}  // namespace

TEST_CASE("fitting decomposition of a single element") {
    // abelian ideal span{e1,e2} with b3 acting as diag(0,2) over GF(5)
    auto f = FieldSpec::prime_field(5);
    BracketTable t(f, 3);
    t.set(1, 2, 1, Scalar::from_int(f, 2));  // [e2, b3] = 2 e2
    LieAlgebra L = LieAlgebra::make(t);
    FittingPair fp = fitting_single(L, basis_vec(f, 3, 2));
    CHECK(fp.null_part == Subspace::span(f, 3, {basis_vec(f, 3, 0), basis_vec(f, 3, 2)}));
    CHECK(fp.image_part == Subspace::span(f, 3, {basis_vec(f, 3, 1)}));
    CHECK(fp.null_part.dim() + fp.image_part.dim() == L.dim());

    // nilpotent ad x: everything lands in the null part
    auto q = FieldSpec::rationals();
    LieAlgebra H = heisenberg(q);
    FittingPair hp = fitting_single(H, basis_vec(q, 3, 0));
    CHECK(hp.null_part.is_full());
    CHECK(hp.image_part.is_zero());

    // e acts invertibly on the x-block
    auto f2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(f2);
    FittingPair ep = fitting_single(E, basis_vec(f2, 4, 0));
    Subspace fp_block = Subspace::span(f2, 4, {basis_vec(f2, 4, 2), basis_vec(f2, 4, 3)});
    CHECK(ep.image_part.contains(fp_block));
}

TEST_CASE("fitting decomposition relative to a nilpotent subalgebra") {
    auto f2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(f2);

    FittingPair zero_case = fitting_subalgebra(E, SubalgebraHandle{E.zero_space()});
    CHECK(zero_case.null_part.is_full());
    CHECK(zero_case.image_part.is_zero());

    auto q = FieldSpec::rationals();
    LieAlgebra H = heisenberg(q);
    FittingPair whole = fitting_subalgebra(H, SubalgebraHandle{H.full_space()});
    CHECK(whole.null_part.is_full());
    CHECK(whole.image_part.is_zero());

    // the distinguished nilpotent subalgebra span{f, x1}
    Subspace u = Subspace::span(f2, 4, {basis_vec(f2, 4, 1), basis_vec(f2, 4, 2)});
    FittingPair fp = fitting_subalgebra(E, certify_subalgebra(E, u));
    CHECK(fp.null_part.dim() + fp.image_part.dim() == E.dim());
    CHECK(intersect(fp.null_part, fp.image_part).is_zero());
    // stabilized image: L1 = [L1, C]
    CHECK(bracket_spaces(E, fp.image_part, u) == fp.image_part);

    CHECK_THROWS_AS(fitting_subalgebra(E, SubalgebraHandle{E.full_space()}),
                    not_nilpotent_action);
}

TEST_CASE("cartan subalgebras") {
    auto q = FieldSpec::rationals();
    LieAlgebra H = heisenberg(q);
    CHECK(cartan_subalgebra(H).space.is_full());  // nilpotent: L is its own Cartan

    LieAlgebra T = two_dim_nonabelian(q);
    SubalgebraHandle c = cartan_subalgebra(T);
    CHECK(c.space == Subspace::span(q, 2, {basis_vec(q, 2, 1)}));

    auto f3 = FieldSpec::prime_field(3);
    SubalgebraHandle c3 = cartan_subalgebra(two_dim_nonabelian(f3));
    CHECK(c3.space == Subspace::span(f3, 2, {basis_vec(f3, 2, 1)}));

    auto f5 = FieldSpec::prime_field(5);
    LieAlgebra E5 = example_2_4(f5);
    SubalgebraHandle c5 = cartan_subalgebra(E5);
    CHECK(c5.space.dim() == 2);
    CHECK(is_nilpotent_subalgebra(E5, c5.space));
    CHECK(normalizer(E5, c5.space) == c5.space);

    // descent over the rationals
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        LieAlgebra L = random_A_candidate(seed, q);
        SubalgebraHandle cc = cartan_subalgebra(L, seed);
        CHECK(is_nilpotent_subalgebra(L, cc.space));
        CHECK(normalizer(L, cc.space) == cc.space);
    }
    // sl2 is not solvable
    BracketTable sl2(q, 3);
    sl2.set(0, 1, 2, Scalar::one(q));                 // [e,f] = h
    sl2.set(2, 0, 0, Scalar::from_int(q, 2));         // [h,e] = 2e
    sl2.set(2, 1, 1, Scalar::from_int(q, -2));        // [h,f] = -2f
    CHECK_THROWS_AS(cartan_subalgebra(LieAlgebra::make(sl2)), not_solvable);
}

TEST_CASE("cartan of a strongly solvable A-algebra complements the derived algebra") {
    auto f3 = FieldSpec::prime_field(3);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        LieAlgebra L = random_A_candidate(seed, f3);
        Subspace l2 = derived_term(L, 1);
        Subspace c = cartan_subalgebra(L, seed).space;
        CHECK(intersect(c, l2).is_zero());
        CHECK(sum(c, l2).dim() == L.dim());
    }
}

TEST_CASE("metabelian A-algebras: Cartans are exactly the complements of the derived algebra") {
    auto f2 = FieldSpec::prime_field(2);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        LieAlgebra L = random_A_candidate(seed, f2);
        Subspace l2 = derived_term(L, 1);
        for (const auto& h : enum_subalgebras(L)) {
            bool cartan = is_nilpotent_subalgebra(L, h.space) && normalizer(L, h.space) == h.space;
            bool complement =
                intersect(h.space, l2).is_zero() && sum(h.space, l2).dim() == L.dim();
            CHECK(cartan == complement);
        }
    }
}

TEST_CASE("split over the terminal derived term") {
    auto q = FieldSpec::rationals();
    LieAlgebra A = abelian_algebra(q, 3);
    auto [ia, ba] = split_over_terminal_derived(A);
    CHECK(ia.space.is_full());
    CHECK(ba.space.is_zero());

    LieAlgebra T = two_dim_nonabelian(q);
    auto [it, bt] = split_over_terminal_derived(T);
    CHECK(it.space == Subspace::span(q, 2, {basis_vec(q, 2, 0)}));
    CHECK(bt.space == Subspace::span(q, 2, {basis_vec(q, 2, 1)}));

    auto f2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(f2);
    auto [ie, be] = split_over_terminal_derived(E);
    CHECK(ie.space == Subspace::span(f2, 4, {basis_vec(f2, 4, 2), basis_vec(f2, 4, 3)}));
    CHECK(be.space.dim() == 2);
    CHECK(intersect(ie.space, be.space).is_zero());
    CHECK(is_subalgebra(E, be.space));
}

TEST_CASE("triangular decomposition") {
    auto q = FieldSpec::rationals();
    TriangularDecomposition ta = triangular_decomposition(abelian_algebra(q, 2));
    REQUIRE(ta.parts.size() == 1);
    CHECK(ta.parts[0].is_full());
    CHECK(ta.verified);

    TriangularDecomposition tt = triangular_decomposition(two_dim_nonabelian(q));
    REQUIRE(tt.parts.size() == 2);
    CHECK(tt.parts[0] == Subspace::span(q, 2, {basis_vec(q, 2, 0)}));
    CHECK(tt.parts[1] == Subspace::span(q, 2, {basis_vec(q, 2, 1)}));

    auto f2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(f2);
    TriangularDecomposition te = triangular_decomposition(E);
    REQUIRE(te.parts.size() == 3);
    CHECK(te.derived_len == 3);
    CHECK(te.parts[0] == Subspace::span(f2, 4, {basis_vec(f2, 4, 2), basis_vec(f2, 4, 3)}));
    CHECK(te.parts[1].dim() == 1);
    CHECK(te.parts[2].dim() == 1);
    // L^(1) = A_2 (+) A_1
    CHECK(sum(te.parts[0], te.parts[1]) == derived_term(E, 1));

    // negative control: nilpotent non-abelian input must be rejected
    CHECK_THROWS_AS(triangular_decomposition(heisenberg(q)), split_failed);
}

TEST_CASE("ideal decomposition against the triangular parts") {
    auto f2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(f2);
    TriangularDecomposition t = triangular_decomposition(E);

    auto full = ideal_decomposition(E, IdealHandle{E.full_space()}, t);
    REQUIRE(full.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(full[i] == t.parts[i]);

    auto zero = ideal_decomposition(E, IdealHandle{E.zero_space()}, t);
    for (const auto& p : zero) CHECK(p.is_zero());

    Subspace l1 = derived_term(E, 1);
    auto mid = ideal_decomposition(E, certify_ideal(E, l1), t);
    CHECK(mid[0] == t.parts[0]);
    CHECK(mid[1] == t.parts[1]);
    CHECK(mid[2].is_zero());

    // every oracle-enumerated ideal decomposes
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto f3 = FieldSpec::prime_field(3);
        LieAlgebra L = random_A_candidate(seed, f3);
        TriangularDecomposition tl = triangular_decomposition(L, seed);
        for (const auto& k : enum_ideals(L)) CHECK_NOTHROW(ideal_decomposition(L, k, tl));
    }
}

TEST_CASE("the sentinel mutation breaks the decomposition loudly") {
    auto q = FieldSpec::rationals();
    set_mutation(mutation_kind::cor32_complement);
    CHECK_THROWS_AS(triangular_decomposition(two_dim_nonabelian(q)), split_failed);
    set_mutation(mutation_kind::none);
    CHECK_NOTHROW(triangular_decomposition(two_dim_nonabelian(q)));
}

TEST_SUITE_END();
