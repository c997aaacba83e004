#include <doctest.h>

#include "solvlie/generators.hpp"
#include "solvlie/liealg.hpp"

using namespace solvlie;

TEST_SUITE_BEGIN("liealg");

namespace {
Vec basis_vec(const FieldSpec& f, int n, int i) {
    Vec v = vec_zero(f, n);
    v[i] = Scalar::one(f);
    return v;
}
}  // namespace

TEST_CASE("construction validates Jacobi and the alternating law") {
    auto q = FieldSpec::rationals();
    CHECK_NOTHROW(two_dim_nonabelian(q));
    CHECK_NOTHROW(heisenberg(q));

    // [b1,b2]=b3, [b1,b3]=b1, [b2,b3]=0 fails Jacobi on (0,1,2)
    BracketTable t(q, 3);
    t.set(0, 1, 2, Scalar::one(q));
    t.set(0, 2, 0, Scalar::one(q));
    try {
        LieAlgebra::make(t);
        FAIL("expected jacobi_violation");
    } catch (const jacobi_violation& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
        CHECK(e.k == 2);
    }

    BracketTable t2(q, 2);
    CHECK_THROWS_AS(t2.set(0, 0, 1, Scalar::one(q)), alternating_violation);
}

TEST_CASE("ad is the right action") {
    auto q = FieldSpec::rationals();
    LieAlgebra L = two_dim_nonabelian(q);
    Matrix ad_b2 = L.ad_matrix(basis_vec(q, 2, 1));
    // b1 -> [b1,b2] = b1, b2 -> 0
    CHECK(ad_b2.row(0) == basis_vec(q, 2, 0));
    CHECK(vec_is_zero(ad_b2.row(1)));
    CHECK(basis_vec(q, 2, 0) * ad_b2 == L.bracket(basis_vec(q, 2, 0), basis_vec(q, 2, 1)));

    LieAlgebra H = heisenberg(q);
    Matrix ad_x = H.ad_matrix(basis_vec(q, 3, 0));
    // y -> [y,x] = -z, z -> 0
    CHECK(ad_x.row(1) == vec_scale(-Scalar::one(q), basis_vec(q, 3, 2)));
    CHECK(vec_is_zero(ad_x.row(2)));

    CHECK(L.ad_matrix(vec_zero(q, 2)) == Matrix(q, 2, 2));
}

TEST_CASE("bracket_spaces") {
    auto q = FieldSpec::rationals();
    LieAlgebra H = heisenberg(q);
    Subspace l2 = bracket_spaces(H, H.full_space(), H.full_space());
    CHECK(l2 == Subspace::span(q, 3, {basis_vec(q, 3, 2)}));
    CHECK(bracket_spaces(H, H.full_space(), H.zero_space()).is_zero());

    auto gf2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(gf2);
    Subspace fe_fp = Subspace::span(
        gf2, 4, {basis_vec(gf2, 4, 0), basis_vec(gf2, 4, 2), basis_vec(gf2, 4, 3)});
    CHECK(bracket_spaces(E, E.full_space(), E.full_space()) == fe_fp);
}

TEST_CASE("derived and lower central series") {
    auto q = FieldSpec::rationals();
    LieAlgebra A = abelian_algebra(q, 3);
    SeriesChain sa = derived_series(A);
    REQUIRE(sa.terms.size() == 2);
    CHECK(sa.terms[1].is_zero());
    CHECK(derived_length(A) == 1);

    LieAlgebra T = two_dim_nonabelian(q);
    SeriesChain st = derived_series(T);
    REQUIRE(st.terms.size() == 3);
    CHECK(st.terms[1] == Subspace::span(q, 2, {basis_vec(q, 2, 0)}));
    CHECK(st.terms[2].is_zero());
    CHECK(derived_length(T) == 2);
    CHECK(is_solvable(T));
    CHECK(!is_nilpotent(T));

    LieAlgebra H = heisenberg(q);
    CHECK(is_nilpotent(H));
    CHECK(is_solvable(H));

    auto gf2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(gf2);
    SeriesChain se = derived_series(E);
    REQUIRE(se.terms.size() == 4);
    CHECK(se.terms[1] == Subspace::span(gf2, 4, {basis_vec(gf2, 4, 0), basis_vec(gf2, 4, 2),
                                                 basis_vec(gf2, 4, 3)}));
    CHECK(se.terms[2] == Subspace::span(gf2, 4, {basis_vec(gf2, 4, 2), basis_vec(gf2, 4, 3)}));
    CHECK(se.terms[3].is_zero());
    CHECK(derived_length(E) == 3);
    CHECK(!is_nilpotent(E));
    // derived_series[i+1] = [term_i, term_i]
    for (size_t i = 0; i + 1 < se.terms.size(); ++i)
        CHECK(se.terms[i + 1] == bracket_spaces(E, se.terms[i], se.terms[i]));
}

TEST_CASE("nilpotent residual and lower nilpotent series") {
    auto q = FieldSpec::rationals();
    CHECK(nilpotent_residual(heisenberg(q)).is_zero());
    LieAlgebra T = two_dim_nonabelian(q);
    CHECK(nilpotent_residual(T) == Subspace::span(q, 2, {basis_vec(q, 2, 0)}));

    // the two series coincide on this A-algebra
    auto gf2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(gf2);
    SeriesChain dn = lower_nilpotent_series(E);
    SeriesChain dd = derived_series(E);
    REQUIRE(dn.terms.size() == dd.terms.size());
    for (size_t i = 0; i < dn.terms.size(); ++i) CHECK(dn.terms[i] == dd.terms[i]);
}

TEST_CASE("induced and quotient algebras") {
    auto q = FieldSpec::rationals();
    LieAlgebra H = heisenberg(q);
    Subspace z = Subspace::span(q, 3, {basis_vec(q, 3, 2)});
    auto quo = quotient_algebra(H, certify_ideal(H, z));
    CHECK(quo.alg.dim() == 2);
    CHECK(is_abelian(quo.alg));

    auto ind = induced_algebra(H, certify_subalgebra(H, z));
    CHECK(ind.alg.dim() == 1);
    CHECK(is_abelian(ind.alg));

    auto gf2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(gf2);
    Subspace fp = Subspace::span(gf2, 4, {basis_vec(gf2, 4, 2), basis_vec(gf2, 4, 3)});
    auto equo = quotient_algebra(E, certify_ideal(E, fp));
    CHECK(equo.alg.dim() == 2);
    // the quotient is the two-dimensional non-abelian algebra: [q0,q1] = q0
    CHECK(equo.alg.c(0, 1) == basis_vec(gf2, 2, 0));

    CHECK_THROWS_AS(certify_subalgebra(E, Subspace::span(gf2, 4, {basis_vec(gf2, 4, 0),
                                                                  basis_vec(gf2, 4, 2)})),
                    not_closed);
}

TEST_CASE("quotient and induced dimensions round-trip") {
    auto gf3 = FieldSpec::prime_field(3);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        LieAlgebra L = random_solvable(seed, 5, gf3);
        Subspace l2 = derived_term(L, 1);
        IdealHandle ideal{l2};
        auto quo = quotient_algebra(L, ideal);
        auto ind = induced_algebra(L, SubalgebraHandle{l2});
        CHECK(quo.alg.dim() + ind.alg.dim() == L.dim());
    }
}

TEST_CASE("centralizer, center, normalizer") {
    auto q = FieldSpec::rationals();
    CHECK(center(heisenberg(q)) == Subspace::span(q, 3, {basis_vec(q, 3, 2)}));
    CHECK(center(two_dim_nonabelian(q)).is_zero());

    auto gf2 = FieldSpec::prime_field(2);
    LieAlgebra E = example_2_4(gf2);
    Subspace fp = Subspace::span(gf2, 4, {basis_vec(gf2, 4, 2), basis_vec(gf2, 4, 3)});
    CHECK(centralizer(E, fp) == fp);

    // span{f, x1} is self-normalizing in example_2_4
    Subspace u = Subspace::span(gf2, 4, {basis_vec(gf2, 4, 1), basis_vec(gf2, 4, 2)});
    CHECK(normalizer(E, u) == u);
    CHECK(normalizer(E, E.zero_space()).is_full());
    CHECK(is_nilpotent_subalgebra(E, u));
    CHECK(!is_nilpotent_subalgebra(E, E.full_space()));
}

TEST_CASE("direct sums") {
    auto q = FieldSpec::rationals();
    LieAlgebra ab = direct_sum(abelian_algebra(q, 2), abelian_algebra(q, 1));
    CHECK(is_abelian(ab));

    LieAlgebra HplusA = direct_sum(heisenberg(q), abelian_algebra(q, 1));
    CHECK(HplusA.dim() == 4);
    CHECK(center(HplusA).dim() == 2);
    // summands embed as ideals
    Subspace left = Subspace::span(q, 4, {basis_vec(q, 4, 0), basis_vec(q, 4, 1),
                                          basis_vec(q, 4, 2)});
    CHECK(is_ideal(HplusA, left));

    CHECK_THROWS_AS(direct_sum(abelian_algebra(q, 1),
                               abelian_algebra(FieldSpec::prime_field(2), 1)),
                    mixed_fields);
}

TEST_CASE("ad_restricted") {
    auto q = FieldSpec::rationals();
    LieAlgebra T = two_dim_nonabelian(q);
    Subspace l2 = derived_term(T, 1);
    auto m = ad_restricted(T, basis_vec(q, 2, 1), l2);
    REQUIRE(m.has_value());
    CHECK(m->at(0, 0).is_one());
    // not invariant: ad(b1) does not stabilize span{b2}
    Subspace b2 = Subspace::span(q, 2, {basis_vec(q, 2, 1)});
    CHECK(!ad_restricted(T, basis_vec(q, 2, 0), b2).has_value());
}

TEST_SUITE_END();
