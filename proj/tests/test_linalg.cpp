#include <doctest.h>

#include "solvlie/generators.hpp"
#include "solvlie/linalg.hpp"

using namespace solvlie;

TEST_SUITE_BEGIN("linalg");

namespace {

Vec qvec(const FieldSpec& f, std::initializer_list<long long> vals) {
    Vec v;
    for (auto x : vals) v.push_back(Scalar::from_int(f, x));
    return v;
}

Subspace random_subspace(Rng& rng, const FieldSpec& f, int ambient) {
    int rows = static_cast<int>(rng.below(ambient + 1));
    std::vector<Vec> gens;
    for (int i = 0; i < rows; ++i) {
        Vec v;
        for (int j = 0; j < ambient; ++j) {
            if (f.is_finite())
                v.push_back(scalar_from_index(f, rng.below(field_order(f))));
            else
                v.push_back(Scalar::from_int(f, static_cast<long long>(rng.below(5)) - 2));
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, ambient, gens);
}

}  // namespace

TEST_CASE("rref basics") {
    auto q = FieldSpec::rationals();
    Matrix id = Matrix::identity(q, 2);
    auto r1 = rref(id);
    CHECK(r1.rank == 2);
    CHECK(r1.mat == id);

    Matrix ones(q, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.at(i, j) = Scalar::one(q);
    auto r2 = rref(ones);
    CHECK(r2.rank == 1);
    CHECK(r2.mat.at(0, 0).is_one());
    CHECK(r2.mat.at(0, 1).is_one());
    CHECK(r2.mat.at(1, 0).is_zero());
    CHECK(r2.mat.at(1, 1).is_zero());

    Matrix zero(q, 3, 2);
    CHECK(rref(zero).rank == 0);
}

TEST_CASE("kernels") {
    auto q = FieldSpec::rationals();
    Matrix ones(q, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.at(i, j) = Scalar::one(q);
    Subspace k = kernel(ones);
    CHECK(k.dim() == 1);
    CHECK(k.contains(qvec(q, {1, -1})));

    CHECK(kernel(Matrix::identity(q, 3)).is_zero());
    CHECK(kernel(Matrix(q, 2, 2)).is_full());
    // dim ker + rank = cols
    CHECK(kernel(ones).dim() + rref(ones).rank == ones.cols());
}

TEST_CASE("solve is row-oriented and detects inconsistency") {
    auto q = FieldSpec::rationals();
    Matrix m(q, 2, 2);
    m.at(0, 0) = Scalar::from_int(q, 1);
    m.at(0, 1) = Scalar::from_int(q, 2);
    m.at(1, 0) = Scalar::from_int(q, 1);
    m.at(1, 1) = Scalar::from_int(q, 2);
    auto x = solve(m, qvec(q, {2, 4}));
    REQUIRE(x.has_value());
    CHECK(*x * m == qvec(q, {2, 4}));
    CHECK(!solve(m, qvec(q, {1, 0})).has_value());
}

TEST_CASE("sum and intersection") {
    auto q = FieldSpec::rationals();
    Subspace e1 = Subspace::span(q, 3, {qvec(q, {1, 0, 0})});
    Subspace e2 = Subspace::span(q, 3, {qvec(q, {0, 1, 0})});
    Subspace e12 = Subspace::span(q, 3, {qvec(q, {1, 0, 0}), qvec(q, {0, 1, 0})});
    Subspace e23 = Subspace::span(q, 3, {qvec(q, {0, 1, 0}), qvec(q, {0, 0, 1})});
    CHECK(intersect(e12, e12) == e12);
    CHECK(sum(e1, e2) == e12);
    CHECK(intersect(e12, e23) == e2);
}

TEST_CASE("complement is deterministic and direct") {
    auto q = FieldSpec::rationals();
    Subspace full = Subspace::full(q, 2);
    CHECK(complement(Subspace::zero(q, 2), full) == full);
    Subspace e1 = Subspace::span(q, 2, {qvec(q, {1, 0})});
    Subspace e2 = Subspace::span(q, 2, {qvec(q, {0, 1})});
    CHECK(complement(e1, full) == e2);
    CHECK(complement(e1, e1).is_zero());
    CHECK_THROWS_AS(complement(full, e1), not_contained);
}

TEST_CASE("Grassmann dimension law on random pairs") {
    for (auto f : {FieldSpec::prime_field(2), FieldSpec::prime_field(3), FieldSpec::prime_field(5),
                   FieldSpec::rationals()}) {
        Rng rng(f.is_finite() ? f.p() : 99);
        for (int it = 0; it < 1000; ++it) {
            const int n = 4;
            Subspace u = random_subspace(rng, f, n);
            Subspace v = random_subspace(rng, f, n);
            CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
        }
    }
}

TEST_CASE("containment is consistent with solve against the basis") {
    auto f = FieldSpec::prime_field(3);
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Subspace u = random_subspace(rng, f, 4);
        Vec v;
        for (int j = 0; j < 4; ++j) v.push_back(scalar_from_index(f, rng.below(3)));
        bool in = u.contains(v);
        bool solvable = u.dim() > 0 && solve(u.basis(), v).has_value();
        if (u.dim() == 0) solvable = vec_is_zero(v);
        CHECK(in == solvable);
        if (in) {
            auto c = u.coordinates(v);
            REQUIRE(c.has_value());
            if (u.dim() > 0) CHECK(*c * u.basis() == v);
        }
    }
}

TEST_CASE("outputs are canonical") {
    auto f = FieldSpec::prime_field(5);
    Rng rng(4);
    for (int it = 0; it < 200; ++it) {
        Subspace u = random_subspace(rng, f, 5);
        auto rr = rref(u.basis(), true);
        CHECK(rr.mat == u.basis());
        std::vector<Vec> rows;
        for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
        CHECK(Subspace::span(f, 5, rows) == u);
    }
}

TEST_CASE("char_poly on small known matrices") {
    auto q = FieldSpec::rationals();
    Matrix m(q, 2, 2);
    m.at(0, 1) = Scalar::one(q);
    m.at(1, 0) = Scalar::one(q);
    // x^2 - 1
    auto cp = char_poly(m);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Scalar::from_int(q, -1));
    CHECK(cp[1].is_zero());
    CHECK(cp[2].is_one());

    Matrix d(q, 3, 3);
    for (int i = 0; i < 3; ++i) d.at(i, i) = Scalar::from_int(q, i + 1);
    auto cpd = char_poly(d);  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CHECK(cpd[0] == Scalar::from_int(q, -6));
    CHECK(cpd[1] == Scalar::from_int(q, 11));
    CHECK(cpd[2] == Scalar::from_int(q, -6));
    CHECK(cpd[3].is_one());
}

TEST_SUITE_END();
