#include <doctest.h>

#include "solvlie/field.hpp"
#include "solvlie/generators.hpp"

using namespace solvlie;

TEST_SUITE_BEGIN("field");

TEST_CASE("prime field arithmetic") {
    auto gf5 = FieldSpec::prime_field(5);
    CHECK(Scalar::residue(gf5, 2) + Scalar::residue(gf5, 4) == Scalar::residue(gf5, 1));
    auto gf7 = FieldSpec::prime_field(7);
    CHECK(inv(Scalar::residue(gf7, 3)) == Scalar::residue(gf7, 5));
    CHECK(Scalar::residue(gf7, 3) * Scalar::residue(gf7, 5) == Scalar::one(gf7));
}

TEST_CASE("rationals stay reduced with positive denominator") {
    auto q = FieldSpec::rationals();
    Scalar half = Scalar::rational(q, mpq_class(1, 2));
    Scalar third = Scalar::rational(q, mpq_class(1, 3));
    Scalar s = half + third;
    CHECK(s == Scalar::rational(q, mpq_class(5, 6)));
    CHECK(s.rat().get_num() == 5);
    CHECK(s.rat().get_den() == 6);
    Scalar t = Scalar::rational(q, mpq_class(2, -4));
    CHECK(t.rat().get_den() == 2);
    CHECK(t.rat().get_num() == -1);
    CHECK((half * Scalar::from_int(q, 2)).str() == "1");
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(FieldSpec::prime_field(6), invalid_field);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), invalid_field);
    // t^2+1 = (t+1)^2 over GF(2)
    CHECK_THROWS_AS(FieldSpec::extension_field(2, 2, {1, 0, 1}), invalid_field);
    CHECK_THROWS_AS(FieldSpec::extension_field(2, 5), invalid_field);
    CHECK_NOTHROW(FieldSpec::extension_field(2, 2, {1, 1, 1}));
}

TEST_CASE("mixed fields and zero division are loud") {
    auto gf2 = FieldSpec::prime_field(2);
    auto gf3 = FieldSpec::prime_field(3);
    CHECK_THROWS_AS(Scalar::one(gf2) + Scalar::one(gf3), mixed_fields);
    CHECK_THROWS_AS(inv(Scalar::zero(gf3)), division_by_zero);
}

TEST_CASE("enumeration order") {
    auto gf2 = FieldSpec::prime_field(2);
    auto e2 = enumerate_field(gf2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == Scalar::zero(gf2));
    CHECK(e2[1] == Scalar::one(gf2));

    auto gf3 = FieldSpec::prime_field(3);
    auto e3 = enumerate_field(gf3);
    REQUIRE(e3.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(e3[i] == Scalar::residue(gf3, i));

    auto gf4 = FieldSpec::extension_field(2, 2);
    auto e4 = enumerate_field(gf4);
    REQUIRE(e4.size() == 4);
    CHECK(e4[0].is_zero());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) CHECK(e4[i] != e4[j]);
    CHECK_THROWS_AS(enumerate_field(FieldSpec::rationals()), infinite_field);
}

TEST_CASE("index round trip") {
    for (auto f : {FieldSpec::prime_field(7), FieldSpec::extension_field(3, 2)}) {
        for (std::uint64_t i = 0; i < field_order(f); ++i)
            CHECK(scalar_index(scalar_from_index(f, i)) == i);
    }
}

TEST_CASE("pth roots") {
    auto gf3 = FieldSpec::prime_field(3);
    CHECK(pth_root(Scalar::residue(gf3, 2)) == Scalar::residue(gf3, 2));
    CHECK(pth_root(Scalar::zero(gf3)).is_zero());

    auto gf4 = FieldSpec::extension_field(2, 2);  // GF(2)[t]/(t^2+t+1)
    Scalar t = Scalar::coeffs(gf4, {0, 1});
    // oracle: scan the 4 elements for the square root of t
    Scalar expect = Scalar::zero(gf4);
    bool found = false;
    for (const Scalar& b : enumerate_field(gf4))
        if (b * b == t) {
            expect = b;
            found = true;
        }
    REQUIRE(found);
    CHECK(pth_root(t) == expect);
    CHECK(expect == Scalar::coeffs(gf4, {1, 1}));  // t+1

    CHECK_THROWS_AS(pth_root(Scalar::from_int(FieldSpec::rationals(), 2)),
                    not_positive_characteristic);
}

TEST_CASE("field axioms hold on enumerated elements") {
    for (auto f : {FieldSpec::prime_field(2), FieldSpec::prime_field(5),
                   FieldSpec::extension_field(2, 2), FieldSpec::extension_field(3, 2)}) {
        auto elems = enumerate_field(f);
        for (const auto& a : elems) {
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * inv(a)).is_one());
            for (const auto& b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("rational axioms on sampled values") {
    auto q = FieldSpec::rationals();
    Rng rng(7);
    auto sample = [&] {
        long long num = static_cast<long long>(rng.below(19)) - 9;
        long long den = 1 + static_cast<long long>(rng.below(9));
        return Scalar::rational(q, mpq_class(static_cast<long>(num), static_cast<long>(den)));
    };
    for (int it = 0; it < 500; ++it) {
        Scalar a = sample(), b = sample(), c = sample();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * inv(a)).is_one());
    }
}

TEST_CASE("Frobenius additivity and pth_root inversion in characteristic p") {
    for (auto f : {FieldSpec::extension_field(2, 2), FieldSpec::extension_field(3, 2),
                   FieldSpec::extension_field(2, 3)}) {
        const std::uint64_t p = f.characteristic();
        auto elems = enumerate_field(f);
        for (const auto& a : elems) {
            CHECK(pth_root(pow(a, p)) == a);
            CHECK(pow(pth_root(a), p) == a);
            for (const auto& b : elems) CHECK(pow(a + b, p) == pow(a, p) + pow(b, p));
        }
    }
}

TEST_SUITE_END();
