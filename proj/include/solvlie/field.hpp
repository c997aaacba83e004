#ifndef SOLVLIE_FIELD_HPP
#define SOLVLIE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "solvlie/errors.hpp"

namespace solvlie {

enum class field_kind { rationals, prime, extension };

// Exact field descriptor: Q, GF(p), or GF(p^k) = GF(p)[t]/(min_poly).
// min_poly is monic, constant-first, verified irreducible at construction
// (root/quadratic-divisor scan; extension degree capped at 4).
class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(std::uint64_t p);
    // Uses a bundled minimal polynomial; supported (p,k) include
    // GF(4), GF(8), GF(16), GF(9), GF(27), GF(25).
    static FieldSpec extension_field(std::uint64_t p, unsigned deg);
    static FieldSpec extension_field(std::uint64_t p, unsigned deg,
                                     std::vector<std::uint64_t> min_poly);

    field_kind kind() const { return data_->kind; }
    std::uint64_t characteristic() const { return data_->kind == field_kind::rationals ? 0 : data_->p; }
    std::uint64_t p() const { return data_->p; }
    unsigned degree() const { return data_->deg; }
    const std::vector<std::uint64_t>& min_poly() const { return data_->min_poly; }

    bool is_finite() const { return data_->kind != field_kind::rationals; }
    // number of elements; throws infinite_field over Q
    std::uint64_t order() const;

    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string describe() const;  // "Q", "GF(5)", "GF(2^2)"

private:
    struct data {
        field_kind kind;
        std::uint64_t p = 0;
        unsigned deg = 1;
        std::vector<std::uint64_t> min_poly;  // constant-first, size deg+1
    };
    explicit FieldSpec(std::shared_ptr<const data> d) : data_(std::move(d)) {}
    std::shared_ptr<const data> data_;
};

// Exact field element. Payload is canonical: rationals are reduced with
// positive denominator (mpq invariant), prime-field residues lie in [0,p),
// extension elements are coefficient vectors of length deg, constant-first.
class Scalar {
public:
    Scalar() = default;  // unusable until assigned; kind() of a default Scalar is unspecified
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    // integer n mapped into the field (mod p where applicable)
    static Scalar from_int(const FieldSpec& f, long long n);
    static Scalar rational(const FieldSpec& f, const mpq_class& q);
    static Scalar residue(const FieldSpec& f, std::uint64_t r);           // GF(p)
    static Scalar coeffs(const FieldSpec& f, std::vector<std::uint64_t> c);  // GF(p^k)

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint64_t res() const { return std::get<std::uint64_t>(v_); }
    const std::vector<std::uint64_t>& cvec() const { return std::get<std::vector<std::uint64_t>>(v_); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>> v_ = mpq_class(0);
};

// division; throws division_by_zero
Scalar inv(const Scalar& a);
Scalar operator/(const Scalar& a, const Scalar& b);
// e >= 0
Scalar pow(const Scalar& a, std::uint64_t e);

// Unique b with b^p = a (Frobenius is bijective on finite fields).
// Throws not_positive_characteristic over Q.
Scalar pth_root(const Scalar& a);

// Index <-> element bijection for finite fields, lexicographic on the
// payload (residue value, or coefficient vector read constant-first).
// Index 0 is always zero.
std::uint64_t field_order(const FieldSpec& f);
Scalar scalar_from_index(const FieldSpec& f, std::uint64_t idx);
std::uint64_t scalar_index(const Scalar& a);

// All p^k elements exactly once, zero first, deterministic order.
std::vector<Scalar> enumerate_field(const FieldSpec& f);

}  // namespace solvlie

#endif
