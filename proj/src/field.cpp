#include "solvlie/field.hpp"

#include <algorithm>
#include <sstream>

namespace solvlie {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin for 64-bit inputs
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 inv_mod_p(u64 a, u64 p) {
    if (a == 0) throw division_by_zero("inverse of zero in GF(p)");
    return powmod(a, p - 2, p);  // p prime
}

// ---- dense polynomials over GF(p), constant-first ----
using poly = std::vector<u64>;

void poly_trim(poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

u64 poly_eval(const poly& f, u64 x, u64 p) {
    u64 acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    return acc;
}

poly poly_mul(const poly& a, const poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    return c;
}

// remainder of a modulo monic-or-not divisor d (d nonzero)
poly poly_rem(poly a, const poly& d, u64 p) {
    poly_trim(a);
    u64 lead_inv = inv_mod_p(d.back(), p);
    while (a.size() >= d.size()) {
        u64 c = mulmod(a.back(), lead_inv, p);
        size_t off = a.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) {
            u64 t = mulmod(c, d[i], p);
            a[off + i] = (a[off + i] + p - t % p) % p;
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// extended gcd in GF(p)[t]: returns (g, s) with s*a = g (mod m), g = gcd(a, m)
std::pair<poly, poly> poly_half_xgcd(poly a, poly m, u64 p) {
    poly s0{1}, s1{};
    poly r0 = std::move(a), r1 = std::move(m);
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        // quotient of r0 by r1
        poly q;
        {
            poly num = r0;
            u64 lead_inv = inv_mod_p(r1.back(), p);
            q.assign(num.size() >= r1.size() ? num.size() - r1.size() + 1 : 0, 0);
            while (num.size() >= r1.size() && !num.empty()) {
                u64 c = mulmod(num.back(), lead_inv, p);
                size_t off = num.size() - r1.size();
                q[off] = c;
                for (size_t i = 0; i < r1.size(); ++i) {
                    u64 t = mulmod(c, r1[i], p);
                    num[off + i] = (num[off + i] + p - t % p) % p;
                }
                poly_trim(num);
            }
            r0 = std::move(num);
        }
        std::swap(r0, r1);  // r0' = r1, r1' = r0 - q*r1 (already in r0)
        poly qs = poly_mul(q, s1, p);
        poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
        poly_trim(s2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {r0, s0};
}

bool poly_is_irreducible(const poly& f, u64 p) {
    // f monic of degree 2..4; exhaustive root scan, plus quadratic
    // trial division in degree 4
    unsigned deg = static_cast<unsigned>(f.size()) - 1;
    for (u64 x = 0; x < p; ++x)
        if (poly_eval(f, x, p) == 0) return false;
    if (deg == 4) {
        for (u64 b = 0; b < p; ++b) {
            for (u64 c = 0; c < p; ++c) {
                poly d{c, b, 1};
                if (poly_rem(f, d, p).empty()) return false;
            }
        }
    }
    return true;
}

struct bundled_poly {
    u64 p;
    unsigned deg;
    std::vector<u64> coeffs;
};

// default minimal polynomials for the small extensions used at desk scale
const bundled_poly k_bundled[] = {
    {2, 2, {1, 1, 1}},        // t^2+t+1
    {2, 3, {1, 1, 0, 1}},     // t^3+t+1
    {2, 4, {1, 1, 0, 0, 1}},  // t^4+t+1
    {3, 2, {1, 0, 1}},        // t^2+1
    {3, 3, {1, 2, 0, 1}},     // t^3+2t+1
    {5, 2, {2, 0, 1}},        // t^2+2
    {5, 3, {2, 1, 0, 1}},     // t^3+t+2
    {7, 2, {1, 0, 1}},        // t^2+1
};

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::rationals() {
    static const auto d = std::make_shared<const data>(data{field_kind::rationals, 0, 1, {}});
    return FieldSpec(d);
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw invalid_field("GF(p): p = " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 62)) throw invalid_field("GF(p): p too large");
    return FieldSpec(std::make_shared<const data>(data{field_kind::prime, p, 1, {}}));
}

FieldSpec FieldSpec::extension_field(std::uint64_t p, unsigned deg) {
    for (const auto& b : k_bundled)
        if (b.p == p && b.deg == deg) return extension_field(p, deg, b.coeffs);
    throw invalid_field("no bundled minimal polynomial for GF(" + std::to_string(p) + "^" +
                        std::to_string(deg) + "); supply one explicitly");
}

FieldSpec FieldSpec::extension_field(std::uint64_t p, unsigned deg,
                                     std::vector<std::uint64_t> min_poly) {
    if (!is_prime_u64(p)) throw invalid_field("GF(p^k): p = " + std::to_string(p) + " is not prime");
    if (deg < 2 || deg > 4)
        throw invalid_field("GF(p^k): extension degree must be in [2,4], got " + std::to_string(deg));
    if (p > 1u << 20) throw invalid_field("GF(p^k): p too large for the irreducibility scan");
    if (min_poly.size() != deg + 1) throw invalid_field("min_poly must have length deg+1");
    for (auto& c : min_poly) c %= p;
    if (min_poly.back() != 1) throw invalid_field("min_poly must be monic");
    if (!poly_is_irreducible(min_poly, p))
        throw invalid_field("min_poly is reducible over GF(" + std::to_string(p) + ")");
    return FieldSpec(std::make_shared<const data>(data{field_kind::extension, p, deg, std::move(min_poly)}));
}

std::uint64_t FieldSpec::order() const {
    switch (data_->kind) {
        case field_kind::rationals: throw infinite_field("Q has no finite order");
        case field_kind::prime: return data_->p;
        case field_kind::extension: {
            u64 q = 1;
            for (unsigned i = 0; i < data_->deg; ++i) q *= data_->p;
            return q;
        }
    }
    throw error("unreachable");
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    if (data_ == o.data_) return true;
    return data_->kind == o.data_->kind && data_->p == o.data_->p && data_->deg == o.data_->deg &&
           data_->min_poly == o.data_->min_poly;
}

std::string FieldSpec::describe() const {
    switch (data_->kind) {
        case field_kind::rationals: return "Q";
        case field_kind::prime: return "GF(" + std::to_string(data_->p) + ")";
        case field_kind::extension:
            return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->deg) + ")";
    }
    return "?";
}

// ------------------------------------------------------------------- Scalar

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw mixed_fields("operands belong to different fields: " + a.field().describe() + " vs " +
                           b.field().describe());
}
}  // namespace

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
    Scalar s;
    s.field_ = f;
    switch (f.kind()) {
        case field_kind::rationals: s.v_ = mpq_class(static_cast<long>(n)); break;
        case field_kind::prime: {
            long long m = n % static_cast<long long>(f.p());
            if (m < 0) m += static_cast<long long>(f.p());
            s.v_ = static_cast<u64>(m);
            break;
        }
        case field_kind::extension: {
            long long m = n % static_cast<long long>(f.p());
            if (m < 0) m += static_cast<long long>(f.p());
            std::vector<u64> c(f.degree(), 0);
            c[0] = static_cast<u64>(m);
            s.v_ = std::move(c);
            break;
        }
    }
    return s;
}

Scalar Scalar::rational(const FieldSpec& f, const mpq_class& q) {
    if (f.kind() != field_kind::rationals) throw invalid_field("rational payload requires Q");
    Scalar s;
    s.field_ = f;
    mpq_class r = q;
    r.canonicalize();
    s.v_ = std::move(r);
    return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind() != field_kind::prime) throw invalid_field("residue payload requires GF(p)");
    Scalar s;
    s.field_ = f;
    s.v_ = r % f.p();
    return s;
}

Scalar Scalar::coeffs(const FieldSpec& f, std::vector<std::uint64_t> c) {
    if (f.kind() != field_kind::extension) throw invalid_field("coefficient payload requires GF(p^k)");
    if (c.size() != f.degree()) throw invalid_field("coefficient vector has wrong length");
    for (auto& x : c) x %= f.p();
    Scalar s;
    s.field_ = f;
    s.v_ = std::move(c);
    return s;
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case field_kind::rationals: return rat() == 0;
        case field_kind::prime: return res() == 0;
        case field_kind::extension:
            return std::all_of(cvec().begin(), cvec().end(), [](u64 c) { return c == 0; });
    }
    return false;
}

bool Scalar::is_one() const { return *this == Scalar::one(field_); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return v_ == o.v_;
}

std::string Scalar::str() const {
    switch (field_.kind()) {
        case field_kind::rationals: return rat().get_str();
        case field_kind::prime: return std::to_string(res());
        case field_kind::extension: {
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < cvec().size(); ++i) os << (i ? "," : "") << cvec()[i];
            os << ")";
            return os.str();
        }
    }
    return "?";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s;
    s = a;
    switch (a.field().kind()) {
        case field_kind::rationals: s.v_ = mpq_class(a.rat() + b.rat()); break;
        case field_kind::prime: s.v_ = (a.res() + b.res()) % a.field().p(); break;
        case field_kind::extension: {
            std::vector<u64> c = a.cvec();
            const u64 p = a.field().p();
            for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.cvec()[i]) % p;
            s.v_ = std::move(c);
            break;
        }
    }
    return s;
}

Scalar operator-(const Scalar& a) {
    Scalar s = a;
    switch (a.field().kind()) {
        case field_kind::rationals: s.v_ = mpq_class(-a.rat()); break;
        case field_kind::prime: {
            const u64 p = a.field().p();
            s.v_ = (p - a.res()) % p;
            break;
        }
        case field_kind::extension: {
            std::vector<u64> c = a.cvec();
            const u64 p = a.field().p();
            for (auto& x : c) x = (p - x) % p;
            s.v_ = std::move(c);
            break;
        }
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s = a;
    switch (a.field().kind()) {
        case field_kind::rationals: s.v_ = mpq_class(a.rat() * b.rat()); break;
        case field_kind::prime: s.v_ = mulmod(a.res(), b.res(), a.field().p()); break;
        case field_kind::extension: {
            const u64 p = a.field().p();
            poly prod = poly_mul(a.cvec(), b.cvec(), p);
            poly r = poly_rem(std::move(prod), a.field().min_poly(), p);
            r.resize(a.field().degree(), 0);
            s.v_ = std::move(r);
            break;
        }
    }
    return s;
}

Scalar inv(const Scalar& a) {
    if (a.is_zero()) throw division_by_zero("inverse of zero in " + a.field().describe());
    Scalar s = a;
    switch (a.field().kind()) {
        case field_kind::rationals:
            return Scalar::rational(a.field(), mpq_class(1) / a.rat());
        case field_kind::prime:
            return Scalar::residue(a.field(), inv_mod_p(a.res(), a.field().p()));
        case field_kind::extension: {
            const u64 p = a.field().p();
            auto [g, cof] = poly_half_xgcd(a.cvec(), a.field().min_poly(), p);
            // gcd is a nonzero constant since min_poly is irreducible
            if (g.size() != 1) throw error("extension inverse: gcd not constant");
            u64 gi = inv_mod_p(g[0], p);
            for (auto& c : cof) c = mulmod(c, gi, p);
            cof = poly_rem(std::move(cof), a.field().min_poly(), p);
            cof.resize(a.field().degree(), 0);
            return Scalar::coeffs(a.field(), std::move(cof));
        }
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inv(b); }

Scalar pow(const Scalar& a, std::uint64_t e) {
    Scalar r = Scalar::one(a.field());
    Scalar base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Scalar pth_root(const Scalar& a) {
    const auto& f = a.field();
    if (f.characteristic() == 0)
        throw not_positive_characteristic("pth_root requires characteristic p > 0");
    if (f.kind() == field_kind::prime) return a;  // Frobenius is the identity on GF(p)
    // inverse Frobenius = Frobenius^(k-1)
    u64 e = 1;
    for (unsigned i = 0; i + 1 < f.degree(); ++i) e *= f.p();
    return pow(a, e);
}

// ------------------------------------------------------------- enumeration

std::uint64_t field_order(const FieldSpec& f) { return f.order(); }

Scalar scalar_from_index(const FieldSpec& f, std::uint64_t idx) {
    switch (f.kind()) {
        case field_kind::rationals: throw infinite_field("cannot index elements of Q");
        case field_kind::prime: return Scalar::residue(f, idx % f.p());
        case field_kind::extension: {
            std::vector<u64> c(f.degree());
            for (unsigned i = f.degree(); i-- > 0;) {
                c[i] = idx % f.p();
                idx /= f.p();
            }
            return Scalar::coeffs(f, std::move(c));
        }
    }
    throw error("unreachable");
}

std::uint64_t scalar_index(const Scalar& a) {
    switch (a.field().kind()) {
        case field_kind::rationals: throw infinite_field("cannot index elements of Q");
        case field_kind::prime: return a.res();
        case field_kind::extension: {
            u64 idx = 0;
            for (u64 c : a.cvec()) idx = idx * a.field().p() + c;
            return idx;
        }
    }
    throw error("unreachable");
}

std::vector<Scalar> enumerate_field(const FieldSpec& f) {
    const u64 q = f.order();  // throws infinite_field over Q
    std::vector<Scalar> out;
    out.reserve(q);
    for (u64 i = 0; i < q; ++i) out.push_back(scalar_from_index(f, i));
    return out;
}

}  // namespace solvlie
