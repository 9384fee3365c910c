#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "epw/errors.hpp"

namespace epw {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
/// Zero is 0/1. Serialized as "n" or "n/d".
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational parse(std::string_view text);
    std::string str() const;

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

private:
    mpq_class q_{0};
};

// ---------------------------------------------------------------------------
// Field policies. Linear algebra and exterior algebra are written against
// these so the same kernels run over Q and over F_p.

struct RationalField {
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long v) const { return Rational(v); }
    Element from_rational(const Rational& r) const { return r; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element div(const Element& a, const Element& b) const { return a / b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
};

/// F_p for prime p < 2^31; products fit in 64 bits.
struct PrimeField {
    using Element = std::uint32_t;

    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t modulus);

    Element zero() const { return 0; }
    Element one() const { return 1 % p; }
    Element from_int(long v) const {
        long r = v % static_cast<long>(p);
        return static_cast<Element>(r < 0 ? r + p : r);
    }
    Element from_rational(const Rational& r) const;
    bool is_zero(Element a) const { return a == 0; }
    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool equal(Element a, Element b) const { return a == b; }
};

// ---------------------------------------------------------------------------

/// Prime-field element carrying its modulus, for the user-facing scalar API.
struct Fp {
    std::uint32_t residue = 0;
    std::uint32_t modulus = 2;
    friend bool operator==(const Fp&, const Fp&) = default;
};

using Scalar = std::variant<Rational, Fp>;

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact field operation; both operands must live in the same field.
Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

bool is_prime(std::uint64_t n);

/// Primes strictly below 2^31, largest first.
std::vector<std::uint32_t> large_primes(std::size_t count);

std::uint32_t reduce_mod_p(const Rational& a, std::uint32_t p);

struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
};

/// Chinese remaindering followed by rational reconstruction with
/// |num|, den <= bound. Requires prod(moduli) > 2 bound^2.
Rational crt_lift(std::span<const Residue> residues, const mpz_class& bound);

/// Rational reconstruction of x mod m with |num|, den <= bound.
std::optional<Rational> rational_reconstruct(const mpz_class& x, const mpz_class& m,
                                             const mpz_class& bound);

/// Incremental CRT over a vector of residues sharing the same modulus per step.
class CrtAccumulator {
public:
    explicit CrtAccumulator(std::size_t size) : values_(size, 0) {}

    void add(std::span<const std::uint32_t> residues, std::uint32_t p);
    const mpz_class& modulus() const { return modulus_; }
    std::size_t size() const { return values_.size(); }

    /// Reconstructs every entry with the largest bound the modulus allows.
    std::optional<std::vector<Rational>> reconstruct() const;
    /// Symmetric integer lift of every entry into (-M/2, M/2].
    std::vector<Rational> lift_integers() const;

private:
    std::vector<mpz_class> values_;
    mpz_class modulus_{1};
};

}  // namespace epw
