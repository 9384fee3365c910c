#include "epw/scalar.hpp"

#include <cctype>

namespace epw {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::NoReconstruction: return "NoReconstruction";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::WrongAmbient: return "WrongAmbient";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::MixedAmbient: return "MixedAmbient";
        case ErrorCode::NotIncident: return "NotIncident";
        case ErrorCode::NotIsotropic: return "NotIsotropic";
        case ErrorCode::NotAMember: return "NotAMember";
        case ErrorCode::InconsistentEvaluations: return "InconsistentEvaluations";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::BadChart: return "BadChart";
        case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
        case ErrorCode::BadHyperplane: return "BadHyperplane";
        case ErrorCode::ConstructionDegenerate: return "ConstructionDegenerate";
        case ErrorCode::SpanDeficient: return "SpanDeficient";
        case ErrorCode::NotACurve: return "NotACurve";
        case ErrorCode::BadFrame: return "BadFrame";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::InfeasibleInput: return "InfeasibleInput";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text)) fail(ErrorCode::ParseError, "bad scalar \"" + std::string(text) + "\"");
        return Rational(mpq_class(to_mpz(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        fail(ErrorCode::ParseError, "bad scalar \"" + std::string(text) + "\"");
    return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t modulus) : p(modulus) {
    if (modulus < 2 || modulus >= (1u << 31) || !is_prime(modulus))
        fail(ErrorCode::InvalidArgument, "modulus must be a prime below 2^31");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero mod p");
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_rational(const Rational& r) const { return reduce_mod_p(r, p); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> large_primes(std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = (1u << 31) - 1; out.size() < count; n -= 2)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::uint32_t reduce_mod_p(const Rational& a, std::uint32_t p) {
    mpz_class num = a.numerator() % p;
    mpz_class den = a.denominator() % p;
    if (den == 0)
        fail(ErrorCode::BadReduction, "p=" + std::to_string(p) + " divides the denominator of " + a.str());
    if (num < 0) num += p;
    PrimeField f;
    f.p = p;
    return f.mul(static_cast<std::uint32_t>(num.get_ui()), f.inv(static_cast<std::uint32_t>(den.get_ui())));
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    if (a.index() != b.index()) fail(ErrorCode::MixedFields, "operands live in different fields");
    if (const auto* x = std::get_if<Rational>(&a)) {
        const auto& y = std::get<Rational>(b);
        switch (op) {
            case ArithOp::Add: return *x + y;
            case ArithOp::Sub: return *x - y;
            case ArithOp::Mul: return *x * y;
            case ArithOp::Div: return *x / y;
        }
    }
    const auto& x = std::get<Fp>(a);
    const auto& y = std::get<Fp>(b);
    if (x.modulus != y.modulus) fail(ErrorCode::MixedFields, "different prime moduli");
    PrimeField f(x.modulus);
    switch (op) {
        case ArithOp::Add: return Fp{f.add(x.residue, y.residue), f.p};
        case ArithOp::Sub: return Fp{f.sub(x.residue, y.residue), f.p};
        case ArithOp::Mul: return Fp{f.mul(x.residue, y.residue), f.p};
        case ArithOp::Div: return Fp{f.div(x.residue, y.residue), f.p};
    }
    fail(ErrorCode::InvalidArgument, "unknown operation");
}

std::optional<Rational> rational_reconstruct(const mpz_class& x, const mpz_class& m,
                                             const mpz_class& bound) {
    // Half-extended Euclid: stop at the first remainder <= bound.
    mpz_class r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(r1, t1);
}

Rational crt_lift(std::span<const Residue> residues, const mpz_class& bound) {
    mpz_class x = 0, m = 1;
    for (const auto& r : residues) {
        mpz_class g;
        mpz_class p = r.modulus;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (g != 1) fail(ErrorCode::InvalidArgument, "moduli must be distinct primes");
        // x' = x + m * ((r - x) * m^{-1} mod p)
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), mpz_class(m % p).get_mpz_t(), p.get_mpz_t());
        mpz_class delta = (mpz_class(r.value) - x) % p;
        if (delta < 0) delta += p;
        delta = delta * minv % p;
        x += m * delta;
        m *= p;
    }
    if (m <= 2 * bound * bound)
        fail(ErrorCode::InvalidArgument, "product of moduli does not exceed 2*bound^2");
    auto r = rational_reconstruct(x, m, bound);
    if (!r) fail(ErrorCode::NoReconstruction, "no rational within the bound matches the residues");
    return *r;
}

void CrtAccumulator::add(std::span<const std::uint32_t> residues, std::uint32_t p) {
    if (residues.size() != values_.size()) fail(ErrorCode::InvalidArgument, "residue count mismatch");
    mpz_class pz = p;
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), mpz_class(modulus_ % pz).get_mpz_t(), pz.get_mpz_t());
    const unsigned long mi = minv.get_ui();
    for (std::size_t i = 0; i < values_.size(); ++i) {
        unsigned long xmodp = mpz_fdiv_ui(values_[i].get_mpz_t(), p);
        std::uint64_t delta = (static_cast<std::uint64_t>(residues[i]) + p - xmodp) % p;
        delta = delta * mi % p;
        values_[i] += modulus_ * static_cast<unsigned long>(delta);
    }
    modulus_ *= pz;
}

std::optional<std::vector<Rational>> CrtAccumulator::reconstruct() const {
    mpz_class bound = sqrt(mpz_class(modulus_ / 2));
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
        auto r = rational_reconstruct(v, modulus_, bound);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

std::vector<Rational> CrtAccumulator::lift_integers() const {
    mpz_class half = modulus_ / 2;
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.emplace_back(mpq_class(v > half ? mpz_class(v - modulus_) : v));
    return out;
}

}  // namespace epw
