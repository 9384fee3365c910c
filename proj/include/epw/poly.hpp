#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epw/matrix.hpp"
#include "epw/scalar.hpp"

namespace epw {

using Exponent = std::vector<int>;

/// Graded-lexicographic order: total degree first, then lex with x0 > x1 > ...
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial with rational coefficients. Terms are kept in a map
/// ordered by GrlexLess, so the leading term is the last entry.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    static MultiPoly monomial(const Exponent& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    const Exponent& leading_exponent() const;
    const Rational& leading_coeff() const;

    Rational evaluate(std::span<const Rational> x) const;
    std::uint32_t evaluate_mod(std::span<const std::uint32_t> x, const PrimeField& f) const;

    MultiPoly homogeneous_part(int d) const;
    MultiPoly monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    MultiPoly primitive() const;

    std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
    friend MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_vars(const MultiPoly& o) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& f, int e);

/// All exponents of total degree d in n variables, grlex descending.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

/// f(M y): M is n x k, the result lives in k variables.
MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Rational>& m);

/// a = c b for some nonzero c (both zero counts as proportional).
bool proportional(const MultiPoly& a, const MultiPoly& b);

// ---------------------------------------------------------------------------
// Interpolation. Nodes are the simplex lattice {(1, a) : a in N^{n-1}, |a| <= d}
// in the chart x0 = 1, exactly C(d+n-1, n-1) points. Values are turned into
// multivariate forward differences and then into monomial coefficients.

using Evaluator = std::function<Rational(std::span<const Rational>)>;
using ModEvaluator = std::function<std::uint32_t(std::span<const std::uint32_t>, const PrimeField&)>;

std::vector<Exponent> interpolation_nodes(std::size_t n, int d);

/// Homogeneous degree-d polynomial in n variables through the evaluator;
/// InconsistentEvaluations if held-out points disagree.
MultiPoly interpolate_homogeneous(const Evaluator& f, int d, std::size_t n, unsigned threads = 1,
                                  std::uint64_t seed = 1);

/// Same over F_p (requires p > d); coefficients aligned with monomials_of_degree(n, d).
std::vector<std::uint32_t> interpolate_homogeneous_modp(const ModEvaluator& f, int d, std::size_t n,
                                                        const PrimeField& field, unsigned threads = 1,
                                                        std::uint64_t seed = 1);

struct MultiprimeOptions {
    unsigned threads = 1;
    std::size_t max_primes = 400;
    /// coefficients are known to be integers: lift symmetrically instead of
    /// rational reconstruction (half the primes)
    bool integral = false;
    std::uint64_t seed = 1;
    /// exact evaluator for a final check at random rational points
    const Evaluator* exact_check = nullptr;
};

struct MultiprimeResult {
    MultiPoly poly;
    std::vector<std::uint32_t> primes;
};

/// Interpolates modulo successive large primes and lifts by CRT plus rational
/// reconstruction, stopping once the lift is unchanged by one further prime.
MultiprimeResult interpolate_homogeneous_multiprime(const ModEvaluator& f, int d, std::size_t n,
                                                    const MultiprimeOptions& options = {});

// ---------------------------------------------------------------------------

/// q with f = q g; NotDivisible otherwise.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Graded parts g_0..g_d of w -> f(v0 + sum w_j chart_j); the chart rows
/// must complement v0 (BadChart).
std::vector<MultiPoly> taylor_parts(const MultiPoly& f, std::span<const Rational> v0, const Matrix<Rational>& chart);

struct TangentCone {
    int multiplicity = 0;
    MultiPoly lowest;
    std::optional<std::size_t> quadratic_rank;  // set when multiplicity == 2
};

/// NotOnHypersurface if f(v0) != 0; ZeroInput if f vanishes on the chart.
TangentCone tangent_cone(const MultiPoly& f, std::span<const Rational> v0, const Matrix<Rational>& chart);

/// Symmetric matrix of a quadratic form (off-diagonal entries halved).
Matrix<Rational> quadratic_form_matrix(const MultiPoly& q);

/// Monic gcd over Q of dense univariate coefficient vectors (index = degree).
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b);

/// gcd normalized to leading coefficient 1 in grlex.
MultiPoly gcd_multivariate(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed = 7);

}  // namespace epw
