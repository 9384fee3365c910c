#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epw/lagrangian.hpp"
#include "epw/poly.hpp"

namespace epw {

/// Integer basis of A reduced mod p; BadReduction if its rank drops.
Matrix<std::uint32_t> integral_basis_modp(const Matrix<Rational>& integral, std::uint32_t p);

/// Row matrix of [basis of A ; v ∧ β_j] over F_p, β_j = e_a ∧ e_b (a < b, a, b != h)
/// in lex order: the 20 x 20 matrix whose determinant defines the degree-10 form.
Matrix<std::uint32_t> epw_matrix_modp(const Matrix<std::uint32_t>& a_basis, std::span<const std::uint32_t> v,
                                      int hyperplane, const PrimeField& f);

/// det [A ; v ∧ ∧²V₀] as a homogeneous degree-10 polynomial, V₀ = {x_h = 0}.
MultiPoly epw_determinant(const LagrangianSubspace& a, int hyperplane = 0, unsigned threads = 1,
                          std::vector<std::uint32_t>* primes_used = nullptr);

struct EpwEquation {
    bool identically_zero = false;
    MultiPoly y;                  // primitive integer sextic, empty when identically zero
    int hyperplane = 0;           // l = x_h
    int check_hyperplane = 1;     // second hyperplane used for the proportionality check
    std::vector<std::uint32_t> primes;  // CRT primes of the accepted determinant
    std::uint32_t sample_prime = 0;
    std::size_t samples = 0;
    std::size_t samples_on_locus = 0;
};

struct EpwOptions {
    unsigned threads = 1;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

/// y_A = det / l^4 with degree, second-hyperplane and mod p sampling checks;
/// ConstructionDegenerate if no hyperplane passes.
EpwEquation epw_equation(const LagrangianSubspace& a, const EpwOptions& options = {});

/// Compares y(v) = 0 with dim(A ∩ F_v) >= 1 at random points mod p; returns
/// (samples on the locus, mismatches).
std::pair<std::size_t, std::size_t> epw_sample_check(const LagrangianSubspace& a, const MultiPoly& y, std::uint32_t p,
                                                     std::size_t samples, std::uint64_t seed);

/// dim(A ∩ F_v) over F_p for a vector mod p.
std::size_t intersection_dim_modp(const PSubspace& a_modp, std::span<const std::uint32_t> v);

struct Multiplicity {
    std::size_t intersection_dim = 0;
    int taylor_order = 0;  // 0 when v is off the hypersurface
};

/// Standard chart at v: the coordinate vectors other than the first nonzero coordinate of v.
Matrix<Rational> standard_chart(std::span<const Rational> v);

Multiplicity epw_multiplicity(const LagrangianSubspace& a, const MultiPoly& y, std::span<const Rational> v);

/// true if no member of Θ_A mod p contains [v] for every listed prime.
bool theta_free_at(const LagrangianSubspace& a, std::span<const Rational> v, std::span<const std::uint32_t> primes,
                   unsigned threads = 1);

/// Span of the Plücker points of i₊([u]) at u_i and u_i + u_j for the rows of
/// a basis of U (identity when empty); SpanDeficient below dimension 10.
LagrangianSubspace build_A_plus(const Matrix<Rational>& u_basis = {});

/// x0 x5 - x1 x4 + x2 x3.
MultiPoly plucker_quadric();

}  // namespace epw
