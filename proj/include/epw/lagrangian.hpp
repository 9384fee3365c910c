#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epw/exterior.hpp"
#include "epw/planes.hpp"

namespace epw {

template <class F>
bool is_isotropic(const Subspace<F>& s) {
    if (s.ambient() != 20) fail(ErrorCode::WrongAmbient, "isotropy is defined on the 20-dimensional space of trivectors");
    const auto& f = s.field();
    auto gram = symplectic_gram(f);
    auto prod = multiply(f, multiply(f, s.basis(), gram), transpose(s.basis()));
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!f.is_zero(prod(i, j))) return false;
    return true;
}

/// Symplectic orthogonal {x : (b, x) = 0 for all b in s}.
template <class F>
Subspace<F> symplectic_orthogonal(const Subspace<F>& s) {
    const auto& f = s.field();
    if (s.dim() == 0) return s.identity_space();
    return Subspace<F>(f, kernel(f, multiply(f, s.basis(), symplectic_gram(f))));
}

/// 10-dimensional isotropic subspace of the trivectors on Q^6.
class LagrangianSubspace {
public:
    LagrangianSubspace() = default;
    /// Validates dimension 10 (WrongDimension) and isotropy (NotIsotropic).
    explicit LagrangianSubspace(QSubspace space);

    const QSubspace& space() const { return space_; }
    const Matrix<Rational>& basis() const { return space_.basis(); }
    bool contains(std::span<const Rational> v) const { return space_.contains(v); }

    friend bool operator==(const LagrangianSubspace&, const LagrangianSubspace&) = default;

private:
    QSubspace space_;
};

/// Span of the Plücker points of a pairwise incident family in ambient 6.
QSubspace isotropic_span(const PlaneFamily& family);

/// Extends an isotropic B to a Lagrangian. Each step adjoins a vector of
/// B^⊥ outside B: seeded random combinations first (seed != 0), then wedge
/// basis vectors in lex order, then the RREF basis of B^⊥.
LagrangianSubspace lagrangian_complete(const QSubspace& b, std::uint64_t seed = 0);

/// Random Lagrangian from the seeded completion of {0}.
LagrangianSubspace random_lagrangian(std::uint64_t seed);

/// Graph Lagrangian over a coordinate splitting. The ten complementary pairs
/// {I, I^c} with 0 in I are taken in lex order of I; pair P contributes the
/// base vector b_P = e_I (e_{I^c} when flip[P]) and its partner c_P. With
/// t_P = (b_P, c_P) the rows are b_P + sum_Q t_P s(P, Q) c_Q, isotropic
/// exactly when s is symmetric (10 x 10).
LagrangianSubspace graph_lagrangian(const Matrix<Rational>& s, const std::vector<bool>& flip = {});

/// Index of the complementary pair containing the triple `mask`.
std::size_t complementary_pair(std::uint32_t mask);

/// ∧³g acting on trivectors (20 x 20, column I = g e_i1 ∧ g e_i2 ∧ g e_i3).
Matrix<Rational> wedge3_matrix(const Matrix<Rational>& g);

/// g A for g in GL(6); Lagrangians map to Lagrangians.
LagrangianSubspace transform_lagrangian(const LagrangianSubspace& a, const Matrix<Rational>& g);

/// Rows of w moved by g: the subspace g W.
QSubspace transform_subspace(const QSubspace& w, const Matrix<Rational>& g);

struct PointedLagrangian {
    LagrangianSubspace a;
    std::vector<Rational> v0;
};

/// A with dim(A ∩ F_{v₀}) = k for 1 <= k <= 10: a graph over F_{e₀} with a
/// rank 10 - k matrix, moved by a seeded unimodular g (v₀ = g e₀).
PointedLagrangian random_lagrangian_through(std::uint64_t seed, std::size_t k);

/// F_v = {α : v ∧ α = 0}.
LagrangianSubspace F_of(std::span<const Rational> v);

template <class F>
std::size_t intersection_dim(const Subspace<F>& a, const Subspace<F>& b) {
    return intersection_dimension(a, b);
}
inline std::size_t intersection_dim(const LagrangianSubspace& a, const LagrangianSubspace& b) {
    return intersection_dimension(a.space(), b.space());
}

/// Every W in Gr(3, F_p^6) with plucker(W) in A mod p, sorted by RREF basis.
std::vector<PSubspace> theta_enumerate_modp(const QSubspace& a, std::uint32_t p, unsigned threads = 1);

/// Plücker coordinates of a 3 x 6 matrix over F_p.
std::vector<std::uint32_t> plucker_modp(const PrimeField& f, const Matrix<std::uint32_t>& rows);

/// (∧²W) ∧ F^6: the affine tangent space of the Plücker cone at ∧³W.
QSubspace s_w_space(const QSubspace& w);

/// dim(A ∩ S_W) - 1; NotAMember unless plucker(W) in A.
std::size_t theta_tangent_dim(const QSubspace& a, const QSubspace& w);

enum class Verdict { CompleteCertifiedAtPrimes, Incomplete, Inconclusive };

std::string verdict_name(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    std::string detector;  // which test produced the witness, if any
    std::optional<QSubspace> witness;
    FamilyReport report;
    std::optional<std::size_t> isotropic_dim;
    bool spanning_lagrangian = false;
    std::vector<std::size_t> tangent_dims;  // theta_tangent_dim at each member, ambient 6 with a spanning family
    std::vector<std::uint32_t> primes_checked;  // primes where the comparison was carried out
    std::vector<std::uint32_t> bad_primes;
    std::vector<std::pair<std::uint32_t, std::size_t>> enumerated_counts;  // per prime
};

/// Completeness pipeline: witness detectors with exact witnesses, then
/// comparison with the mod p enumeration (direct in ambient 7, through the
/// Lagrangian span in ambient 6).
Certificate completeness_certificate(const PlaneFamily& family, std::span<const std::uint32_t> primes,
                                     std::uint64_t seed = 1, unsigned threads = 1);

}  // namespace epw
