#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epw/lagrangian.hpp"
#include "epw/poly.hpp"

namespace epw {

/// Coordinates on T_W = (∧³W)^⊥ / ⟨∧³W⟩ (dimension 18).
class ReducedSpace {
public:
    explicit ReducedSpace(const QSubspace& w);

    const QSubspace& w() const { return w_; }
    const std::vector<Rational>& plucker_point() const { return omega_; }
    /// 19 x 20: row 0 is ∧³W, rows 1..18 complete it to a basis of (∧³W)^⊥.
    const Matrix<Rational>& perp_basis() const { return perp_; }
    /// 18 x 18 Gram matrix of the induced symplectic form.
    const Matrix<Rational>& form() const { return form_; }

    /// Class of x in T_W; InvalidArgument unless x ∈ (∧³W)^⊥.
    std::vector<Rational> project(std::span<const Rational> x) const;

private:
    QSubspace w_;
    std::vector<Rational> omega_;
    Matrix<Rational> perp_;
    Matrix<Rational> frame_t_;  // transpose of [perp; z], z off the hyperplane (∧³W)^⊥
    Matrix<Rational> form_;
};

struct CurveEquation {
    bool plane = false;       // C_{W,A} = P(W)
    MultiPoly c;              // degree 6 in x0, x1, x2; empty when plane
    Matrix<Rational> frame;   // 3 x 6 integral basis w0, w1, w2 of W: [x] -> sum x_i w_i
    std::array<int, 2> hyperplanes{};  // coordinate hyperplanes V₀ of the two minors
    std::uint32_t sample_prime = 0;
    std::size_t samples = 0;
    std::size_t samples_on_curve = 0;
};

struct CurveOptions {
    unsigned threads = 1;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
};

/// The sextic {[v] ∈ P(W) : dim(F_v ∩ A) >= 2}. NotAMember unless ∧³W ∈ A;
/// ConstructionDegenerate when no pair of minors validates.
CurveEquation curve_equation(const LagrangianSubspace& a, const QSubspace& w, const CurveOptions& options = {});

/// Degree-9 minor of the 18 x 19 model for the coordinate hyperplane x_h = 0
/// of F^6, in the frame coordinates of W; equals l^3 c with l = x_h restricted to W.
MultiPoly curve_minor(const LagrangianSubspace& a, const ReducedSpace& t, const Matrix<Rational>& frame, int h,
                      unsigned threads = 1);

struct CurveOracleReport {
    std::uint32_t p = 0;
    std::size_t points = 0;
    std::size_t on_curve = 0;  // zeros of c mod p
    std::size_t oracle = 0;    // points with dim(F_v ∩ A) >= 2 mod p
    std::size_t mismatches = 0;
};

/// Exhaustive comparison over P(W)(F_p). BadReduction when the frame or c
/// degenerate mod p, or when the locus mod p is all of P(W) but c is not.
CurveOracleReport curve_oracle_modp(const LagrangianSubspace& a, const CurveEquation& curve, std::uint32_t p);

struct CurveLagrangian {
    LagrangianSubspace a;
    QSubspace w;   // g <e0, e1, e2>
    QSubspace w2;  // g <e2, e3, e4>, meeting W in the line through g e2
};

/// Seeded A ⊃ ∧³W, ∧³W': a graph Lagrangian through e012 and e234 moved by a unimodular g.
CurveLagrangian random_curve_lagrangian(std::uint64_t seed);

/// Frame coordinates of a vector of W.
std::vector<Rational> frame_coordinates(const Matrix<Rational>& frame, std::span<const Rational> v);

// ---------------------------------------------------------------------------
// Plücker quadratic forms at a point v₀ of P(W).

struct PsiFrame {
    std::vector<Rational> v0;  // 6
    Matrix<Rational> w0;       // 2 x 6, W = ⟨v₀⟩ ⊕ W₀
    Matrix<Rational> v0_space; // 5 x 6 basis of V₀; rows 0, 1 are those of w0
};

/// Validates the frame: V₀ ∩ W = W₀ and V₀ complements v₀ (BadFrame).
PsiFrame make_psi_frame(std::span<const Rational> v0, const Matrix<Rational>& w0, const Matrix<Rational>& extra);

/// V₀ = W₀ plus coordinate vectors complementing W.
PsiFrame default_psi_frame(std::span<const Rational> v0, const Matrix<Rational>& w0);

/// v₀, W₀ and V₀ from the columns of a seeded unimodular matrix.
PsiFrame random_psi_frame(std::uint64_t seed);

/// Basis of ∧²V₀ / ∧²W₀: the pairs a_i ∧ a_j (i < j) of the V₀ basis except a₀ ∧ a₁.
std::vector<std::array<int, 2>> psi_pairs();

/// Gram matrix (9 x 9) of (β, β') -> vol(v₀ ∧ w ∧ β ∧ β') on ∧²V₀ / ∧²W₀; w ∈ W (BadFrame otherwise).
Matrix<Rational> psi_form(const PsiFrame& frame, std::span<const Rational> w);

struct RoncisvalleReport {
    std::uint32_t p = 0;
    std::size_t quotient_points = 0;      // |P(∧²V₀/∧²W₀)(F_p)|
    std::size_t common_zeros = 0;         // zeros of ψ_w for w in a basis of W₀
    std::size_t ambient_points = 0;       // |P(∧²V₀)(F_p)|
    std::size_t grassmannian_points = 0;  // decomposable classes among them
    std::size_t projected_points = 0;     // distinct images away from ∧²W₀
    std::size_t outside = 0;              // projected points that are not common zeros
    bool contained = false;
};

/// Over F_p the quadratic form is vol(v₀ ∧ w ∧ β^[2]) with β^[2] = β ∧ β / 2
/// taken with integer coefficients, so that p = 2 is meaningful.
RoncisvalleReport roncisvalle_check(const PsiFrame& frame, std::uint32_t p);

/// ψ^{v₀}_w(β) = vol(v₀ ∧ w ∧ β^[2]) mod p at a class β of ∧²V₀/∧²W₀ (coordinates in psi_pairs order).
std::uint32_t psi_value_modp(const PsiFrame& frame, std::span<const std::uint32_t> w, std::span<const std::uint32_t> beta,
                             const PrimeField& f);

struct LeadingTerm {
    std::size_t k_bar = 0;  // dim(A ∩ F_{v₀}) - 1
    MultiPoly det;          // det(ψ_w restricted to K̄) in the chart variables of W₀, degree k̄
};

/// NotAMember unless ∧³W ∈ A; v₀ and the rows of w0 must span W (BadFrame).
LeadingTerm leading_term(const LagrangianSubspace& a, const QSubspace& w, std::span<const Rational> v0,
                         const Matrix<Rational>& w0);

// ---------------------------------------------------------------------------

struct SingularPoint {
    std::vector<Rational> coords;  // frame coordinates, first nonzero entry 1
    std::size_t n_p = 0;
    int multiplicity = 0;
    bool cusp = false;
    std::optional<std::size_t> quadratic_rank;
};

/// Multiplicity and tangent-cone data of the curve at a point given in frame coordinates.
SingularPoint point_singularity(const MultiPoly& c, std::span<const Rational> coords);

struct SingularityReport {
    std::vector<SingularPoint> points;
    std::array<std::size_t, 4> ell{};  // ell[j - 1] = #{p : n_p = j}
    std::size_t components = 1;        // caller's assumption, not verified
};

/// Points P(W ∩ W') for W' in theta other than W (the plane of the curve's frame).
/// NotACurve for the plane marker; InternalInconsistency when a point
/// violates n_p <= 4, B(W,A) ⊂ sing C, or the multiplicity rules for n_p = 2, 3, 4.
SingularityReport singularity_report(const CurveEquation& curve, std::span<const QSubspace> theta,
                                     std::size_t components = 1);

struct BLocus {
    bool other_plane = false;  // [v] ∈ P(W') for some other member W'
    bool tangent = false;      // dim(A ∩ F_v ∩ S_W) >= 2
    bool member() const { return other_plane || tangent; }
};

BLocus b_locus_member(const LagrangianSubspace& a, const QSubspace& w, std::span<const Rational> v,
                      std::span<const QSubspace> theta);

// ---------------------------------------------------------------------------

struct BoundConstraint {
    std::string name;
    std::string statement;
    bool applies = true;
    bool holds = true;
    bool binding = false;  // the final bound equals this constraint's cap
};

struct BoundAudit {
    std::array<int, 4> ell{};
    int components = 1;
    int plane_cap = 0;  // 1 + l1 + 2 l2 + 3 l3 + 4 l4
    int max_theta = 0;  // smallest applicable cap, never above 20
    std::vector<BoundConstraint> constraints;
    std::string path;   // case of the analysis that applies
};

/// Inequality ledger for given tallies and component count s (an assumption
/// supplied by the caller). InfeasibleInput when l1 + l2 + 3 l3 + 3 l4 > 9 + s;
/// the remaining constraints are reported, not raised. delta is the number of
/// singular conics when s >= 3 (worst case 3 when absent).
BoundAudit bound_audit(int l1, int l2, int l3, int l4, int s, std::optional<int> delta = std::nullopt);

/// Largest max_theta over all tallies satisfying every constraint, for a fixed
/// s (1..6, or every s when absent) and optionally a fixed l3 + l4.
BoundAudit bound_maximize(std::optional<int> s = std::nullopt, std::optional<int> l34 = std::nullopt);

}  // namespace epw
