#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epw/exterior.hpp"
#include "epw/subspace.hpp"

namespace epw {

/// Ordered list of pairwise distinct 3-dim subspaces of a common ambient space.
class PlaneFamily {
public:
    PlaneFamily() = default;
    PlaneFamily(std::size_t ambient, std::vector<QSubspace> members);

    std::size_t ambient() const { return ambient_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<QSubspace>& members() const { return members_; }
    const QSubspace& operator[](std::size_t i) const { return members_[i]; }

private:
    std::size_t ambient_ = 0;
    std::vector<QSubspace> members_;
};

QSubspace subspace_from_rows(std::size_t ambient, const std::vector<std::vector<long>>& rows);
QSubspace coordinate_subspace(std::size_t ambient, std::initializer_list<int> indices);

/// Projective planes meet iff dim(W ∩ W') >= 1.
template <class F>
bool incident(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_ambient(a, b);
    return intersection_dimension(a, b) >= 1;
}

struct FamilyReport {
    std::size_t size = 0;
    std::size_t ambient = 0;
    std::vector<std::vector<int>> intersection_dims;  // diagonal holds 3
    std::vector<std::vector<bool>> incidence;
    std::size_t incident_pairs = 0;
    std::size_t total_pairs = 0;
    bool all_incident = true;
    bool all_point_intersections = true;
    /// pairs meeting in a line: such a family sits in an infinite one
    std::vector<std::pair<std::size_t, std::size_t>> line_pairs;
    bool not_finitely_completable = false;
    std::size_t span_dim = 0;
};

FamilyReport family_report(const PlaneFamily& family);

/// The seven planes spanned by lines of P²(F₂), ambient 7, v_i = e_i.
PlaneFamily fano_family();

/// Its first four members, inside <v_0, ..., v_5> = F^6.
PlaneFamily fano_four_planes();

/// Labeling [v_i] -> point of P²(F₂) under which members are the lines.
std::array<std::array<int, 3>, 7> fano_f2_labels();

/// Reduction of every member; BadReduction if members collide mod p or a
/// pairwise intersection dimension changes.
std::vector<PSubspace> reduce_family(const PlaneFamily& family, std::uint32_t p);

/// All 3-dim subspaces of F_p^n incident to every member of the family mod p,
/// sorted by RREF basis.
std::vector<PSubspace> enumerate_incident_planes_modp(const PlaneFamily& family, std::uint32_t p,
                                                      unsigned threads = 1);

/// All 2-dim subspaces of F_p^6 meeting every member mod p.
std::vector<PSubspace> enumerate_incident_lines_modp(const PlaneFamily& family, std::uint32_t p,
                                                     unsigned threads = 1);

struct MorinFlags {
    bool common_point = false;    // (1)
    bool witness_plane = false;   // (2), only with a caller-supplied witness
    bool in_four_space = false;   // (3) span is at most 5-dimensional
    bool quadric_ruling = false;  // (4)
    std::optional<Matrix<Rational>> quadric;  // Gram matrix certifying (4)
    bool unknown() const { return !common_point && !witness_plane && !in_four_space && !quadric_ruling; }
};

MorinFlags morin_classify(const PlaneFamily& family, const std::optional<QSubspace>& witness = std::nullopt);

/// Quadrics (symmetric 6x6 Gram matrices) containing every member.
std::vector<Matrix<Rational>> quadrics_through(const PlaneFamily& family);

/// The plane i₊([u]) = P{u ∧ u' : u' ∈ U} inside ∧²U = F⁶ (basis u_a ∧ u_b, a < b, lex).
QSubspace i_plus(std::span<const Rational> u);

enum class GeneratorMode : int {
    CommonPoint = 1,
    WitnessPlane = 2,
    FourSpace = 3,
    QuadricRuling = 4,
    PointSharing = 5,
};

std::string generator_mode_name(GeneratorMode mode);

/// Seeded family of k pairwise incident planes in ambient 6.
PlaneFamily random_incident_family(std::uint64_t seed, int k, GeneratorMode mode);

}  // namespace epw
