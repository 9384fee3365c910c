#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "epw/matrix.hpp"

namespace epw {

/// Linear subspace of F^n stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are identical.
template <class F>
class Subspace {
public:
    using Element = typename F::Element;

    Subspace() = default;
    Subspace(const F& field, std::size_t ambient) : field_(field), basis_(0, ambient) {}
    Subspace(const F& field, Matrix<Element> generators) : field_(field), basis_(std::move(generators)) {
        pivots_ = rref_in_place(field_, basis_);
    }

    const F& field() const { return field_; }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<Element>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::span<const Element> vector(std::size_t i) const { return basis_.row(i); }

    bool contains(std::span<const Element> v) const {
        if (v.size() != ambient()) fail(ErrorCode::MixedAmbient, "vector length differs from ambient");
        // reduce v against the RREF basis
        std::vector<Element> w(v.begin(), v.end());
        for (std::size_t i = 0; i < dim(); ++i) {
            auto c = w[pivots_[i]];
            if (field_.is_zero(c)) continue;
            for (std::size_t j = 0; j < ambient(); ++j) w[j] = field_.sub(w[j], field_.mul(c, basis_(i, j)));
        }
        return std::all_of(w.begin(), w.end(), [&](const Element& x) { return field_.is_zero(x); });
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.vector(i))) return false;
        return true;
    }

    /// Dot-product annihilator {y : <y, x> = 0 for all x in this}.
    Subspace annihilator() const {
        if (dim() == 0) return identity_space();
        return Subspace(field_, kernel(field_, basis_));
    }

    Subspace identity_space() const {
        Matrix<Element> id(ambient(), ambient(), field_.zero());
        for (std::size_t i = 0; i < ambient(); ++i) id(i, i) = field_.one();
        return Subspace(field_, std::move(id));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    F field_{};
    Matrix<Element> basis_;
    std::vector<std::size_t> pivots_;
};

using QSubspace = Subspace<RationalField>;
using PSubspace = Subspace<PrimeField>;

template <class F>
Subspace<F> span_of(const F& f, std::span<const std::vector<typename F::Element>> vectors, std::size_t ambient) {
    Matrix<typename F::Element> m(0, ambient);
    for (const auto& v : vectors) m.append_row(v);
    return Subspace<F>(f, std::move(m));
}

template <class F>
void check_same_ambient(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient() != b.ambient()) fail(ErrorCode::MixedAmbient, "subspaces live in different ambient spaces");
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_ambient(a, b);
    return Subspace<F>(a.field(), stack(a.field(), a.basis(), b.basis()));
}

/// W ∩ W' as the annihilator of ann(W) + ann(W').
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_ambient(a, b);
    auto dual = sum(a.annihilator(), b.annihilator());
    if (dual.dim() == 0) return a.identity_space();
    return dual.annihilator();
}

template <class F>
std::size_t intersection_dimension(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_ambient(a, b);
    return a.dim() + b.dim() - sum(a, b).dim();
}

/// Lexicographic order on RREF bases; used to sort enumeration output.
inline bool basis_less(const Matrix<std::uint32_t>& a, const Matrix<std::uint32_t>& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row(i), rb = b.row(i);
        auto cmp = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

/// Reduction of a rational subspace S to F_p, taken as (S ∩ Z_(p)^n) ⊗ F_p.
/// Always has the same dimension as S.
PSubspace reduce_subspace(const QSubspace& s, std::uint32_t p);

/// Rational basis with integer, primitive rows spanning the same space.
Matrix<Rational> integral_basis(const QSubspace& s);

/// Z-basis of the lattice s ∩ Z^n; reduces to a basis of s mod every prime.
Matrix<Rational> saturated_basis(const QSubspace& s);

QSubspace from_generators(const Matrix<Rational>& generators);

}  // namespace epw
