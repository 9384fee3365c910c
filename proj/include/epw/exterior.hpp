#pragma once

// Exterior algebra over F^n, n <= 8.
//
// Basis convention (shared by every module and every file format):
//   * the basis of ∧^k F^n is e_S for k-subsets S = {s_1 < ... < s_k},
//     listed in lexicographic order of the tuple (s_1, ..., s_k);
//     for n = 6, k = 3 this is 012, 013, 014, 015, 023, ..., 345 (20 entries);
//   * e_S ∧ e_T = sign(S, T) e_{S ∪ T} with sign(S, T) = (-1)^#{(s, t) : s > t},
//     and 0 when S ∩ T ≠ ∅;
//   * vol(e_0 ∧ ... ∧ e_5) = 1, so (α, β) is the e_{012345} coefficient of α ∧ β.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "epw/subspace.hpp"

namespace epw {

class WedgeBasis {
public:
    WedgeBasis(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return masks_.size(); }
    std::uint32_t mask(std::size_t i) const { return masks_[i]; }
    /// Index of a k-subset given as a bitmask; -1 if |mask| != k.
    int index(std::uint32_t mask) const { return index_[mask]; }
    std::vector<int> indices(std::size_t i) const;

private:
    int n_, k_;
    std::vector<std::uint32_t> masks_;
    std::vector<int> index_;
};

/// Cached basis table for 0 <= k <= n <= 8.
const WedgeBasis& wedge_basis(int n, int k);

/// (-1)^#{(s, t) in S x T : s > t}; S and T disjoint.
int shuffle_sign(std::uint32_t s, std::uint32_t t);

template <class F>
struct KVector {
    using Element = typename F::Element;
    int n = 0;
    int k = 0;
    std::vector<Element> coords;

    friend bool operator==(const KVector&, const KVector&) = default;
};

template <class F>
using TriVector = KVector<F>;

template <class F>
KVector<F> zero_kvector(const F& f, int n, int k) {
    return {n, k, std::vector<typename F::Element>(wedge_basis(n, k).size(), f.zero())};
}

template <class F>
KVector<F> basis_kvector(const F& f, int n, std::initializer_list<int> indices) {
    std::uint32_t mask = 0;
    for (int i : indices) mask |= 1u << i;
    auto out = zero_kvector(f, n, static_cast<int>(indices.size()));
    int idx = wedge_basis(n, out.k).index(mask);
    if (idx < 0) fail(ErrorCode::InvalidArgument, "repeated basis index");
    out.coords[idx] = f.one();
    return out;
}

template <class F>
KVector<F> vector_as_kvector(const F& f, std::span<const typename F::Element> v) {
    (void)f;
    return {static_cast<int>(v.size()), 1, std::vector<typename F::Element>(v.begin(), v.end())};
}

template <class F>
bool is_zero(const F& f, const KVector<F>& a) {
    for (const auto& x : a.coords)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
KVector<F> add(const F& f, const KVector<F>& a, const KVector<F>& b) {
    if (a.n != b.n || a.k != b.k) fail(ErrorCode::InvalidArgument, "degree mismatch in sum");
    auto out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = f.add(a.coords[i], b.coords[i]);
    return out;
}

template <class F>
KVector<F> scale(const F& f, const typename F::Element& c, KVector<F> a) {
    for (auto& x : a.coords) x = f.mul(c, x);
    return a;
}

/// Graded-anticommutative product in the fixed basis.
template <class F>
KVector<F> wedge(const F& f, const KVector<F>& a, const KVector<F>& b) {
    if (a.n != b.n) fail(ErrorCode::MixedAmbient, "wedge of multivectors over different spaces");
    if (a.k + b.k > a.n) fail(ErrorCode::DegreeOverflow, "wedge degree exceeds ambient dimension");
    const auto& ba = wedge_basis(a.n, a.k);
    const auto& bb = wedge_basis(b.n, b.k);
    const auto& bo = wedge_basis(a.n, a.k + b.k);
    auto out = zero_kvector(f, a.n, a.k + b.k);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (f.is_zero(a.coords[i])) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (f.is_zero(b.coords[j])) continue;
            auto s = ba.mask(i), t = bb.mask(j);
            if (s & t) continue;
            auto term = f.mul(a.coords[i], b.coords[j]);
            auto& slot = out.coords[bo.index(s | t)];
            slot = shuffle_sign(s, t) > 0 ? f.add(slot, term) : f.sub(slot, term);
        }
    }
    return out;
}

/// vol(α ∧ β) on ∧³F⁶.
template <class F>
typename F::Element symplectic_form(const F& f, const KVector<F>& a, const KVector<F>& b) {
    if (a.n != 6 || b.n != 6) fail(ErrorCode::WrongAmbient, "symplectic form needs ambient dimension 6");
    if (a.k != 3 || b.k != 3) fail(ErrorCode::InvalidArgument, "symplectic form pairs trivectors");
    const auto& basis = wedge_basis(6, 3);
    auto acc = f.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.is_zero(a.coords[i])) continue;
        auto s = basis.mask(i);
        int j = basis.index(0x3Fu & ~s);
        auto term = f.mul(a.coords[i], b.coords[j]);
        acc = shuffle_sign(s, 0x3Fu & ~s) > 0 ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

/// 20x20 Gram matrix of the symplectic form on the wedge basis.
template <class F>
Matrix<typename F::Element> symplectic_gram(const F& f) {
    const auto& basis = wedge_basis(6, 3);
    Matrix<typename F::Element> g(20, 20, f.zero());
    for (std::size_t i = 0; i < 20; ++i) {
        auto s = basis.mask(i);
        int j = basis.index(0x3Fu & ~s);
        g(i, j) = shuffle_sign(s, 0x3Fu & ~s) > 0 ? f.one() : f.neg(f.one());
    }
    return g;
}

/// Wedge of the rows of a k x n matrix: the k x k minors in lex order.
template <class F>
KVector<F> wedge_of_rows(const F& f, const Matrix<typename F::Element>& rows) {
    auto acc = vector_as_kvector(f, rows.row(0));
    for (std::size_t r = 1; r < rows.rows(); ++r) acc = wedge(f, acc, vector_as_kvector(f, rows.row(r)));
    return acc;
}

/// Plücker point of a 3-dim subspace: wedge of its canonical basis rows.
template <class F>
KVector<F> plucker(const Subspace<F>& w) {
    if (w.dim() != 3) fail(ErrorCode::WrongDimension, "plucker expects a 3-dimensional subspace");
    return wedge_of_rows(w.field(), w.basis());
}

/// Matrix of v ↦ v ∧ α  (rows: ∧^{k+1} coordinates, columns: coordinates of v).
template <class F>
Matrix<typename F::Element> left_wedge_matrix(const F& f, const KVector<F>& a) {
    const int n = a.n;
    const auto& out_basis = wedge_basis(n, a.k + 1);
    Matrix<typename F::Element> m(out_basis.size(), n, f.zero());
    for (int i = 0; i < n; ++i) {
        std::vector<typename F::Element> e(n, f.zero());
        e[i] = f.one();
        auto col = wedge(f, vector_as_kvector(f, std::span<const typename F::Element>(e)), a);
        for (std::size_t r = 0; r < out_basis.size(); ++r) m(r, i) = col.coords[r];
    }
    return m;
}

/// Matrix of α ↦ v ∧ α on ∧^k (rows: ∧^{k+1} coordinates, columns: ∧^k coordinates).
template <class F>
Matrix<typename F::Element> wedge_with_vector_matrix(const F& f, std::span<const typename F::Element> v, int k) {
    const int n = static_cast<int>(v.size());
    const auto& in_basis = wedge_basis(n, k);
    const auto& out_basis = wedge_basis(n, k + 1);
    Matrix<typename F::Element> m(out_basis.size(), in_basis.size(), f.zero());
    for (std::size_t c = 0; c < in_basis.size(); ++c) {
        auto t = in_basis.mask(c);
        for (int i = 0; i < n; ++i) {
            if (f.is_zero(v[i]) || (t >> i & 1u)) continue;
            std::uint32_t s = 1u << i;
            auto& slot = m(out_basis.index(s | t), c);
            slot = shuffle_sign(s, t) > 0 ? f.add(slot, v[i]) : f.sub(slot, v[i]);
        }
    }
    return m;
}

/// {v : v ∧ α = 0}.
template <class F>
Subspace<F> support(const F& f, const KVector<F>& a) {
    if (is_zero(f, a)) fail(ErrorCode::ZeroInput, "support of the zero multivector");
    if (a.k == a.n) return Subspace<F>(f, static_cast<std::size_t>(a.n)).identity_space();
    auto m = left_wedge_matrix(f, a);
    auto ker = kernel(f, m);
    if (ker.rows() == 0) return Subspace<F>(f, static_cast<std::size_t>(a.n));
    return Subspace<F>(f, std::move(ker));
}

template <class F>
bool proportional(const F& f, std::span<const typename F::Element> a, std::span<const typename F::Element> b) {
    // a and b nonzero and parallel
    std::size_t piv = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.is_zero(a[i])) {
            piv = i;
            break;
        }
    if (piv == a.size() || f.is_zero(b[piv])) return false;
    auto ratio = f.div(b[piv], a[piv]);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.equal(f.mul(ratio, a[i]), b[i])) return false;
    return true;
}

template <class F>
struct Decomposition {
    bool decomposable = false;
    std::optional<Subspace<F>> support;
};

template <class F>
Decomposition<F> is_decomposable(const F& f, const KVector<F>& a) {
    if (a.k != 3) fail(ErrorCode::InvalidArgument, "decomposability test is for trivectors");
    auto s = support(f, a);
    if (s.dim() != 3) return {false, std::nullopt};
    auto p = plucker(s);
    if (!proportional(f, std::span<const typename F::Element>(p.coords), std::span<const typename F::Element>(a.coords)))
        return {false, std::nullopt};
    return {true, s};
}

}  // namespace epw
