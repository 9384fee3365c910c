#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's linear algebra, exterior algebra or polynomial code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "epw/scalar.hpp"

namespace oracle {

using QRow = std::vector<mpq_class>;

inline QRow to_q(const std::vector<epw::Rational>& v) {
    QRow out;
    for (const auto& x : v) out.push_back(x.value());
    return out;
}

inline std::size_t rank_q(std::vector<QRow> m) {
    std::size_t r = 0;
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t r = 0;
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) x %= p;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = powmod(m[r][c], p - 2, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
        }
        ++r;
    }
    return r;
}

/// Sign of a permutation by counting inversions.
inline int parity(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

/// Leibniz expansion.
inline mpq_class det_leibniz(const std::vector<QRow>& m) {
    std::size_t n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class total = 0;
    do {
        mpq_class term = parity(perm);
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Coefficient of e_{c_1} ∧ ... ∧ e_{c_k} (c increasing) in r_1 ∧ ... ∧ r_k: the minor on columns c.
inline mpq_class wedge_coefficient(const std::vector<QRow>& rows, const std::vector<int>& cols) {
    std::vector<QRow> minor;
    for (const auto& r : rows) {
        QRow m;
        for (int c : cols) m.push_back(r[c]);
        minor.push_back(m);
    }
    return det_leibniz(minor);
}

/// All increasing k-subsets of {0..n-1} in lex order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Coordinates of r_1 ∧ ... ∧ r_k in the lex basis of ∧^k F^n.
inline QRow wedge_coords(const std::vector<QRow>& rows) {
    QRow out;
    for (const auto& cols : subsets(static_cast<int>(rows[0].size()), static_cast<int>(rows.size())))
        out.push_back(wedge_coefficient(rows, cols));
    return out;
}

/// The 15 generators v ∧ e_a ∧ e_b of F_v.
inline std::vector<QRow> f_v_generators(const QRow& v) {
    std::vector<QRow> out;
    for (const auto& ab : subsets(6, 2)) {
        QRow ea(6, 0), eb(6, 0);
        ea[ab[0]] = 1;
        eb[ab[1]] = 1;
        out.push_back(wedge_coords({v, ea, eb}));
    }
    return out;
}

/// dim(A ∩ B) = dim A + dim B - dim(A + B).
inline std::size_t intersection_dim(const std::vector<QRow>& a, const std::vector<QRow>& b) {
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_q(a) + rank_q(b) - rank_q(both);
}

/// [n choose k]_q from the product formula.
inline mpz_class gaussian_binomial(int n, int k, unsigned long q) {
    mpz_class num = 1, den = 1, qq = q;
    for (int i = 0; i < k; ++i) {
        mpz_class a, b;
        mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

/// Every nonzero vector of F_p^n (as integers 0..p-1).
inline std::vector<std::vector<std::uint64_t>> all_vectors(int n, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> v(n, 0);
    while (true) {
        int i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
        out.push_back(v);
    }
    return out;
}

/// Projective points of F_p^n: first nonzero coordinate 1.
inline std::vector<std::vector<std::uint64_t>> projective_points(int n, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& v : all_vectors(n, p)) {
        auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
        if (*it == 1) out.push_back(v);
    }
    return out;
}

inline std::uint64_t residue(const mpq_class& x, std::uint64_t p) {
    mpz_class n = x.get_num() % static_cast<unsigned long>(p), d = x.get_den() % static_cast<unsigned long>(p);
    if (n < 0) n += static_cast<unsigned long>(p);
    std::uint64_t nn = n.get_ui(), dd = d.get_ui();
    return nn * powmod(dd, p - 2, p) % p;
}

}  // namespace oracle
