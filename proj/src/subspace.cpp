#include "epw/subspace.hpp"

namespace epw {

namespace {

int p_valuation(mpz_class x, std::uint32_t p) {
    if (x == 0) return 1 << 20;
    int v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        x /= p;
        ++v;
    }
    return v;
}

int p_valuation(const Rational& r, std::uint32_t p) {
    if (r.is_zero()) return 1 << 20;
    return p_valuation(r.numerator(), p) - p_valuation(r.denominator(), p);
}

}  // namespace

Matrix<Rational> integral_basis(const QSubspace& s) {
    Matrix<Rational> out(0, s.ambient());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto row = s.vector(i);
        mpz_class lcm = 1, g = 0;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<Rational> scaled;
        for (const auto& x : row) {
            scaled.push_back(x * Rational(lcm, 1));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().numerator().get_mpz_t());
        }
        for (auto& x : scaled) x = x / Rational(g, 1);
        out.append_row(scaled);
    }
    return out;
}

Matrix<Rational> saturated_basis(const QSubspace& s) {
    const std::size_t n = s.ambient();
    if (s.dim() == n) {
        Matrix<Rational> id(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) id(i, i) = Rational(1);
        return id;
    }
    // s ∩ Z^n is the integer kernel of the annihilator; column reduction
    // K U = [H | 0] with U unimodular leaves that kernel in the last columns of U.
    auto ann = integral_basis(s.annihilator());
    const std::size_t m = ann.rows();
    std::vector<std::vector<mpz_class>> k(m, std::vector<mpz_class>(n)), u(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) k[i][j] = ann(i, j).numerator();
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    auto column_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (auto& row : k) row[dst] -= q * row[src];
        for (auto& row : u) row[dst] -= q * row[src];
    };
    auto swap_columns = [&](std::size_t a, std::size_t b) {
        for (auto& row : k) std::swap(row[a], row[b]);
        for (auto& row : u) std::swap(row[a], row[b]);
    };
    std::size_t col = 0;
    for (std::size_t r = 0; r < m && col < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = col; j < n; ++j)
                if (k[r][j] != 0 && (best == n || abs(k[r][j]) < abs(k[r][best]))) best = j;
            if (best == n) break;
            swap_columns(col, best);
            bool done = true;
            for (std::size_t j = col + 1; j < n; ++j) {
                if (k[r][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), k[r][j].get_mpz_t(), k[r][col].get_mpz_t());
                column_op(j, col, q);
                if (k[r][j] != 0) done = false;
            }
            if (done) {
                ++col;
                break;
            }
        }
    }
    Matrix<Rational> out(0, n);
    for (std::size_t j = col; j < n; ++j) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.emplace_back(mpq_class(u[i][j]));
        out.append_row(v);
    }
    if (out.rows() != s.dim()) fail(ErrorCode::InternalInconsistency, "saturation changed the dimension");
    return out;
}

QSubspace from_generators(const Matrix<Rational>& generators) {
    return QSubspace(RationalField{}, generators);
}

PSubspace reduce_subspace(const QSubspace& s, std::uint32_t p) {
    PrimeField fp(p);
    const std::size_t n = s.ambient();
    Matrix<Rational> m = s.basis();
    const std::size_t k = m.rows();
    // Elimination over the local ring Z_(p): pivots must be p-adic units;
    // rows that vanish mod p are divided by p, which saturates the lattice.
    auto normalize_row = [&](std::size_t i) {
        int v = 1 << 20;
        for (std::size_t j = 0; j < n; ++j) v = std::min(v, p_valuation(m(i, j), p));
        if (v == 0) return;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(v < 0 ? -v : v));
        Rational factor = v > 0 ? Rational(1, scale) : Rational(scale, 1);
        for (std::size_t j = 0; j < n; ++j) m(i, j) *= factor;
    };
    std::size_t done = 0;
    while (done < k) {
        for (std::size_t i = done; i < k; ++i) normalize_row(i);
        std::size_t pr = k, pc = n;
        for (std::size_t i = done; i < k && pr == k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p_valuation(m(i, j), p) == 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        m.swap_rows(done, pr);
        auto inv = m(done, pc).inverse();
        for (std::size_t j = 0; j < n; ++j) m(done, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == done || m(i, pc).is_zero()) continue;
            auto factor = m(i, pc);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= factor * m(done, j);
        }
        ++done;
    }
    Matrix<std::uint32_t> red(k, n, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) red(i, j) = reduce_mod_p(m(i, j), p);
    PSubspace out(fp, std::move(red));
    if (out.dim() != k) fail(ErrorCode::InternalInconsistency, "saturated reduction lost rank");
    return out;
}

}  // namespace epw
