#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "epw/matrix.hpp"

namespace epw {

/// Seeded generator for test data and randomized choices. Uses plain modular
/// reduction of mt19937_64 output so sequences are identical across standard
/// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint32_t below(std::uint32_t bound) { return static_cast<std::uint32_t>(gen_() % bound); }

    std::vector<Rational> vector(std::size_t n, long lo = -3, long hi = 3) {
        std::vector<Rational> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(lo, hi));
        return v;
    }
    std::vector<Rational> nonzero_vector(std::size_t n, long lo = -3, long hi = 3) {
        while (true) {
            auto v = vector(n, lo, hi);
            for (const auto& x : v)
                if (!x.is_zero()) return v;
        }
    }
    Matrix<Rational> matrix(std::size_t rows, std::size_t cols, long lo = -3, long hi = 3) {
        Matrix<Rational> m(0, cols);
        for (std::size_t i = 0; i < rows; ++i) m.append_row(vector(cols, lo, hi));
        return m;
    }
    /// Random rows of full rank.
    Matrix<Rational> full_rank(std::size_t rows, std::size_t cols, long lo = -3, long hi = 3) {
        while (true) {
            auto m = matrix(rows, cols, lo, hi);
            if (rank(RationalField{}, m) == rows) return m;
        }
    }

    /// Unit lower times unit upper triangular with entries in [lo, hi]: det 1,
    /// so it stays invertible mod every prime.
    Matrix<Rational> unimodular(std::size_t n, long lo = -2, long hi = 2) {
        Matrix<Rational> l(n, n, Rational(0)), u(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            l(i, i) = u(i, i) = Rational(1);
            for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(uniform(lo, hi));
            for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Rational(uniform(lo, hi));
        }
        return multiply(RationalField{}, l, u);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace epw
