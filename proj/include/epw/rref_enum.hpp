#pragma once

// Streaming enumeration of Gr(k, F_p^n) through RREF shapes: a pivot pattern
// fixes the identity columns, and the free entries (right of each pivot, off
// the pivot columns) run through F_p. Work is partitioned by pivot pattern.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "epw/matrix.hpp"

namespace epw {

/// Gaussian binomial coefficient [n choose k]_q.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

/// All increasing k-tuples of column indices in lex order.
std::vector<std::vector<int>> pivot_patterns(int n, int k);

/// Calls visit(const Matrix<uint32_t>&) for every k x n RREF matrix over F_p
/// whose pivot columns are `pivots`.
template <class Visitor>
void for_each_rref_with_pivots(int n, const std::vector<int>& pivots, std::uint32_t p, Visitor&& visit) {
    const int k = static_cast<int>(pivots.size());
    Matrix<std::uint32_t> m(k, n, 0);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < k; ++i) {
        m(i, pivots[i]) = 1;
        is_pivot[pivots[i]] = true;
    }
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
            if (!is_pivot[j]) free.emplace_back(i, j);
    while (true) {
        visit(static_cast<const Matrix<std::uint32_t>&>(m));
        std::size_t pos = 0;
        while (pos < free.size()) {
            auto& slot = m(free[pos].first, free[pos].second);
            if (++slot < p) break;
            slot = 0;
            ++pos;
        }
        if (pos == free.size()) break;
    }
}

/// Runs job(pattern) for every pivot pattern on `threads` workers and
/// concatenates the per-pattern results in pattern order, so output does not
/// depend on the worker count.
template <class Result, class Job>
std::vector<Result> parallel_over_patterns(int n, int k, unsigned threads, Job&& job) {
    auto patterns = pivot_patterns(n, k);
    std::vector<std::vector<Result>> per_pattern(patterns.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < patterns.size(); i = next++) per_pattern[i] = job(patterns[i]);
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Result> out;
    for (auto& part : per_pattern)
        for (auto& r : part) out.push_back(std::move(r));
    return out;
}

/// Number of RREF matrices visited over all patterns (equals [n k]_p).
std::uint64_t count_rref(int n, int k, std::uint32_t p, unsigned threads = 1);

}  // namespace epw
