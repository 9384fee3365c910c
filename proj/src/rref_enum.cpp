#include "epw/rref_enum.hpp"

namespace epw {

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
    if (k < 0 || k > n) return 0;
    // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at every step
    std::uint64_t num = 1, den = 1;
    auto pw = [q](int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        num = pw(n - i) - 1;
        den = pw(i + 1) - 1;
        result = result * num / den;
    }
    return result;
}

std::vector<std::vector<int>> pivot_patterns(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::uint64_t count_rref(int n, int k, std::uint32_t p, unsigned threads) {
    auto counts = parallel_over_patterns<std::uint64_t>(n, k, threads, [&](const std::vector<int>& piv) {
        std::uint64_t c = 0;
        for_each_rref_with_pivots(n, piv, p, [&](const Matrix<std::uint32_t>&) { ++c; });
        return std::vector<std::uint64_t>{c};
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

}  // namespace epw
