#include "epw/exterior.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>

namespace epw {

WedgeBasis::WedgeBasis(int n, int k) : n_(n), k_(k), index_(1u << n, -1) {
    if (n < 0 || n > 8 || k < 0 || k > n) fail(ErrorCode::InvalidArgument, "wedge basis needs 0 <= k <= n <= 8");
    // lexicographic order of increasing tuples
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        index_[m] = static_cast<int>(masks_.size());
        masks_.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<int> WedgeBasis::indices(std::size_t i) const {
    std::vector<int> out;
    for (int b = 0; b < n_; ++b)
        if (masks_[i] >> b & 1u) out.push_back(b);
    return out;
}

const WedgeBasis& wedge_basis(int n, int k) {
    static std::array<std::array<std::unique_ptr<WedgeBasis>, 9>, 9> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int nn = 0; nn <= 8; ++nn)
            for (int kk = 0; kk <= nn; ++kk) cache[nn][kk] = std::make_unique<WedgeBasis>(nn, kk);
    });
    if (n < 0 || n > 8 || k < 0 || k > n) fail(ErrorCode::DegreeOverflow, "no wedge basis for this degree");
    return *cache[n][k];
}

int shuffle_sign(std::uint32_t s, std::uint32_t t) {
    int inversions = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        inversions += std::popcount(s >> (bit + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace epw
