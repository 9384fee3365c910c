#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "epw/random.hpp"
#include "epw/scalar.hpp"

namespace epw {

/// Dense univariate polynomial over F_p, index = degree.
using UPoly = std::vector<std::uint32_t>;

void utrim(UPoly& a);
UPoly umod(UPoly a, const UPoly& b, const PrimeField& f);
UPoly ugcd(UPoly a, UPoly b, const PrimeField& f);

/// Distinct roots in F_p, sorted: gcd with t^p - t, then random splitting.
std::vector<std::uint32_t> roots_modp(UPoly g, const PrimeField& f, Rng& rng);

/// t -> h(s + t d) as a polynomial of degree <= degree (needs p > degree).
UPoly restrict_to_line(const std::function<std::uint32_t(std::span<const std::uint32_t>)>& h,
                       std::span<const std::uint32_t> s, std::span<const std::uint32_t> d, int degree,
                       const PrimeField& f);

}  // namespace epw
