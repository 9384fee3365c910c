#include "epw/univariate_modp.hpp"

#include <algorithm>

namespace epw {

void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& b, const PrimeField& f) {
    utrim(a);
    auto inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        auto c = f.mul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a.pop_back();
        utrim(a);
    }
    return a;
}



static UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, const PrimeField& f) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return umod(out, m, f);
}

static UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& m, const PrimeField& f) {
    UPoly out{1};
    base = umod(base, m, f);
    while (e) {
        if (e & 1u) out = umulmod(out, base, m, f);
        base = umulmod(base, base, m, f);
        e >>= 1;
    }
    return out;
}

UPoly ugcd(UPoly a, UPoly b, const PrimeField& f) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        auto r = umod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        auto inv = f.inv(a.back());
        for (auto& x : a) x = f.mul(x, inv);
    }
    return a;
}

static UPoly usub(UPoly a, const UPoly& b, const PrimeField& f) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    utrim(a);
    return a;
}

// Roots of a squarefree product of linear factors by random splitting.
static void split_roots(const UPoly& g, const PrimeField& f, Rng& rng, std::vector<std::uint32_t>& roots) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        roots.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
        return;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        UPoly shift{static_cast<std::uint32_t>(rng.next() % f.p), 1};
        auto h = upowmod(shift, (static_cast<std::uint64_t>(f.p) - 1) / 2, g, f);
        auto d = ugcd(g, usub(h, UPoly{1}, f), f);
        if (d.size() > 1 && d.size() < g.size()) {
            split_roots(d, f, rng, roots);
            // g / d
            UPoly q(g.size() - d.size() + 1, 0), r = g;
            for (std::size_t i = q.size(); i-- > 0;) {
                q[i] = r[i + d.size() - 1];
                for (std::size_t j = 0; j < d.size(); ++j) r[i + j] = f.sub(r[i + j], f.mul(q[i], d[j]));
            }
            split_roots(q, f, rng, roots);
            return;
        }
    }
}

std::vector<std::uint32_t> roots_modp(UPoly g, const PrimeField& f, Rng& rng) {
    utrim(g);
    std::vector<std::uint32_t> roots;
    if (g.size() <= 1) return roots;
    // product of the distinct linear factors: gcd(g, t^p - t)
    auto tp = upowmod(UPoly{0, 1}, f.p, g, f);
    auto lin = ugcd(g, usub(tp, UPoly{0, 1}, f), f);
    split_roots(lin, f, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

UPoly restrict_to_line(const std::function<std::uint32_t(std::span<const std::uint32_t>)>& h,
                       std::span<const std::uint32_t> s, std::span<const std::uint32_t> d, int degree,
                       const PrimeField& f) {
    if (static_cast<std::uint64_t>(degree) >= f.p) fail(ErrorCode::InvalidArgument, "line restriction needs p > degree");
    std::vector<std::uint32_t> vals;
    std::vector<std::uint32_t> x(s.size());
    for (int k = 0; k <= degree; ++k) {
        for (std::size_t i = 0; i < s.size(); ++i) x[i] = f.add(s[i], f.mul(static_cast<std::uint32_t>(k), d[i]));
        vals.push_back(h(x));
    }
    // Lagrange interpolation at t = 0..degree
    UPoly g(static_cast<std::size_t>(degree) + 1, 0);
    for (int k = 0; k <= degree; ++k) {
        UPoly basis{1};
        std::uint32_t denom = 1;
        for (int j = 0; j <= degree; ++j) {
            if (j == k) continue;
            UPoly next(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] = f.add(next[i + 1], basis[i]);
                next[i] = f.sub(next[i], f.mul(basis[i], static_cast<std::uint32_t>(j)));
            }
            basis = std::move(next);
            denom = f.mul(denom, f.sub(static_cast<std::uint32_t>(k) % f.p, static_cast<std::uint32_t>(j) % f.p));
        }
        auto scale = f.mul(vals[k], f.inv(denom));
        for (std::size_t i = 0; i < basis.size(); ++i) g[i] = f.add(g[i], f.mul(scale, basis[i]));
    }
    utrim(g);
    return g;
}

}  // namespace epw
