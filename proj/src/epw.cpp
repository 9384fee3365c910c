#include "epw/epw.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "epw/random.hpp"
#include "epw/univariate_modp.hpp"

namespace epw {

namespace {

const RationalField kQ{};

// Lex basis e_a ∧ e_b of ∧²V₀ for V₀ = {x_h = 0}.
std::vector<std::uint32_t> beta_masks(int h) {
    std::vector<std::uint32_t> out;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (a != h && b != h) out.push_back((1u << a) | (1u << b));
    return out;
}

template <class F>
Matrix<typename F::Element> epw_matrix(const F& f, const Matrix<typename F::Element>& a_basis,
                                       std::span<const typename F::Element> v, int h) {
    const auto& basis = wedge_basis(6, 3);
    Matrix<typename F::Element> m(20, 20, f.zero());
    for (std::size_t r = 0; r < a_basis.rows(); ++r)
        for (std::size_t c = 0; c < 20; ++c) m(r, c) = a_basis(r, c);
    auto betas = beta_masks(h);
    for (std::size_t j = 0; j < betas.size(); ++j) {
        auto t = betas[j];
        for (int i = 0; i < 6; ++i) {
            if (t >> i & 1u || f.is_zero(v[i])) continue;
            auto& slot = m(a_basis.rows() + j, basis.index(t | (1u << i)));
            slot = shuffle_sign(1u << i, t) > 0 ? f.add(slot, v[i]) : f.sub(slot, v[i]);
        }
    }
    return m;
}

void check_hyperplane(int h) {
    if (h < 0 || h >= 6) fail(ErrorCode::BadHyperplane, "hyperplane index must be a coordinate 0..5");
}

MultiPoly coordinate_power(int h, int e) {
    Exponent x(6, 0);
    x[static_cast<std::size_t>(h)] = e;
    return MultiPoly::monomial(x, Rational(1));
}

struct ModTerms {
    std::vector<Exponent> exps;
    std::vector<std::uint32_t> coeffs;
    std::uint32_t eval(std::span<const std::uint32_t> x, const PrimeField& f) const {
        std::uint32_t acc = 0;
        for (std::size_t t = 0; t < exps.size(); ++t) {
            auto v = coeffs[t];
            for (std::size_t i = 0; i < x.size(); ++i)
                for (int k = 0; k < exps[t][i]; ++k) v = f.mul(v, x[i]);
            acc = f.add(acc, v);
        }
        return acc;
    }
};

ModTerms reduce_poly(const MultiPoly& y, const PrimeField& f) {
    ModTerms out;
    for (const auto& [e, c] : y.terms()) {
        out.exps.push_back(e);
        out.coeffs.push_back(f.from_rational(c));
    }
    return out;
}

}  // namespace

Matrix<std::uint32_t> integral_basis_modp(const Matrix<Rational>& integral, std::uint32_t p) {
    auto m = reduce_matrix(integral, p);
    if (rank(PrimeField(p), m) != integral.rows())
        fail(ErrorCode::BadReduction, "basis loses rank mod " + std::to_string(p));
    return m;
}

Matrix<std::uint32_t> epw_matrix_modp(const Matrix<std::uint32_t>& a_basis, std::span<const std::uint32_t> v,
                                      int hyperplane, const PrimeField& f) {
    check_hyperplane(hyperplane);
    return epw_matrix(f, a_basis, v, hyperplane);
}

MultiPoly epw_determinant(const LagrangianSubspace& a, int hyperplane, unsigned threads,
                          std::vector<std::uint32_t>* primes_used) {
    check_hyperplane(hyperplane);
    const auto integral = integral_basis(a.space());
    std::map<std::uint32_t, Matrix<std::uint32_t>> cache;
    std::mutex cache_mutex;
    ModEvaluator det_modp = [&](std::span<const std::uint32_t> x, const PrimeField& f) {
        const Matrix<std::uint32_t>* basis = nullptr;
        {
            std::lock_guard lock(cache_mutex);
            auto it = cache.find(f.p);
            if (it == cache.end()) it = cache.emplace(f.p, integral_basis_modp(integral, f.p)).first;
            basis = &it->second;
        }
        return determinant(f, epw_matrix(f, *basis, x, hyperplane));
    };
    Evaluator det_exact = [&](std::span<const Rational> x) {
        return determinant(kQ, epw_matrix(kQ, integral, x, hyperplane));
    };
    MultiprimeOptions options;
    options.threads = threads;
    options.exact_check = &det_exact;
    options.integral = true;
    auto result = interpolate_homogeneous_multiprime(det_modp, 10, 6, options);
    if (primes_used) *primes_used = result.primes;
    return result.poly;
}

std::size_t intersection_dim_modp(const PSubspace& a_modp, std::span<const std::uint32_t> v) {
    const auto& f = a_modp.field();
    if (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; }))
        fail(ErrorCode::ZeroVector, "F_v of the zero vector");
    auto fv = kernel(f, wedge_with_vector_matrix(f, v, 3));
    return a_modp.dim() + fv.rows() - rank(f, stack(f, a_modp.basis(), fv));
}

std::pair<std::size_t, std::size_t> epw_sample_check(const LagrangianSubspace& a, const MultiPoly& y, std::uint32_t p,
                                                     std::size_t samples, std::uint64_t seed) {
    PrimeField f(p);
    auto ap = reduce_subspace(a.space(), p);
    auto ym = reduce_poly(y, f);
    Rng rng(seed);
    std::size_t on_locus = 0, mismatches = 0;
    auto random_point = [&] {
        std::vector<std::uint32_t> v(6);
        do {
            for (auto& x : v) x = static_cast<std::uint32_t>(rng.next() % p);
        } while (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; }));
        return v;
    };
    auto judge = [&](std::span<const std::uint32_t> v) {
        bool zero = ym.eval(v, f) == 0;
        bool meets = intersection_dim_modp(ap, v) >= 1;
        if (zero) ++on_locus;
        if (zero != meets) ++mismatches;
    };
    // half uniform points, half points on the sextic found as roots along random lines
    std::size_t uniform = samples - samples / 2;
    for (std::size_t i = 0; i < uniform; ++i) judge(random_point());
    std::size_t targeted = 0;
    const int degree = std::max(y.degree(), 0);
    for (int line = 0; targeted < samples / 2 && line < static_cast<int>(samples) * 20; ++line) {
        auto s = random_point(), d = random_point();
        auto g = restrict_to_line([&](std::span<const std::uint32_t> x) { return ym.eval(x, f); }, s, d, degree, f);
        if (g.empty()) continue;  // line inside the hypersurface
        for (auto t : roots_modp(g, f, rng)) {
            if (targeted >= samples / 2) break;
            std::vector<std::uint32_t> x(6);
            for (int i = 0; i < 6; ++i) x[i] = f.add(s[i], f.mul(t, d[i]));
            if (std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; })) continue;
            judge(x);
            ++targeted;
        }
    }
    return {on_locus, mismatches};
}

EpwEquation epw_equation(const LagrangianSubspace& a, const EpwOptions& options) {
    const std::uint32_t sample_prime = large_primes(64).back();
    std::string failures;
    for (int h = 0; h < 6; ++h) {
        EpwEquation eq;
        eq.hyperplane = h;
        eq.check_hyperplane = (h + 1) % 6;
        eq.sample_prime = sample_prime;
        auto det = epw_determinant(a, h, options.threads, &eq.primes);
        if (det.is_zero()) {
            // Y_A = P^5: every sampled F_v must meet A
            eq.identically_zero = true;
            auto [on, bad] = epw_sample_check(a, MultiPoly(6), sample_prime, options.samples, options.seed);
            eq.samples = options.samples;
            eq.samples_on_locus = on;
            if (bad == 0) return eq;
            failures += " h=" + std::to_string(h) + ": zero determinant but sampled F_v miss A;";
            continue;
        }
        MultiPoly y;
        try {
            y = exact_divide(det, coordinate_power(h, 4));
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::NotDivisible) throw;
            failures += " h=" + std::to_string(h) + ": not divisible by l^4;";
            continue;
        }
        bool over_divisible = true;
        try {
            exact_divide(y, coordinate_power(h, 1));
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::NotDivisible) throw;
            over_divisible = false;
        }
        if (over_divisible) {
            failures += " h=" + std::to_string(h) + ": divisible by l^5;";
            continue;
        }
        if (y.degree() != 6 || !y.is_homogeneous()) {
            failures += " h=" + std::to_string(h) + ": quotient is not a sextic;";
            continue;
        }
        auto det2 = epw_determinant(a, eq.check_hyperplane, options.threads);
        MultiPoly y2;
        try {
            y2 = exact_divide(det2, coordinate_power(eq.check_hyperplane, 4));
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::NotDivisible) throw;
            failures += " h=" + std::to_string(h) + ": check hyperplane not divisible;";
            continue;
        }
        if (!proportional(y, y2)) {
            failures += " h=" + std::to_string(h) + ": hyperplanes disagree;";
            continue;
        }
        eq.y = y.primitive();
        auto [on, bad] = epw_sample_check(a, eq.y, sample_prime, options.samples, options.seed);
        eq.samples = options.samples;
        eq.samples_on_locus = on;
        if (bad != 0) {
            failures += " h=" + std::to_string(h) + ": " + std::to_string(bad) + " sampling mismatches;";
            continue;
        }
        return eq;
    }
    fail(ErrorCode::ConstructionDegenerate, "no hyperplane passed the checks:" + failures);
}

Matrix<Rational> standard_chart(std::span<const Rational> v) {
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == v.size()) fail(ErrorCode::ZeroVector, "chart at the zero vector");
    Matrix<Rational> chart(0, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == pivot) continue;
        std::vector<Rational> e(v.size(), Rational(0));
        e[i] = Rational(1);
        chart.append_row(e);
    }
    return chart;
}

Multiplicity epw_multiplicity(const LagrangianSubspace& a, const MultiPoly& y, std::span<const Rational> v) {
    Multiplicity out;
    out.intersection_dim = intersection_dim(a, F_of(v));
    if (y.is_zero()) fail(ErrorCode::ZeroInput, "EPW equation is identically zero");
    if (!y.evaluate(v).is_zero()) return out;
    out.taylor_order = tangent_cone(y, v, standard_chart(v)).multiplicity;
    return out;
}

bool theta_free_at(const LagrangianSubspace& a, std::span<const Rational> v, std::span<const std::uint32_t> primes,
                   unsigned threads) {
    // primitive integer representative of [v]
    Matrix<Rational> row(0, v.size());
    row.append_row(v);
    auto integral = integral_basis(QSubspace(kQ, std::move(row)));
    for (auto p : primes) {
        auto vp = reduce_matrix(integral, p);
        for (const auto& w : theta_enumerate_modp(a.space(), p, threads))
            if (w.contains(vp.row(0))) return false;
    }
    return true;
}

LagrangianSubspace build_A_plus(const Matrix<Rational>& u_basis) {
    Matrix<Rational> u = u_basis;
    if (u.rows() == 0) {
        u = Matrix<Rational>(4, 4, Rational(0));
        for (std::size_t i = 0; i < 4; ++i) u(i, i) = Rational(1);
    }
    if (u.rows() != 4 || u.cols() != 4 || rank(kQ, u) != 4)
        fail(ErrorCode::InvalidArgument, "U needs a basis of 4 independent vectors in F^4");
    std::vector<std::vector<Rational>> points;
    for (std::size_t i = 0; i < 4; ++i) points.emplace_back(u.row(i).begin(), u.row(i).end());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::vector<Rational> s(4);
            for (std::size_t k = 0; k < 4; ++k) s[k] = u(i, k) + u(j, k);
            points.push_back(std::move(s));
        }
    Matrix<Rational> gens(0, 20);
    for (const auto& pt : points) gens.append_row(plucker(i_plus(pt)).coords);
    QSubspace span(kQ, std::move(gens));
    if (span.dim() != 10)
        fail(ErrorCode::SpanDeficient, "i+ planes span only " + std::to_string(span.dim()) + " dimensions");
    return LagrangianSubspace(std::move(span));
}

MultiPoly plucker_quadric() {
    MultiPoly q(6);
    q.add_term({1, 0, 0, 0, 0, 1}, Rational(1));
    q.add_term({0, 1, 0, 0, 1, 0}, Rational(-1));
    q.add_term({0, 0, 1, 1, 0, 0}, Rational(1));
    return q;
}

}  // namespace epw
