#include "epw/curves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "epw/epw.hpp"
#include "epw/random.hpp"
#include "epw/univariate_modp.hpp"

namespace epw {

namespace {

const RationalField kQ{};

bool is_zero_vector(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

template <class F>
KVector<F> two_form(const F& f, std::span<const typename F::Element> a, std::span<const typename F::Element> b) {
    return wedge(f, vector_as_kvector(f, a), vector_as_kvector(f, b));
}

// β^[2] = β ∧ β / 2 with integer coefficients: Pfaffians of the 4 x 4 principal blocks.
template <class F>
KVector<F> divided_square(const F& f, const KVector<F>& beta) {
    const auto& b2 = wedge_basis(6, 2);
    const auto& b4 = wedge_basis(6, 4);
    auto out = zero_kvector(f, 6, 4);
    auto c = [&](int i, int j) { return beta.coords[b2.index((1u << i) | (1u << j))]; };
    for (std::size_t s = 0; s < b4.size(); ++s) {
        auto idx = b4.indices(s);
        int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
        auto v = f.sub(f.mul(c(i, j), c(k, l)), f.mul(c(i, k), c(j, l)));
        out.coords[s] = f.add(v, f.mul(c(i, l), c(j, k)));
    }
    return out;
}

template <class F>
typename F::Element top_coefficient(const KVector<F>& a) {
    return a.coords[0];
}

std::vector<std::uint32_t> combine_modp(const Matrix<std::uint32_t>& frame, std::span<const std::uint32_t> x,
                                        const PrimeField& f) {
    std::vector<std::uint32_t> v(frame.cols(), 0);
    for (std::size_t i = 0; i < frame.rows(); ++i)
        for (std::size_t j = 0; j < frame.cols(); ++j) v[j] = f.add(v[j], f.mul(x[i], frame(i, j)));
    return v;
}

// Projective points of P^{n-1}(F_p), first nonzero coordinate 1.
template <class Fn>
void for_each_projective_point(std::size_t n, std::uint32_t p, Fn&& fn) {
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        std::size_t free = n - lead - 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            auto c = code;
            for (std::size_t i = 0; i < free; ++i) {
                x[lead + 1 + i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            fn(std::span<const std::uint32_t>(x));
        }
    }
}

void normalize_projective(std::vector<Rational>& x) {
    for (const auto& c : x)
        if (!c.is_zero()) {
            auto inv = c.inverse();
            for (auto& y : x) y = y * inv;
            return;
        }
}

MultiPoly linear_form(std::span<const Rational> coeffs) {
    MultiPoly l(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        l.add_term(e, coeffs[i]);
    }
    return l;
}

void require_member(const LagrangianSubspace& a, const QSubspace& w) {
    if (w.ambient() != 6 || w.dim() != 3) fail(ErrorCode::WrongDimension, "W must be a 3-dimensional subspace of F^6");
    if (!a.contains(plucker(w).coords)) fail(ErrorCode::NotAMember, "∧³W is not contained in A");
}

}  // namespace

// ---------------------------------------------------------------------------

ReducedSpace::ReducedSpace(const QSubspace& w) : w_(w) {
    if (w.ambient() != 6 || w.dim() != 3) fail(ErrorCode::WrongDimension, "W must be a 3-dimensional subspace of F^6");
    omega_ = plucker(w).coords;
    Matrix<Rational> line(0, 20);
    line.append_row(omega_);
    auto perp = symplectic_orthogonal(QSubspace(kQ, line));
    perp_ = Matrix<Rational>(0, 20);
    perp_.append_row(omega_);
    for (std::size_t i = 0; i < perp.dim() && perp_.rows() < 19; ++i) {
        auto trial = perp_;
        trial.append_row(perp.vector(i));
        if (rank(kQ, trial) == trial.rows()) perp_ = std::move(trial);
    }
    if (perp_.rows() != 19) fail(ErrorCode::InternalInconsistency, "(∧³W)^⊥ is not 19-dimensional");
    // z: a coordinate vector pairing nontrivially with ∧³W
    const auto gram = symplectic_gram(kQ);
    Matrix<Rational> full = perp_;
    for (std::size_t j = 0; j < 20; ++j) {
        Rational pairing(0);
        for (std::size_t i = 0; i < 20; ++i) pairing += gram(j, i) * omega_[i];
        if (!pairing.is_zero()) {
            std::vector<Rational> z(20, Rational(0));
            z[j] = Rational(1);
            full.append_row(z);
            break;
        }
    }
    frame_t_ = transpose(full);
    form_ = Matrix<Rational>(18, 18, Rational(0));
    for (std::size_t i = 0; i < 18; ++i)
        for (std::size_t j = 0; j < 18; ++j) {
            Rational acc(0);
            for (std::size_t r = 0; r < 20; ++r) {
                if (perp_(i + 1, r).is_zero()) continue;
                for (std::size_t c = 0; c < 20; ++c)
                    if (!gram(r, c).is_zero()) acc += perp_(i + 1, r) * gram(r, c) * perp_(j + 1, c);
            }
            form_(i, j) = acc;
        }
}

std::vector<Rational> ReducedSpace::project(std::span<const Rational> x) const {
    if (x.size() != 20) fail(ErrorCode::WrongAmbient, "expected a trivector of F^6");
    auto coeffs = solve(kQ, frame_t_, x);
    if (!coeffs || !(*coeffs)[19].is_zero()) fail(ErrorCode::InvalidArgument, "vector is not in (∧³W)^⊥");
    return {coeffs->begin() + 1, coeffs->begin() + 19};
}

// ---------------------------------------------------------------------------

std::vector<Rational> frame_coordinates(const Matrix<Rational>& frame, std::span<const Rational> v) {
    auto x = solve(kQ, transpose(frame), v);
    if (!x) fail(ErrorCode::InvalidArgument, "vector does not lie in the span of the frame");
    return *x;
}

MultiPoly curve_minor(const LagrangianSubspace& a, const ReducedSpace& t, const Matrix<Rational>& frame, int h,
                      unsigned threads) {
    if (h < 0 || h >= 6) fail(ErrorCode::BadHyperplane, "hyperplane index must be a coordinate 0..5");
    // A / ∧³W inside T_W
    Matrix<Rational> a_rows(0, 18);
    const auto a_int = integral_basis(a.space());
    for (std::size_t r = 0; r < a_int.rows(); ++r) a_rows.append_row(t.project(a_int.row(r)));
    rref_in_place(kQ, a_rows);
    while (a_rows.rows() > 0 && is_zero_vector(a_rows.row(a_rows.rows() - 1))) a_rows.truncate_rows(a_rows.rows() - 1);
    if (a_rows.rows() != 9) fail(ErrorCode::InternalInconsistency, "A / ∧³W is not 9-dimensional");

    // β_j = e_a ∧ e_b, a < b, a, b != h; the class of ∧²(W ∩ V₀) is a constant relation among v ∧ β_j
    std::vector<std::uint32_t> betas;
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y)
            if (x != h && y != h) betas.push_back((1u << x) | (1u << y));
    Matrix<Rational> hyper(1, 6, Rational(0));
    hyper(0, static_cast<std::size_t>(h)) = Rational(1);
    auto w_in_v0 = intersect(t.w(), QSubspace(kQ, hyper).annihilator());
    if (w_in_v0.dim() != 2) fail(ErrorCode::BadHyperplane, "W lies in the hyperplane");
    auto rel = two_form(kQ, w_in_v0.vector(0), w_in_v0.vector(1));
    const auto& b2 = wedge_basis(6, 2);
    std::size_t dropped = betas.size();
    for (std::size_t j = 0; j < betas.size(); ++j)
        if (!rel.coords[b2.index(betas[j])].is_zero()) {
            dropped = j;
            break;
        }
    if (dropped == betas.size()) fail(ErrorCode::InternalInconsistency, "no relation among the v ∧ β columns");

    // columns[i][j] = class of w_i ∧ β_j
    std::array<std::vector<std::vector<Rational>>, 3> columns;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < betas.size(); ++j) {
            if (j == dropped) continue;
            auto beta = zero_kvector(kQ, 6, 2);
            beta.coords[b2.index(betas[j])] = Rational(1);
            auto tri = wedge(kQ, vector_as_kvector(kQ, frame.row(i)), beta);
            columns[i].push_back(t.project(tri.coords));
        }
    }
    Evaluator minor = [&](std::span<const Rational> x) {
        Matrix<Rational> m(18, 18, Rational(0));
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 18; ++c) m(r, c) = a_rows(r, c);
        for (std::size_t j = 0; j < 9; ++j)
            for (std::size_t i = 0; i < 3; ++i) {
                if (x[i].is_zero()) continue;
                for (std::size_t c = 0; c < 18; ++c)
                    if (!columns[i][j][c].is_zero()) m(9 + j, c) += x[i] * columns[i][j][c];
            }
        return determinant(kQ, std::move(m));
    };
    return interpolate_homogeneous(minor, 9, 3, threads);
}

namespace {

struct CurveSampling {
    std::size_t on_curve = 0;
    std::size_t mismatches = 0;
};

// Half uniform points, half roots of c along random lines of P(W) mod a large prime.
CurveSampling sample_curve(const LagrangianSubspace& a, const CurveEquation& eq, std::uint32_t p, std::size_t samples,
                           std::uint64_t seed) {
    PrimeField f(p);
    auto ap = reduce_subspace(a.space(), p);
    auto frame = reduce_matrix(eq.frame, p);
    Rng rng(seed);
    CurveSampling out;
    auto judge = [&](std::span<const std::uint32_t> x) {
        auto v = combine_modp(frame, x, f);
        bool zero = eq.plane || eq.c.evaluate_mod(x, f) == 0;
        bool degenerate = intersection_dim_modp(ap, v) >= 2;
        if (zero) ++out.on_curve;
        if (zero != degenerate) ++out.mismatches;
    };
    auto random_point = [&] {
        std::vector<std::uint32_t> x(3);
        do {
            for (auto& c : x) c = static_cast<std::uint32_t>(rng.next() % p);
        } while (x[0] == 0 && x[1] == 0 && x[2] == 0);
        return x;
    };
    std::size_t uniform = samples - samples / 2;
    for (std::size_t i = 0; i < uniform; ++i) judge(random_point());
    if (eq.plane) {
        for (std::size_t i = uniform; i < samples; ++i) judge(random_point());
        return out;
    }
    std::size_t targeted = 0;
    for (std::size_t line = 0; targeted < samples / 2 && line < samples * 20; ++line) {
        auto s = random_point(), d = random_point();
        auto g = restrict_to_line([&](std::span<const std::uint32_t> x) { return eq.c.evaluate_mod(x, f); }, s, d, 6, f);
        if (g.empty()) continue;
        for (auto t : roots_modp(g, f, rng)) {
            if (targeted >= samples / 2) break;
            std::vector<std::uint32_t> x(3);
            for (int i = 0; i < 3; ++i) x[i] = f.add(s[i], f.mul(t, d[i]));
            if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
            judge(x);
            ++targeted;
        }
    }
    return out;
}

}  // namespace

CurveEquation curve_equation(const LagrangianSubspace& a, const QSubspace& w, const CurveOptions& options) {
    require_member(a, w);
    ReducedSpace t(w);
    const auto frame = saturated_basis(w);
    const std::uint32_t sample_prime = large_primes(64).back();

    std::vector<int> usable;
    for (int h = 0; h < 6; ++h) {
        bool zero_column = true;
        for (std::size_t i = 0; i < 3; ++i) zero_column = zero_column && frame(i, h).is_zero();
        if (!zero_column) usable.push_back(h);
    }
    auto restricted_form = [&](int h) {
        std::vector<Rational> c(3);
        for (std::size_t i = 0; i < 3; ++i) c[i] = frame(i, h);
        return linear_form(c);
    };

    std::string failures;
    std::map<int, MultiPoly> minors;
    auto minor_for = [&](int h) -> const MultiPoly& {
        auto it = minors.find(h);
        if (it == minors.end()) it = minors.emplace(h, curve_minor(a, t, frame, h, options.threads)).first;
        return it->second;
    };
    for (std::size_t i = 0; i < usable.size(); ++i) {
        int h = usable[i];
        auto lh = restricted_form(h);
        // second hyperplane with a non-proportional restricted form
        int h2 = -1;
        for (std::size_t j = 0; j < usable.size(); ++j) {
            if (j == i) continue;
            if (!proportional(restricted_form(usable[j]), lh)) {
                h2 = usable[j];
                break;
            }
        }
        if (h2 < 0) fail(ErrorCode::ConstructionDegenerate, "W does not admit two independent hyperplane charts");
        const auto& m1 = minor_for(h);
        const auto& m2 = minor_for(h2);
        CurveEquation eq;
        eq.frame = frame;
        eq.hyperplanes = {h, h2};
        eq.sample_prime = sample_prime;
        eq.samples = options.samples;
        std::string tag = " h=" + std::to_string(h) + "/" + std::to_string(h2) + ": ";
        if (m1.is_zero() != m2.is_zero()) {
            failures += tag + "only one minor vanishes;";
            continue;
        }
        if (m1.is_zero()) {
            eq.plane = true;
        } else {
            MultiPoly c1, c2;
            try {
                c1 = exact_divide(m1, pow(lh, 3));
                c2 = exact_divide(m2, pow(restricted_form(h2), 3));
            } catch (const MathError& e) {
                if (e.code() != ErrorCode::NotDivisible) throw;
                failures += tag + "minor not divisible by l^3;";
                continue;
            }
            auto g = gcd_multivariate(m1, m2, options.seed);
            if (g.degree() != 6 || !proportional(g, c1) || !proportional(c1, c2)) {
                failures += tag + "gcd of minors is not the common sextic;";
                continue;
            }
            eq.c = c1.primitive();
        }
        auto sampled = sample_curve(a, eq, sample_prime, options.samples, options.seed);
        eq.samples_on_curve = sampled.on_curve;
        if (sampled.mismatches != 0) {
            failures += tag + std::to_string(sampled.mismatches) + " sampling mismatches;";
            continue;
        }
        return eq;
    }
    fail(ErrorCode::ConstructionDegenerate, "no pair of minors validated:" + failures);
}

CurveOracleReport curve_oracle_modp(const LagrangianSubspace& a, const CurveEquation& curve, std::uint32_t p) {
    PrimeField f(p);
    auto frame = reduce_matrix(curve.frame, p);
    if (rank(f, frame) != 3) fail(ErrorCode::BadReduction, "frame of W loses rank mod " + std::to_string(p));
    if (!curve.plane) {
        bool all_zero = true;
        for (const auto& [e, c] : curve.c.terms()) all_zero = all_zero && reduce_mod_p(c, p) == 0;
        if (all_zero) fail(ErrorCode::BadReduction, "curve equation vanishes mod " + std::to_string(p));
    }
    auto ap = reduce_subspace(a.space(), p);
    CurveOracleReport out;
    out.p = p;
    for_each_projective_point(3, p, [&](std::span<const std::uint32_t> x) {
        ++out.points;
        bool zero = curve.plane || curve.c.evaluate_mod(x, f) == 0;
        bool degenerate = intersection_dim_modp(ap, combine_modp(frame, x, f)) >= 2;
        out.on_curve += zero;
        out.oracle += degenerate;
        out.mismatches += zero != degenerate;
    });
    if (out.mismatches && out.oracle == out.points)
        fail(ErrorCode::BadReduction, "the degeneracy locus mod " + std::to_string(p) + " is all of P(W)");
    return out;
}

// ---------------------------------------------------------------------------

PsiFrame make_psi_frame(std::span<const Rational> v0, const Matrix<Rational>& w0, const Matrix<Rational>& extra) {
    if (v0.size() != 6 || w0.rows() != 2 || w0.cols() != 6 || extra.rows() != 3 || extra.cols() != 6)
        fail(ErrorCode::BadFrame, "frame needs v0 in F^6, two W0 rows and three more V0 rows");
    PsiFrame frame;
    frame.v0.assign(v0.begin(), v0.end());
    frame.w0 = w0;
    frame.v0_space = stack(kQ, w0, extra);
    Matrix<Rational> all = frame.v0_space;
    all.append_row(v0);
    if (rank(kQ, all) != 6) fail(ErrorCode::BadFrame, "V0 must be a hyperplane complementary to v0");
    // V0 ∩ W = W0 with W = <v0> + W0: the extra rows must complement W
    Matrix<Rational> w = w0;
    w.append_row(v0);
    if (rank(kQ, stack(kQ, w, extra)) != 6) fail(ErrorCode::BadFrame, "V0 meets W beyond W0");
    return frame;
}

PsiFrame default_psi_frame(std::span<const Rational> v0, const Matrix<Rational>& w0) {
    Matrix<Rational> w = w0;
    w.append_row(v0);
    if (rank(kQ, w) != 3) fail(ErrorCode::BadFrame, "v0 and W0 must span a 3-dimensional W");
    Matrix<Rational> extra(0, 6);
    for (std::size_t k = 0; k < 6 && extra.rows() < 3; ++k) {
        std::vector<Rational> e(6, Rational(0));
        e[k] = Rational(1);
        auto trial = stack(kQ, w, extra);
        trial.append_row(e);
        if (rank(kQ, trial) == trial.rows()) extra.append_row(e);
    }
    return make_psi_frame(v0, w0, extra);
}

PsiFrame random_psi_frame(std::uint64_t seed) {
    Rng rng(seed);
    auto gt = transpose(rng.unimodular(6));
    Matrix<Rational> w0(0, 6), extra(0, 6);
    w0.append_row(gt.row(1));
    w0.append_row(gt.row(2));
    for (std::size_t i = 3; i < 6; ++i) extra.append_row(gt.row(i));
    return make_psi_frame(gt.row(0), w0, extra);
}

CurveLagrangian random_curve_lagrangian(std::uint64_t seed) {
    Rng rng(seed);
    auto p1 = complementary_pair(0b000111), p2 = complementary_pair(0b011100);
    std::vector<bool> flip(10, false);
    flip[p2] = true;
    // rows and columns of both pairs vanish, so e012 and e234 lie in A
    Matrix<Rational> s(10, 10, Rational(0));
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i; j < 10; ++j)
            if (i != p1 && i != p2 && j != p1 && j != p2) s(i, j) = s(j, i) = Rational(rng.uniform(-3, 3));
    auto g = rng.unimodular(6);
    return {transform_lagrangian(graph_lagrangian(s, flip), g),
            transform_subspace(coordinate_subspace(6, {0, 1, 2}), g),
            transform_subspace(coordinate_subspace(6, {2, 3, 4}), g)};
}

std::vector<std::array<int, 2>> psi_pairs() {
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1)) out.push_back({i, j});
    return out;
}

namespace {

template <class F>
std::vector<KVector<F>> pair_forms(const F& f, const Matrix<typename F::Element>& v0_space,
                                   const std::vector<std::array<int, 2>>& pairs) {
    std::vector<KVector<F>> out;
    for (const auto& [i, j] : pairs) out.push_back(two_form(f, v0_space.row(i), v0_space.row(j)));
    return out;
}

void require_in_w(const PsiFrame& frame, std::span<const Rational> w) {
    Matrix<Rational> span = frame.w0;
    span.append_row(frame.v0);
    if (!QSubspace(kQ, span).contains(w)) fail(ErrorCode::BadFrame, "w must lie in W");
}

}  // namespace

Matrix<Rational> psi_form(const PsiFrame& frame, std::span<const Rational> w) {
    if (w.size() != 6) fail(ErrorCode::BadFrame, "w must be a vector of F^6");
    require_in_w(frame, w);
    auto forms = pair_forms(kQ, frame.v0_space, psi_pairs());
    auto vw = two_form(kQ, std::span<const Rational>(frame.v0), w);
    std::vector<KVector<RationalField>> left;
    for (const auto& b : forms) left.push_back(wedge(kQ, vw, b));
    Matrix<Rational> out(9, 9, Rational(0));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i; j < 9; ++j) out(i, j) = out(j, i) = top_coefficient(wedge(kQ, left[i], forms[j]));
    return out;
}

std::uint32_t psi_value_modp(const PsiFrame& frame, std::span<const std::uint32_t> w, std::span<const std::uint32_t> beta,
                             const PrimeField& f) {
    auto v0_space = reduce_matrix(frame.v0_space, f.p);
    Matrix<Rational> v0m(0, 6);
    v0m.append_row(frame.v0);
    auto v0 = reduce_matrix(v0m, f.p);
    auto pairs = psi_pairs();
    auto forms = pair_forms(f, v0_space, pairs);
    auto b = zero_kvector(f, 6, 2);
    for (std::size_t k = 0; k < forms.size(); ++k)
        for (std::size_t c = 0; c < b.coords.size(); ++c)
            b.coords[c] = f.add(b.coords[c], f.mul(beta[k], forms[k].coords[c]));
    auto vw = two_form(f, v0.row(0), w);
    return top_coefficient(wedge(f, vw, divided_square(f, b)));
}

RoncisvalleReport roncisvalle_check(const PsiFrame& frame, std::uint32_t p) {
    PrimeField f(p);
    auto v0_space = reduce_matrix(frame.v0_space, p);
    Matrix<Rational> v0m(0, 6);
    v0m.append_row(frame.v0);
    auto v0 = reduce_matrix(v0m, p);
    if (rank(f, stack(f, v0_space, v0)) != 6)
        fail(ErrorCode::BadReduction, "frame degenerates mod " + std::to_string(p));

    // all ten pairs of the V0 basis; index 0 is a0 ∧ a1 = the centre ∧²W0
    std::vector<std::array<int, 2>> all_pairs{{0, 1}};
    for (const auto& pr : psi_pairs()) all_pairs.push_back(pr);
    auto forms = pair_forms(f, v0_space, all_pairs);
    auto to_form = [&](std::span<const std::uint32_t> c) {
        auto b = zero_kvector(f, 6, 2);
        for (std::size_t k = 0; k < forms.size(); ++k) {
            if (c[k] == 0) continue;
            for (std::size_t i = 0; i < b.coords.size(); ++i)
                b.coords[i] = f.add(b.coords[i], f.mul(c[k], forms[k].coords[i]));
        }
        return b;
    };
    std::array<KVector<PrimeField>, 2> vw{two_form(f, v0.row(0), v0_space.row(0)), two_form(f, v0.row(0), v0_space.row(1))};

    RoncisvalleReport out;
    out.p = p;
    std::set<std::vector<std::uint32_t>> zeros;
    std::vector<std::uint32_t> lifted(10, 0);
    for_each_projective_point(9, p, [&](std::span<const std::uint32_t> x) {
        ++out.quotient_points;
        std::copy(x.begin(), x.end(), lifted.begin() + 1);
        auto sq = divided_square(f, to_form(lifted));
        bool zero = true;
        for (const auto& a : vw) zero = zero && top_coefficient(wedge(f, a, sq)) == 0;
        if (zero) zeros.emplace(x.begin(), x.end());
    });
    out.common_zeros = zeros.size();

    std::set<std::vector<std::uint32_t>> image;
    for_each_projective_point(10, p, [&](std::span<const std::uint32_t> x) {
        ++out.ambient_points;
        auto sq = divided_square(f, to_form(x));
        if (std::any_of(sq.coords.begin(), sq.coords.end(), [](std::uint32_t c) { return c != 0; })) return;
        ++out.grassmannian_points;
        std::vector<std::uint32_t> img(x.begin() + 1, x.end());
        auto lead = std::find_if(img.begin(), img.end(), [](std::uint32_t c) { return c != 0; });
        if (lead == img.end()) return;  // the centre itself
        auto inv = f.inv(*lead);
        for (auto& c : img) c = f.mul(c, inv);
        image.insert(std::move(img));
    });
    out.projected_points = image.size();
    for (const auto& pt : image) out.outside += !zeros.contains(pt);
    out.contained = out.outside == 0;
    return out;
}

LeadingTerm leading_term(const LagrangianSubspace& a, const QSubspace& w, std::span<const Rational> v0,
                         const Matrix<Rational>& w0) {
    require_member(a, w);
    if (v0.size() != 6 || is_zero_vector(v0)) fail(ErrorCode::BadFrame, "v0 must be a nonzero vector of F^6");
    Matrix<Rational> span = w0;
    span.append_row(v0);
    if (w0.rows() != 2 || !(QSubspace(kQ, span) == w)) fail(ErrorCode::BadFrame, "v0 and W0 must span W");
    auto frame = default_psi_frame(v0, w0);

    LeadingTerm out;
    auto k = intersect(a.space(), F_of(v0).space());
    out.k_bar = k.dim() - 1;
    if (out.k_bar == 0) {
        out.det = MultiPoly::constant(2, Rational(1));
        return out;
    }
    // α = v0 ∧ β with β ∈ ∧²V0: solve in the basis of all ten pairs, then drop the a0 ∧ a1 coordinate
    std::vector<std::array<int, 2>> all_pairs{{0, 1}};
    for (const auto& pr : psi_pairs()) all_pairs.push_back(pr);
    auto forms = pair_forms(kQ, frame.v0_space, all_pairs);
    Matrix<Rational> image(20, 10, Rational(0));
    for (std::size_t j = 0; j < 10; ++j) {
        auto tri = wedge(kQ, vector_as_kvector(kQ, v0), forms[j]);
        for (std::size_t r = 0; r < 20; ++r) image(r, j) = tri.coords[r];
    }
    Matrix<Rational> kbar(0, 9);
    for (std::size_t i = 0; i < k.dim(); ++i) {
        auto beta = solve(kQ, image, k.vector(i));
        if (!beta) fail(ErrorCode::InternalInconsistency, "A ∩ F_v0 not in v0 ∧ ∧²V0");
        kbar.append_row(std::span<const Rational>(beta->data() + 1, 9));
    }
    rref_in_place(kQ, kbar);
    kbar.truncate_rows(out.k_bar);
    if (rank(kQ, kbar) != out.k_bar) fail(ErrorCode::InternalInconsistency, "K̄ has the wrong dimension");

    std::array<Matrix<Rational>, 2> psi{psi_form(frame, w0.row(0)), psi_form(frame, w0.row(1))};
    std::array<Matrix<Rational>, 2> restricted;
    for (int t = 0; t < 2; ++t) {
        auto left = multiply(kQ, kbar, psi[t]);
        restricted[t] = multiply(kQ, left, transpose(kbar));
    }
    Evaluator det = [&](std::span<const Rational> y) {
        Matrix<Rational> m(out.k_bar, out.k_bar, Rational(0));
        for (std::size_t i = 0; i < out.k_bar; ++i)
            for (std::size_t j = 0; j < out.k_bar; ++j) m(i, j) = y[0] * restricted[0](i, j) + y[1] * restricted[1](i, j);
        return determinant(kQ, std::move(m));
    };
    out.det = interpolate_homogeneous(det, static_cast<int>(out.k_bar), 2);
    return out;
}

// ---------------------------------------------------------------------------

SingularPoint point_singularity(const MultiPoly& c, std::span<const Rational> coords) {
    if (c.nvars() != 3) fail(ErrorCode::InvalidArgument, "expected a plane curve in three variables");
    SingularPoint out;
    out.coords.assign(coords.begin(), coords.end());
    normalize_projective(out.coords);
    auto cone = tangent_cone(c, out.coords, standard_chart(out.coords));
    out.multiplicity = cone.multiplicity;
    out.quadratic_rank = cone.quadratic_rank;
    out.cusp = cone.multiplicity == 2 && cone.quadratic_rank == std::size_t{1};
    return out;
}

SingularityReport singularity_report(const CurveEquation& curve, std::span<const QSubspace> theta,
                                     std::size_t components) {
    if (curve.plane) fail(ErrorCode::NotACurve, "C_{W,A} is the whole plane");
    QSubspace w(kQ, curve.frame);
    std::map<std::vector<Rational>, std::size_t> counts;
    std::vector<std::vector<Rational>> order;
    for (const auto& other : theta) {
        if (other == w) continue;
        auto meet = intersect(w, other);
        if (meet.dim() == 0) fail(ErrorCode::NotIncident, "a member of theta misses W");
        if (meet.dim() > 1) fail(ErrorCode::InvalidArgument, "two members share a line: theta is not finite");
        auto x = frame_coordinates(curve.frame, meet.vector(0));
        normalize_projective(x);
        auto [it, inserted] = counts.try_emplace(x, 0);
        if (inserted) order.push_back(x);
        ++it->second;
    }
    SingularityReport report;
    report.components = components;
    for (const auto& x : order) {
        SingularPoint pt;
        std::size_t n = counts[x];
        if (n > 4) fail(ErrorCode::InternalInconsistency, std::to_string(n) + " other members through one point (n_p <= 4)");
        try {
            pt = point_singularity(curve.c, x);
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::NotOnHypersurface) throw;
            fail(ErrorCode::InternalInconsistency, "a point with n_p > 0 is off the curve");
        }
        pt.n_p = n;
        if (pt.multiplicity < 2) fail(ErrorCode::InternalInconsistency, "curve is smooth at a point of B(W,A)");
        if (n == 2 && !(pt.cusp || pt.multiplicity >= 3))
            fail(ErrorCode::InternalInconsistency, "n_p = 2 without a cusp or a triple point");
        if (n >= 3 && pt.multiplicity < 3) fail(ErrorCode::InternalInconsistency, "n_p >= 3 at a point of multiplicity 2");
        report.ell[n - 1] += 1;
        report.points.push_back(std::move(pt));
    }
    return report;
}

BLocus b_locus_member(const LagrangianSubspace& a, const QSubspace& w, std::span<const Rational> v,
                      std::span<const QSubspace> theta) {
    require_member(a, w);
    if (!w.contains(v) || is_zero_vector(v)) fail(ErrorCode::InvalidArgument, "v must be a nonzero vector of W");
    BLocus out;
    for (const auto& other : theta)
        if (!(other == w) && other.contains(v)) out.other_plane = true;
    auto meet = intersect(intersect(a.space(), F_of(v).space()), s_w_space(w));
    out.tangent = meet.dim() >= 2;
    return out;
}

// ---------------------------------------------------------------------------

BoundAudit bound_audit(int l1, int l2, int l3, int l4, int s, std::optional<int> delta) {
    if (l1 < 0 || l2 < 0 || l3 < 0 || l4 < 0) fail(ErrorCode::InvalidArgument, "tallies must be nonnegative");
    if (s < 1 || s > 6) fail(ErrorCode::InvalidArgument, "a plane sextic has between 1 and 6 components");
    if (delta && (*delta < 0 || *delta > 3)) fail(ErrorCode::InvalidArgument, "delta counts singular conics among three");
    BoundAudit out;
    out.ell = {l1, l2, l3, l4};
    out.components = s;
    out.plane_cap = 1 + l1 + 2 * l2 + 3 * l3 + 4 * l4;

    const int genus_lhs = l1 + l2 + 3 * l3 + 3 * l4;
    if (genus_lhs > 9 + s)
        fail(ErrorCode::InfeasibleInput, "l1 + l2 + 3 l3 + 3 l4 = " + std::to_string(genus_lhs) + " exceeds 9 + s = " +
                                             std::to_string(9 + s));
    out.constraints.push_back({"components", "l1 + l2 + 3 l3 + 3 l4 <= 9 + s", true, true, genus_lhs == 9 + s});

    const int l34 = l3 + l4;
    const int plucker_lhs = 2 * l1 + 3 * l2;
    bool plucker_applies = s == 1 && l34 == 0;
    out.constraints.push_back({"plucker", "2 l1 + 3 l2 <= 27 (s = 1, l3 + l4 = 0)", plucker_applies,
                               !plucker_applies || plucker_lhs <= 27, plucker_applies && plucker_lhs == 27});

    const int singular = l1 + l2 + l3 + l4;
    out.constraints.push_back({"singular-points", "l1 + l2 + l3 + l4 <= 15", true, singular <= 15, singular == 15});

    int cap = out.plane_cap;
    std::optional<int> case_cap;
    if (s == 1) {
        if (l34 == 0)
            out.path = "s = 1, l3 + l4 = 0: plane count with 2 l1 + 3 l2 <= 27 gives at most 19";
        else if (l34 == 1)
            out.path = "s = 1, l3 + l4 = 1: l1 + l2 <= 7 gives at most 19";
        else
            out.path = "s = 1, l3 + l4 >= 2: l1 + l2 <= 10 - 3 (l3 + l4) gives at most 17";
    } else if (s == 2) {
        case_cap = 17;
        out.path = "s = 2: quintic with four cusps plus the line through its two nodes, exactly 17";
    } else {
        int d = delta.value_or(3);
        case_cap = 17 + d;
        out.path = "s >= 3: three conics of a pencil, at most 17 + delta with delta = " + std::to_string(d) +
                   (delta ? "" : " (worst case)");
    }
    if (case_cap) cap = std::min(cap, *case_cap);
    cap = std::min(cap, 20);
    out.max_theta = cap;
    out.constraints.push_back({"plane-count", "#Θ_A <= 1 + l1 + 2 l2 + 3 l3 + 4 l4", true, true, out.plane_cap == cap});
    if (case_cap)
        out.constraints.push_back({"case", "#Θ_A <= " + std::to_string(*case_cap) + " for s = " + std::to_string(s), true,
                                   true, *case_cap == cap});
    out.constraints.push_back({"global", "#Θ_A <= 20", true, true, cap == 20});
    return out;
}

BoundAudit bound_maximize(std::optional<int> s, std::optional<int> l34) {
    std::optional<BoundAudit> best;
    int s_lo = s.value_or(1), s_hi = s.value_or(6);
    for (int comp = s_lo; comp <= s_hi; ++comp)
        for (int l3 = 0; l3 <= 15; ++l3)
            for (int l4 = 0; l4 <= 15; ++l4) {
                if (l34 && l3 + l4 != *l34) continue;
                for (int l1 = 0; l1 <= 15; ++l1)
                    for (int l2 = 0; l2 <= 15; ++l2) {
                        if (l1 + l2 + 3 * l3 + 3 * l4 > 9 + comp) continue;
                        auto audit = bound_audit(l1, l2, l3, l4, comp);
                        bool ok = std::all_of(audit.constraints.begin(), audit.constraints.end(),
                                              [](const BoundConstraint& c) { return c.holds; });
                        if (ok && (!best || audit.max_theta > best->max_theta)) best = std::move(audit);
                    }
            }
    if (!best) fail(ErrorCode::InfeasibleInput, "no tallies satisfy the constraints");
    return *best;
}

}  // namespace epw
