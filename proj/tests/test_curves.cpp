#include <doctest.h>

#include <map>

#include "epw/curves.hpp"
#include "epw/epw.hpp"
#include "epw/random.hpp"
#include "oracles.hpp"

using namespace epw;

namespace {

const RationalField Q{};

std::vector<oracle::QRow> rows_q(const Matrix<Rational>& m) {
    std::vector<oracle::QRow> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(oracle::to_q({m.row(r).begin(), m.row(r).end()}));
    return out;
}

std::vector<Rational> combine(const Matrix<Rational>& frame, std::span<const Rational> x) {
    std::vector<Rational> v(frame.cols(), Rational(0));
    for (std::size_t r = 0; r < frame.rows(); ++r)
        for (std::size_t j = 0; j < frame.cols(); ++j) v[j] += x[r] * frame(r, j);
    return v;
}

const CurveLagrangian& example(std::uint64_t seed) {
    static std::map<std::uint64_t, CurveLagrangian> cache;
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, random_curve_lagrangian(seed)).first;
    return it->second;
}

const CurveEquation& example_curve(std::uint64_t seed) {
    static std::map<std::uint64_t, CurveEquation> cache;
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, curve_equation(example(seed).a, example(seed).w)).first;
    return it->second;
}

}  // namespace

TEST_CASE("reduced space T_W") {
    auto w = coordinate_subspace(6, {0, 1, 2});
    ReducedSpace t(w);
    CHECK(t.perp_basis().rows() == 19);
    CHECK(oracle::rank_q(rows_q(t.perp_basis())) == 19);
    CHECK(t.form().rows() == 18);
    CHECK(oracle::rank_q(rows_q(t.form())) == 18);

    // A ⊂ (∧³W)^⊥ projects to a 9-dimensional isotropic subspace
    const auto& ex = example(1);
    ReducedSpace tw(ex.w);
    std::vector<std::vector<Rational>> images;
    for (std::size_t r = 0; r < 10; ++r) images.push_back(tw.project(ex.a.basis().row(r)));
    std::vector<oracle::QRow> img;
    for (const auto& x : images) img.push_back(oracle::to_q(x));
    CHECK(oracle::rank_q(img) == 9);
    for (const auto& x : images)
        for (const auto& y : images) {
            Rational acc(0);
            for (std::size_t i = 0; i < 18; ++i)
                for (std::size_t j = 0; j < 18; ++j) acc += x[i] * tw.form()(i, j) * y[j];
            CHECK(acc.is_zero());
        }

    std::vector<Rational> e345(20, Rational(0));
    e345[19] = Rational(1);
    CHECK_THROWS_AS(t.project(e345), MathError);
}

TEST_CASE("curve equation agrees with the rank oracle") {
    const auto& ex = example(1);
    const auto& c = example_curve(1);
    REQUIRE_FALSE(c.plane);
    CHECK(c.c.degree() == 6);
    CHECK(c.c.is_homogeneous());
    CHECK(c.samples > 0);

    // rational points: c(x) = 0 iff dim(A ∩ F_v) >= 2
    Rng rng(4);
    for (int i = 0; i < 8; ++i) {
        auto x = rng.nonzero_vector(3);
        auto v = combine(c.frame, x);
        auto dim = oracle::intersection_dim(rows_q(ex.a.basis()), oracle::f_v_generators(oracle::to_q(v)));
        CHECK(dim >= 1);
        CHECK(c.c.evaluate(x).is_zero() == (dim >= 2));
    }

    // every point over F_2 and F_3, with an integral basis of A reduced mod p
    auto a_int = saturated_basis(ex.a.space());
    for (std::uint64_t p : {2u, 3u}) {
        std::vector<std::vector<std::uint64_t>> ap;
        for (std::size_t r = 0; r < a_int.rows(); ++r) {
            std::vector<std::uint64_t> row;
            for (const auto& x : a_int.row(r)) row.push_back(oracle::residue(x.value(), p));
            ap.push_back(row);
        }
        REQUIRE(oracle::rank_p(ap, p) == 10);
        std::size_t mismatches = 0;
        for (const auto& x : oracle::projective_points(3, p)) {
            std::vector<Rational> xr;
            for (auto t : x) xr.emplace_back(static_cast<long>(t));
            auto v = combine(c.frame, xr);
            std::vector<std::vector<std::uint64_t>> fv;
            for (const auto& g : oracle::f_v_generators(oracle::to_q(v))) {
                std::vector<std::uint64_t> row;
                for (const auto& y : g) row.push_back(oracle::residue(y, p));
                fv.push_back(row);
            }
            auto both = ap;
            both.insert(both.end(), fv.begin(), fv.end());
            std::size_t dim = 10 + oracle::rank_p(fv, p) - oracle::rank_p(both, p);
            bool zero = oracle::residue(c.c.evaluate(xr).value(), p) == 0;
            mismatches += zero != (dim >= 2);
        }
        CHECK(mismatches == 0);
        auto rep = curve_oracle_modp(ex.a, c, static_cast<std::uint32_t>(p));
        CHECK(rep.mismatches == 0);
        CHECK(rep.points == oracle::projective_points(3, p).size());
    }
}

TEST_CASE("curve of A_+ at an i_+ plane is the whole plane") {
    std::vector<Rational> u{1, 2, 3, 5};
    auto c = curve_equation(build_A_plus(), i_plus(u));
    CHECK(c.plane);
    CHECK_THROWS_AS(singularity_report(c, std::vector<QSubspace>{}), MathError);
}

TEST_CASE("curve_equation rejects non-members") {
    auto a = random_lagrangian(1);
    CHECK_THROWS_AS(curve_equation(a, coordinate_subspace(6, {0, 1, 2})), MathError);
}

TEST_CASE("singular points at other members") {
    const auto& ex = example(1);
    const auto& c = example_curve(1);
    std::vector<QSubspace> theta{ex.w, ex.w2};
    auto rep = singularity_report(c, theta);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].n_p == 1);
    CHECK(rep.points[0].multiplicity >= 2);
    CHECK(rep.ell[0] == 1);
    CHECK(c.c.evaluate(rep.points[0].coords).is_zero());

    auto meet = intersect(ex.w, ex.w2);
    CHECK(b_locus_member(ex.a, ex.w, meet.vector(0), theta).other_plane);
    CHECK(b_locus_member(ex.a, ex.w, meet.vector(0), theta).member());
}

TEST_CASE("synthetic singularity checks") {
    auto x = [](std::size_t i) { return MultiPoly::variable(3, i); };
    std::vector<Rational> e0{1, 0, 0};
    auto cusp = point_singularity(x(0) * x(1) * x(1) - pow(x(2), 3), e0);
    CHECK(cusp.multiplicity == 2);
    CHECK(cusp.cusp);
    auto node = point_singularity(x(0) * x(1) * x(2), e0);
    CHECK_FALSE(node.cusp);

    // five further planes through one point of W
    CurveEquation fake;
    fake.frame = coordinate_subspace(6, {0, 1, 2}).basis();
    fake.c = pow(x(1), 2) * pow(x(2), 4);
    std::vector<QSubspace> theta{
        coordinate_subspace(6, {0, 3, 4}), coordinate_subspace(6, {0, 3, 5}), coordinate_subspace(6, {0, 4, 5}),
        subspace_from_rows(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}}),
        subspace_from_rows(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}})};
    try {
        (void)singularity_report(fake, theta);
        FAIL("n_p = 5 must be rejected");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::InternalInconsistency);
    }
}

TEST_CASE("psi forms") {
    auto frame = random_psi_frame(1);
    auto pairs = psi_pairs();
    REQUIRE(pairs.size() == 9);
    Rng rng(2);
    auto c1 = rng.vector(2), c2 = rng.vector(2);
    auto w1 = combine(frame.w0, c1), w2 = combine(frame.w0, c2);

    // Gram entries are 6 x 6 determinants of (v0, w, a_i, a_j, a_k, a_l)
    auto g = psi_form(frame, w1);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            std::vector<oracle::QRow> m{oracle::to_q(frame.v0), oracle::to_q(w1)};
            for (int idx : {pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1]})
                m.push_back(oracle::to_q({frame.v0_space.row(static_cast<std::size_t>(idx)).begin(),
                                          frame.v0_space.row(static_cast<std::size_t>(idx)).end()}));
            CHECK(g(i, j).value() == oracle::det_leibniz(m));
        }

    // linearity in w
    std::vector<Rational> sum(6, Rational(0));
    for (std::size_t j = 0; j < 6; ++j) sum[j] = Rational(2) * w1[j] + Rational(-3) * w2[j];
    auto gs = psi_form(frame, sum);
    auto g2 = psi_form(frame, w2);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) CHECK(gs(i, j) == Rational(2) * g(i, j) + Rational(-3) * g2(i, j));

    // decomposable β on a 2-space has vanishing square
    PrimeField f(5);
    std::vector<std::uint32_t> beta(9, 0);
    beta[0] = 1;
    std::vector<std::uint32_t> wm;
    for (const auto& x : w1) wm.push_back(reduce_mod_p(x, 5));
    CHECK(psi_value_modp(frame, wm, beta, f) == 0);

    std::vector<Rational> outside(6, Rational(0));
    outside[0] = Rational(1);
    auto in_w = [&] {
        Matrix<Rational> m = frame.w0;
        m.append_row(frame.v0);
        m.append_row(outside);
        return rank(Q, m) == 3;
    }();
    if (!in_w) CHECK_THROWS_AS(psi_form(frame, outside), MathError);
}

TEST_CASE("projected Grassmannian lies in the common zeros") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        auto frame = random_psi_frame(seed);
        for (std::uint32_t p : {2u, 3u}) {
            auto r = roncisvalle_check(frame, p);
            CHECK(r.contained);
            CHECK(r.outside == 0);
            mpz_class pp = p;
            mpz_class p9, p10;
            mpz_pow_ui(p9.get_mpz_t(), pp.get_mpz_t(), 9);
            mpz_pow_ui(p10.get_mpz_t(), pp.get_mpz_t(), 10);
            CHECK(mpz_class(static_cast<unsigned long>(r.quotient_points)) == (p9 - 1) / (pp - 1));
            CHECK(mpz_class(static_cast<unsigned long>(r.ambient_points)) == (p10 - 1) / (pp - 1));
            CHECK(mpz_class(static_cast<unsigned long>(r.grassmannian_points)) == oracle::gaussian_binomial(5, 2, p));
            CHECK(r.projected_points <= r.common_zeros);
        }
    }
}

TEST_CASE("leading term matches the lowest Taylor part") {
    const auto& ex = example(2);
    const auto& c = example_curve(2);
    REQUIRE_FALSE(c.plane);
    auto meet = intersect(ex.w, ex.w2);
    Rng rng(7);
    std::vector<std::vector<Rational>> pts{frame_coordinates(c.frame, meet.vector(0))};
    for (int i = 0; i < 3; ++i) pts.push_back(rng.nonzero_vector(3));
    for (const auto& x : pts) {
        auto chart = standard_chart(x);
        Matrix<Rational> xm(0, 3);
        xm.append_row(x);
        auto v0 = multiply(Q, xm, c.frame);
        auto w0 = multiply(Q, chart, c.frame);
        auto lt = leading_term(ex.a, ex.w, v0.row(0), w0);
        auto dim = oracle::intersection_dim(rows_q(ex.a.basis()), oracle::f_v_generators(oracle::to_q({v0.row(0).begin(), v0.row(0).end()})));
        CHECK(lt.k_bar == dim - 1);
        auto parts = taylor_parts(c.c, x, chart);
        for (std::size_t i = 0; i < lt.k_bar; ++i) CHECK(parts[i].is_zero());
        if (!lt.det.is_zero()) CHECK(proportional(parts[lt.k_bar], lt.det));
        else CHECK(parts[lt.k_bar].is_zero());
    }
}

TEST_CASE("bound ledger") {
    CHECK(bound_maximize(1, 0).max_theta == 19);
    CHECK(bound_maximize(1, 1).max_theta == 19);
    CHECK(bound_maximize(1, 2).max_theta == 17);
    CHECK(bound_maximize().max_theta == 20);

    auto a = bound_audit(9, 0, 0, 0, 1);
    CHECK(a.plane_cap == 10);
    CHECK(a.max_theta == 10);
    CHECK_FALSE(a.path.empty());
    CHECK_THROWS_AS(bound_audit(20, 0, 0, 0, 1), MathError);

    // l3 + l4 = 2 with s = 1 forces l1 + l2 <= 4
    for (int l1 = 0; l1 <= 6; ++l1)
        for (int l2 = 0; l2 <= 6; ++l2) {
            bool feasible = true;
            try {
                (void)bound_audit(l1, l2, 1, 1, 1);
            } catch (const MathError&) {
                feasible = false;
            }
            CHECK(feasible == (l1 + l2 <= 4));
        }

    // monotone in every tally, never above 20
    for (int s = 1; s <= 3; ++s)
        for (int l1 = 0; l1 <= 8; ++l1)
            for (int l2 = 0; l2 <= 8; ++l2)
                for (int l3 = 0; l3 <= 2; ++l3)
                    for (int l4 = 0; l4 <= 2; ++l4) {
                        BoundAudit base;
                        try {
                            base = bound_audit(l1, l2, l3, l4, s);
                        } catch (const MathError&) {
                            continue;
                        }
                        CHECK(base.max_theta <= 20);
                        int ls[4] = {l1, l2, l3, l4};
                        for (int j = 0; j < 4; ++j) {
                            int up[4] = {ls[0], ls[1], ls[2], ls[3]};
                            ++up[j];
                            try {
                                auto next = bound_audit(up[0], up[1], up[2], up[3], s);
                                CHECK(next.plane_cap >= base.plane_cap);
                                CHECK(next.max_theta >= base.max_theta);
                            } catch (const MathError&) {
                            }
                        }
                    }
}

TEST_CASE("points on several members: cusp at n_p = 2, multiplicity n_p at 3 and 4") {
    // planes through e0, pairwise meeting only there
    auto w = coordinate_subspace(6, {0, 1, 2});
    std::vector<QSubspace> through{
        coordinate_subspace(6, {0, 3, 4}),
        subspace_from_rows(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 0}}),
        subspace_from_rows(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 0}}),
        subspace_from_rows(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}})};
    const std::vector<Rational> e0{1, 0, 0, 0, 0, 0};
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<QSubspace> mem{w};
        mem.insert(mem.end(), through.begin(), through.begin() + static_cast<long>(n));
        auto a = lagrangian_complete(isotropic_span(PlaneFamily(6, mem)), 1);
        for (const auto& m : mem) REQUIRE(a.contains(plucker(m).coords));
        auto c = curve_equation(a, w);
        REQUIRE_FALSE(c.plane);
        auto rep = singularity_report(c, mem);
        REQUIRE(rep.points.size() == 1);
        const auto& pt = rep.points[0];
        CHECK(pt.n_p == n);
        CHECK(rep.ell[n - 1] == 1);

        // lowest order of c along a few lines through the point
        auto x0 = frame_coordinates(c.frame, e0);
        auto chart = standard_chart(x0);
        auto parts = taylor_parts(c.c, x0, chart);
        int order = 0;
        while (parts[static_cast<std::size_t>(order)].is_zero()) ++order;
        Rng rng(n);
        for (int i = 0; i < 4; ++i) {
            auto u = rng.vector(2);
            if (u[0].is_zero() && u[1].is_zero()) continue;
            // the parts are forms in the chart variables: the first nonzero value along u gives the order on that line
            int along = 0;
            while (along < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(along)].evaluate(u).is_zero()) ++along;
            CHECK(along >= order);
        }
        CHECK(pt.multiplicity == order);
        if (n == 2) {
            // quadratic part a s^2 + b s t + c t^2 with vanishing discriminant
            REQUIRE(order == 2);
            const auto& q = parts[2];
            auto disc = q.coeff({1, 1}) * q.coeff({1, 1}) - Rational(4) * q.coeff({2, 0}) * q.coeff({0, 2});
            CHECK(disc.is_zero());
            CHECK(pt.cusp);
        } else {
            CHECK(pt.multiplicity == static_cast<int>(n));
        }
    }
}
