#include "epw/planes.hpp"

#include <algorithm>

#include "epw/random.hpp"
#include "epw/rref_enum.hpp"

namespace epw {

namespace {

const RationalField kQ{};

// rank of a rows x cols matrix over F_p, rows <= 3, cols <= 8
int small_rank(const PrimeField& f, std::uint32_t (&m)[3][8], int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) std::swap(m[sel][j], m[r][j]);
        auto inv = f.inv(m[r][c]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            auto factor = f.mul(m[i][c], inv);
            for (int j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

// dim(W ∩ M) >= 1 where ann holds a basis of M's annihilator
bool meets(const PrimeField& f, const Matrix<std::uint32_t>& w, const Matrix<std::uint32_t>& ann) {
    std::uint32_t m[3][8];
    const int rows = static_cast<int>(w.rows());
    const int cols = static_cast<int>(ann.rows());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < w.cols(); ++c) acc += static_cast<std::uint64_t>(w(i, c)) * ann(j, c);
            m[i][j] = static_cast<std::uint32_t>(acc % f.p);
        }
    return small_rank(f, m, rows, cols) < rows;
}

std::vector<PSubspace> enumerate_meeting(const PlaneFamily& family, std::uint32_t p, int k, unsigned threads) {
    PrimeField fp(p);
    auto reduced = reduce_family(family, p);
    std::vector<Matrix<std::uint32_t>> anns;
    for (const auto& m : reduced) anns.push_back(m.annihilator().basis());
    const int n = static_cast<int>(family.ambient());
    if (n > 8) fail(ErrorCode::InvalidArgument, "enumeration supports ambient dimension <= 8");
    auto found = parallel_over_patterns<Matrix<std::uint32_t>>(n, k, threads, [&](const std::vector<int>& piv) {
        std::vector<Matrix<std::uint32_t>> out;
        for_each_rref_with_pivots(n, piv, p, [&](const Matrix<std::uint32_t>& w) {
            for (const auto& ann : anns)
                if (!meets(fp, w, ann)) return;
            out.push_back(w);
        });
        return out;
    });
    std::sort(found.begin(), found.end(), basis_less);
    std::vector<PSubspace> out;
    out.reserve(found.size());
    for (auto& m : found) out.emplace_back(fp, std::move(m));
    return out;
}

}  // namespace

PlaneFamily::PlaneFamily(std::size_t ambient, std::vector<QSubspace> members)
    : ambient_(ambient), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].ambient() != ambient_) fail(ErrorCode::MixedAmbient, "member has a different ambient space");
        if (members_[i].dim() != 3) fail(ErrorCode::WrongDimension, "family members must be 3-dimensional");
        for (std::size_t j = 0; j < i; ++j)
            if (members_[i] == members_[j]) fail(ErrorCode::InvalidArgument, "family members must be distinct");
    }
}

QSubspace subspace_from_rows(std::size_t ambient, const std::vector<std::vector<long>>& rows) {
    Matrix<Rational> m(0, ambient);
    for (const auto& r : rows) {
        std::vector<Rational> row(r.begin(), r.end());
        m.append_row(row);
    }
    return QSubspace(kQ, std::move(m));
}

QSubspace coordinate_subspace(std::size_t ambient, std::initializer_list<int> indices) {
    Matrix<Rational> m(0, ambient);
    for (int i : indices) {
        std::vector<Rational> row(ambient, Rational(0));
        row[static_cast<std::size_t>(i)] = Rational(1);
        m.append_row(row);
    }
    return QSubspace(kQ, std::move(m));
}

FamilyReport family_report(const PlaneFamily& family) {
    FamilyReport rep;
    rep.size = family.size();
    rep.ambient = family.ambient();
    const auto n = family.size();
    rep.intersection_dims.assign(n, std::vector<int>(n, 3));
    rep.incidence.assign(n, std::vector<bool>(n, true));
    QSubspace span(kQ, family.ambient());
    for (std::size_t i = 0; i < n; ++i) {
        span = sum(span, family[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            int d = static_cast<int>(intersection_dimension(family[i], family[j]));
            rep.intersection_dims[i][j] = rep.intersection_dims[j][i] = d;
            bool inc = d >= 1;
            rep.incidence[i][j] = rep.incidence[j][i] = inc;
            ++rep.total_pairs;
            if (inc) ++rep.incident_pairs;
            rep.all_incident = rep.all_incident && inc;
            if (d != 1) rep.all_point_intersections = false;
            if (d == 2) rep.line_pairs.emplace_back(i, j);
        }
    }
    rep.not_finitely_completable = !rep.line_pairs.empty();
    rep.span_dim = span.dim();
    return rep;
}

PlaneFamily fano_family() {
    std::vector<QSubspace> members = {
        coordinate_subspace(7, {0, 1, 2}), coordinate_subspace(7, {2, 3, 4}), coordinate_subspace(7, {0, 4, 5}),
        coordinate_subspace(7, {1, 3, 5}), coordinate_subspace(7, {0, 3, 6}), coordinate_subspace(7, {1, 4, 6}),
        coordinate_subspace(7, {2, 5, 6}),
    };
    return PlaneFamily(7, std::move(members));
}

PlaneFamily fano_four_planes() {
    std::vector<QSubspace> members = {
        coordinate_subspace(6, {0, 1, 2}),
        coordinate_subspace(6, {2, 3, 4}),
        coordinate_subspace(6, {0, 4, 5}),
        coordinate_subspace(6, {1, 3, 5}),
    };
    return PlaneFamily(6, std::move(members));
}

std::array<std::array<int, 3>, 7> fano_f2_labels() {
    return {{{0, 1, 0}, {0, 1, 1}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}};
}

std::vector<PSubspace> reduce_family(const PlaneFamily& family, std::uint32_t p) {
    std::vector<PSubspace> out;
    for (const auto& m : family.members()) out.push_back(reduce_subspace(m, p));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (out[i] == out[j])
                fail(ErrorCode::BadReduction, "members " + std::to_string(j) + " and " + std::to_string(i) +
                                                  " coincide mod " + std::to_string(p));
            if (intersection_dimension(out[i], out[j]) != intersection_dimension(family[i], family[j]))
                fail(ErrorCode::BadReduction, "intersection dimension changes mod " + std::to_string(p));
        }
    return out;
}

std::vector<PSubspace> enumerate_incident_planes_modp(const PlaneFamily& family, std::uint32_t p, unsigned threads) {
    return enumerate_meeting(family, p, 3, threads);
}

std::vector<PSubspace> enumerate_incident_lines_modp(const PlaneFamily& family, std::uint32_t p, unsigned threads) {
    if (family.ambient() != 6 && family.size() > 0)
        fail(ErrorCode::WrongAmbient, "line enumeration is defined for ambient dimension 6");
    if (family.size() == 0) {
        PlaneFamily empty6(6, {});
        return enumerate_meeting(empty6, p, 2, threads);
    }
    return enumerate_meeting(family, p, 2, threads);
}

std::vector<Matrix<Rational>> quadrics_through(const PlaneFamily& family) {
    const std::size_t n = family.ambient();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) unknowns.emplace_back(a, b);
    Matrix<Rational> system(0, unknowns.size());
    for (const auto& m : family.members()) {
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = i; j < m.dim(); ++j) {
                auto x = m.vector(i), y = m.vector(j);
                std::vector<Rational> row;
                for (auto [a, b] : unknowns)
                    row.push_back(a == b ? x[a] * y[a] : x[a] * y[b] + x[b] * y[a]);
                system.append_row(row);
            }
    }
    Matrix<Rational> ker = system.rows() ? kernel(kQ, system) : Matrix<Rational>(0, unknowns.size());
    if (system.rows() == 0) {
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            std::vector<Rational> e(unknowns.size(), Rational(0));
            e[u] = Rational(1);
            ker.append_row(e);
        }
    }
    std::vector<Matrix<Rational>> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Matrix<Rational> g(n, n, Rational(0));
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            auto [a, b] = unknowns[u];
            g(a, b) = g(b, a) = ker(r, u);
        }
        out.push_back(std::move(g));
    }
    return out;
}

MorinFlags morin_classify(const PlaneFamily& family, const std::optional<QSubspace>& witness) {
    MorinFlags flags;
    if (family.size() == 0) return flags;
    QSubspace common = family[0];
    QSubspace span(kQ, family.ambient());
    for (const auto& m : family.members()) {
        common = intersect(common, m);
        span = sum(span, m);
    }
    flags.common_point = common.dim() >= 1;
    flags.in_four_space = span.dim() <= 5;
    if (witness) {
        flags.witness_plane = std::all_of(family.members().begin(), family.members().end(), [&](const QSubspace& m) {
            return intersection_dimension(*witness, m) >= 2;
        });
    }
    if (family.ambient() == 6) {
        auto quadrics = quadrics_through(family);
        std::optional<Matrix<Rational>> smooth;
        for (const auto& q : quadrics)
            if (rank(kQ, q) == 6) {
                smooth = q;
                break;
            }
        Rng rng(0x51u);
        for (int attempt = 0; attempt < 8 && !smooth && quadrics.size() > 1; ++attempt) {
            Matrix<Rational> g(6, 6, Rational(0));
            for (const auto& q : quadrics) {
                Rational c(rng.uniform(-5, 5));
                for (std::size_t a = 0; a < 6; ++a)
                    for (std::size_t b = 0; b < 6; ++b) g(a, b) += c * q(a, b);
            }
            if (rank(kQ, g) == 6) smooth = g;
        }
        bool odd = true;
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (intersection_dimension(family[i], family[j]) % 2 == 0) odd = false;
        if (smooth && odd) {
            flags.quadric_ruling = true;
            flags.quadric = smooth;
        }
    }
    return flags;
}

QSubspace i_plus(std::span<const Rational> u) {
    if (u.size() != 4) fail(ErrorCode::WrongDimension, "i_plus expects a vector of U = F^4");
    auto uu = vector_as_kvector(kQ, u);
    Matrix<Rational> rows(0, 6);
    for (int j = 0; j < 4; ++j) {
        std::vector<Rational> e(4, Rational(0));
        e[j] = Rational(1);
        auto w = wedge(kQ, uu, vector_as_kvector(kQ, std::span<const Rational>(e)));
        rows.append_row(w.coords);
    }
    QSubspace out(kQ, std::move(rows));
    if (out.dim() != 3) fail(ErrorCode::ZeroVector, "i_plus of the zero vector");
    return out;
}

std::string generator_mode_name(GeneratorMode mode) {
    switch (mode) {
        case GeneratorMode::CommonPoint: return "common-point";
        case GeneratorMode::WitnessPlane: return "witness-plane";
        case GeneratorMode::FourSpace: return "four-space";
        case GeneratorMode::QuadricRuling: return "quadric-ruling";
        case GeneratorMode::PointSharing: return "point-sharing";
    }
    return "unknown";
}

namespace {

QSubspace apply_linear(const Matrix<Rational>& g, const QSubspace& w) {
    Matrix<Rational> rows(0, g.rows());
    for (std::size_t i = 0; i < w.dim(); ++i) rows.append_row(apply(kQ, g, w.vector(i)));
    return QSubspace(kQ, std::move(rows));
}

bool already_present(const std::vector<QSubspace>& members, const QSubspace& w) {
    return std::any_of(members.begin(), members.end(), [&](const QSubspace& m) { return m == w; });
}

}  // namespace

PlaneFamily random_incident_family(std::uint64_t seed, int k, GeneratorMode mode) {
    if (k < 2) fail(ErrorCode::InvalidArgument, "random families need k >= 2");
    Rng rng(seed);
    std::vector<QSubspace> members;
    constexpr int kMaxAttempts = 5000;
    int attempts = 0;
    auto push = [&](QSubspace w) {
        ++attempts;
        if (w.dim() == 3 && !already_present(members, w)) members.push_back(std::move(w));
    };
    switch (mode) {
        case GeneratorMode::CommonPoint: {
            auto x = rng.nonzero_vector(6);
            while (static_cast<int>(members.size()) < k && attempts < kMaxAttempts) {
                Matrix<Rational> rows(0, 6);
                rows.append_row(x);
                rows.append_row(rng.vector(6));
                rows.append_row(rng.vector(6));
                push(QSubspace(kQ, std::move(rows)));
            }
            break;
        }
        case GeneratorMode::WitnessPlane: {
            auto plane = rng.full_rank(3, 6);
            while (static_cast<int>(members.size()) < k && attempts < kMaxAttempts) {
                auto coeffs = rng.full_rank(2, 3);
                Matrix<Rational> rows = multiply(kQ, coeffs, plane);
                rows.append_row(rng.vector(6));
                push(QSubspace(kQ, std::move(rows)));
            }
            break;
        }
        case GeneratorMode::FourSpace: {
            auto space = rng.full_rank(5, 6);
            while (static_cast<int>(members.size()) < k && attempts < kMaxAttempts)
                push(QSubspace(kQ, multiply(kQ, rng.full_rank(3, 5), space)));
            break;
        }
        case GeneratorMode::QuadricRuling: {
            auto g = rng.full_rank(6, 6, -2, 2);
            while (static_cast<int>(members.size()) < k && attempts < kMaxAttempts) {
                auto u = rng.nonzero_vector(4);
                push(apply_linear(g, i_plus(u)));
            }
            break;
        }
        case GeneratorMode::PointSharing: {
            auto a = rng.full_rank(6, 6);
            auto pt = [&](int i) { return std::vector<Rational>(a.row(i).begin(), a.row(i).end()); };
            auto span3 = [&](const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const std::vector<Rational>& z) {
                Matrix<Rational> rows(0, 6);
                rows.append_row(x);
                rows.append_row(y);
                rows.append_row(z);
                return QSubspace(kQ, std::move(rows));
            };
            push(span3(pt(0), pt(1), pt(2)));
            push(span3(pt(2), pt(3), pt(4)));
            if (k > 2) push(span3(pt(0), pt(4), pt(5)));
            // pool: base points, pairwise intersection points, random points of members
            while (static_cast<int>(members.size()) < k && attempts < kMaxAttempts) {
                std::vector<std::vector<Rational>> pool;
                for (int i = 0; i < 6; ++i) pool.push_back(pt(i));
                for (std::size_t i = 0; i < members.size(); ++i) {
                    for (std::size_t j = i + 1; j < members.size(); ++j) {
                        auto meet = intersect(members[i], members[j]);
                        for (std::size_t r = 0; r < meet.dim(); ++r)
                            pool.emplace_back(meet.vector(r).begin(), meet.vector(r).end());
                    }
                    auto c = rng.vector(3);
                    std::vector<Rational> v(6, Rational(0));
                    for (std::size_t r = 0; r < 3; ++r)
                        for (std::size_t col = 0; col < 6; ++col) v[col] += c[r] * members[i].vector(r)[col];
                    pool.push_back(v);
                }
                auto pick = [&] { return pool[rng.below(static_cast<std::uint32_t>(pool.size()))]; };
                auto cand = span3(pick(), pick(), pick());
                ++attempts;
                if (cand.dim() != 3 || already_present(members, cand)) continue;
                bool ok = std::all_of(members.begin(), members.end(),
                                      [&](const QSubspace& m) { return incident(cand, m); });
                if (ok) members.push_back(std::move(cand));
            }
            break;
        }
    }
    if (static_cast<int>(members.size()) < k)
        fail(ErrorCode::GenerationFailed, "could not generate " + std::to_string(k) + " planes in mode " +
                                              generator_mode_name(mode));
    members.resize(static_cast<std::size_t>(k));
    return PlaneFamily(6, std::move(members));
}

}  // namespace epw
