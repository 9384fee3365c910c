#include "epw/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "epw/parallel.hpp"
#include "epw/random.hpp"

namespace epw {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) fail(ErrorCode::InvalidArgument, "exponent length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Exponent& MultiPoly::leading_exponent() const {
    if (terms_.empty()) fail(ErrorCode::ZeroInput, "zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) fail(ErrorCode::ZeroInput, "zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Rational MultiPoly::evaluate(std::span<const Rational> x) const {
    if (x.size() != nvars_) fail(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
    int d = std::max(degree(), 0);
    std::vector<std::vector<Rational>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        powers[i].push_back(Rational(1));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x[i]);
    }
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c.value();
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= powers[i][e[i]].value();
        acc += t;
    }
    return Rational(acc);
}

std::uint32_t MultiPoly::evaluate_mod(std::span<const std::uint32_t> x, const PrimeField& f) const {
    if (x.size() != nvars_) fail(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
    std::uint32_t acc = 0;
    for (const auto& [e, c] : terms_) {
        auto t = f.from_rational(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = f.mul(t, x[i]);
        acc = f.add(acc, t);
    }
    return acc;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return leading_coeff().inverse() * *this;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class l = 1, g = 0;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    for (const auto& [e, c] : terms_) {
        mpz_class num = c.numerator() * (l / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(l, g);
    if (leading_coeff().sign() < 0) scale = -scale;
    return scale * *this;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool is_const = total_degree(e) == 0;
        bool wrote = false;
        if (is_const || !(mag == Rational(1))) {
            out << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (wrote) out << "*";
            out << "x" << i;
            if (e[i] > 1) out << "^" << e[i];
            wrote = true;
        }
    }
    return out.str();
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) fail(ErrorCode::InvalidArgument, "polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
    MultiPoly out(a.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * x);
    return out;
}

MultiPoly pow(const MultiPoly& f, int e) {
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
    MultiPoly out = MultiPoly::constant(f.nvars(), Rational(1));
    for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    // lex-descending enumeration of compositions of d into n parts
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    rec(0, d);
    return out;
}

namespace {

using TermList = std::vector<std::pair<const Exponent*, const Rational*>>;

// Horner evaluation of f at linear forms, one variable at a time.
MultiPoly substitute_rec(const TermList& terms, std::size_t var, const std::vector<MultiPoly>& forms,
                         std::size_t k) {
    if (terms.empty()) return MultiPoly(k);
    if (var == forms.size()) {
        Rational s(0);
        for (const auto& t : terms) s += *t.second;
        return MultiPoly::constant(k, s);
    }
    std::map<int, TermList> groups;
    for (const auto& t : terms) groups[(*t.first)[var]].push_back(t);
    int top = groups.rbegin()->first;
    MultiPoly acc(k);
    for (int e = top; e >= 0; --e) {
        if (!acc.is_zero()) acc = acc * forms[var];
        auto it = groups.find(e);
        if (it != groups.end()) acc += substitute_rec(it->second, var + 1, forms, k);
    }
    return acc;
}

}  // namespace

MultiPoly substitute_linear(const MultiPoly& f, const Matrix<Rational>& m) {
    if (m.rows() != f.nvars()) fail(ErrorCode::InvalidArgument, "substitution matrix has the wrong row count");
    const std::size_t k = m.cols();
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        MultiPoly l(k);
        for (std::size_t j = 0; j < k; ++j) {
            Exponent e(k, 0);
            e[j] = 1;
            l.add_term(e, m(i, j));
        }
        forms.push_back(std::move(l));
    }
    TermList terms;
    for (const auto& [e, c] : f.terms()) terms.emplace_back(&e, &c);
    return substitute_rec(terms, 0, forms, k);
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

// ---------------------------------------------------------------------------

namespace {

struct SimplexLattice {
    std::size_t m = 0;  // chart variables
    int d = 0;
    std::vector<Exponent> points;
    std::vector<std::vector<std::size_t>> prev;   // prev[i][idx]: index of a - e_i
    std::vector<std::vector<std::size_t>> next;   // next[i][idx]: index of a + e_i
    std::vector<std::vector<std::size_t>> order;  // indices sorted by a_i descending
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

SimplexLattice make_lattice(std::size_t m, int d) {
    SimplexLattice lat;
    lat.m = m;
    lat.d = d;
    for (int k = 0; k <= d; ++k)
        for (auto& e : monomials_of_degree(m, k)) lat.points.push_back(std::move(e));
    if (m == 0) lat.points.assign(1, Exponent{});
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < lat.points.size(); ++i) index.emplace(lat.points[i], i);
    lat.prev.assign(m, std::vector<std::size_t>(lat.points.size(), SimplexLattice::npos));
    lat.next.assign(m, std::vector<std::size_t>(lat.points.size(), SimplexLattice::npos));
    lat.order.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t idx = 0; idx < lat.points.size(); ++idx) {
            Exponent a = lat.points[idx];
            if (a[i] > 0) {
                --a[i];
                lat.prev[i][idx] = index.at(a);
                ++a[i];
            }
            ++a[i];
            if (auto it = index.find(a); it != index.end()) lat.next[i][idx] = it->second;
        }
        auto& ord = lat.order[i];
        ord.resize(lat.points.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(),
                         [&](std::size_t x, std::size_t y) { return lat.points[x][i] > lat.points[y][i]; });
    }
    return lat;
}

// Signed Stirling numbers of the first kind s(k, j), k <= d.
std::vector<std::vector<long>> stirling_first(int d) {
    if (d > 20) fail(ErrorCode::DegreeOverflow, "interpolation degree above 20 is not supported");
    std::vector<std::vector<long>> s(d + 1, std::vector<long>(d + 1, 0));
    s[0][0] = 1;
    for (int k = 0; k < d; ++k)
        for (int j = 1; j <= k + 1; ++j) s[k + 1][j] = s[k][j - 1] - static_cast<long>(k) * s[k][j];
    return s;
}

// Values on the lattice -> coefficients of the chart monomials a^j, in place.
template <class F>
void values_to_monomials(const F& f, const SimplexLattice& lat, std::vector<typename F::Element>& c) {
    using E = typename F::Element;
    for (std::size_t i = 0; i < lat.m; ++i)
        for (int r = 1; r <= lat.d; ++r)
            for (auto idx : lat.order[i]) {
                if (lat.points[idx][i] < r) break;
                c[idx] = f.sub(c[idx], c[lat.prev[i][idx]]);
            }
    // binomial basis -> monomial basis: binom(x, k) = sum_j s(k, j) x^j / k!
    auto s = stirling_first(lat.d);
    std::vector<std::vector<E>> conv(lat.d + 1, std::vector<E>(lat.d + 1, f.zero()));
    E fact = f.one();
    for (int k = 0; k <= lat.d; ++k) {
        if (k > 0) fact = f.mul(fact, f.from_int(k));
        auto inv = f.inv(fact);
        for (int j = 0; j <= k; ++j) conv[k][j] = f.mul(f.from_int(s[k][j]), inv);
    }
    std::vector<std::size_t> line;
    std::vector<E> buf;
    for (std::size_t i = 0; i < lat.m; ++i)
        for (std::size_t start = 0; start < lat.points.size(); ++start) {
            if (lat.points[start][i] != 0) continue;
            line.clear();
            for (auto idx = start; idx != SimplexLattice::npos; idx = lat.next[i][idx]) line.push_back(idx);
            buf.assign(line.size(), f.zero());
            for (std::size_t k = 0; k < line.size(); ++k) {
                if (f.is_zero(c[line[k]])) continue;
                for (std::size_t j = 0; j <= k; ++j)
                    buf[j] = f.add(buf[j], f.mul(c[line[k]], conv[k][j]));
            }
            for (std::size_t k = 0; k < line.size(); ++k) c[line[k]] = buf[k];
        }
}

Exponent homogenize(const Exponent& a, int d) {
    Exponent e;
    e.reserve(a.size() + 1);
    e.push_back(d - total_degree(a));
    e.insert(e.end(), a.begin(), a.end());
    return e;
}

void check_interp_args(int d, std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "interpolation needs at least one variable");
    if (d < 0) fail(ErrorCode::InvalidArgument, "negative degree");
}

}  // namespace

std::vector<Exponent> interpolation_nodes(std::size_t n, int d) {
    check_interp_args(d, n);
    auto lat = make_lattice(n - 1, d);
    std::vector<Exponent> out;
    for (const auto& a : lat.points) {
        Exponent x{1};
        x.insert(x.end(), a.begin(), a.end());
        out.push_back(std::move(x));
    }
    return out;
}

MultiPoly interpolate_homogeneous(const Evaluator& f, int d, std::size_t n, unsigned threads, std::uint64_t seed) {
    check_interp_args(d, n);
    auto lat = make_lattice(n - 1, d);
    std::vector<Rational> c(lat.points.size());
    parallel_for(lat.points.size(), threads, [&](std::size_t idx) {
        std::vector<Rational> x{Rational(1)};
        for (int a : lat.points[idx]) x.emplace_back(a);
        c[idx] = f(x);
    });
    values_to_monomials(RationalField{}, lat, c);
    MultiPoly out(n);
    for (std::size_t idx = 0; idx < lat.points.size(); ++idx) out.add_term(homogenize(lat.points[idx], d), c[idx]);
    Rng rng(seed);
    for (int check = 0; check < 2; ++check) {
        auto x = rng.vector(n, -9, 9);
        if (!(out.evaluate(x) == f(x)))
            fail(ErrorCode::InconsistentEvaluations, "held-out evaluation disagrees with the interpolant");
    }
    return out;
}

std::vector<std::uint32_t> interpolate_homogeneous_modp(const ModEvaluator& f, int d, std::size_t n,
                                                        const PrimeField& field, unsigned threads,
                                                        std::uint64_t seed) {
    check_interp_args(d, n);
    if (field.p <= static_cast<std::uint32_t>(d))
        fail(ErrorCode::InvalidArgument, "interpolation mod p needs p > degree");
    auto lat = make_lattice(n - 1, d);
    std::vector<std::uint32_t> c(lat.points.size());
    parallel_for(lat.points.size(), threads, [&](std::size_t idx) {
        std::vector<std::uint32_t> x{1};
        for (int a : lat.points[idx]) x.push_back(static_cast<std::uint32_t>(a));
        c[idx] = f(x, field);
    });
    values_to_monomials(field, lat, c);
    auto monos = monomials_of_degree(n, d);
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < monos.size(); ++i) pos.emplace(monos[i], i);
    std::vector<std::uint32_t> out(monos.size(), 0);
    for (std::size_t idx = 0; idx < lat.points.size(); ++idx) out[pos.at(homogenize(lat.points[idx], d))] = c[idx];
    Rng rng(seed);
    for (int check = 0; check < 2; ++check) {
        std::vector<std::uint32_t> x(n);
        for (auto& xi : x) xi = static_cast<std::uint32_t>(rng.next() % field.p);
        std::uint32_t value = 0;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (!out[i]) continue;
            auto t = out[i];
            for (std::size_t v = 0; v < n; ++v)
                for (int k = 0; k < monos[i][v]; ++k) t = field.mul(t, x[v]);
            value = field.add(value, t);
        }
        if (value != f(x, field))
            fail(ErrorCode::InconsistentEvaluations, "held-out evaluation disagrees with the interpolant mod " +
                                                         std::to_string(field.p));
    }
    return out;
}

MultiprimeResult interpolate_homogeneous_multiprime(const ModEvaluator& f, int d, std::size_t n,
                                                    const MultiprimeOptions& options) {
    check_interp_args(d, n);
    auto monos = monomials_of_degree(n, d);
    CrtAccumulator acc(monos.size());
    MultiprimeResult result;
    std::optional<std::vector<Rational>> previous;
    // Skipped bad primes are drawn from the same descending list.
    for (auto p : large_primes(options.max_primes)) {
        std::vector<std::uint32_t> coeffs;
        try {
            coeffs = interpolate_homogeneous_modp(f, d, n, PrimeField(p), options.threads, options.seed + p);
        } catch (const MathError& e) {
            if (e.code() == ErrorCode::BadReduction) continue;
            throw;
        }
        acc.add(coeffs, p);
        result.primes.push_back(p);
        std::optional<std::vector<Rational>> current =
            options.integral ? std::optional(acc.lift_integers()) : acc.reconstruct();
        if (current && previous && *current == *previous) {
            MultiPoly out(n);
            for (std::size_t i = 0; i < monos.size(); ++i) out.add_term(monos[i], (*current)[i]);
            if (options.exact_check) {
                Rng rng(options.seed);
                for (int check = 0; check < 2; ++check) {
                    auto x = rng.vector(n, -9, 9);
                    if (!(out.evaluate(x) == (*options.exact_check)(x)))
                        fail(ErrorCode::InconsistentEvaluations, "exact evaluation disagrees with the lifted polynomial");
                }
            }
            result.poly = std::move(out);
            return result;
        }
        previous = std::move(current);
    }
    fail(ErrorCode::NoReconstruction, "coefficients did not stabilize within the prime budget");
}

// ---------------------------------------------------------------------------

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) fail(ErrorCode::InvalidArgument, "polynomials have different variable counts");
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const auto& eg = g.leading_exponent();
    const auto cg_inv = g.leading_coeff().inverse();
    MultiPoly q(f.nvars()), r = f;
    Exponent e(f.nvars()), shifted(f.nvars());
    while (!r.is_zero()) {
        const auto& er = r.leading_exponent();
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eg[i];
            if (e[i] < 0) fail(ErrorCode::NotDivisible, "remainder does not vanish");
        }
        Rational c = r.leading_coeff() * cg_inv;
        q.add_term(e, c);
        for (const auto& [et, ct] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] + et[i];
            r.add_term(shifted, -(c * ct));
        }
    }
    return q;
}

std::vector<MultiPoly> taylor_parts(const MultiPoly& f, std::span<const Rational> v0, const Matrix<Rational>& chart) {
    const std::size_t n = f.nvars();
    if (v0.size() != n || chart.cols() != n || chart.rows() + 1 != n)
        fail(ErrorCode::BadChart, "chart must consist of n-1 vectors of the ambient space");
    if (!f.is_homogeneous()) fail(ErrorCode::InvalidArgument, "taylor_parts expects a homogeneous polynomial");
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        m(i, 0) = v0[i];
        for (std::size_t j = 0; j + 1 < n; ++j) m(i, j + 1) = chart(j, i);
    }
    if (rank(RationalField{}, m) != n) fail(ErrorCode::BadChart, "chart does not complement the base point");
    auto h = substitute_linear(f, m);
    int d = f.degree();
    if (d < 0) return {};
    std::vector<MultiPoly> parts(d + 1, MultiPoly(n - 1));
    for (const auto& [e, c] : h.terms()) {
        Exponent w(e.begin() + 1, e.end());
        parts[total_degree(w)].add_term(w, c);
    }
    return parts;
}

Matrix<Rational> quadratic_form_matrix(const MultiPoly& q) {
    const std::size_t k = q.nvars();
    Matrix<Rational> m(k, k, Rational(0));
    for (const auto& [e, c] : q.terms()) {
        if (total_degree(e) != 2) fail(ErrorCode::InvalidArgument, "not a quadratic form");
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            for (int t = 0; t < e[i]; ++t) idx.push_back(i);
        if (idx[0] == idx[1]) {
            m(idx[0], idx[0]) = c;
        } else {
            m(idx[0], idx[1]) = m(idx[1], idx[0]) = c / Rational(2);
        }
    }
    return m;
}

TangentCone tangent_cone(const MultiPoly& f, std::span<const Rational> v0, const Matrix<Rational>& chart) {
    if (!f.evaluate(v0).is_zero()) fail(ErrorCode::NotOnHypersurface, "polynomial does not vanish at the point");
    auto parts = taylor_parts(f, v0, chart);
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (parts[m].is_zero()) continue;
        TangentCone cone;
        cone.multiplicity = static_cast<int>(m);
        cone.lowest = parts[m];
        if (m == 2) cone.quadratic_rank = rank(RationalField{}, quadratic_form_matrix(parts[m]));
        return cone;
    }
    fail(ErrorCode::ZeroInput, "polynomial vanishes identically");
}

// ---------------------------------------------------------------------------

namespace {

void trim(std::vector<Rational>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

void make_monic(std::vector<Rational>& a) {
    if (a.empty()) return;
    auto inv = a.back().inverse();
    for (auto& x : a) x *= inv;
}

}  // namespace

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b);
        // a <- a mod b
        while (a.size() >= b.size()) {
            Rational c = a.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    make_monic(a);
    return a;
}

namespace {

struct UnluckyPoint {};

MultiPoly gcd_homogeneous(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed) {
    const std::size_t n = f.nvars();
    const int df = f.degree(), dg = g.degree();
    if (df == 0 || dg == 0) return MultiPoly::constant(n, Rational(1));
    if (n == 1) {
        Exponent e{std::min(df, dg)};
        return MultiPoly::monomial(e, Rational(1));
    }
    const RationalField q;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(seed + 7919u * attempt);
        Matrix<Rational> m;
        std::vector<Rational> col0(n);
        while (true) {
            m = rng.full_rank(n, n, -3, 3);
            for (std::size_t i = 0; i < n; ++i) col0[i] = m(i, 0);
            if (!f.evaluate(col0).is_zero() && !g.evaluate(col0).is_zero()) break;
        }
        // y0 now has constant leading coefficient in both
        auto fm = substitute_linear(f, m);
        auto gm = substitute_linear(g, m);
        auto collapse = [&](const MultiPoly& p, std::span<const Rational> b) {
            std::vector<Rational> u(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
            for (const auto& [e, c] : p.terms()) {
                Rational t = c;
                for (std::size_t i = 1; i < n; ++i)
                    for (int k = 0; k < e[i]; ++k) t *= b[i - 1];
                u[static_cast<std::size_t>(e[0])] += t;
            }
            return u;
        };
        std::map<std::vector<std::string>, std::vector<Rational>> cache;
        std::mutex cache_mutex;
        auto gcd_at = [&](std::span<const Rational> b) {
            std::vector<std::string> key;
            for (const auto& x : b) key.push_back(x.str());
            {
                std::lock_guard lock(cache_mutex);
                if (auto it = cache.find(key); it != cache.end()) return it->second;
            }
            auto u = univariate_gcd(collapse(fm, b), collapse(gm, b));
            std::lock_guard lock(cache_mutex);
            cache.emplace(key, u);
            return u;
        };
        int degree = std::min(df, dg);
        for (int probe = 0; probe < 3; ++probe) {
            auto b = rng.vector(n - 1, -20, 20);
            degree = std::min(degree, static_cast<int>(gcd_at(b).size()) - 1);
        }
        if (degree == 0) return MultiPoly::constant(n, Rational(1));
        try {
            MultiPoly h(n);
            for (int j = 0; j <= degree; ++j) {
                auto coeff = [&](std::span<const Rational> b) {
                    auto u = gcd_at(b);
                    if (static_cast<int>(u.size()) - 1 != degree) throw UnluckyPoint{};
                    return u[static_cast<std::size_t>(j)];
                };
                auto hj = interpolate_homogeneous(coeff, degree - j, n - 1, 1, seed + static_cast<std::uint64_t>(j));
                for (const auto& [e, c] : hj.terms()) {
                    Exponent full{j};
                    full.insert(full.end(), e.begin(), e.end());
                    h.add_term(full, c);
                }
            }
            // back to the original coordinates
            Matrix<Rational> inv(n, n, Rational(0));
            for (std::size_t col = 0; col < n; ++col) {
                std::vector<Rational> unit(n, Rational(0));
                unit[col] = Rational(1);
                auto x = solve(q, m, std::span<const Rational>(unit));
                for (std::size_t row = 0; row < n; ++row) inv(row, col) = (*x)[row];
            }
            auto candidate = substitute_linear(h, inv).monic();
            exact_divide(f, candidate);
            exact_divide(g, candidate);
            return candidate;
        } catch (const UnluckyPoint&) {
            continue;
        } catch (const MathError& e) {
            if (e.code() == ErrorCode::NotDivisible || e.code() == ErrorCode::InconsistentEvaluations) continue;
            throw;
        }
    }
    fail(ErrorCode::InternalInconsistency, "gcd evaluation did not stabilize");
}

MultiPoly homogenize_poly(const MultiPoly& f, int d) {
    MultiPoly out(f.nvars() + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponent h = e;
        h.push_back(d - total_degree(e));
        out.add_term(h, c);
    }
    return out;
}

}  // namespace

MultiPoly gcd_multivariate(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed) {
    if (f.nvars() != g.nvars()) fail(ErrorCode::InvalidArgument, "polynomials have different variable counts");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_homogeneous() && g.is_homogeneous()) return gcd_homogeneous(f, g, seed);
    auto h = gcd_homogeneous(homogenize_poly(f, f.degree()), homogenize_poly(g, g.degree()), seed);
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : h.terms()) out.add_term(Exponent(e.begin(), e.end() - 1), c);
    return out.monic();
}

}  // namespace epw
