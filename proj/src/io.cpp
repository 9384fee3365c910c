#include "epw/io.hpp"

namespace epw::io {

namespace {

const RationalField kQ{};

const Json& unwrap(const Json& j) {
    if (j.is_object() && j.contains("result")) return j.at("result");
    return j;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

Json uint_list(const std::vector<std::uint32_t>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

Json vector_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("scalar must be a string \"n\" or \"n/d\"");
}

Json rows_to_json(const Matrix<Rational>& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

Matrix<Rational> rows_from_json(const Json& j, std::size_t cols) {
    if (!j.is_array()) bad("expected a list of rows");
    Matrix<Rational> m(0, cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) bad("row must have " + std::to_string(cols) + " entries");
        std::vector<Rational> v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        m.append_row(v);
    }
    return m;
}

Json to_json(const QSubspace& s) { return Json{{"basis", rows_to_json(s.basis())}}; }

Json to_json(const PlaneFamily& family) {
    Json planes = Json::array();
    for (const auto& m : family.members()) planes.push_back(to_json(m));
    return Json{{"ambient", family.ambient()}, {"planes", planes}};
}

PlaneFamily family_from_json(const Json& raw) {
    const auto& j = unwrap(raw);
    if (!j.is_object() || !j.contains("ambient") || !j.contains("planes")) bad("family needs \"ambient\" and \"planes\"");
    auto ambient = j.at("ambient").get<std::size_t>();
    if (ambient != 6 && ambient != 7) fail(ErrorCode::WrongAmbient, "ambient must be 6 or 7");
    std::vector<QSubspace> members;
    for (const auto& p : j.at("planes")) {
        if (!p.contains("basis")) bad("plane needs \"basis\"");
        auto rows = rows_from_json(p.at("basis"), ambient);
        if (rows.rows() != 3) bad("plane basis needs three rows");
        members.emplace_back(kQ, std::move(rows));
    }
    return PlaneFamily(ambient, std::move(members));
}

Json to_json(const LagrangianSubspace& a, const std::vector<QSubspace>& planes) {
    Json out{{"ambient", 6}, {"basis", rows_to_json(a.basis())}};
    if (!planes.empty()) {
        Json list = Json::array();
        for (const auto& w : planes) list.push_back(to_json(w));
        out["planes"] = list;
    }
    return out;
}

LagrangianFile lagrangian_from_json(const Json& raw) {
    const auto& j = unwrap(raw);
    if (!j.is_object() || !j.contains("basis")) bad("Lagrangian needs \"basis\"");
    if (j.contains("ambient") && j.at("ambient").get<int>() != 6) fail(ErrorCode::WrongAmbient, "Lagrangians live in ∧³F^6");
    auto rows = rows_from_json(j.at("basis"), 20);
    LagrangianFile out;
    out.a = LagrangianSubspace(QSubspace(kQ, std::move(rows)));
    if (j.contains("planes"))
        for (const auto& p : j.at("planes")) {
            auto rows3 = rows_from_json(p.at("basis"), 6);
            if (rows3.rows() != 3) bad("plane basis needs three rows");
            out.planes.emplace_back(kQ, std::move(rows3));
        }
    return out;
}

Json to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back(Json{{"exp", it->first}, {"coeff", to_json(it->second)}});
    return out;
}

MultiPoly poly_from_json(const Json& raw, std::size_t nvars) {
    const auto& j = unwrap(raw);
    const Json& terms = j.is_object() && j.contains("poly") ? j.at("poly") : j;
    if (!terms.is_array()) bad("polynomial must be a list of terms");
    MultiPoly out(nvars);
    for (const auto& t : terms) {
        auto e = t.at("exp").get<Exponent>();
        if (e.size() != nvars) bad("exponent has the wrong length");
        out.add_term(e, rational_from_json(t.at("coeff")));
    }
    return out;
}

Json to_json(const FamilyReport& r) {
    Json pairs = Json::array();
    for (const auto& [a, b] : r.line_pairs) pairs.push_back({a, b});
    return Json{{"size", r.size},
                {"ambient", r.ambient},
                {"incident_pairs", r.incident_pairs},
                {"total_pairs", r.total_pairs},
                {"all_incident", r.all_incident},
                {"all_point_intersections", r.all_point_intersections},
                {"span_dim", r.span_dim},
                {"intersection_dims", r.intersection_dims},
                {"line_pairs", pairs},
                {"not_finitely_completable", r.not_finitely_completable}};
}

Json to_json(const Certificate& c) {
    Json counts = Json::array();
    for (const auto& [p, n] : c.enumerated_counts) counts.push_back(Json{{"prime", p}, {"count", n}});
    Json out{{"verdict", verdict_name(c.verdict)},
             {"reason", c.reason},
             {"detector", c.detector},
             {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)},
             {"report", to_json(c.report)},
             {"isotropic_dim", c.isotropic_dim ? Json(*c.isotropic_dim) : Json(nullptr)},
             {"spanning_lagrangian", c.spanning_lagrangian},
             {"tangent_dims", c.tangent_dims},
             {"primes_checked", uint_list(c.primes_checked)},
             {"bad_primes", uint_list(c.bad_primes)},
             {"enumerated_counts", counts}};
    return out;
}

Json to_json(const EpwEquation& e) {
    std::vector<Rational> l(6, Rational(0));
    l[static_cast<std::size_t>(e.hyperplane)] = Rational(1);
    return Json{{"identically_zero", e.identically_zero},
                {"hyperplane", vector_json(l)},
                {"check_hyperplane", e.check_hyperplane},
                {"poly", to_json(e.y)},
                {"primes", uint_list(e.primes)},
                {"sample_prime", e.sample_prime},
                {"samples", e.samples},
                {"samples_on_locus", e.samples_on_locus}};
}

Json to_json(const CurveEquation& c) {
    return Json{{"plane", c.plane},
                {"poly", c.plane ? Json(nullptr) : to_json(c.c)},
                {"frame", rows_to_json(c.frame)},
                {"hyperplanes", c.hyperplanes},
                {"sample_prime", c.sample_prime},
                {"samples", c.samples},
                {"samples_on_curve", c.samples_on_curve}};
}

Json to_json(const CurveOracleReport& r) {
    return Json{{"prime", r.p}, {"points", r.points}, {"on_curve", r.on_curve}, {"oracle", r.oracle},
                {"mismatches", r.mismatches}};
}

Json to_json(const SingularityReport& r) {
    Json points = Json::array();
    for (const auto& p : r.points)
        points.push_back(Json{{"point", vector_json(p.coords)},
                              {"n_p", p.n_p},
                              {"multiplicity", p.multiplicity},
                              {"cusp", p.cusp},
                              {"quadratic_rank", p.quadratic_rank ? Json(*p.quadratic_rank) : Json(nullptr)}});
    return Json{{"points", points}, {"ell", r.ell}, {"components_assumed", r.components}};
}

Json to_json(const RoncisvalleReport& r) {
    return Json{{"prime", r.p},
                {"quotient_points", r.quotient_points},
                {"common_zeros", r.common_zeros},
                {"ambient_points", r.ambient_points},
                {"grassmannian_points", r.grassmannian_points},
                {"projected_points", r.projected_points},
                {"outside", r.outside},
                {"discrepancy", r.common_zeros - (r.projected_points - r.outside)},
                {"contained", r.contained}};
}

Json to_json(const BoundAudit& b) {
    Json constraints = Json::array();
    for (const auto& c : b.constraints)
        constraints.push_back(Json{{"name", c.name},
                                   {"statement", c.statement},
                                   {"applies", c.applies},
                                   {"holds", c.holds},
                                   {"binding", c.binding}});
    return Json{{"ell", b.ell},
                {"components_assumed", b.components},
                {"plane_cap", b.plane_cap},
                {"max_theta", b.max_theta},
                {"path", b.path},
                {"constraints", constraints}};
}

Json to_json(const Multiplicity& m) {
    return Json{{"intersection_dim", m.intersection_dim}, {"taylor_order", m.taylor_order}};
}

Json error_json(ErrorCode code, const std::string& message) {
    return Json{{"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

}  // namespace epw::io
