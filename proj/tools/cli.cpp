#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <gmp.h>
#include <openssl/evp.h>

#include "epw/curves.hpp"
#include "epw/epw.hpp"
#include "epw/io.hpp"
#include "epw/planes.hpp"

namespace epw::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

struct Context {
    std::istream* in = nullptr;
    std::vector<std::uint32_t> primes;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out_path;
    std::size_t ambient = 0;
    bool timing = false;

    Json inputs = Json::array();
    std::vector<std::uint32_t> primes_used;
    bool stdin_read = false;

    Json read_json(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_read) throw UsageError("standard input can be read only once");
            stdin_read = true;
            std::ostringstream buf;
            buf << in->rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f) throw UsageError("cannot read " + path);
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        inputs.push_back(Json{{"path", path}, {"sha256", sha256_hex(text)}});
        return io::parse(text);
    }

    std::vector<std::uint32_t> primes_or(std::vector<std::uint32_t> fallback) const {
        return primes.empty() ? fallback : primes;
    }
    void use_primes(const std::vector<std::uint32_t>& ps) { primes_used.insert(primes_used.end(), ps.begin(), ps.end()); }
};

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
    return v;
}

// Enumerated subspaces mod p are written with representatives 0..p-1 of their RREF entries.
Json residues_json(const std::vector<PSubspace>& list) {
    Json out = Json::array();
    for (const auto& s : list) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Json row = Json::array();
            for (auto x : s.vector(r)) row.push_back(std::to_string(x));
            rows.push_back(row);
        }
        out.push_back(Json{{"basis", rows}});
    }
    return out;
}

bool is_family_json(const Json& raw) {
    const Json& j = raw.is_object() && raw.contains("result") ? raw.at("result") : raw;
    return j.is_object() && j.contains("planes") && !j.contains("basis");
}

LagrangianSubspace require_lagrangian(const io::LagrangianFile& f) {
    if (!f.a) fail(ErrorCode::ParseError, "no Lagrangian in input");
    return *f.a;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Incident plane families, Lagrangians, EPW sextics and degeneracy curves", "epwtool"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    Context ctx;
    ctx.in = &in;
    std::map<std::string, std::function<Json()>> handlers;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--prime", ctx.primes, "prime for mod p checks (repeatable)")->check(CLI::Range(2u, 2147483647u));
        sub->add_option("--seed", ctx.seed, "seed for every random choice")->capture_default_str();
        sub->add_option("--threads", ctx.threads, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--out", ctx.out_path, "write JSON here instead of stdout");
        sub->add_option("--ambient", ctx.ambient, "ambient dimension")->check(CLI::IsMember({6, 7}));
        sub->add_flag("--timing", ctx.timing, "record wall-clock time in the manifest");
    };

    std::string input = "-";
    auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "input JSON file, - for stdin"); };

    // fano
    auto* fano = app.add_subcommand("fano", "the seven Fano planes (ambient 7) or the first four (ambient 6)");
    common(fano);
    handlers["fano"] = [&] {
        if (ctx.ambient == 6) return io::to_json(fano_four_planes());
        return io::to_json(fano_family());
    };

    // report
    auto* report = app.add_subcommand("report", "incidence report of a plane family");
    common(report);
    with_input(report);
    handlers["report"] = [&] { return io::to_json(family_report(io::family_from_json(ctx.read_json(input)))); };

    // lines
    auto* lines = app.add_subcommand("lines", "lines of P^5 meeting every member mod p");
    common(lines);
    with_input(lines);
    handlers["lines"] = [&] {
        auto family = io::family_from_json(ctx.read_json(input));
        auto primes = ctx.primes_or({2, 3, 5});
        ctx.use_primes(primes);
        Json per = Json::array();
        for (auto p : primes) {
            auto found = enumerate_incident_lines_modp(family, p, ctx.threads);
            per.push_back(Json{{"prime", p}, {"count", found.size()}, {"lines", residues_json(found)}});
        }
        return Json{{"enumerations", per}};
    };

    // complete
    auto* complete = app.add_subcommand("complete", "completeness certificate of a plane family");
    common(complete);
    with_input(complete);
    handlers["complete"] = [&] {
        auto family = io::family_from_json(ctx.read_json(input));
        auto primes = ctx.primes_or({2, 3});
        auto cert = completeness_certificate(family, primes, ctx.seed, ctx.threads);
        ctx.use_primes(cert.primes_checked);
        return io::to_json(cert);
    };

    // theta
    auto* theta = app.add_subcommand("theta", "planes incident to a family, or members of Theta_A, mod p");
    common(theta);
    with_input(theta);
    handlers["theta"] = [&] {
        auto j = ctx.read_json(input);
        auto primes = ctx.primes_or({2});
        ctx.use_primes(primes);
        Json per = Json::array();
        bool family = is_family_json(j);
        std::optional<PlaneFamily> fam;
        std::optional<LagrangianSubspace> a;
        if (family) fam = io::family_from_json(j);
        else a = require_lagrangian(io::lagrangian_from_json(j));
        for (auto p : primes) {
            auto found = family ? enumerate_incident_planes_modp(*fam, p, ctx.threads)
                                : theta_enumerate_modp(a->space(), p, ctx.threads);
            per.push_back(Json{{"prime", p}, {"count", found.size()}, {"planes", residues_json(found)}});
        }
        return Json{{"input", family ? "family" : "lagrangian"}, {"enumerations", per}};
    };

    // epw
    auto* epw_cmd = app.add_subcommand("epw", "EPW sextic of a Lagrangian");
    common(epw_cmd);
    with_input(epw_cmd);
    std::size_t samples = 200;
    epw_cmd->add_option("--samples", samples, "mod p membership samples")->capture_default_str();
    handlers["epw"] = [&] {
        auto a = require_lagrangian(io::lagrangian_from_json(ctx.read_json(input)));
        auto e = epw_equation(a, EpwOptions{ctx.threads, samples, ctx.seed});
        ctx.use_primes(e.primes);
        if (e.sample_prime) ctx.use_primes({e.sample_prime});
        return io::to_json(e);
    };

    // mult
    auto* mult = app.add_subcommand("mult", "multiplicity of the EPW sextic at a point");
    common(mult);
    with_input(mult);
    std::string point_text;
    mult->add_option("--point", point_text, "comma-separated coordinates, e.g. 1,0,0,0,0,1/2");
    handlers["mult"] = [&] {
        auto j = ctx.read_json(input);
        auto a = require_lagrangian(io::lagrangian_from_json(j));
        std::vector<Rational> v;
        const Json& body = j.contains("result") ? j.at("result") : j;
        if (!point_text.empty()) v = parse_point(point_text);
        else if (body.contains("point"))
            for (const auto& x : body.at("point")) v.push_back(io::rational_from_json(x));
        else throw UsageError("mult needs --point or a \"point\" entry in the input");
        if (v.size() != 6) fail(ErrorCode::WrongAmbient, "the point needs six coordinates");
        auto e = epw_equation(a, EpwOptions{ctx.threads, 200, ctx.seed});
        ctx.use_primes(e.primes);
        Json point = Json::array();
        for (const auto& x : v) point.push_back(io::to_json(x));
        Json result{{"point", point}, {"identically_zero", e.identically_zero}};
        if (!e.identically_zero) {
            auto m = epw_multiplicity(a, e.y, v);
            result["intersection_dim"] = m.intersection_dim;
            result["taylor_order"] = m.taylor_order;
        } else {
            result["intersection_dim"] = intersection_dim(a, F_of(v));
        }
        if (!ctx.primes.empty()) {
            ctx.use_primes(ctx.primes);
            result["theta_free_primes"] = ctx.primes;
            result["theta_free"] = theta_free_at(a, v, ctx.primes, ctx.threads);
        }
        return result;
    };

    // aplus
    auto* aplus = app.add_subcommand("aplus", "the Lagrangian A_+(U) spanned by the i_+ planes");
    common(aplus);
    handlers["aplus"] = [&] { return io::to_json(build_A_plus()); };

    // curve
    auto* curve = app.add_subcommand("curve", "degeneracy curve C_{W,A} of a member W of Theta_A");
    common(curve);
    std::string lagrangian_path;
    std::size_t member = 0;
    std::size_t components = 1;
    curve->add_option("--lagrangian", lagrangian_path, "Lagrangian JSON with a \"planes\" list")->required();
    curve->add_option("--member", member, "index into the planes list")->required();
    curve->add_option("--s", components, "number of irreducible components (assumed)")->capture_default_str();
    handlers["curve"] = [&] {
        auto file = io::lagrangian_from_json(ctx.read_json(lagrangian_path));
        auto a = require_lagrangian(file);
        if (member >= file.planes.size())
            fail(ErrorCode::InvalidArgument, "member index beyond the planes list");
        auto c = curve_equation(a, file.planes[member], CurveOptions{ctx.threads, 100, ctx.seed});
        if (c.sample_prime) ctx.use_primes({c.sample_prime});
        Json result{{"curve", io::to_json(c)}};
        if (!c.plane) {
            result["singularities"] = io::to_json(singularity_report(c, file.planes, components));
            Json oracle = Json::array();
            for (auto p : ctx.primes) oracle.push_back(io::to_json(curve_oracle_modp(a, c, p)));
            ctx.use_primes(ctx.primes);
            result["oracle"] = oracle;
        }
        return result;
    };

    // psi-check
    auto* psi = app.add_subcommand("psi-check", "zeros of the Pluecker quadratic forms against the projected Grassmannian");
    common(psi);
    handlers["psi-check"] = [&] {
        auto frame = random_psi_frame(ctx.seed);
        auto primes = ctx.primes_or({2, 3});
        ctx.use_primes(primes);
        Json reports = Json::array();
        bool contained = true;
        for (auto p : primes) {
            auto r = roncisvalle_check(frame, p);
            contained = contained && r.contained;
            reports.push_back(io::to_json(r));
        }
        Json v0 = Json::array();
        for (const auto& x : frame.v0) v0.push_back(io::to_json(x));
        return Json{{"frame", {{"v0", v0}, {"w0", io::rows_to_json(frame.w0)}, {"v0_space", io::rows_to_json(frame.v0_space)}}},
                    {"contained", contained},
                    {"reports", reports}};
    };

    // audit
    auto* audit = app.add_subcommand("audit", "inequality ledger bounding #Theta_A");
    common(audit);
    std::optional<int> l[4];
    std::optional<int> s_opt, delta, l34;
    bool maximize = false;
    audit->add_option("--l1", l[0]);
    audit->add_option("--l2", l[1]);
    audit->add_option("--l3", l[2]);
    audit->add_option("--l4", l[3]);
    audit->add_option("--s", s_opt, "number of irreducible components (assumed)");
    audit->add_option("--delta", delta, "singular conics when s >= 3");
    audit->add_option("--l34", l34, "fix l3 + l4 when maximizing");
    audit->add_flag("--maximize", maximize, "maximize over all tallies");
    handlers["audit"] = [&] {
        if (maximize) return io::to_json(bound_maximize(s_opt, l34));
        for (const auto& x : l)
            if (!x) throw UsageError("audit needs --l1 .. --l4 and --s, or --maximize");
        if (!s_opt) throw UsageError("audit needs --s");
        return io::to_json(bound_audit(*l[0], *l[1], *l[2], *l[3], *s_opt, delta));
    };

    // gen
    auto* gen = app.add_subcommand("gen", "seeded inputs");
    common(gen);
    std::string kind = "family";
    int mode = 1;
    int k = 4;
    gen->add_option("--kind", kind, "family | lagrangian | curve-lagrangian | pointed-lagrangian")
        ->check(CLI::IsMember({"family", "lagrangian", "curve-lagrangian", "pointed-lagrangian"}))
        ->capture_default_str();
    gen->add_option("--mode", mode, "family generator 1..5")->check(CLI::Range(1, 5))->capture_default_str();
    gen->add_option("--k", k, "planes in a family, or dim(A ∩ F_v) for a pointed Lagrangian")->capture_default_str();
    handlers["gen"] = [&] {
        if (kind == "family") return io::to_json(random_incident_family(ctx.seed, k, static_cast<GeneratorMode>(mode)));
        if (kind == "lagrangian") return io::to_json(random_lagrangian(ctx.seed));
        if (kind == "curve-lagrangian") {
            auto c = random_curve_lagrangian(ctx.seed);
            return io::to_json(c.a, {c.w, c.w2});
        }
        auto p = random_lagrangian_through(ctx.seed, static_cast<std::size_t>(k));
        auto j = io::to_json(p.a);
        Json point = Json::array();
        for (const auto& x : p.v0) point.push_back(io::to_json(x));
        j["point"] = point;
        return j;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, out, msg);
        if (code == 0) return 0;  // --help, --version
        err << msg.str();
        out << io::error_json(ErrorCode::InvalidArgument, e.what()).dump(2) << "\n";
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();
    auto emit = [&](const Json& j) -> bool {
        if (ctx.out_path.empty()) {
            out << j.dump(2) << "\n";
            return true;
        }
        std::ofstream f(ctx.out_path, std::ios::binary);
        f << j.dump(2) << "\n";
        if (!f) {
            err << "epwtool: cannot write " << ctx.out_path << "\n";
            return false;
        }
        return true;
    };
    try {
        Json result = handlers.at(name)();
        Json manifest{{"command", name},
                      {"inputs", ctx.inputs},
                      {"seed", ctx.seed},
                      {"primes", ctx.primes_used},
                      {"versions",
                       {{"epwtool", kVersion},
                        {"gmp", gmp_version},
                        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                              std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                              std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}}};
        if (ctx.timing)
            manifest["wall_clock_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(Json{{"manifest", manifest}, {"result", result}}) ? 0 : 2;
    } catch (const UsageError& e) {
        err << "epwtool " << name << ": " << e.what() << "\n";
        emit(io::error_json(ErrorCode::InvalidArgument, e.what()));
        return 2;
    } catch (const MathError& e) {
        err << "epwtool " << name << ": " << error_code_name(e.code()) << ": " << e.what() << "\n";
        emit(io::error_json(e.code(), e.what()));
        return 1;
    }
}

}  // namespace epw::cli
