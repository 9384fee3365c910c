// Python entry points. Library objects cross the boundary in their JSON forms
// (as text); the package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epw/io.hpp"
#include "epw/random.hpp"

namespace py = pybind11;
using namespace epw;

namespace {

std::string dump(const io::Json& j) { return j.dump(); }

std::vector<std::vector<std::vector<std::uint32_t>>> residues(const std::vector<PSubspace>& list) {
    std::vector<std::vector<std::vector<std::uint32_t>>> out;
    for (const auto& s : list) {
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t r = 0; r < s.dim(); ++r) rows.emplace_back(s.vector(r).begin(), s.vector(r).end());
        out.push_back(std::move(rows));
    }
    return out;
}

PlaneFamily family_of(const std::string& text) { return io::family_from_json(io::parse(text)); }

LagrangianSubspace lagrangian_of(const io::LagrangianFile& f) {
    if (!f.a) fail(ErrorCode::ParseError, "input has no \"lagrangian\" basis");
    return *f.a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planes in C^6 and C^7, Lagrangians in the third exterior power, EPW sextics";

    static py::exception<MathError> error(m, "MathError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const MathError& e) {
            py::object exc = error;
            py::object inst = exc(std::string(error_code_name(e.code())) + ": " + e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    m.def("fano_family", [] { return dump(io::to_json(fano_family())); });
    m.def("fano_four_planes", [] { return dump(io::to_json(fano_four_planes())); });
    m.def("random_family", [](std::uint64_t seed, int k, int mode) {
        return dump(io::to_json(random_incident_family(seed, k, static_cast<GeneratorMode>(mode))));
    }, py::arg("seed"), py::arg("k"), py::arg("mode"));
    m.def("family_report", [](const std::string& family) { return dump(io::to_json(family_report(family_of(family)))); });
    m.def("enumerate_planes_modp", [](const std::string& family, std::uint32_t p, unsigned threads) {
        auto fam = family_of(family);
        py::gil_scoped_release release;
        return residues(enumerate_incident_planes_modp(fam, p, threads));
    }, py::arg("family"), py::arg("p"), py::arg("threads") = 1);
    m.def("enumerate_lines_modp", [](const std::string& family, std::uint32_t p, unsigned threads) {
        auto fam = family_of(family);
        py::gil_scoped_release release;
        return residues(enumerate_incident_lines_modp(fam, p, threads));
    }, py::arg("family"), py::arg("p"), py::arg("threads") = 1);
    m.def("completeness_certificate", [](const std::string& family, std::vector<std::uint32_t> primes, std::uint64_t seed,
                                         unsigned threads) {
        auto fam = family_of(family);
        py::gil_scoped_release release;
        return dump(io::to_json(completeness_certificate(fam, primes, seed, threads)));
    }, py::arg("family"), py::arg("primes"), py::arg("seed") = 1, py::arg("threads") = 1);

    m.def("random_lagrangian", [](std::uint64_t seed) { return dump(io::to_json(random_lagrangian(seed))); });
    m.def("random_curve_lagrangian", [](std::uint64_t seed) {
        auto c = random_curve_lagrangian(seed);
        return dump(io::to_json(c.a, {c.w, c.w2}));
    });
    m.def("build_a_plus", [] { return dump(io::to_json(build_A_plus())); });
    m.def("epw_equation", [](const std::string& lagrangian, unsigned threads) {
        auto a = lagrangian_of(io::lagrangian_from_json(io::parse(lagrangian)));
        py::gil_scoped_release release;
        EpwOptions opts;
        opts.threads = threads;
        return dump(io::to_json(epw_equation(a, opts)));
    }, py::arg("lagrangian"), py::arg("threads") = 1);
    m.def("curve_equation", [](const std::string& lagrangian, std::size_t member) {
        auto file = io::lagrangian_from_json(io::parse(lagrangian));
        auto a = lagrangian_of(file);
        if (member >= file.planes.size()) fail(ErrorCode::InvalidArgument, "member index out of range");
        py::gil_scoped_release release;
        auto c = curve_equation(a, file.planes[member]);
        io::Json out{{"curve", io::to_json(c)}};
        if (!c.plane) out["singularities"] = io::to_json(singularity_report(c, file.planes));
        return dump(out);
    }, py::arg("lagrangian"), py::arg("member"));

    m.def("roncisvalle_check", [](std::uint64_t seed, std::uint32_t p) {
        return dump(io::to_json(roncisvalle_check(random_psi_frame(seed), p)));
    }, py::arg("seed"), py::arg("p"));
    m.def("bound_audit", [](int l1, int l2, int l3, int l4, int s) { return dump(io::to_json(bound_audit(l1, l2, l3, l4, s))); },
          py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("l4"), py::arg("s"));
    m.def("bound_maximize", [](std::optional<int> s, std::optional<int> l34) { return dump(io::to_json(bound_maximize(s, l34))); },
          py::arg("s") = py::none(), py::arg("l34") = py::none());
}
