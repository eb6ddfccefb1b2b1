// Python bindings: the check runner plus a few module constructors.

#include "yangian/runner.hpp"
#include "yangian/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace yangian;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
    return Rational::parse(py::str(h).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_yangian, m) {
    m.doc() = "Exact checks for rational Yangian representations";

    // translators are tried newest first, so the base goes in first
    auto base = py::register_exception<Error>(m, "YangianError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    m.def("list_checks", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& c : list_checks()) out.emplace_back(c.name, c.description, c.anchor);
        return out;
    });

    m.def(
        "run_json",
        [](const std::string& config, bool parallel, bool timing) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(config);
            } catch (const nlohmann::json::parse_error& e) {
                throw ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            Report rep;
            {
                py::gil_scoped_release release;
                rep = run(parse_config(j), parallel);
            }
            return rep.to_json(timing).dump();
        },
        py::arg("config"), py::arg("parallel") = false, py::arg("timing") = true);

    py::class_<YangianModule>(m, "Module")
        .def_property_readonly("n", &YangianModule::n)
        .def_property_readonly("dim", &YangianModule::dim)
        .def_property_readonly("basis", &YangianModule::basis)
        .def("entry", [](const YangianModule& mod, int i, int j, int r, int c) {
            return mod.entry_functions(i - 1, j - 1).at(static_cast<size_t>(r)).at(static_cast<size_t>(c)).str();
        }, "T_ij(u) matrix entry (i, j 1-based; r, c 0-based) as a string");

    m.def("vector_module", [](int n, const py::object& z, bool dual) { return make_vector(n, to_rational(z), dual); },
          py::arg("n"), py::arg("z"), py::arg("dual") = false);
    m.def("omega_module", [](int n, const py::object& z, bool dual) { return make_omega(n, to_rational(z), dual); },
          py::arg("n"), py::arg("z"), py::arg("dual") = false);
    m.def("tensor", [](const std::vector<YangianModule>& factors) { return tensor(factors); });
    m.def("check_rtt", [](const YangianModule& mod) {
        RttReport r = check_rtt(mod);
        return py::make_tuple(r.pass, r.witness ? py::object(py::str(r.witness->str())) : py::object(py::none()));
    });
}
