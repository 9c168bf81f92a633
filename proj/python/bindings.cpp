// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure-Python layer in elemtab/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elemtab/fixtures.hpp"
#include "elemtab/report.hpp"
#include "elemtab/specio.hpp"

namespace py = pybind11;
using namespace elemtab;

namespace {

CharConfig config(std::optional<std::size_t> max_minors, std::optional<std::size_t> rounds) {
    CharConfig cfg;
    if (max_minors) cfg.max_minors = *max_minors;
    if (rounds) cfg.stable_rounds = *rounds;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_elemtab, m) {
    m.doc() = "Exact analysis of involutive tableaux";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        const auto raise = [](const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
            exc.attr("kind") = e.kind();
            return exc;
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object exc = raise(e);
            exc.attr("line") = e.line();
            exc.attr("column") = e.column();
            PyErr_SetObject(error.ptr(), exc.ptr());
        } catch (const Error& e) {
            py::object exc = raise(e);
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Tableau>(m, "Tableau")
        .def_property_readonly("n", &Tableau::n)
        .def_property_readonly("r", &Tableau::r)
        .def_property_readonly("dim", &Tableau::dim)
        .def_property_readonly("ell", &Tableau::ell)
        .def_property_readonly("characters", &Tableau::characters)
        .def("to_spec", [](const Tableau& t) { return emit_spec(spec_of(t)); })
        .def("__repr__", [](const Tableau& t) {
            return "<Tableau n=" + std::to_string(t.n()) + " r=" + std::to_string(t.r()) +
                   " dim=" + std::to_string(t.dim()) + ">";
        });

    m.def("from_spec", [](const std::string& text, std::optional<std::uint64_t> seed) {
        const TableauSpec spec = parse_spec(text);
        return spec.build(seed.value_or(spec.seed.value_or(0)));
    }, py::arg("text"), py::arg("seed") = py::none());
    m.def("fixture_names", &fixtures::names);
    m.def("fixture", &fixtures::by_name, py::arg("name"));
    m.def("random_involutive", [](std::uint64_t seed) { return fixtures::random_involutive(seed); }, py::arg("seed"));
    m.def("perturb", &fixtures::perturb, py::arg("tableau"), py::arg("seed"));

    m.def("analyze_json", [](const Tableau& t, std::uint64_t seed, std::optional<std::size_t> max_minors,
                             std::optional<std::size_t> rounds) {
        const Analysis a = [&] {
            py::gil_scoped_release release;
            return analyze(t, seed, config(max_minors, rounds));
        }();
        return to_json(a).dump();
    }, py::arg("tableau"), py::arg("seed") = 0, py::arg("max_minors") = py::none(), py::arg("rounds") = py::none());
    m.def("involutivity_json", [](const Tableau& t) {
        const InvolutivityVerdict v = [&] {
            py::gil_scoped_release release;
            return involutivity(t);
        }();
        return to_json(v).dump();
    }, py::arg("tableau"));
    m.def("char_ideal", [](const Tableau& t, std::optional<std::size_t> max_minors) {
        const Ideal ideal = [&] {
            py::gil_scoped_release release;
            return elemtab::char_ideal(t, config(max_minors, std::nullopt));
        }();
        std::vector<std::string> out;
        for (const auto& g : ideal.gb()) out.push_back(to_string(g));
        return out;
    }, py::arg("tableau"), py::arg("max_minors") = py::none());
}
