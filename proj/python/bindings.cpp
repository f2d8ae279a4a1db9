#include "cmspace/cot_expansion.hpp"
#include "cmspace/cyclotomic.hpp"
#include "cmspace/errors.hpp"
#include "cmspace/hurwitz.hpp"
#include "cmspace/identities.hpp"
#include "cmspace/runner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object to_python_int(const cmspace::Integer& value) {
    return py::module_::import("builtins").attr("int")(value.get_str());
}

py::tuple run_config(const std::string& config_json) {
    cmspace::RunResult result;
    try {
        result = cmspace::run(cmspace::config_from_json(cmspace::Json::parse(config_json)));
    } catch (const cmspace::Json::parse_error& e) {
        result.exit_code = cmspace::kExitUsage;
        result.error = std::string("malformed JSON: ") + e.what();
    } catch (const cmspace::UsageError& e) {
        result.exit_code = cmspace::kExitUsage;
        result.error = e.what();
    }
    return py::make_tuple(result.exit_code, result.output, result.error);
}

py::dict expansion(long k) {
    py::dict out;
    for (const auto& [l, c] : cmspace::expand(k).coefficients) {
        out[py::int_(l)] = to_python_int(c);
    }
    return out;
}

std::string zeta_value(long k, long a, long q, long digits) {
    return cmspace::hurwitz_zeta(k, a, q, cmspace::digits_to_bits(digits)).to_decimal(static_cast<int>(digits));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hurwitz zeta values at rationals, cotangent-derivative identities and relation probes.";

    py::register_exception<cmspace::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<cmspace::DomainError>(m, "DomainError", PyExc_ArithmeticError);

    m.def("run", &run_config, py::arg("config_json"),
          "Run one experiment from a JSON config; returns (exit_code, output, error).");
    m.def("known_commands", &cmspace::known_commands);
    m.def("expand", &expansion, py::arg("k"), "Integer table {l: c_l} of D^(k-1)(pi cot pi z).");
    m.def("hurwitz_zeta", &zeta_value, py::arg("k"), py::arg("a"), py::arg("q"), py::arg("digits") = 50,
          "zeta(k, a/q) as a decimal string with the requested significant digits.");
    m.def(
        "exact_ratio",
        [](long k, long a, long q) { return cmspace::exact_ratio(k, a, q).to_text(); }, py::arg("k"), py::arg("a"),
        py::arg("q"), "Canonical text 'q; c_0, c_1, ...' of the exact ratio in Q(zeta_q).");
    m.def(
        "is_in_subfield",
        [](const std::string& element, long d) {
            return cmspace::is_in_subfield(cmspace::CyclotomicElement::parse(element), d);
        },
        py::arg("element"), py::arg("d"));
}
