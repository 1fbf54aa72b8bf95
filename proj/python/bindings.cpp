#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "gsp4/arch.hpp"
#include "gsp4/checks.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/numeric.hpp"
#include "gsp4/pairing.hpp"
#include "gsp4/report.hpp"
#include "gsp4/root_data.hpp"

namespace py = pybind11;
using namespace gsp4;

namespace {

std::string js(const VerificationReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_gsp4, m) {
    m.doc() = "Exact and numeric verification checks for GSp(4) local computations";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("set_precision_digits", [](unsigned d) { num::set_digits(d); }, py::arg("digits"));
    m.def("weyl_dimension", &weyl_dimension, py::arg("k"), py::arg("kp"));
    m.def("branching_multiplicity",
          [](int p, int q, int k, int kp) { return branching_multiplicity(BranchQuery::standard(p, q, k, kp)); },
          py::arg("p"), py::arg("q"), py::arg("k"), py::arg("kp"));
    m.def("surviving_terms", [](int k, int kp) { return survival(k, kp).surviving_terms; }, py::arg("k"), py::arg("kp"));
    m.def("trace_pi_exponent", [](int k, int kp) { return trace_pi_exponent(k, kp).str(); }, py::arg("k"), py::arg("kp"));

    // Report builders; each returns the JSON document as a string.
    m.def("check_branch", [](int k, int kp, int p, int q) { return js(check_branch(k, kp, p, q)); });
    m.def("check_packet", [](int k, int kp, int c) { return js(check_packet(k, kp, c)); });
    m.def("check_hodge", [](int k, int kp, int c) { return js(check_hodge(k, kp, c)); });
    m.def("check_rep_build", [](int k, int kp, int c, bool verify) { return js(check_rep_build(k, kp, c, verify)); });
    m.def("check_lambda_scan", [](int k, int kp, std::optional<int> p, std::optional<int> q, int i0, int i1) {
        return js(check_lambda_scan(k, kp, p, q, i0, i1));
    });
    m.def("check_pairing_constants", [](int k, int kp) { return js(check_pairing_constants(k, kp)); });
    m.def("check_pairing_coeffs", [] { return js(check_pairing_coeffs()); });
    m.def("check_pairing_assemble", [](int p, int q, int k, int kp) { return js(check_pairing_assemble(p, q, k, kp)); });
    m.def("check_pairing_survival", [](int k, int kp) { return js(check_pairing_survival(k, kp)); });
    m.def("check_unramified", [](int order, bool numeric, std::uint64_t seed, int samples) {
        return js(check_unramified(order, numeric, seed, samples));
    });
    m.def("check_bessel", [](int mm) { return js(check_bessel(mm)); });
    m.def("check_tate_unramified", [](int e, int depth) { return js(check_tate_unramified(e, depth)); });
    m.def("check_mellin", [](int k, int kp) { return js(check_mellin(k, kp)); });
    m.def("check_tate_arch", [](int p, int q, int r, int s) { return js(check_tate_arch(p, q, r, s)); });
    m.def("check_trace", [](int k, int kp) { return js(check_trace(k, kp)); });
}
