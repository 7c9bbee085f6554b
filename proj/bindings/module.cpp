// Python bindings. Values cross the boundary as strings (exact rationals as
// "p/q", high-precision reals in scientific notation) so no big-number type
// leaks into python; the package __init__ rewraps them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "moonj/engine.hpp"
#include "moonj/errors.hpp"
#include "moonj/parse.hpp"
#include "moonj/suites.hpp"

namespace py = pybind11;
using namespace moonj;

namespace {

PrecisionPolicy policy_for(int digits) {
    if (digits < 1 || digits > 100000)
        fail(errc::invalid_parameters, "digits must lie in [1, 100000]");
    return PrecisionPolicy(digits, 15);
}

std::vector<std::string> series_strings(const TruncatedSeries& s, int order) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) out.push_back(s.coeff(n).str());
    return out;
}

py::dict complex_dict(const Complex& z, int digits) {
    py::dict d;
    d["re"] = z.re().str(digits);
    d["im"] = z.im().str(digits);
    d["digits"] = digits;
    return d;
}

py::dict report_dict(const VerificationReport& r, int digits) {
    py::dict d;
    d["check"] = r.check;
    d["case"] = r.case_name;
    d["t"] = r.t_text;
    d["lhs"] = complex_dict(r.lhs, digits);
    d["rhs"] = complex_dict(r.rhs, digits);
    d["exact_rhs"] = r.exact_rhs;
    d["abs_residual"] = r.abs_residual.str(6);
    d["digits_matched"] = r.digits_matched;
    d["series_terms_used"] = r.series_terms_used;
    d["pass"] = r.pass;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Elliptic expansions of the j function at its fixed points.";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(e.code() == errc::invalid_parameters ? PyExc_ValueError
                                                                 : PyExc_ArithmeticError,
                            e.what());
        }
    });

    m.def(
        "expand",
        [](const std::string& case_name, int order) {
            if (order < 0) fail(errc::invalid_parameters, "order must be nonnegative");
            const CMCase& cm = CMCase::by_name(case_name);
            TruncatedSeries b = cm.point == CMPoint::rho ? elliptic_expansion_rho(order)
                                                         : elliptic_expansion_i(order);
            return series_strings(b, order);
        },
        py::arg("case_name"), py::arg("order"),
        "Exact elliptic expansion coefficients b(0..order) as rational strings.");

    m.def(
        "flat_coefficients",
        [](const std::string& case_name, int order) {
            if (order < 0) fail(errc::invalid_parameters, "order must be nonnegative");
            const CMCase& cm = CMCase::by_name(case_name);
            return series_strings(flat_series(cm, std::max(order, 1)).c, order);
        },
        py::arg("case_name"), py::arg("order"),
        "Exact flat coordinate series coefficients as rational strings.");

    m.def(
        "flat_eval",
        [](const std::string& case_name, const std::string& t, long terms, int digits) {
            const CMCase& cm = CMCase::by_name(case_name);
            PrecisionPolicy policy = policy_for(digits);
            Complex tc = t_complex(parse_t(t), policy.working_bits());
            return complex_dict(flat_eval_series(cm, tc, terms, policy), digits);
        },
        py::arg("case_name"), py::arg("t"), py::arg("terms") = 1000L, py::arg("digits") = 50,
        "Flat coordinate value at t as {re, im, digits} strings.");

    m.def(
        "j_eval",
        [](const std::string& tau, int digits) {
            PrecisionPolicy policy = policy_for(digits);
            return complex_dict(j_eval(parse_tau(tau, policy.working_bits()), policy), digits);
        },
        py::arg("tau"), py::arg("digits") = 50,
        "j at a point of the upper half-plane, given as a complex literal.");

    m.def(
        "conj_rhs",
        [](const std::string& case_name, const std::string& t) {
            const CMCase& cm = CMCase::by_name(case_name);
            TValue v = parse_t(t);
            if (v.symbolic) fail(errc::invalid_parameters, "exact evaluation needs a rational t");
            return conj_rhs(cm, v.exact).str();
        },
        py::arg("case_name"), py::arg("t"),
        "Algebraic side of the identity at rational t, as a rational string.");

    m.def(
        "verify",
        [](const std::string& case_name, const std::string& t, int digits, long terms) {
            const CMCase& cm = CMCase::by_name(case_name);
            PrecisionPolicy policy = policy_for(digits);
            TValue v = parse_t(t);
            VerificationReport rep =
                v.symbolic ? verify_numeric(cm, t_complex(v, policy.working_bits()), terms, policy)
                           : verify_numeric(cm, v.exact, terms, policy);
            return report_dict(rep, digits);
        },
        py::arg("case_name"), py::arg("t"), py::arg("digits") = 50, py::arg("terms") = 1000L,
        "Numeric verification of the identity at one point; returns the full report.");

    m.def(
        "verify_exact",
        [](const std::string& case_name, int order) {
            VerificationReport rep = verify_exact(CMCase::by_name(case_name), order);
            return report_dict(rep, 10);
        },
        py::arg("case_name"), py::arg("order"),
        "Coefficientwise verification of the identity through the given order.");

    m.def(
        "run_suite",
        [](const std::string& which, int digits, long samples, unsigned long seed) {
            SuiteOptions opt;
            opt.digits = digits;
            opt.samples = samples;
            opt.seed = seed;
            std::vector<CheckResult> checks;
            if (which == "exact") checks = run_exact_suite(opt);
            else if (which == "numeric") checks = run_numeric_suite(opt);
            else if (which == "sectors") checks = run_sector_suite(opt);
            else if (which == "transformations") checks = run_transformation_suite(opt);
            else if (which == "inversion") checks = run_inversion_suite(opt);
            else if (which == "properties") checks = run_property_suite(opt);
            else fail(errc::invalid_parameters, "unknown suite: " + which);
            py::list out;
            for (const CheckResult& c : checks) {
                py::dict d;
                d["name"] = c.name;
                d["pass"] = c.pass;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("which"), py::arg("digits") = 50, py::arg("samples") = 0L,
        py::arg("seed") = 20260822UL,
        "Run one named check suite; returns a list of {name, pass, detail} dicts.");
}
