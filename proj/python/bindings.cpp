#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <Python.h>

#include "qwatson/catalog.hpp"
#include "qwatson/errors.hpp"
#include "qwatson/qfactorial.hpp"
#include "qwatson/report_json.hpp"
#include "qwatson/series.hpp"
#include "qwatson/verifier.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction. Accepts int, Fraction or a "p/r" string;
// floats are refused so nothing approximate sneaks in.
namespace pybind11::detail {
template <>
struct type_caster<qwatson::Rational> {
    PYBIND11_TYPE_CASTER(qwatson::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr())) return false;
        const auto fraction = module_::import("fractions").attr("Fraction");
        std::string text;
        if (PyUnicode_Check(src.ptr())) {
            text = src.cast<std::string>();
        } else if (PyLong_Check(src.ptr()) || isinstance(src, fraction)) {
            text = py::str(src).cast<std::string>();
        } else {
            return false;
        }
        try {
            value = qwatson::parse_rational(text);
        } catch (const qwatson::ParseError&) {
            return false;
        }
        return true;
    }

    static handle cast(const qwatson::Rational& r, return_value_policy, handle) {
        const auto fraction = module_::import("fractions").attr("Fraction");
        const std::string num = r.get_num().get_str();
        const std::string den = r.get_den().get_str();
        object n = reinterpret_steal<object>(PyLong_FromString(num.c_str(), nullptr, 10));
        object d = reinterpret_steal<object>(PyLong_FromString(den.c_str(), nullptr, 10));
        return fraction(n, d).release();
    }
};
}  // namespace pybind11::detail

namespace {

qwatson::UnityVariant unity_variant(const std::string& which) {
    if (which == "a") return qwatson::UnityVariant::A;
    if (which == "b") return qwatson::UnityVariant::B;
    throw py::value_error("unity variant must be 'a' or 'b'");
}

py::dict check_to_dict(const qwatson::CheckResult& r) {
    py::dict d;
    d["outcome"] = std::string(qwatson::to_string(r.outcome));
    d["lhs"] = r.lhs ? py::cast(*r.lhs) : py::none();
    d["rhs"] = r.rhs ? py::cast(*r.rhs) : py::none();
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qwatson, m) {
    m.doc() = "Exact rational evaluation of q-hypergeometric series and q-Watson type summation formulas";

    auto base = py::register_exception<qwatson::Error>(m, "Error");
    py::register_exception<qwatson::DegenerateDenominator>(m, "DegenerateDenominator", base.ptr());
    py::register_exception<qwatson::ConstraintViolated>(m, "ConstraintViolated", base.ptr());
    py::register_exception<qwatson::DivisionByZero>(m, "DivisionByZero", base.ptr());
    py::register_exception<qwatson::UnknownIdentity>(m, "UnknownIdentity", base.ptr());
    py::register_exception<qwatson::UnsatisfiableConstraints>(m, "UnsatisfiableConstraints", base.ptr());
    py::register_exception<qwatson::ResampleBudgetExhausted>(m, "ResampleBudgetExhausted", base.ptr());

    py::class_<qwatson::ParamPoint>(m, "ParamPoint")
        .def(py::init([](qwatson::Rational q, qwatson::Rational A, qwatson::Rational C, int n, int eps) {
                 return qwatson::ParamPoint{std::move(q), std::move(A), std::move(C), n, eps};
             }),
             py::arg("q"), py::arg("A"), py::arg("C"), py::arg("n") = 0, py::arg("eps") = 0)
        .def_readwrite("q", &qwatson::ParamPoint::q)
        .def_readwrite("A", &qwatson::ParamPoint::A)
        .def_readwrite("C", &qwatson::ParamPoint::C)
        .def_readwrite("n", &qwatson::ParamPoint::n)
        .def_readwrite("eps", &qwatson::ParamPoint::eps)
        .def("__repr__", [](const qwatson::ParamPoint& p) { return "ParamPoint(" + p.str() + ")"; });

    m.def("qpow", &qwatson::qpow, py::arg("q"), py::arg("m"));
    m.def("qpoch", &qwatson::qpoch, py::arg("x"), py::arg("q"), py::arg("n"), "(x;q)_n");
    m.def("qpoch_desc", &qwatson::qpoch_desc, py::arg("x"), py::arg("q"), py::arg("n"), "<x;q>_n");
    m.def("qbinom", &qwatson::qbinom, py::arg("n"), py::arg("k"), py::arg("q"));
    m.def(
        "poch_fraction",
        [](const std::vector<qwatson::Rational>& nums, const std::vector<qwatson::Rational>& dens,
           const qwatson::Rational& q, int n) { return qwatson::poch_fraction(nums, dens, q, n); },
        py::arg("nums"), py::arg("dens"), py::arg("q"), py::arg("n"));
    m.def(
        "phi_eval",
        [](std::vector<qwatson::Rational> numer, std::vector<qwatson::Rational> denom, qwatson::Rational z,
           int bound, const qwatson::Rational& q) {
            return qwatson::phi_eval({std::move(numer), std::move(denom), std::move(z), bound}, q);
        },
        py::arg("numer"), py::arg("denom"), py::arg("z"), py::arg("bound"), py::arg("q"));
    m.def("terminating_bound", &qwatson::terminating_bound, py::arg("numer"), py::arg("q"), py::arg("max_probe"));

    m.def("identity_ids", [] {
        std::vector<std::string> ids;
        for (const auto& ic : qwatson::catalog()) ids.push_back(ic.id);
        return ids;
    });
    m.def("lhs_eval", &qwatson::lhs_eval, py::arg("id"), py::arg("point"));
    m.def("rhs_eval", &qwatson::rhs_eval, py::arg("id"), py::arg("point"));
    m.def("andrews_rhs", &qwatson::andrews_rhs, py::arg("point"));
    m.def("jain_rhs", &qwatson::jain_rhs, py::arg("point"));
    m.def("phi65_rhs", &qwatson::phi65_rhs, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("q"), py::arg("eps"));
    m.def("thm_rhs", &qwatson::thm_rhs, py::arg("id"), py::arg("point"));
    m.def("cor_rhs", &qwatson::cor_rhs, py::arg("id"), py::arg("point"));
    m.def(
        "unity_lhs",
        [](const std::string& which, const qwatson::ParamPoint& p, int k) {
            return qwatson::unity_lhs(unity_variant(which), p, k);
        },
        py::arg("which"), py::arg("point"), py::arg("k"));
    m.def(
        "check_identity", [](const std::string& id, const qwatson::ParamPoint& p) {
            return check_to_dict(qwatson::check_identity(id, p));
        },
        py::arg("id"), py::arg("point"));
    m.def(
        "_run_suite_json",
        [](const std::vector<std::string>& ids, std::uint64_t seed, int trials, int n_max, int eps_max, int height,
           bool include_timing) {
            qwatson::SampleConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.n_max = n_max;
            cfg.eps_max = eps_max;
            cfg.height = height;
            qwatson::VerificationReport report;
            {
                py::gil_scoped_release release;
                report = qwatson::run_suite(cfg, ids);
            }
            return qwatson::dump_report(report, include_timing);
        },
        py::arg("ids"), py::arg("seed"), py::arg("trials"), py::arg("n_max"), py::arg("eps_max"), py::arg("height"),
        py::arg("include_timing"));
}
