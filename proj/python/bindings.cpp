#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wholo/congruence.hpp"
#include "wholo/expr.hpp"

namespace py = pybind11;

namespace {

wholo::Rational rational_from_string(const std::string& text) {
    wholo::Rational x;
    if (x.set_str(text, 10) != 0) {
        throw wholo::InvalidParams("not a rational: '" + text + "'");
    }
    x.canonicalize();
    return x;
}

std::vector<std::string> coeff_strings(const wholo::QExpansion& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(wholo::to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-expansion arithmetic for level-1 modular forms and "
              "coefficient-congruence verification";

    auto error = py::register_exception<wholo::Error>(m, "WholoError");
    py::register_exception<wholo::InvalidParams>(m, "InvalidParams", error);
    py::register_exception<wholo::DenominatorNotInvertible>(m, "DenominatorNotInvertible", error);
    py::register_exception<wholo::ZeroLeadingCoefficient>(m, "ZeroLeadingCoefficient", error);
    py::register_exception<wholo::OutOfPrecision>(m, "OutOfPrecision", error);
    py::register_exception<wholo::NotInSpan>(m, "NotInSpan", error);
    py::register_exception<wholo::WeightMismatch>(m, "WeightMismatch", error);
    py::register_exception<wholo::PoleTooDeep>(m, "PoleTooDeep", error);
    py::register_exception<wholo::ConstantTermNonzero>(m, "ConstantTermNonzero", error);
    py::register_exception<wholo::SyntaxError>(m, "ExprSyntaxError", error);
    py::register_exception<wholo::UnknownGenerator>(m, "UnknownGenerator", error);

    py::class_<wholo::QExpansion>(m, "QExpansion")
        .def_property_readonly("ord", &wholo::QExpansion::ord)
        .def_property_readonly("prec", &wholo::QExpansion::prec)
        .def("is_zero", &wholo::QExpansion::is_zero)
        .def("coeff",
             [](const wholo::QExpansion& f, long n) { return wholo::to_string(f.coeff(n)); },
             py::arg("n"), "Exact coefficient of q^n as a decimal string")
        .def("coeffs", &coeff_strings, "Dense coefficients from q^ord as decimal strings")
        .def("text", &wholo::QExpansion::to_text)
        .def("json", [](const wholo::QExpansion& f) { return f.to_json().dump(); })
        .def("truncate", [](const wholo::QExpansion& f, long p) { return wholo::truncate(f, p); },
             py::arg("prec"))
        .def("theta", [](const wholo::QExpansion& f) { return wholo::theta(f); })
        .def("inv", [](const wholo::QExpansion& f) { return wholo::inv(f); })
        .def("reduce_mod", [](const wholo::QExpansion& f, long p) {
                 return wholo::reduce_mod_p(f, wholo::Integer(p));
             }, py::arg("p"))
        .def("__add__", [](const wholo::QExpansion& f, const wholo::QExpansion& g) {
                 return wholo::add(f, g);
             })
        .def("__sub__", [](const wholo::QExpansion& f, const wholo::QExpansion& g) {
                 return wholo::sub(f, g);
             })
        .def("__mul__", [](const wholo::QExpansion& f, const wholo::QExpansion& g) {
                 return wholo::mul(f, g);
             })
        .def("__pow__", [](const wholo::QExpansion& f, long n) { return wholo::pow(f, n); })
        .def("__neg__", [](const wholo::QExpansion& f) { return wholo::neg(f); })
        .def("__eq__", [](const wholo::QExpansion& f, const wholo::QExpansion& g) {
                 return f == g;
             })
        .def("__repr__", [](const wholo::QExpansion& f) {
                 return "QExpansion(" + f.to_text() + ")";
             });

    py::class_<wholo::ModularExpansion>(m, "ModularExpansion")
        .def_readonly("series", &wholo::ModularExpansion::series)
        .def_property_readonly("weight",
                               [](const wholo::ModularExpansion& f) { return f.weight; })
        .def("__repr__", [](const wholo::ModularExpansion& f) {
            std::string w = f.weight ? std::to_string(*f.weight) : "non-modular";
            return "ModularExpansion(weight=" + w + ", " + f.series.to_text() + ")";
        });

    m.def("eisenstein", &wholo::eisenstein, py::arg("k"), py::arg("prec"));
    m.def("delta", &wholo::delta, py::arg("prec"));
    m.def("delta_eta", &wholo::delta_eta, py::arg("prec"));
    m.def("j_invariant", &wholo::j_invariant, py::arg("prec"));
    m.def("miller_basis",
          [](long w, long prec) { return wholo::miller_basis(w, prec).members; },
          py::arg("weight"), py::arg("prec"));
    m.def("wh_basis",
          [](long k, long max_pole, long prec) {
              return wholo::wh_basis(k, max_pole, prec).members;
          },
          py::arg("weight"), py::arg("max_pole"), py::arg("prec"));

    m.def("evaluate",
          [](const std::string& text, long prec) { return wholo::evaluate(text, prec); },
          py::arg("expression"), py::arg("prec"),
          "Parse and evaluate a generator expression such as 'E4^3/Delta - j'");
    m.def("infer_weight", [](const std::string& text) {
        return wholo::infer_weight(*wholo::parse(text)).weight;
    }, py::arg("expression"));
    m.def("render_parsed", [](const std::string& text) {
        return wholo::render(*wholo::parse(text));
    }, py::arg("expression"), "Canonical re-rendering of a parsed expression");

    m.def("theta_decompose_json", [](const std::string& text, long prec) {
        wholo::ModularExpansion f = wholo::evaluate(text, prec);
        wholo::Weight2Certificate cert = wholo::certify_constant_term(f);
        nlohmann::json out{{"Q", cert.antiderivative.to_json()},
                           {"constant_term", wholo::to_string(cert.constant_term)}};
        return out.dump();
    }, py::arg("expression"), py::arg("prec") = 20);

    m.def("verify_main_json", [](long p, long t, std::optional<long> r, std::optional<long> m_,
                                 std::optional<long> prec) {
        wholo::TheoremParams params = (p >= 5) ? wholo::TheoremParams::p5(p, t, r.value_or(0))
                                               : wholo::TheoremParams::p23(p, t, m_.value_or(4));
        return wholo::verify_main_theorem(params, prec).to_json().dump();
    }, py::arg("p"), py::arg("t"), py::arg("r") = std::nullopt, py::arg("m") = std::nullopt,
       py::arg("prec") = std::nullopt);

    m.def("verify_jmo_json", [](long p, long r, long s, long t, long u,
                                std::optional<long> prec) {
        return wholo::verify_jmo(wholo::JmoParams::make(p, r, s, t, u), prec).to_json().dump();
    }, py::arg("p"), py::arg("r"), py::arg("s"), py::arg("t"), py::arg("u") = 1,
       py::arg("prec") = std::nullopt);

    m.def("g_power_congruence", [](long p, long t, long prec) {
        wholo::GPowerCheck check = wholo::check_g_power_congruence(p, t, prec);
        return py::make_tuple(check.ok, check.first_failure);
    }, py::arg("p"), py::arg("t"), py::arg("prec") = 0);

    m.def("eisenstein_mod_p_ok", &wholo::check_eisenstein_mod_p, py::arg("p"), py::arg("prec"));
    m.def("eisenstein_mod_24_ok", &wholo::check_eisenstein_mod_24, py::arg("k"), py::arg("prec"));
    m.def("delta_nonordinary_residue", [](long p, std::optional<long> prec) {
        return wholo::check_delta_nonordinary(p, prec.value_or(p + 2)).value().get_si();
    }, py::arg("p"), py::arg("prec") = std::nullopt);

    m.def("bernoulli", [](long n) { return wholo::to_string(wholo::bernoulli(n)); },
          py::arg("n"));
    m.def("sigma", [](long k, long n) { return wholo::sigma(k, n).get_str(); },
          py::arg("k"), py::arg("n"));
    m.def("reduce_mod", [](const std::string& x, long p) {
        return wholo::reduce_mod(rational_from_string(x), wholo::Integer(p)).value().get_si();
    }, py::arg("x"), py::arg("p"));

#ifdef WHOLO_VERSION
    m.attr("__version__") = WHOLO_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
