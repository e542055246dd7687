#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detskein/certify.hpp"
#include "detskein/coloring.hpp"
#include "detskein/diagram.hpp"
#include "detskein/error.hpp"
#include "detskein/skein.hpp"
#include "detskein/tangle.hpp"

namespace py = pybind11;
using namespace detskein;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

TangleFraction frac(const std::string& text) { return parse_fraction(text); }

OrientationConstraint constraint(const std::string& text) {
    if (text == "any") return OrientationConstraint::unconstrained;
    return parse_orientation_class(text) == OrientationClass::parallel ? OrientationConstraint::parallel
                                                                       : OrientationConstraint::antiparallel;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("determinant", [](const std::string& pd) { return to_py(determinant(parse_pd(pd))); }, py::arg("pd"));
    m.def("components", [](const std::string& pd) { return components(parse_pd(pd)); }, py::arg("pd"));
    m.def("n_colorable", [](const std::string& pd, int n) { return n_colorable(parse_pd(pd), n); }, py::arg("pd"),
          py::arg("n"));
    m.def("normalize", [](const std::string& pd) { return to_pd(parse_pd(pd)); }, py::arg("pd"));

    m.def("continued_fraction", [](const std::string& f) { return to_string(fraction_to_cf(frac(f))); },
          py::arg("fraction"));
    m.def("evaluate", [](const std::string& cf) { return to_string(cf_to_fraction(parse_continued_fraction(cf))); },
          py::arg("cf"));
    m.def("connectivity", [](const std::string& f) { return to_string(connectivity(frac(f))); },
          py::arg("fraction"));
    m.def("mediant", [](const std::string& x, const std::string& y) {
        return to_string(mediant(FareyPair(frac(x), frac(y))));
    });

    m.def("fit", [](const std::string& pd) {
        const Coefficients c = fit_coefficients(TangleTemplate(parse_pd(pd)), 0);
        const auto z = zero_locus(c);
        return py::make_tuple(to_py(c.a), to_py(c.b), c.sign, z ? py::object(py::str(to_string(*z))) : py::none());
    }, py::arg("pd"));
    m.def("determinant_at", [](const std::string& pd, const std::string& f) {
        return to_py(determinant_at(TangleTemplate(parse_pd(pd)), 0, frac(f)));
    }, py::arg("pd"), py::arg("fraction"));

    m.def("certify", [](const std::string& f, std::optional<std::string> oriented) {
        if (!oriented) return to_json(span_certificate(frac(f)));
        return to_json(oriented_span_certificate({frac(f), constraint(*oriented)}));
    }, py::arg("fraction"), py::arg("oriented") = py::none());
    m.def("verify", [](const std::string& json) {
        const Verdict v = verify_certificate(certificate_from_json(json));
        return py::make_tuple(v.accepted, v.check, v.node, v.message);
    }, py::arg("certificate_json"));
}
