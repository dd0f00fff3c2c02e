#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numsg/bounds.hpp"
#include "numsg/document.hpp"
#include "numsg/error.hpp"
#include "numsg/groebner.hpp"
#include "numsg/reference_tables.hpp"
#include "numsg/selftest.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/staircase.hpp"

namespace py = pybind11;

// BigInt <-> int and Rational <-> fractions.Fraction, both through decimal strings.
namespace pybind11::detail {

template <> struct type_caster<numsg::BigInt> {
    PYBIND11_TYPE_CASTER(numsg::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = numsg::BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const numsg::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

template <> struct type_caster<numsg::Rational> {
    PYBIND11_TYPE_CASTER(numsg::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool convert) {
        if (PyLong_Check(src.ptr())) {
            value = numsg::Rational(numsg::BigInt(py::str(src).cast<std::string>()));
            return true;
        }
        auto fraction = py::module_::import("fractions").attr("Fraction");
        if (!py::isinstance(src, fraction)) {
            if (!convert || !py::isinstance<py::str>(src)) return false;
            value = numsg::parse_rational(src.cast<std::string>());
            return true;
        }
        value = numsg::Rational(numsg::BigInt(py::str(src.attr("numerator")).cast<std::string>()),
                                numsg::BigInt(py::str(src.attr("denominator")).cast<std::string>()));
        return true;
    }

    static handle cast(const numsg::Rational& v, return_value_policy, handle) {
        auto fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(boost::multiprecision::numerator(v).str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(boost::multiprecision::denominator(v).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace numsg;

py::tuple as_tuple(const ExponentVector& v) {
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

ExponentVector from_seq(const std::vector<std::int64_t>& v) { return ExponentVector(v); }

py::object as_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SemigroupSpec spec_from(const py::handle& h) {
    if (py::isinstance<SemigroupSpec>(h)) return h.cast<SemigroupSpec>();
    if (py::isinstance<py::str>(h)) return parse_generators(h.cast<std::string>());
    return normalize(h.cast<std::vector<std::int64_t>>());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical semigroups via Groebner bases of <y_i - x^a_i>";

    py::register_exception<Error>(m, "NumsgError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::module_::import("numsg._core").attr("NumsgError");
            py::object inst = exc(e.what());
            inst.attr("kind") = to_string(e.kind());
            inst.attr("value") = e.value();
            PyErr_SetObject(exc.ptr(), inst.ptr());
        }
    });

    py::class_<SemigroupSpec>(m, "SemigroupSpec")
        .def(py::init([](const py::handle& h) { return spec_from(h); }), py::arg("generators"))
        .def_property_readonly("generators",
                               [](const SemigroupSpec& s) {
                                   return std::vector<std::int64_t>(s.generators().begin(), s.generators().end());
                               })
        .def_property_readonly("rank", &SemigroupSpec::rank)
        .def("__len__", &SemigroupSpec::rank)
        .def("__eq__", [](const SemigroupSpec& a, const SemigroupSpec& b) { return a == b; })
        .def("__hash__", [](const SemigroupSpec& s) { return py::hash(py::str(s.to_string())); })
        .def("__str__", &SemigroupSpec::to_string)
        .def("__repr__", [](const SemigroupSpec& s) { return "SemigroupSpec(" + s.to_string() + ")"; });
    py::implicitly_convertible<py::list, SemigroupSpec>();
    py::implicitly_convertible<py::tuple, SemigroupSpec>();
    py::implicitly_convertible<py::str, SemigroupSpec>();

    m.def("normalize", [](const std::vector<std::int64_t>& raw) { return normalize(raw); }, py::arg("raw"));
    m.def("parse_generators", &parse_generators, py::arg("text"));

    py::class_<InvariantReport>(m, "InvariantReport")
        .def_readonly("frobenius", &InvariantReport::frobenius)
        .def_readonly("genus", &InvariantReport::genus)
        .def_readonly("conductor", &InvariantReport::conductor)
        .def_readonly("multiplicity", &InvariantReport::multiplicity)
        .def_readonly("embedding_dimension", &InvariantReport::embedding_dimension)
        .def_readonly("gaps", &InvariantReport::gaps)
        .def_readonly("sporadic", &InvariantReport::sporadic)
        .def_readonly("sporadic_count_with_zero", &InvariantReport::sporadic_count_with_zero)
        .def_readonly("sporadic_count_without_zero", &InvariantReport::sporadic_count_without_zero)
        .def("to_dict", [](const InvariantReport& r) { return as_python(to_json(r)); });

    py::class_<WilfReport>(m, "WilfReport")
        .def_readonly("conductor", &WilfReport::conductor)
        .def_readonly("embedding_dimension", &WilfReport::embedding_dimension)
        .def_readonly("n_with_zero", &WilfReport::n_with_zero)
        .def_readonly("holds", &WilfReport::holds);

    m.def("is_member", &is_member, py::arg("spec"), py::arg("n"));
    m.def("invariants", &invariants, py::arg("spec"));
    m.def("n_of_alpha", &n_of_alpha, py::arg("spec"), py::arg("alpha"));
    m.def("denumerant", &denumerant, py::arg("spec"), py::arg("n"));
    m.def("minimal_generators", &minimal_generators, py::arg("spec"));
    m.def("wilf_check", &wilf_check, py::arg("spec"));

    py::class_<GroebnerBasis>(m, "GroebnerBasis")
        .def_property_readonly("spec", &GroebnerBasis::spec)
        .def_property_readonly("elements",
                               [](const GroebnerBasis& b) {
                                   py::list out;
                                   for (const auto& g : b.elements())
                                       out.append(py::make_tuple(as_tuple(g.lead), as_tuple(g.tail)));
                                   return out;
                               })
        .def_property_readonly("leads",
                               [](const GroebnerBasis& b) {
                                   py::list out;
                                   for (const auto& g : b.elements()) out.append(as_tuple(g.lead));
                                   return out;
                               })
        .def("reduce", [](const GroebnerBasis& b, const std::vector<std::int64_t>& m) {
            return as_tuple(b.reduce(from_seq(m)));
        }, py::arg("monomial"))
        .def("to_dict", [](const GroebnerBasis& b) { return as_python(to_json(b)); })
        .def("__len__", &GroebnerBasis::size)
        .def("__repr__", [](const GroebnerBasis& b) {
            return "GroebnerBasis(" + b.spec().to_string() + ", " + std::to_string(b.size()) + " elements)";
        });

    m.def("buchberger", [](const SemigroupSpec& s, std::size_t max_pairs, std::size_t max_basis) {
        return buchberger(s, BuchbergerLimits{max_pairs, max_basis});
    }, py::arg("spec"), py::arg("max_pairs") = BuchbergerLimits{}.max_pairs,
       py::arg("max_basis") = BuchbergerLimits{}.max_basis);
    m.def("normal_form_of_power", [](const GroebnerBasis& b, std::int64_t n) {
        return as_tuple(normal_form_of_power(b, n));
    }, py::arg("basis"), py::arg("n"));

    py::class_<CertifiedMembership>(m, "CertifiedMembership")
        .def_readonly("n", &CertifiedMembership::n)
        .def_readonly("member", &CertifiedMembership::member)
        .def_property_readonly("certificate", [](const CertifiedMembership& c) { return as_tuple(c.certificate); })
        .def("decomposition", &CertifiedMembership::decomposition, py::arg("spec"));
    m.def("certify", &certify, py::arg("basis"), py::arg("n"));

    py::class_<StaircaseModel>(m, "StaircaseModel")
        .def(py::init<const GroebnerBasis&>(), py::arg("basis"))
        .def_property_readonly("corners",
                               [](const StaircaseModel& s) {
                                   py::list out;
                                   for (const auto& q : s.corners()) out.append(as_tuple(q));
                                   return out;
                               })
        .def("is_standard", [](const StaircaseModel& s, const std::vector<std::int64_t>& p) {
            return s.is_standard(from_seq(p));
        }, py::arg("point"))
        .def("gaps", [](const StaircaseModel& s) { return gaps_via_staircase(s); })
        .def("elements", [](const StaircaseModel& s, std::int64_t alpha) { return elements_via_staircase(s, alpha); },
             py::arg("alpha"))
        .def("plot_data", [](const StaircaseModel& s) { return as_python(staircase_plot_data(s)); });

    m.def("count_q", [](const std::vector<Rational>& a) { return count_q(a); }, py::arg("alphas"));
    m.def("count_p", [](const std::vector<Rational>& a) { return count_p(a); }, py::arg("alphas"));
    m.def("shift_lemma_check", [](const std::vector<Rational>& a) { return shift_lemma_check(a); },
          py::arg("alphas"));
    m.def("gly_weak_holds", [](const std::vector<Rational>& a) { return gly_weak_holds(a); }, py::arg("alphas"));
    m.def("gly_based_bound", &gly_based_bound, py::arg("spec"));
    m.def("gly_based_bound_exact", &gly_based_bound_exact, py::arg("spec"));
    m.def("prism_pyramid_high", &prism_pyramid_high, py::arg("spec"), py::arg("alpha"));
    m.def("prism_pyramid_low", &prism_pyramid_low, py::arg("spec"), py::arg("alpha"));
    m.def("simple_corollary_bound", &simple_corollary_bound, py::arg("spec"), py::arg("alpha"));
    m.def("n_s_corollary_bound", &n_s_corollary_bound, py::arg("spec"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("spec", &BoundReport::spec)
        .def_readonly("frobenius", &BoundReport::frobenius)
        .def_readonly("n_true_with_zero", &BoundReport::n_true_with_zero)
        .def_readonly("n_true_without_zero", &BoundReport::n_true_without_zero)
        .def_readonly("gly_bound_exact", &BoundReport::gly_bound_exact)
        .def_readonly("gly_bound", &BoundReport::gly_bound)
        .def_readonly("prism_pyramid_bound", &BoundReport::prism_pyramid_bound)
        .def_readonly("simple_corollary_bound", &BoundReport::simple_corollary_bound)
        .def_readonly("ratio", &BoundReport::ratio)
        .def("to_dict", [](const BoundReport& r) { return as_python(to_json(r)); });
    m.def("bound_report", &bound_report, py::arg("spec"));
    m.def("bound_table", [](const std::vector<SemigroupSpec>& specs) {
        py::gil_scoped_release release;
        return bound_table(specs);
    }, py::arg("specs"));
    m.def("check_reference_rows", [] {
        py::list out;
        for (const auto& c : check_reference_rows()) out.append(as_python(to_json(c)));
        return out;
    });

    m.def("run_selftest", [](std::uint64_t seed, std::size_t cases, const std::string& fault) {
        const auto report = run_selftest(SelftestOptions{seed, cases, fault});
        py::list out;
        for (const auto& r : report.results) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["checks"] = r.checks;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = SelftestOptions{}.seed, py::arg("cases") = SelftestOptions{}.cases,
       py::arg("inject_fault") = "");
}
