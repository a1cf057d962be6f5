#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shadowlab/lattice.hpp"
#include "shadowlab/lift.hpp"
#include "shadowlab/modular.hpp"
#include "shadowlab/report.hpp"
#include "shadowlab/scode.hpp"

namespace py = pybind11;
using namespace shadowlab;

namespace {

py::object py_int(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object fraction(const Rational& x) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py_int(x.get_num()), py_int(x.get_den()));
}

Rational rational(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

Integer integer(const py::handle& obj) {
    const Rational r = rational(obj);
    if (!is_integer(r)) throw py::value_error("expected an integer, got " + to_string(r));
    return r.get_num();
}

py::list fractions(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

std::vector<Rational> rationals(const py::iterable& values) {
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(rational(v));
    return out;
}

py::dict counts_dict(const NormCounts& c) {
    py::dict out;
    for (const auto& [k, v] : c.counts) out[py::int_(k)] = py::int_(v);
    return out;
}

py::dict series_terms(const QSeries& s) {
    py::dict out;
    for (const auto& [e, c] : s.terms()) out[py::int_(e)] = fraction(c);
    return out;
}

Word parse_word(const py::handle& row, int n) {
    if (py::isinstance<py::str>(row)) {
        const auto bits = row.cast<std::string>();
        if (static_cast<int>(bits.size()) != n) throw py::value_error("generator row '" + bits + "' has wrong length");
        Word w = 0;
        for (int i = 0; i < n; ++i) {
            if (bits[static_cast<std::size_t>(i)] == '1')
                w |= Word{1} << i;
            else if (bits[static_cast<std::size_t>(i)] != '0')
                throw py::value_error("generator rows use the characters 0 and 1");
        }
        return w;
    }
    return row.cast<Word>();
}

py::dict lift_report(const LiftReport& r) {
    py::dict d;
    d["code"] = r.code_name;
    d["rank"] = r.rank;
    d["ok"] = r.ok();
    d["theta_agrees"] = r.theta_agrees ? py::cast(*r.theta_agrees) : py::none();
    d["first_mismatch"] = r.first_mismatch ? py::cast(*r.first_mismatch) : py::none();
    d["norm2_relation"] = r.norm2_relation ? py::cast(*r.norm2_relation) : py::none();
    d["norm2_count"] = r.norm2_count;
    d["weight4_count"] = r.weight4_count;
    d["shadow_agrees"] = r.shadow_agrees ? py::cast(*r.shadow_agrees) : py::none();
    d["min_char_norm"] = r.min_char_norm;
    d["shadow_min_weight"] = r.shadow_min_weight;
    d["char_count"] = r.char_count;
    d["shadow_count"] = r.shadow_count;
    d["lift_multiplicity"] = r.lift_multiplicity;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shadows of odd unimodular lattices and self-dual binary codes";

    py::class_<QSeries>(m, "QSeries", "Truncated series in q^(1/4) with exact rational coefficients.")
        .def_property_readonly("prec", &QSeries::prec)
        .def("coeff", [](const QSeries& s, QSeries::Exponent e) { return fraction(s.coeff(e)); })
        .def("terms", &series_terms, "Nonzero coefficients keyed by quarter-exponent.")
        .def("lowest_exponent", &QSeries::lowest_exponent)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const QSeries& s, unsigned e) { return qs_pow(s, e); })
        .def("__str__", &QSeries::to_string)
        .def("__repr__", [](const QSeries& s) { return "QSeries(" + s.to_string() + ")"; });

    m.def("theta_z", &theta_z, py::arg("prec"));
    m.def("theta_z_shadow", &theta_z_shadow, py::arg("prec"));
    m.def("theta_e8", &theta_e8, py::arg("prec"));

    m.def(
        "decompose",
        [](int n, const py::iterable& leading) {
            const auto lead = rationals(leading);
            return fractions(decompose(n, lead).coeffs);
        },
        py::arg("n"), py::arg("leading"), "Coefficients a_j from the counts N_0..N_{n//8}.");
    m.def(
        "evaluate", [](int n, const py::iterable& coeffs, QSeries::Exponent prec) {
            return evaluate(HeckePoly{n, rationals(coeffs)}, prec);
        },
        py::arg("n"), py::arg("coeffs"), py::arg("prec"));
    m.def(
        "shadow_series", [](int n, const py::iterable& coeffs, QSeries::Exponent prec) {
            return shadow_series(HeckePoly{n, rationals(coeffs)}, prec);
        },
        py::arg("n"), py::arg("coeffs"), py::arg("prec"));
    m.def("extremal_theta", [](int n) { return fractions(extremal_theta(n).coeffs); }, py::arg("n"));
    m.def(
        "predict_shadow_defect",
        [](int n, const py::object& n2) { return fraction(predict_shadow_defect(n, integer(n2))); }, py::arg("n"),
        py::arg("norm2_count"));
    m.def(
        "check_congruence", [](int n, const py::object& n2, bool even) { return check_congruence(n, integer(n2), even); },
        py::arg("n"), py::arg("norm2_count"), py::arg("even") = false);

    py::class_<Lattice>(m, "Lattice", "Integral lattice given by its Gram matrix.")
        .def(py::init([](const IntMatrix& gram) { return Lattice::from_gram(gram); }), py::arg("gram"))
        .def_property_readonly("rank", &Lattice::rank)
        .def_property_readonly("gram", &Lattice::gram)
        .def("determinant", [](const Lattice& l) { return py_int(l.determinant()); })
        .def("is_even", &Lattice::is_even)
        .def("is_unimodular", &Lattice::is_unimodular)
        .def("__repr__", [](const Lattice& l) { return "Lattice(rank=" + std::to_string(l.rank()) + ")"; });

    m.def("catalog", &catalog, py::arg("name"));
    m.def("catalog_names", &catalog_names);
    m.def("integer_lattice", &integer_lattice, py::arg("n"));
    m.def("root_lattice", &root_lattice, py::arg("kind"));
    m.def("direct_sum", &direct_sum);
    m.def(
        "enumerate_norms", [](const Lattice& l, std::int64_t max) { return counts_dict(enumerate_norms(l, max)); },
        py::arg("lattice"), py::arg("max_norm"));
    m.def(
        "shadow_norm_counts", [](const Lattice& l, std::int64_t max) { return counts_dict(shadow_norm_counts(l, max)); },
        py::arg("lattice"), py::arg("max_cnorm"));
    m.def("min_characteristic_norm", &min_characteristic_norm);
    m.def("characteristic_vector", [](const Lattice& l) { return characteristic_coset(l).rep; });
    m.def("root_system", &root_system);
    m.def("reduce", [](const Lattice& l) {
        Reduction r = reduce(l);
        return py::make_tuple(r.r, r.core);
    });

    py::class_<BinaryCode>(m, "BinaryCode", "Binary linear code; rows are '0'/'1' strings or integer bit masks.")
        .def(py::init([](int n, const py::iterable& rows) {
                 std::vector<Word> gens;
                 for (const auto& r : rows) gens.push_back(parse_word(r, n));
                 return BinaryCode(n, std::move(gens));
             }),
             py::arg("n"), py::arg("generators"))
        .def_property_readonly("length", &BinaryCode::length)
        .def_property_readonly("dimension", &BinaryCode::dimension)
        .def_property_readonly("generators", &BinaryCode::generators)
        .def("__repr__", [](const BinaryCode& c) {
            return "BinaryCode(n=" + std::to_string(c.length()) + ", k=" + std::to_string(c.dimension()) + ")";
        });

    m.def("code_catalog", &code_catalog, py::arg("name"));
    m.def("code_catalog_names", &code_catalog_names);
    m.def("repetition_power", &repetition_power, py::arg("r"));
    m.def("code_direct_sum", &code_direct_sum);
    m.def("is_self_dual", &is_self_dual);
    m.def("weight_enumerator", [](const BinaryCode& c) { return fractions(weight_enumerator(c).counts); });
    m.def("shadow_enumerator", [](const BinaryCode& c) { return fractions(shadow_enumerator(c).counts); });
    m.def("weight_enumerator_string", [](const BinaryCode& c) { return weight_enumerator(c).to_string(); });
    m.def("shadow_enumerator_string", [](const BinaryCode& c) { return shadow_enumerator(c).to_string(); });
    m.def("gleason_decompose", [](const BinaryCode& c) { return fractions(gleason_decompose(weight_enumerator(c)).coeffs); });
    m.def(
        "shadow_from_gleason",
        [](int n, const py::iterable& coeffs) { return fractions(shadow_from_gleason(GleasonPoly{n, rationals(coeffs)}).counts); },
        py::arg("n"), py::arg("coeffs"));
    m.def(
        "predict_code_defect",
        [](int n, const py::object& a4) { return fraction(predict_code_defect(n, integer(a4))); }, py::arg("n"),
        py::arg("weight4_count"));
    m.def("split_z", [](const BinaryCode& c) {
        CodeSplit s = split_z(c);
        return py::make_tuple(s.r, s.core);
    });

    m.def("construction_a", &construction_a, py::arg("code"));
    m.def(
        "verify_theta_identity",
        [](const BinaryCode& c, QSeries::Exponent prec) { return lift_report(verify_theta_identity(c, prec)); },
        py::arg("code"), py::arg("prec") = 40);
    m.def(
        "verify_shadow_identity",
        [](const BinaryCode& c, std::int64_t bound) { return lift_report(verify_shadow_identity(c, bound)); },
        py::arg("code"), py::arg("max_cnorm") = -1);

    m.def(
        "run_suite_json",
        [](const std::string& suite, std::optional<QSeries::Exponent> prec, std::optional<std::int64_t> max_norm) {
            return run_suite(suite, VerifyOptions{prec, max_norm}).to_json();
        },
        py::arg("suite"), py::arg("prec") = py::none(), py::arg("max_norm") = py::none());

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        }
    });
}
