#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "cotlsa/errors.hpp"
#include "cotlsa/families.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/serialize.hpp"
#include "cotlsa/symplectic.hpp"

namespace py = pybind11;
using namespace cotlsa;

namespace pybind11::detail {

// Scalar <-> fractions.Fraction; int and "p/q" str also load.
template <>
struct type_caster<Scalar> {
    PYBIND11_TYPE_CASTER(Scalar, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyBool_Check(src.ptr())) return false;
        const bool is_fraction = isinstance(src, module_::import("fractions").attr("Fraction"));
        if (!is_fraction && !PyLong_Check(src.ptr()) && !PyUnicode_Check(src.ptr())) return false;
        try {
            value = Scalar::parse(py::str(src).cast<std::string>());
        } catch (const cotlsa::ParseError&) {
            return false;
        }
        return true;
    }

    static handle cast(const Scalar& s, return_value_policy, handle) {
        return module_::import("fractions").attr("Fraction")(s.str()).release();
    }
};

}  // namespace pybind11::detail

namespace {

py::list matrix_to_py(const Matrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(py::cast(m(r, c)));
        rows.append(row);
    }
    return rows;
}

Matrix matrix_from_py(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix();
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw DimensionMismatch("ragged matrix");
    return Matrix::from_rows(rows, rows.front().size());
}

py::dict report_to_py(const VerificationReport& r) {
    py::list witnesses;
    for (const auto& w : r.witnesses) {
        py::dict d;
        d["kind"] = w.kind;
        d["indices"] = w.indices;
        d["lhs"] = w.lhs;
        d["rhs"] = w.rhs;
        witnesses.append(d);
    }
    py::dict d;
    d["check"] = r.check;
    d["passed"] = r.passed;
    d["failures"] = r.failures;
    d["witnesses"] = witnesses;
    return d;
}

py::dict verdict_to_py(const EquivalenceVerdict& v) {
    py::dict d;
    d["result"] = to_string(v.result);
    d["certificate"] = v.certificate ? py::object(matrix_to_py(*v.certificate)) : py::none();
    d["scale"] = v.scale ? py::cast(*v.scale) : py::none();
    d["note"] = v.note;
    return d;
}

std::vector<std::string> label_strings(const LieAlgebra& L) {
    std::vector<std::string> out;
    for (const auto& l : L.labels()) out.push_back(l.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact left-symmetric and symplectic structures on cotangent Lie algebras";

    static py::exception<Error> base_error(m, "CotlsaError", PyExc_RuntimeError);
    // translators run newest first, so the catch-all goes in before the subclasses
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base_error, e.what());
        }
    });
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base_error.ptr());
    py::register_exception<NonSquareMatrix>(m, "NonSquareMatrix", base_error.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base_error.ptr());
    py::register_exception<SizeTooSmall>(m, "SizeTooSmall", base_error.ptr());
    py::register_exception<ConditionViolation>(m, "ConditionViolation", base_error.ptr());
    py::register_exception<AxiomsNotVerified>(m, "AxiomsNotVerified", base_error.ptr());
    py::register_exception<IntegerLambda>(m, "IntegerLambda", base_error.ptr());
    py::register_exception<ZeroLambdaI>(m, "ZeroLambdaI", base_error.ptr());
    py::register_exception<Degenerate>(m, "Degenerate", base_error.ptr());
    py::register_exception<NotClosed>(m, "NotClosed", base_error.ptr());
    py::register_exception<cotlsa::ParseError>(m, "ParseError", base_error.ptr());

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def_property_readonly("labels", &label_strings)
        .def_property_readonly("constants",
                               [](const LieAlgebra& L) {
                                   py::list out;
                                   for (const auto& c : L.constants()) out.append(py::make_tuple(c.i, c.j, c.k, c.c));
                                   return out;
                               })
        .def("bracket", [](const LieAlgebra& L, const Vector& x, const Vector& y) { return bracket(L, x, y); })
        .def("to_json", [](const LieAlgebra& L) { return to_json(L); });

    py::class_<LsaProduct>(m, "LsaProduct")
        .def_property_readonly("dim", &LsaProduct::dim)
        .def_property_readonly("base", &LsaProduct::base)
        .def_property_readonly("entries",
                               [](const LsaProduct& S) {
                                   py::list out;
                                   for (const auto& e : S.entries()) out.append(py::make_tuple(e.i, e.j, e.k, e.p));
                                   return out;
                               })
        .def("product", [](const LsaProduct& S, const Vector& x, const Vector& y) { return lsa_product(S, x, y); })
        .def("left_translation",
             [](const LsaProduct& S, const Vector& x) { return matrix_to_py(left_translation(S, x)); })
        .def("to_json", [](const LsaProduct& S) { return to_json(S); });

    py::class_<TwoForm>(m, "TwoForm")
        .def_property_readonly("dim", &TwoForm::dim)
        .def_property_readonly("base", &TwoForm::base)
        .def_property_readonly("matrix", [](const TwoForm& w) { return matrix_to_py(w.matrix()); })
        .def("evaluate", [](const TwoForm& w, const Vector& x, const Vector& y) { return w.evaluate(x, y); })
        .def("to_json", [](const TwoForm& w) { return to_json(w); });

    m.def("build_tg", &build_tg, py::arg("n"));
    m.def("check_jacobi", [](const LieAlgebra& L) { return report_to_py(check_jacobi(L)); });
    m.def("lower_central_series_dims", [](const LieAlgebra& L) {
        std::vector<std::size_t> dims;
        for (const auto& s : lower_central_series(L)) dims.push_back(s.dim());
        return dims;
    });
    m.def("center_dim", [](const LieAlgebra& L) { return center(L).dim(); });
    m.def("nilpotency_step", &nilpotency_step);

    m.def(
        "check_conditions",
        [](unsigned n, const Scalar& a, const Scalar& b) {
            const auto r = check_conditions(n, a, b);
            return py::make_tuple(r.passed, r.message);
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "compute_sequences",
        [](unsigned n, const Scalar& a, const Scalar& b) {
            const auto s = compute_sequences({n, a, b});
            py::dict d;
            d["alpha"] = s.alphas;
            d["beta"] = s.betas;
            d["gamma"] = s.gammas;
            return d;
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "build_delta", [](unsigned n, const Scalar& a, const Scalar& b) { return build_delta({n, a, b}); },
        py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def("check_left_symmetric", [](const LsaProduct& S) { return report_to_py(check_left_symmetric(S)); });
    m.def("check_left_hom", [](const LsaProduct& S) { return report_to_py(check_left_hom(S)); });
    m.def("check_complete", [](const LsaProduct& S) {
        const auto r = check_complete(S);
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["ordering"] = r.ordering ? py::cast(*r.ordering) : py::none();
        if (r.witness) {
            py::dict w;
            w["point"] = r.witness->point;
            w["power"] = r.witness->power;
            w["trace"] = r.witness->trace_value;
            d["witness"] = w;
        } else {
            d["witness"] = py::none();
        }
        return d;
    });
    m.def(
        "lsa_equivalence_predicate",
        [](unsigned n, const Scalar& a, const Scalar& b, const Scalar& a2, const Scalar& b2) {
            return verdict_to_py(lsa_equivalence_predicate({n, a, b}, {n, a2, b2}));
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("alpha2"), py::arg("beta2"));
    m.def(
        "check_gamma_complement",
        [](unsigned n, const Scalar& a, const Scalar& b, const Scalar& a2, const Scalar& b2) {
            return to_string(check_gamma_complement(compute_sequences({n, a, b}), compute_sequences({n, a2, b2})));
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("alpha2"), py::arg("beta2"));
    m.def("build_case_ii_iso", [](unsigned n) { return matrix_to_py(build_case_ii_iso(n)); });
    m.def(
        "in_set_A", [](unsigned n, const Scalar& a, const Scalar& b) { return in_set_A({n, a, b}); }, py::arg("n"),
        py::arg("alpha"), py::arg("beta"));
    m.def("verify_lsa_isomorphism",
          [](const LsaProduct& S, const LsaProduct& T, const std::vector<std::vector<Scalar>>& phi) {
              return report_to_py(verify_lsa_isomorphism(S, T, matrix_from_py(phi)));
          });

    m.def(
        "build_omega_lambda", [](unsigned n, const Scalar& l) { return build_omega_lambda({n, l}); }, py::arg("n"),
        py::arg("lam"));
    m.def("check_closed", [](const TwoForm& w) { return report_to_py(check_closed(w)); });
    m.def("is_nondegenerate", &is_nondegenerate);
    m.def("induce_lsa", &induce_lsa);
    m.def("check_induced_identity",
          [](const TwoForm& w, const LsaProduct& S) { return report_to_py(check_induced_identity(w, S)); });
    m.def(
        "check_induced_matches_family",
        [](unsigned n, const Scalar& l) { return report_to_py(check_induced_matches_family({n, l})); }, py::arg("n"),
        py::arg("lam"));
    m.def(
        "symplectic_equivalence_predicate",
        [](unsigned n, const Scalar& l, const Scalar& l2) {
            return verdict_to_py(symplectic_equivalence_predicate({n, l}, {n, l2}));
        },
        py::arg("n"), py::arg("lam"), py::arg("lam2"));
    m.def("build_case_ii_symplecto", [](unsigned n) { return matrix_to_py(build_case_ii_symplecto(n)); });
    m.def("pullback", [](const std::vector<std::vector<Scalar>>& phi, const TwoForm& w) {
        return pullback(matrix_from_py(phi), w);
    });
    m.def(
        "verify_homothety",
        [](const TwoForm& w, const TwoForm& w2, const std::vector<std::vector<Scalar>>& phi, const Scalar& c) {
            return report_to_py(verify_homothety(w, w2, {matrix_from_py(phi), c}));
        },
        py::arg("w"), py::arg("w2"), py::arg("phi"), py::arg("c"));
    m.def(
        "in_set_B", [](unsigned n, const Scalar& l) { return in_set_B({n, l}); }, py::arg("n"), py::arg("lam"));

    m.def("parse_artifact", [](const std::string& text) {
        py::dict d;
        switch (peek_kind(text)) {
            case ArtifactKind::Algebra:
                d["kind"] = "algebra";
                d["value"] = parse_algebra(text);
                d["family"] = py::none();
                break;
            case ArtifactKind::Lsa: {
                auto a = parse_lsa(text);
                d["kind"] = "lsa";
                d["value"] = a.product;
                if (a.family) {
                    py::dict f;
                    f["n"] = a.family->n;
                    f["alpha"] = a.family->alpha;
                    f["beta"] = a.family->beta;
                    d["family"] = f;
                } else {
                    d["family"] = py::none();
                }
                break;
            }
            case ArtifactKind::Form: {
                auto a = parse_form(text);
                d["kind"] = "form";
                d["value"] = a.form;
                if (a.family) {
                    py::dict f;
                    f["n"] = a.family->n;
                    f["lambda"] = a.family->lambda;
                    d["family"] = f;
                } else {
                    d["family"] = py::none();
                }
                break;
            }
        }
        return d;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
