#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusforge/algebra.hpp"
#include "torusforge/algfile.hpp"
#include "torusforge/cohom.hpp"
#include "torusforge/deriv.hpp"
#include "torusforge/dld.hpp"
#include "torusforge/error.hpp"
#include "torusforge/torus.hpp"

namespace py = pybind11;
using namespace torusforge;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.str());
}

py::list vector_list(const RatVector& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

py::list matrix_list(const RatMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.append(vector_list(m.row(r)));
    return rows;
}

py::list terms_list(const Algebra& a, const TermList& terms) {
    py::list out;
    for (const auto& t : terms) out.append(py::make_tuple(fraction(t.coeff), a.basis_name(t.index)));
    return out;
}

RatMatrix to_matrix(const py::sequence& rows) {
    std::vector<RatVector> out;
    for (const auto& row : rows) {
        RatVector v;
        for (const auto& x : row.cast<py::sequence>()) v.push_back(Rational::parse(py::str(x).cast<std::string>()));
        out.push_back(std::move(v));
    }
    return RatMatrix::from_rows(out);
}

py::dict fingerprint_dict(const Fingerprint& f) {
    py::dict d;
    d["dim"] = f.dim;
    d["lower_central"] = f.lower_central;
    d["derived"] = f.derived;
    d["center"] = f.center;
    d["der_even"] = f.der_even;
    d["der_odd"] = f.der_odd;
    d["inner"] = f.inner;
    d["h1"] = f.h1;
    d["h2"] = f.h2;
    d["nilradical_rank"] = f.nilradical_rank;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact nilpotent Lie algebra toolkit";

    static py::exception<Error> error(m, "TorusforgeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.what()));
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<Algebra>(m, "Algebra")
        .def_property_readonly("name", &Algebra::name)
        .def_property_readonly("kind", [](const Algebra& a) { return to_string(a.kind()); })
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("even_basis", &Algebra::even_basis)
        .def_property_readonly("odd_basis", &Algebra::odd_basis)
        .def_property_readonly("basis", &Algebra::basis_names)
        .def("bracket",
             [](const Algebra& a, const std::string& x, const std::string& y) {
                 auto i = a.index_of(x), j = a.index_of(y);
                 if (!i || !j) throw Error(ErrorCode::Usage, "unknown basis element");
                 return terms_list(a, a.bracket(*i, *j));
             })
        .def("to_json", &serialize_algebra)
        .def("center_dim", [](const Algebra& a) { return center(a).dim(); })
        .def("series",
             [](const Algebra& a) {
                 auto s = series(a);
                 py::dict d;
                 d["lower_central"] = s.lower_central;
                 d["derived"] = s.derived;
                 d["nilpotent"] = s.nilpotent;
                 d["solvable"] = s.solvable;
                 return d;
             })
        .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
        .def("__repr__", [](const Algebra& a) {
            return "<Algebra " + a.name() + " dim=" + std::to_string(a.dim()) + ">";
        });

    m.def("load", [](const std::string& path) { return load_algebra(path); }, py::arg("path"));
    m.def("parse", [](const std::string& text) { return parse_algebra(text); }, py::arg("text"));

    m.def("validate", [](const Algebra& a) {
        auto rep = validate(a);
        py::list msgs;
        for (const auto& v : rep.violations) msgs.append(v.describe(a));
        py::dict d;
        d["valid"] = rep.valid();
        d["violations"] = msgs;
        return d;
    });

    m.def("derivations", [](const Algebra& a) {
        auto d = derivation_space(a);
        py::dict out;
        out["even"] = d.even.size();
        out["odd"] = d.odd.size();
        out["inner"] = inner_derivations(a).size();
        return out;
    });

    m.def("s_system", [](const Algebra& a) {
        auto s = build_s_system(a);
        py::dict d;
        d["variables"] = s.variables;
        d["rows"] = s.rows;
        d["rank"] = s.rank();
        return d;
    });

    m.def("diagonal_torus", [](const Algebra& a) {
        py::list out;
        for (const auto& t : diagonal_torus(a).basis) out.append(vector_list(t.diagonal_entries()));
        return out;
    });

    m.def("rank", [](const Algebra& a) { return rank_of(a); });

    m.def(
        "roots",
        [](const Algebra& a, std::optional<py::sequence> torus) {
            Torus t = diagonal_torus(a);
            if (torus) {
                t.basis.clear();
                for (const auto& mtx : *torus) t.basis.push_back(to_matrix(mtx.cast<py::sequence>()));
            }
            auto rd = root_decomposition(a, t);
            py::dict byname;
            for (std::size_t i = 0; i < a.dim(); ++i) byname[py::str(a.basis_name(i))] = vector_list(rd.root_of[i]);
            py::dict d;
            d["root_of"] = byname;
            d["zero_root"] = rd.has_zero_root();
            return d;
        },
        py::arg("algebra"), py::arg("torus") = py::none());

    m.def("dld", [](const Algebra& a) {
        auto r = dld_check(a);
        py::dict d;
        d["condition_i"] = r.condition_i;
        d["condition_ii"] = r.condition_ii;
        d["condition_iii"] = r.condition_iii;
        d["torus_dim"] = r.torus_dim;
        d["diagonal_span_dim"] = r.diagonal_span_dim;
        py::list zero;
        for (auto i : r.zero_root_indices) zero.append(a.basis_name(i));
        d["zero_root"] = zero;
        d["overall"] = r.overall();
        return d;
    });

    m.def(
        "extend",
        [](const Algebra& a, std::optional<py::sequence> torus) {
            if (!torus) return build_maximal_extension(a).algebra;
            std::vector<RatMatrix> ms;
            for (const auto& mtx : *torus) ms.push_back(to_matrix(mtx.cast<py::sequence>()));
            return build_extension(a, ms).algebra;
        },
        py::arg("algebra"), py::arg("torus") = py::none());

    m.def("verify_nilradical", [](const Algebra& r, std::size_t m) {
        auto rep = verify_nilradical(r, m);
        py::dict d;
        d["ok"] = rep.ok();
        d["diagnosis"] = rep.diagnosis;
        return d;
    });

    m.def("normalize", [](const Algebra& r, std::size_t m) {
        auto n = normalize_extension(r, m);
        return py::make_tuple(n.algebra, matrix_list(n.iso));
    });

    m.def("cohomology", [](const Algebra& a, unsigned k) { return cohomology_dim(a, k); }, py::arg("algebra"),
          py::arg("degree"));

    m.def(
        "fingerprint", [](const Algebra& a, std::optional<std::size_t> m) { return fingerprint_dict(fingerprint(a, m)); },
        py::arg("algebra"), py::arg("nilradical_dim") = py::none());

    m.def("compare", [](const Algebra& a, const Algebra& b) {
        auto c = compare(a, b);
        py::dict d;
        d["distinguished"] = c.distinguished;
        d["field"] = c.field.empty() ? py::object(py::none()) : py::object(py::str(c.field));
        return d;
    });
}
