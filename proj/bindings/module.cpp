/*
 * Copyright 2026 The fuzzyspace authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fuzzyspace/cli.hpp"
#include "fuzzyspace/io.hpp"
#include "fuzzyspace/oracle.hpp"

namespace py = pybind11;
using namespace fuzzyspace;

namespace {

py::object int_to_py(const Integer& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

FieldScalar scalar_from_py(const FieldSpec& field, py::handle h) {
    if (py::isinstance<Rational>(h))
        return FieldScalar(field, h.cast<Rational>());
    if (py::isinstance<py::int_>(h))
        return FieldScalar(field, Integer(py::str(h).cast<std::string>()));
    if (py::isinstance<py::str>(h))
        return FieldScalar::parse(field, h.cast<std::string>());
    throw py::type_error("expected int, str or Rational scalar");
}

py::object scalar_to_py(const FieldScalar& s) {
    if (s.field().is_prime_field())
        return int_to_py(s.residue());
    return py::cast(s.rat());
}

Vector vector_from_py(const FieldSpec& field, py::handle seq) {
    std::vector<FieldScalar> entries;
    for (py::handle item : py::iter(seq))
        entries.push_back(scalar_from_py(field, item));
    return Vector(field, std::move(entries));
}

py::list vector_to_py(const Vector& v) {
    py::list out;
    for (const auto& e : v.entries())
        out.append(scalar_to_py(e));
    return out;
}

Matrix matrix_from_py(const FieldSpec& field, py::handle rows_obj) {
    std::vector<Vector> rows;
    std::size_t cols = 0;
    for (py::handle row : py::iter(rows_obj)) {
        rows.push_back(vector_from_py(field, row));
        cols = rows.back().size();
    }
    return Matrix::from_rows(field, rows, cols);
}

py::list matrix_to_py(const Matrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.append(vector_to_py(m.row(i)));
    return out;
}

Rational rational_from_py(py::handle h) {
    if (py::isinstance<Rational>(h))
        return h.cast<Rational>();
    if (py::isinstance<py::int_>(h))
        return Rational(Integer(py::str(h).cast<std::string>()));
    if (py::isinstance<py::str>(h))
        return Rational::parse(h.cast<std::string>());
    throw py::type_error("expected int, str or Rational level");
}

std::vector<Rational> grid_from_py(py::handle seq) {
    std::vector<Rational> out;
    for (py::handle item : py::iter(seq))
        out.push_back(rational_from_py(item));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for fuzzy subspaces of finite-dimensional vector spaces: "
              "flags of level subspaces, fuzzy bases, dimension profiles and the "
              "isomorphism decision with witness construction.";

    py::register_exception<Error>(m, "FuzzySpaceError");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](py::handle v) { return rational_from_py(v); }))
        .def(py::init([](py::handle num, py::handle den) {
                 return Rational(Integer(py::str(num).cast<std::string>()),
                                 Integer(py::str(den).cast<std::string>()));
             }),
             py::arg("num"), py::arg("den"))
        .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
        .def_property_readonly("numerator", [](const Rational& q) { return int_to_py(q.num()); })
        .def_property_readonly("denominator", [](const Rational& q) { return int_to_py(q.den()); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& q) { return "Rational('" + q.str() + "')"; })
        .def("__hash__", [](const Rational& q) { return py::hash(py::str(q.str())); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self);

    py::class_<FieldSpec>(m, "FieldSpec")
        .def_static("gf", &FieldSpec::gf, py::arg("p"))
        .def_static("rationals", &FieldSpec::rationals)
        .def_static("parse", [](const std::string& s) { return FieldSpec::parse(s); })
        .def_property_readonly("is_prime_field", &FieldSpec::is_prime_field)
        .def_property_readonly("prime", &FieldSpec::prime)
        .def("__str__", &FieldSpec::str)
        .def("__repr__", [](const FieldSpec& f) { return "FieldSpec('" + f.str() + "')"; })
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::class_<Subspace>(m, "Subspace")
        .def_static("zero", &Subspace::zero, py::arg("field"), py::arg("ambient"))
        .def_static("full", &Subspace::full, py::arg("field"), py::arg("ambient"))
        .def_property_readonly("field", &Subspace::field)
        .def_property_readonly("ambient", &Subspace::ambient)
        .def_property_readonly("rank", &Subspace::rank)
        .def("basis_rows",
             [](const Subspace& s) {
                 py::list out;
                 for (const auto& r : s.basis_rows())
                     out.append(vector_to_py(r));
                 return out;
             })
        .def("__repr__",
             [](const Subspace& s) {
                 std::ostringstream os;
                 os << "Subspace(" << s.field().str() << "^" << s.ambient() << ", rank " << s.rank() << ")";
                 return os.str();
             })
        .def(py::self == py::self)
        .def(py::self != py::self);

    m.def(
        "span",
        [](const FieldSpec& field, std::size_t ambient, py::handle vectors) {
            std::vector<Vector> vs;
            for (py::handle v : py::iter(vectors))
                vs.push_back(vector_from_py(field, v));
            return span(field, ambient, vs);
        },
        py::arg("field"), py::arg("ambient"), py::arg("vectors"),
        "Canonical subspace spanned by the given vectors.");
    m.def(
        "contains",
        [](const Subspace& s, py::handle x) { return contains(s, vector_from_py(s.field(), x)); },
        py::arg("subspace"), py::arg("vector"));
    m.def("is_subset", &is_subset, py::arg("a"), py::arg("b"));
    m.def(
        "extend_basis",
        [](const Subspace& inner, const Subspace& outer) {
            py::list out;
            for (const auto& v : extend_basis(inner, outer))
                out.append(vector_to_py(v));
            return out;
        },
        py::arg("inner"), py::arg("outer"),
        "Deterministic completion of inner's basis to a basis of outer.");
    m.def("intersect", &intersect, py::arg("a"), py::arg("b"));

    py::class_<FuzzyFlag>(m, "FuzzyFlag")
        .def_static(
            "validate",
            [](const FieldSpec& field, std::size_t ambient, py::handle entries) {
                std::vector<FlagEntry> es;
                for (py::handle item : py::iter(entries)) {
                    auto pair = py::cast<py::tuple>(item);
                    es.push_back(FlagEntry{rational_from_py(pair[0]), pair[1].cast<Subspace>()});
                }
                return FuzzyFlag::validate(field, ambient, std::move(es));
            },
            py::arg("field"), py::arg("ambient"), py::arg("entries"),
            "Builds a flag from (level, subspace) pairs, checking every invariant.")
        .def_static("parse", [](const std::string& text) { return parse_flag(text); })
        .def_property_readonly("field", &FuzzyFlag::field)
        .def_property_readonly("ambient", &FuzzyFlag::ambient)
        .def("entries",
             [](const FuzzyFlag& f) {
                 py::list out;
                 for (const auto& e : f.entries())
                     out.append(py::make_tuple(e.level, e.space));
                 return out;
             })
        .def("membership",
             [](const FuzzyFlag& f, py::handle x) { return membership(f, vector_from_py(f.field(), x)); })
        .def("level_subspace",
             [](const FuzzyFlag& f, py::handle t) -> py::object {
                 auto s = level_subspace(f, rational_from_py(t));
                 return s ? py::cast(*s) : py::none();
             })
        .def("dimension", [](const FuzzyFlag& f) { return dimension(f); })
        .def("image_set", [](const FuzzyFlag& f) { return image_set(f); })
        .def("restrict_to", [](const FuzzyFlag& f, const Subspace& a) { return restrict_to(f, a); })
        .def("serialize", [](const FuzzyFlag& f) { return serialize_flag(f); })
        .def("__eq__", [](const FuzzyFlag& a, const FuzzyFlag& b) { return flags_equal(a, b); })
        .def("__repr__",
             [](const FuzzyFlag& f) {
                 std::ostringstream os;
                 os << "FuzzyFlag(" << f.field().str() << "^" << f.ambient() << ", " << f.levels()
                    << " levels)";
                 return os.str();
             });

    py::class_<PointwiseTable>(m, "PointwiseTable")
        .def(py::init([](const FieldSpec& field, std::size_t ambient, py::handle grades) {
                 return PointwiseTable(field, ambient, grid_from_py(grades));
             }),
             py::arg("field"), py::arg("ambient"), py::arg("grades"),
             "Grades indexed over all vectors in lexicographic order.")
        .def_static("parse", [](const std::string& text) { return parse_pointwise_table(text); })
        .def_property_readonly("field", &PointwiseTable::field)
        .def_property_readonly("ambient", &PointwiseTable::ambient)
        .def("grades", [](const PointwiseTable& t) { return t.grades(); })
        .def("grade",
             [](const PointwiseTable& t, py::handle x) { return t.grade(vector_from_py(t.field(), x)); })
        .def("serialize", [](const PointwiseTable& t) { return serialize_pointwise_table(t); })
        .def(py::self == py::self);

    py::class_<FuzzyBasis>(m, "FuzzyBasis")
        .def("elements",
             [](const FuzzyBasis& b) {
                 py::list out;
                 for (const auto& e : b.elements())
                     out.append(py::make_tuple(vector_to_py(e.vector), e.grade));
                 return out;
             })
        .def_property_readonly("ambient", &FuzzyBasis::ambient)
        .def("grade_sum", &FuzzyBasis::grade_sum)
        .def("__len__", &FuzzyBasis::size);

    py::class_<LinearMap>(m, "LinearMap")
        .def(py::init([](const FieldSpec& field, py::handle rows) {
                 return LinearMap::from_matrix(matrix_from_py(field, rows));
             }),
             py::arg("field"), py::arg("rows"),
             "Map given by matrix rows; column j is the image of basis vector j.")
        .def_static("identity", &LinearMap::identity, py::arg("field"), py::arg("n"))
        .def_property_readonly("field", &LinearMap::field)
        .def_property_readonly("domain_dim", &LinearMap::domain_dim)
        .def_property_readonly("codomain_dim", &LinearMap::codomain_dim)
        .def("rows", [](const LinearMap& f) { return matrix_to_py(f.matrix()); })
        .def("is_invertible", &LinearMap::is_invertible)
        .def("apply", [](const LinearMap& f, py::handle x) {
            return vector_to_py(f.matrix() * vector_from_py(f.field(), x));
        })
        .def(py::self == py::self);

    py::class_<DimProfile>(m, "DimProfile")
        .def("entries",
             [](const DimProfile& p) {
                 py::list out;
                 for (const auto& e : p.entries())
                     out.append(py::make_tuple(e.level, e.value));
                 return out;
             })
        .def("query",
             [](const DimProfile& p, py::handle t) -> py::object {
                 auto v = p.query(rational_from_py(t));
                 return v ? py::cast(*v) : py::none();
             },
             "Profile value at t; None encodes the empty level set (printed as -1).")
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::class_<EnumerationBudget>(m, "EnumerationBudget")
        .def(py::init([](std::uint64_t max_vectors, std::uint64_t max_maps) {
                 EnumerationBudget b;
                 b.max_vectors = max_vectors;
                 b.max_maps = max_maps;
                 return b;
             }),
             py::arg("max_vectors") = EnumerationBudget{}.max_vectors,
             py::arg("max_maps") = EnumerationBudget{}.max_maps)
        .def_readwrite("max_vectors", &EnumerationBudget::max_vectors)
        .def_readwrite("max_maps", &EnumerationBudget::max_maps);

    py::class_<AxiomWitness>(m, "AxiomWitness")
        .def_property_readonly("kind",
                               [](const AxiomWitness& w) {
                                   return w.kind == AxiomWitness::Kind::Subtraction ? "subtraction"
                                                                                    : "scalar";
                               })
        .def_property_readonly("x", [](const AxiomWitness& w) { return vector_to_py(w.x); })
        .def_property_readonly("y", [](const AxiomWitness& w) { return vector_to_py(w.y); })
        .def_property_readonly("alpha", [](const AxiomWitness& w) { return scalar_to_py(w.alpha); })
        .def("describe", &AxiomWitness::describe)
        .def("__repr__", [](const AxiomWitness& w) { return "AxiomWitness(" + w.describe() + ")"; });

    m.def("from_pointwise", &from_pointwise, py::arg("table"),
          "Validates both fuzzy-subspace axioms and builds the canonical flag.");
    m.def("expand_flag", &expand_flag, py::arg("flag"), py::arg("budget") = EnumerationBudget{});
    m.def("fuzzy_basis", &fuzzy_basis, py::arg("flag"));
    m.def("dimension", &dimension, py::arg("flag"));
    m.def("image_set", &image_set, py::arg("flag"));
    m.def("flags_equal", &flags_equal, py::arg("a"), py::arg("b"));
    m.def("restrict_to", &restrict_to, py::arg("flag"), py::arg("subspace"));

    m.def("zadeh_image", &zadeh_image, py::arg("map"), py::arg("flag"));
    m.def("transport_basis", &transport_basis, py::arg("map"), py::arg("basis"));
    m.def("dim_profile", &dim_profile, py::arg("flag"));
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
    m.def("witness_isomorphism", &witness_isomorphism, py::arg("a"), py::arg("b"));
    m.def(
        "verify_isomorphism",
        [](const LinearMap& f, const FuzzyFlag& a, const FuzzyFlag& b) {
            std::string why;
            bool ok = verify_isomorphism(f, a, b, &why);
            return py::make_tuple(ok, why);
        },
        py::arg("map"), py::arg("a"), py::arg("b"),
        "Returns (ok, diagnostic); the diagnostic is empty when ok.");

    m.def(
        "enumerate_vectors",
        [](const FieldSpec& field, std::size_t n, const EnumerationBudget& budget) {
            py::list out;
            for (const auto& v : enumerate_vectors(field, n, budget))
                out.append(vector_to_py(v));
            return out;
        },
        py::arg("field"), py::arg("n"), py::arg("budget") = EnumerationBudget{});
    m.def(
        "check_axioms",
        [](const PointwiseTable& t, const EnumerationBudget& budget) -> py::object {
            auto w = check_axioms(t, budget);
            return w ? py::cast(*w) : py::none();
        },
        py::arg("table"), py::arg("budget") = EnumerationBudget{},
        "None when both axioms hold, else the first violating witness.");
    m.def("zadeh_pointwise", &zadeh_pointwise, py::arg("map"), py::arg("table"),
          py::arg("budget") = EnumerationBudget{});
    m.def("enumerate_subspaces", &enumerate_subspaces, py::arg("field"), py::arg("n"),
          py::arg("budget") = EnumerationBudget{});
    m.def(
        "enumerate_flags",
        [](const FieldSpec& field, std::size_t n, py::handle grid, const EnumerationBudget& budget) {
            return enumerate_flags(field, n, grid_from_py(grid), budget);
        },
        py::arg("field"), py::arg("n"), py::arg("grid"), py::arg("budget") = EnumerationBudget{});
    m.def("enumerate_invertible_maps", &enumerate_invertible_maps, py::arg("field"), py::arg("n"),
          py::arg("budget") = EnumerationBudget{});
    m.def(
        "brute_force_iso",
        [](const FuzzyFlag& a, const FuzzyFlag& b, const EnumerationBudget& budget) -> py::object {
            auto f = brute_force_iso(a, b, budget);
            return f ? py::cast(*f) : py::none();
        },
        py::arg("a"), py::arg("b"), py::arg("budget") = EnumerationBudget{},
        "First invertible map carrying a onto b in enumeration order, or None.");

    m.def("parse_flag", [](const std::string& text) { return parse_flag(text); }, py::arg("text"));
    m.def("serialize_flag", &serialize_flag, py::arg("flag"));
    m.def(
        "parse_linear_map",
        [](const std::string& text, const FieldSpec& field) {
            return LinearMap::from_matrix(parse_matrix(text, field));
        },
        py::arg("text"), py::arg("field"), "Reads the 'rows cols' matrix file format.");
    m.def(
        "serialize_linear_map", [](const LinearMap& f) { return serialize_matrix(f.matrix()); },
        py::arg("map"));

    m.def(
        "run_command",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
