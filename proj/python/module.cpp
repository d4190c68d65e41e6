#include "freenil/error.hpp"
#include "freenil/quotients.hpp"
#include "freenil/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace freenil;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be int,
// Fraction or str.
py::object to_fraction(const Scalar &q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_str());
}

Scalar from_py(const py::handle &h) { return parse_scalar(py::str(h).cast<std::string>()); }

py::list to_py(const Mat &m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.append(to_fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

Mat mat_from_py(const py::handle &obj) {
  if (py::isinstance<py::str>(obj))
    return parse_matrix(obj.cast<std::string>());
  std::vector<Vec> rows;
  for (const auto &row : obj) {
    Vec v;
    for (const auto &x : row)
      v.push_back(from_py(x));
    rows.push_back(std::move(v));
  }
  if (rows.empty())
    throw DimensionError("empty matrix");
  return Mat::from_rows(rows, rows.front().size());
}

std::vector<std::size_t> msg_from_py(const AlgebraSpec &a, const std::optional<std::vector<std::string>> &labels) {
  if (!labels)
    return extract_msg(a);
  std::vector<std::size_t> out;
  for (const auto &l : *labels) {
    const auto i = a.index_of(l);
    if (!i)
      throw ParseError("unknown basis label '" + l + "'");
    out.push_back(*i);
  }
  return out;
}

class PyFree {
public:
  PyFree(unsigned d, unsigned t) : a_(build_free(d, t)) {}

  unsigned d() const { return a_->d(); }
  unsigned t() const { return a_->t(); }
  std::size_t dim() const { return a_->dim(); }
  std::vector<std::string> basis() const {
    std::vector<std::string> out;
    for (const auto &w : a_->basis().words())
      out.push_back(w.to_string());
    return out;
  }
  std::string normalize(const std::string &x) const { return format_element(parse_element(x, a_)); }
  std::string bracket(const std::string &x, const std::string &y) const {
    return format_element(freenil::bracket(parse_element(x, a_), parse_element(y, a_)));
  }
  py::list coordinates(const std::string &x) const {
    py::list out;
    for (const auto &c : parse_element(x, a_).dense())
      out.append(to_fraction(c));
    return out;
  }
  py::list extend_derivation(const std::vector<std::string> &images) const { return to_py(freenil::extend_derivation(seed(images))); }
  py::list extend_homomorphism(const std::vector<std::string> &images) const {
    return to_py(freenil::extend_homomorphism(seed(images)));
  }
  bool is_automorphism_map(const std::vector<std::string> &images) const { return freenil::is_automorphism_map(seed(images)); }

  const FreeAlgebraPtr &ptr() const { return a_; }

private:
  GeneratorMap seed(const std::vector<std::string> &images) const {
    std::vector<LieElement> els;
    for (const auto &s : images)
      els.push_back(parse_element(s, a_));
    return GeneratorMap(a_, std::move(els));
  }

  FreeAlgebraPtr a_;
};

struct PyPresentation {
  FreeAlgebraPtr free;
  AlgebraSpec target;
  Presentation p;

  std::vector<std::string> kernel_basis() const {
    std::vector<std::string> out;
    for (const auto &v : p.kernel.space().vectors())
      out.push_back(format_element(LieElement(free, v)));
    return out;
  }
  std::vector<std::string> representatives() const {
    std::vector<std::string> out;
    for (auto i : p.quotient.rep_indices)
      out.push_back(free->basis()[i].to_string());
    return out;
  }
  py::list induced_derivations() const {
    py::list out;
    for (const auto &D : induced_der_basis(p.quotient))
      out.append(to_py(p.to_target_basis(D)));
    return out;
  }
  py::list lift(const py::handle &hat) const {
    return to_py(lift_automorphism(p.quotient, p.to_quotient_basis(mat_from_py(hat))));
  }
  py::dict aut_check(const py::handle &phi) const {
    const auto m = aut_membership(mat_from_py(phi), p.kernel);
    py::dict d;
    d["is_automorphism"] = m.is_automorphism;
    d["preserves_ideal"] = m.preserves_ideal;
    d["in_circ"] = m.in_circ;
    return d;
  }
};

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in free nilpotent Lie algebras";

  auto base = py::register_exception<Error>(m, "FreenilError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<MalformedSpecError>(m, "MalformedSpecError", base.ptr());

  m.def("witt_dimension", &witt_dimension, py::arg("d"), py::arg("s"));
  m.def("hall_basis", [](unsigned d, unsigned t) { return PyFree(d, t).basis(); }, py::arg("d"), py::arg("t"));

  py::class_<PyFree>(m, "FreeLieAlgebra")
      .def(py::init<unsigned, unsigned>(), py::arg("d"), py::arg("t"))
      .def_property_readonly("d", &PyFree::d)
      .def_property_readonly("t", &PyFree::t)
      .def_property_readonly("dim", &PyFree::dim)
      .def("basis", &PyFree::basis)
      .def("normalize", &PyFree::normalize, py::arg("x"))
      .def("bracket", &PyFree::bracket, py::arg("x"), py::arg("y"))
      .def("coordinates", &PyFree::coordinates, py::arg("x"))
      .def("extend_derivation", &PyFree::extend_derivation, py::arg("images"),
           "images[i] is the image of x_{i+1}")
      .def("extend_homomorphism", &PyFree::extend_homomorphism, py::arg("images"))
      .def("is_automorphism_map", &PyFree::is_automorphism_map, py::arg("images"))
      .def("__repr__", [](const PyFree &a) {
        return "<FreeLieAlgebra n_{" + std::to_string(a.d()) + "," + std::to_string(a.t()) + "}, dim " +
               std::to_string(a.dim()) + ">";
      });

  py::class_<AlgebraSpec>(m, "Algebra")
      .def_static("from_file", &load_algebra_spec, py::arg("path"))
      .def_static("from_text", &parse_algebra_spec, py::arg("text"), py::arg("name") = "algebra")
      .def_property_readonly("name", &AlgebraSpec::name)
      .def_property_readonly("labels", &AlgebraSpec::labels)
      .def_property_readonly("dim", &AlgebraSpec::dim)
      .def("to_text", &format_algebra_spec)
      .def("validate", &validate_spec)
      .def("lower_central_series", [](const AlgebraSpec &a) { return lower_central_series(a).dims(); })
      .def_property_readonly("nilindex", [](const AlgebraSpec &a) { return lower_central_series(a).nilindex; })
      .def_property_readonly("type", [](const AlgebraSpec &a) { return lower_central_series(a).type; })
      .def("generators",
           [](const AlgebraSpec &a) {
             std::vector<std::string> out;
             for (auto i : extract_msg(a))
               out.push_back(a.labels()[i]);
             return out;
           })
      .def("derivations",
           [](const AlgebraSpec &a) {
             py::list out;
             for (const auto &D : derivation_basis(a))
               out.append(to_py(D));
             return out;
           })
      .def("is_derivation", [](const AlgebraSpec &a, const py::handle &m) { return is_derivation_matrix(a, mat_from_py(m)); })
      .def("is_automorphism",
           [](const AlgebraSpec &a, const py::handle &m) { return is_automorphism_matrix(a, mat_from_py(m)); })
      .def("is_characteristically_nilpotent", &is_characteristically_nilpotent)
      .def("__repr__", [](const AlgebraSpec &a) {
        return "<Algebra " + a.name() + ", dim " + std::to_string(a.dim()) + ">";
      });

  py::class_<PyPresentation>(m, "Presentation")
      .def_property_readonly("kernel_dim", [](const PyPresentation &p) { return p.p.kernel.dim(); })
      .def("kernel_basis", &PyPresentation::kernel_basis)
      .def_property_readonly("homogeneous", [](const PyPresentation &p) { return is_homogeneous(p.p.kernel); })
      .def("representatives", &PyPresentation::representatives)
      .def_property_readonly("der_preserving_dim", [](const PyPresentation &p) { return der_preserving(p.p.kernel).dim(); })
      .def_property_readonly("der_into_dim", [](const PyPresentation &p) { return der_into(p.p.kernel).dim(); })
      .def("induced_derivations", &PyPresentation::induced_derivations,
           "derivations of the target induced from n_{d,t}, in the target's basis")
      .def("lift", &PyPresentation::lift, py::arg("automorphism"),
           "an automorphism of n_{d,t} preserving the kernel and inducing the given one")
      .def("aut_check", &PyPresentation::aut_check, py::arg("matrix"));

  m.def(
      "present",
      [](const PyFree &free, const AlgebraSpec &target, std::optional<std::vector<std::string>> msg) {
        return PyPresentation{free.ptr(), target, present(free.ptr(), target, msg_from_py(target, msg))};
      },
      py::arg("free"), py::arg("target"), py::arg("msg") = py::none());
}
