#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xq/cli.hpp"
#include "xq/monoid.hpp"
#include "xq/nil2.hpp"
#include "xq/sphere.hpp"
#include "xq/tensor.hpp"

namespace py = pybind11;

namespace {

// Python ints cross the boundary as decimal strings so no precision is lost.
xq::Integer to_integer(const py::int_& v) { return xq::Integer(py::str(v).cast<std::string>()); }

py::int_ to_py(const xq::Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

xq::IntVector to_vector(const std::vector<py::int_>& v) {
  xq::IntVector out;
  for (const auto& x : v) out.push_back(to_integer(x));
  return out;
}

py::list to_py(const xq::IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

xq::IntMatrix to_matrix(const std::vector<std::vector<py::int_>>& m) {
  xq::IntMatrix out;
  for (const auto& row : m) out.push_back(to_vector(row));
  return out;
}

py::list to_py(const xq::IntMatrix& m) {
  py::list out;
  for (const auto& row : m) out.append(to_py(row));
  return out;
}

using PyNil2 = std::pair<std::vector<py::int_>, std::vector<py::int_>>;

xq::Nil2Element to_nil2(const PyNil2& x) { return {to_vector(x.first), to_vector(x.second)}; }

py::tuple to_py(const xq::Nil2Element& x) { return py::make_tuple(to_py(x.base()), to_py(x.comm())); }

py::object json_to_py(const xq::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

xq::ExtMonoidElement to_mbar(const std::string& m, std::uint8_t x, std::uint8_t y) {
  auto e = xq::parse_monoid_element(m);
  if (!e) throw py::value_error("unknown monoid element " + m);
  if (x > 1 || y > 1) throw py::value_error("Z2 coordinates must be 0 or 1");
  return {*e, {x, y}};
}

py::tuple to_py(const xq::ExtMonoidElement& u) {
  return py::make_tuple(xq::to_string(u.m), u.v.x, u.v.y);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact algebra of crossed and quadratic modules";

  m.def(
      "nil2_normalize",
      [](const std::vector<std::pair<std::size_t, long>>& powers, std::size_t rank) {
        for (const auto& p : powers)
          if (p.first >= rank) throw py::value_error("generator index out of range");
        return to_py(xq::nil2_normalize(xq::word_from_powers(powers), rank));
      },
      py::arg("word"), py::arg("rank"),
      "Collected normal form (base, comm) of a word given as (generator, exponent) pairs.");
  m.def("nil2_op", [](const PyNil2& x, const PyNil2& y) { return to_py(xq::nil2_op(to_nil2(x), to_nil2(y))); });
  m.def("nil2_inv", [](const PyNil2& x) { return to_py(xq::nil2_inv(to_nil2(x))); });
  m.def("nil2_commutator",
        [](const PyNil2& x, const PyNil2& y) { return to_py(xq::nil2_commutator(to_nil2(x), to_nil2(y))); });
  m.def("commutator_index", &xq::commutator_index, py::arg("i"), py::arg("j"), py::arg("rank"));

  m.def(
      "fgab_equal",
      [](const std::vector<std::vector<py::int_>>& relations, const std::vector<py::int_>& x,
         const std::vector<py::int_>& y) {
        const xq::Group g = xq::Group::fg_abelian(x.size(), to_matrix(relations));
        return xq::fgab_equal(g, to_vector(x), to_vector(y));
      },
      py::arg("relations"), py::arg("x"), py::arg("y"));
  m.def(
      "tensor_induced",
      [](const std::vector<std::vector<py::int_>>& f, const std::vector<std::vector<py::int_>>& t) {
        return to_py(xq::tensor_induced(to_matrix(f), xq::Tensor(to_matrix(t))).coeffs());
      },
      py::arg("f"), py::arg("t"));

  m.def(
      "solve_homology_constraints",
      [](std::size_t range) {
        py::list out;
        for (const auto& s : xq::solve_homology_constraints(range).solutions)
          out.append(py::make_tuple(to_py(s.a), to_py(s.b), to_py(s.k)));
        return out;
      },
      py::arg("range") = 5);

  m.def(
      "check_structure",
      [](const std::string& text, std::size_t depth, std::uint64_t seed) {
        xq::SamplingOptions opts;
        opts.depth = depth;
        opts.seed = seed;
        try {
          return json_to_py(xq::check_report(text, opts));
        } catch (const xq::ParseError& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("text"), py::arg("depth") = 200, py::arg("seed") = 1,
      "Checks a structure file given as JSON text and returns the report as a dict.");
  m.def(
      "classify",
      [](std::size_t ab_range, std::size_t r_bound) {
        return json_to_py(xq::classification_report(ab_range, r_bound));
      },
      py::arg("ab_range") = 3, py::arg("r_bound") = 10);
  m.def(
      "selfmap_count",
      [](std::size_t classes) {
        const auto c = xq::assemble_selfmap_count(classes);
        return py::dict(py::arg("count") = to_py(c.count), py::arg("monoid_size") = to_py(c.monoid_size),
                        py::arg("consistent") = c.consistent, py::arg("derivation") = c.derivation);
      },
      py::arg("classes"));

  m.def("monoid_table", [] {
    py::list rows;
    for (const auto& row : xq::monoid_M_table()) {
      py::list r;
      for (auto e : row) r.append(xq::to_string(e));
      rows.append(r);
    }
    return rows;
  });
  m.def(
      "mbar_compose",
      [](const std::tuple<std::string, std::uint8_t, std::uint8_t>& u,
         const std::tuple<std::string, std::uint8_t, std::uint8_t>& v) {
        return to_py(xq::mbar_compose(to_mbar(std::get<0>(u), std::get<1>(u), std::get<2>(u)),
                                      to_mbar(std::get<0>(v), std::get<1>(v), std::get<2>(v))));
      },
      "Composes (m, x, y) with (m', x', y'); m is one of I, T, P', P''.");
  m.def("mbar_elements", [] {
    py::list out;
    for (const auto& u : xq::mbar_elements()) out.append(to_py(u));
    return out;
  });
  m.def("mbar_units", [] {
    py::list out;
    for (const auto& u : xq::mbar_units()) out.append(to_py(u));
    return out;
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = xq::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the xq command line and returns (exit code, stdout, stderr).");
}
