#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polyspace/cli.hpp"
#include "polyspace/cohomology_ring.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"
#include "polyspace/int_matrix.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/subset_complex.hpp"
#include "polyspace/verify.hpp"

namespace py = pybind11;

// BigInt crosses the boundary as a Python int, via its decimal string.
namespace pybind11::detail {
template <>
struct type_caster<polyspace::BigInt> {
  PYBIND11_TYPE_CASTER(polyspace::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = polyspace::BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const polyspace::BigInt& v, return_value_policy, handle) {
    const std::string s = v.str();
    return PyLong_FromString(s.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using polyspace::BigInt;
using polyspace::IntMatrix;

IntMatrix to_matrix(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw polyspace::Error(polyspace::ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<BigInt>> from_matrix(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

py::tuple triple(const polyspace::InvolutionClass& c) { return py::make_tuple(c.x, c.y, c.z); }

}  // namespace

PYBIND11_MODULE(_polyspace, m) {
  m.doc() = "Exact invariants of the conjugation involution on planar equilateral polygon spaces";
  m.attr("__version__") = std::string(polyspace::kToolkitVersion);

  static py::exception<polyspace::Error> error(m, "PolyspaceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const polyspace::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(std::string(e.what()));
      exc.attr("kind") = std::string(polyspace::to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("binom", &polyspace::binom, py::arg("n"), py::arg("k"));
  m.def(
      "invariant_table",
      [](int n) {
        const auto t = polyspace::invariant_table(n);
        py::dict d;
        d["n"] = t.n;
        d["m"] = t.m;
        d["D"] = t.D;
        d["alpha"] = t.alpha;
        d["beta"] = t.beta;
        d["gamma"] = t.gamma;
        d["d"] = t.d;
        return d;
      },
      py::arg("n"));
  m.def("alpha_series", &polyspace::alpha_series, py::arg("count"));

  m.def(
      "series",
      [](int n, const std::string& which) {
        return polyspace::select_series(polyspace::series_bundle(n), which).coeffs();
      },
      py::arg("n"), py::arg("which"));
  m.def("series_names", &polyspace::series_names);
  m.def("gysin_check", &polyspace::gysin_check, py::arg("n"), py::arg("lambdas"));
  m.def(
      "wang_divisor_counts",
      [](int n) {
        const auto c = polyspace::wang_divisor_counts(n);
        return py::make_tuple(c.zeros, c.ones, c.twos);
      },
      py::arg("n"));
  m.def("tau_normal_form", [](int n) { return triple(polyspace::tau_normal_form(n)); }, py::arg("n"));

  m.def(
      "smith_normal_form", [](const std::vector<std::vector<BigInt>>& rows) {
        return polyspace::smith_normal_form(to_matrix(rows));
      },
      py::arg("matrix"));
  m.def(
      "classify_involution",
      [](const std::vector<std::vector<BigInt>>& rows) {
        return triple(polyspace::classify_involution(to_matrix(rows)));
      },
      py::arg("matrix"));
  m.def(
      "involution_normal_form",
      [](std::size_t x, std::size_t y, std::size_t z) {
        return from_matrix(polyspace::involution_normal_form(x, y, z));
      },
      py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("cohomology_dim", py::overload_cast<int, int>(&polyspace::ring::cohomology_dim), py::arg("n"),
        py::arg("q"));
  m.def("r2_cup_rank", py::overload_cast<int, int>(&polyspace::ring::r2_cup_rank), py::arg("n"), py::arg("q"));
  m.def(
      "boundary_kernel_dim", [](int n) { return polyspace::boundary_kernel(n).dim; }, py::arg("n"));
  m.def("inclusion_rank", &polyspace::inclusion_rank, py::arg("v"), py::arg("s"), py::arg("t"));

  m.def(
      "verify",
      [](int n, std::vector<std::string> checks, int max_ring_n) {
        polyspace::VerifyOptions opt;
        opt.n = n;
        opt.checks = std::move(checks);
        opt.max_ring_n = max_ring_n;
        std::string dumped;
        {
          py::gil_scoped_release release;
          dumped = polyspace::to_json(polyspace::verify(opt)).dump();
        }
        return py::module_::import("json").attr("loads")(dumped);
      },
      py::arg("n"), py::arg("checks") = std::vector<std::string>{}, py::arg("max_ring_n") = 11);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = polyspace::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
