#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/cli_impl.hpp"
#include "hodgeheat/complex.hpp"
#include "hodgeheat/forman.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/report.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/spectral.hpp"

namespace py = pybind11;
using namespace hodgeheat;

namespace {

WeightedComplex complex_from_json(const std::string& text) {
  std::istringstream ss(text);
  return load_complex(ss, "<python>");
}

LaplacianMatrix block(const WeightedComplex& cx, int degree, const std::string& variant) {
  return assemble_laplacian(cx, degree, lap_variant_from_string(variant));
}

}  // namespace

PYBIND11_MODULE(_hodgeheat, m) {
  m.doc() = "weighted simplicial complexes: Hodge operators, curvature, heat flow";

  py::register_exception<ParseError>(m, "ParseError");

  py::class_<WeightedComplex>(m, "Complex")
      .def_static("from_json", &complex_from_json, py::arg("text"),
                  "Build a complex from its JSON description.")
      .def_static("generate", &parse_generator_spec, py::arg("spec"),
                  "Build a complex from a generator spec like 'cycle:3:hollow'.")
      .def_property_readonly("dim", &WeightedComplex::dim)
      .def_property_readonly("augmented", &WeightedComplex::augmented)
      .def_property_readonly("combinatorial", &WeightedComplex::combinatorial)
      .def("block_size", &WeightedComplex::block_size, py::arg("degree"))
      .def("keys", &WeightedComplex::keys, py::arg("degree"))
      .def("weights",
           [](const WeightedComplex& cx, int k) { return RVec(cx.weights(k)); },
           py::arg("degree"))
      .def("total_simplices", &WeightedComplex::total_simplices)
      .def("to_json", &complex_to_json)
      .def("__repr__", [](const WeightedComplex& cx) {
        return "<Complex dim=" + std::to_string(cx.dim()) + " simplices=" +
               std::to_string(cx.total_simplices()) + ">";
      });

  m.def(
      "laplacian",
      [](const WeightedComplex& cx, int degree, const std::string& variant) {
        const LaplacianMatrix H = block(cx, degree, variant);
        return py::make_tuple(Mat(H.A), RVec(H.m), H.keys);
      },
      py::arg("cx"), py::arg("degree") = 0, py::arg("variant") = "hodge",
      "Operator block as (matrix, site_weights, keys).");

  m.def(
      "spectrum",
      [](const WeightedComplex& cx, int degree, const std::string& variant) {
        const SpectralReport sp = spectrum(block(cx, degree, variant));
        return py::make_tuple(RVec(sp.eigenvalues), sp.lambda2, sp.kernel_dim);
      },
      py::arg("cx"), py::arg("degree") = 0, py::arg("variant") = "hodge",
      "Eigenvalues (ascending), bottom eigenvalue, kernel dimension.");

  m.def("betti", &betti, py::arg("cx"), py::arg("degree"),
        "Harmonic kernel dimension at one degree.");

  m.def(
      "curvature",
      [](const WeightedComplex& cx, int degree) {
        const auto& simps = cx.simplices(degree);
        RVec out(static_cast<int>(simps.size()));
        for (std::size_t i = 0; i < simps.size(); ++i)
          out(static_cast<int>(i)) = forman_curvature(cx, simps[i]);
        return out;
      },
      py::arg("cx"), py::arg("degree"),
      "Weighted curvature of every simplex of one degree, block order.");

  m.def(
      "heat_propagator",
      [](const WeightedComplex& cx, int degree, double t) {
        HeatSemigroup hs(block(cx, degree, "hodge"));
        return Mat(hs.propagator(t));
      },
      py::arg("cx"), py::arg("degree"), py::arg("t"),
      "Matrix of e^{-tH} on the degree block.");

  m.def(
      "heat_kernel",
      [](const WeightedComplex& cx, int degree, double t) {
        HeatSemigroup hs(block(cx, degree, "hodge"));
        return Mat(hs.kernel(t));
      },
      py::arg("cx"), py::arg("degree"), py::arg("t"),
      "Site-measure kernel p_t(x, y) on the degree block.");

  m.def(
      "schrodinger_data",
      [](const WeightedComplex& cx, int degree) {
        const SchrodingerData sd = extract_schrodinger(block(cx, degree, "hodge"));
        return py::make_tuple(RMat(sd.b), Mat(sd.o), RVec(sd.c), RVec(sd.m));
      },
      py::arg("cx"), py::arg("degree"),
      "Extracted (coupling, phases, potential, measure) of the degree block.");

  m.def(
      "report_json",
      [](const WeightedComplex& cx, std::uint64_t seed, const std::vector<double>& ts) {
        return verdict_to_json(run_all_checks(cx, ts, seed));
      },
      py::arg("cx"), py::arg("seed") = 1, py::arg("t_grid") = std::vector<double>{},
      "Aggregate verdict of every check as a JSON string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin_text") = std::string(),
      "Invoke the command dispatcher in process: (exit_code, stdout, stderr).");
}
