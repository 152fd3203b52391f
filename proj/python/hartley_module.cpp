// Python bindings for the main operations: grids, norms, the transform pair,
// both convolution routes, the algebra diagnostics, Wiener-Levy inversion and
// the Fredholm/heat solvers. Samples cross the boundary as numpy arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hartley/algebra.hpp"
#include "hartley/convolution.hpp"
#include "hartley/io.hpp"
#include "hartley/solvers.hpp"
#include "hartley/transform.hpp"
#include "hartley/wiener_levy.hpp"

namespace py = pybind11;
using namespace hartley;

namespace {

std::vector<double> to_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw InvalidFunction("expected a one-dimensional array of samples");
  const auto* data = a.data();
  return std::vector<double>(data, data + a.shape(0));
}

py::array_t<double> to_array(std::span<const double> v) {
  // The (shape, data) constructor allocates a fresh buffer and copies.
  return py::array_t<double>(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())},
                             v.data());
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["measured"] = r.measured;
  d["bound"] = r.bound;
  d["margin"] = r.margin;
  d["pass"] = r.pass;
  d["tolerance"] = r.tolerance;
  d["diagnostics"] = r.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hartley, m) {
  m.doc() = "Parameterized Hartley-type transform, its convolution algebra and solvers";

  auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidGrid>(m, "InvalidGrid", err);
  py::register_exception<InvalidParams>(m, "InvalidParams", err);
  py::register_exception<InvalidExponent>(m, "InvalidExponent", err);
  py::register_exception<InvalidTime>(m, "InvalidTime", err);
  py::register_exception<InvalidFunction>(m, "InvalidFunction", err);
  py::register_exception<GridMismatch>(m, "GridMismatch", err);
  py::register_exception<NodeNotOnGrid>(m, "NodeNotOnGrid", err);
  py::register_exception<ExponentRelationViolated>(m, "ExponentRelationViolated", err);
  py::register_exception<SingularSymbol>(m, "SingularSymbol", err);
  py::register_exception<FormatError>(m, "FormatError", err);

  py::enum_<TransformMethod>(m, "TransformMethod")
      .value("QUADRATURE", TransformMethod::Quadrature)
      .value("ACCELERATED", TransformMethod::Accelerated);
  py::enum_<ConvMethod>(m, "ConvMethod")
      .value("DIRECT_KERNEL", ConvMethod::DirectKernel)
      .value("SPECTRAL_FACTORIZATION", ConvMethod::SpectralFactorization);

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, int>(), py::arg("half_width"), py::arg("num_points"))
      .def_property_readonly("half_width", &Grid::half_width)
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("nodes", [](const Grid& g) { return to_array(g.nodes()); })
      .def("__len__", &Grid::size)
      .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; })
      .def("__repr__", [](const Grid& g) {
        return "Grid(half_width=" + std::to_string(g.half_width()) +
               ", num_points=" + std::to_string(g.size()) + ")";
      });

  py::class_<TransformParams>(m, "TransformParams")
      .def(py::init<double, double, int>(), py::arg("a"), py::arg("b"), py::arg("n") = 1)
      .def_readonly("a", &TransformParams::a)
      .def_readonly("b", &TransformParams::b)
      .def_readonly("n", &TransformParams::n);

  py::class_<SampledFunction>(m, "SampledFunction")
      .def(py::init([](const Grid& g, py::array_t<double, py::array::c_style | py::array::forcecast> v) {
             return SampledFunction(g, to_vector(v));
           }),
           py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &SampledFunction::grid)
      .def_property_readonly("values", [](const SampledFunction& f) { return to_array(f.values()); })
      .def("__len__", &SampledFunction::size);

  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init([](const Grid& g, py::array_t<double, py::array::c_style | py::array::forcecast> v) {
             return Spectrum(g, to_vector(v));
           }),
           py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &Spectrum::grid)
      .def_property_readonly("values", [](const Spectrum& f) { return to_array(f.values()); })
      .def("__len__", &Spectrum::size);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("name", &VerificationReport::name)
      .def_readonly("measured", &VerificationReport::measured)
      .def_readonly("bound", &VerificationReport::bound)
      .def_readonly("margin", &VerificationReport::margin)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("pass_", &VerificationReport::pass)
      .def_readonly("diagnostics", &VerificationReport::diagnostics)
      .def("to_dict", &report_dict)
      .def("__repr__", [](const VerificationReport& r) { return to_line(r); });

  py::class_<NonvanishingCertificate>(m, "NonvanishingCertificate")
      .def_readonly("min_abs", &NonvanishingCertificate::min_abs)
      .def_readonly("threshold", &NonvanishingCertificate::threshold)
      .def_readonly("node_argmin", &NonvanishingCertificate::node_argmin)
      .def_property_readonly("valid", &NonvanishingCertificate::valid)
      .def_property_readonly("conditioning", &NonvanishingCertificate::conditioning);

  py::class_<RadiusTrace>(m, "RadiusTrace")
      .def_readonly("k_max", &RadiusTrace::k_max)
      .def_readonly("roots", &RadiusTrace::roots)
      .def_readonly("gelfand_value", &RadiusTrace::gelfand_value)
      .def_readonly("outer_mass", &RadiusTrace::outer_mass);

  m.def("make_grid", &make_grid, py::arg("half_width"), py::arg("num_points"));
  m.def("lp_norm", py::overload_cast<const SampledFunction&, double>(&lp_norm), py::arg("f"),
        py::arg("p"));
  m.def("lp_norm", py::overload_cast<const Spectrum&, double>(&lp_norm), py::arg("f"),
        py::arg("p"));
  m.def("alpha_factor", &alpha_factor, py::arg("params"));
  m.def("alpha_norm", &alpha_norm, py::arg("f"), py::arg("params"));
  m.def("l1_bound_constant", &l1_bound_constant, py::arg("params"));

  const auto accel = TransformMethod::Accelerated;
  m.def("fourier_cos",
        [](const SampledFunction& f, std::optional<Grid> ygrid, TransformMethod method) {
          return fourier_cos(f, ygrid ? *ygrid : f.grid(), method);
        },
        py::arg("f"), py::arg("ygrid") = std::nullopt, py::arg("method") = accel);
  m.def("fourier_sin",
        [](const SampledFunction& f, std::optional<Grid> ygrid, TransformMethod method) {
          return fourier_sin(f, ygrid ? *ygrid : f.grid(), method);
        },
        py::arg("f"), py::arg("ygrid") = std::nullopt, py::arg("method") = accel);
  m.def("h_forward",
        [](const SampledFunction& f, const TransformParams& p, std::optional<Grid> ygrid,
           TransformMethod method) { return h_forward(f, p, ygrid ? *ygrid : f.grid(), method); },
        py::arg("f"), py::arg("params"), py::arg("ygrid") = std::nullopt,
        py::arg("method") = accel);
  m.def("h_inverse",
        [](const Spectrum& F, const TransformParams& p, std::optional<Grid> xgrid,
           TransformMethod method) { return h_inverse(F, p, xgrid ? *xgrid : F.grid(), method); },
        py::arg("F"), py::arg("params"), py::arg("xgrid") = std::nullopt,
        py::arg("method") = accel);
  m.def("riemann_lebesgue_check", &riemann_lebesgue_check, py::arg("f"), py::arg("params"),
        py::arg("method") = accel);

  m.def("kernel_K",
        [](const SampledFunction& f, const TransformParams& p, double x, double v) {
          return kernel_K(f, p)(x, v);
        },
        py::arg("f"), py::arg("params"), py::arg("x"), py::arg("v"));
  m.def("convolve_direct", &convolve_direct, py::arg("f"), py::arg("g"), py::arg("params"));
  m.def("convolve_spectral", &convolve_spectral, py::arg("f"), py::arg("g"), py::arg("params"),
        py::arg("method") = accel);
  m.def("factorization_check", &factorization_check, py::arg("f"), py::arg("g"), py::arg("params"),
        py::arg("tolerance") = 1e-5, py::arg("method") = accel);
  m.def("kernel_lq_estimate_check", &kernel_lq_estimate_check, py::arg("f"), py::arg("q"),
        py::arg("v"), py::arg("params"));
  m.def("titchmarsh_probe", &titchmarsh_probe, py::arg("f"), py::arg("g"), py::arg("params"));

  m.def("conv_power", &conv_power, py::arg("f"), py::arg("k"), py::arg("params"),
        py::arg("method") = accel);
  m.def("spectral_radius_gelfand", &spectral_radius_gelfand, py::arg("f"), py::arg("params"),
        py::arg("method") = accel);
  m.def("spectral_radius_trace", &spectral_radius_trace, py::arg("f"), py::arg("params"),
        py::arg("k_max"), py::arg("method") = accel);
  m.def("character_eval", &character_eval, py::arg("f"), py::arg("y"), py::arg("params"));
  m.def("young_constant", &young_constant, py::arg("params"), py::arg("q"), py::arg("n") = 1);
  m.def("verify_young_conv",
        [](const SampledFunction& f, const SampledFunction& g, double p, double q, double r,
           const TransformParams& params) {
          return verify_young_conv(f, g, YoungExponents{p, q, r}, params);
        },
        py::arg("f"), py::arg("g"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("params"));
  m.def("verify_young_trilinear",
        [](const SampledFunction& f, const SampledFunction& g, const SampledFunction& h, double p,
           double q, double r, const TransformParams& params) {
          return verify_young_trilinear(f, g, h, YoungExponents{p, q, r}, params);
        },
        py::arg("f"), py::arg("g"), py::arg("h"), py::arg("p"), py::arg("q"), py::arg("r"),
        py::arg("params"));
  m.def("crude_constant_compare", &crude_constant_compare, py::arg("params"), py::arg("r"));

  m.def("check_nonvanishing", &check_nonvanishing, py::arg("g"), py::arg("params"),
        py::arg("threshold") = 1e-8, py::arg("method") = accel);
  m.def("wiener_levy_ell", &wiener_levy_ell, py::arg("g"), py::arg("params"),
        py::arg("method") = accel, py::arg("threshold") = 1e-8);
  m.def("wiener_levy_eta", &wiener_levy_eta, py::arg("g"), py::arg("params"),
        py::arg("method") = accel, py::arg("threshold") = 1e-8);

  m.def("solve_fredholm",
        [](const SampledFunction& g, const SampledFunction& k_rhs, const TransformParams& params,
           TransformMethod method) { return solve_fredholm({g, k_rhs, params}, method); },
        py::arg("g"), py::arg("k_rhs"), py::arg("params"), py::arg("method") = accel);
  m.def("gaussian_kernel", &gaussian_kernel, py::arg("t"), py::arg("k"), py::arg("grid"));
  m.def("gaussian_lp_norm", &gaussian_lp_norm, py::arg("t"), py::arg("k"), py::arg("p"));
  m.def("solve_heat_spectral",
        [](const SampledFunction& phi, double diffusion, double time, const TransformParams& params,
           TransformMethod method) {
          return solve_heat_spectral({diffusion, time, phi, params}, method);
        },
        py::arg("phi"), py::arg("diffusion"), py::arg("time"), py::arg("params"),
        py::arg("method") = accel);
  m.def("solve_heat_convolution",
        [](const SampledFunction& phi, double diffusion, double time, const TransformParams& params,
           TransformMethod method) {
          return solve_heat_convolution({diffusion, time, phi, params}, method);
        },
        py::arg("phi"), py::arg("diffusion"), py::arg("time"), py::arg("params"),
        py::arg("method") = accel);
  m.def("heat_estimate_report",
        [](const SampledFunction& phi, double diffusion, double time, const TransformParams& params,
           double p, double q, double r, TransformMethod method) {
          return heat_estimate_report({diffusion, time, phi, params}, p, q, r, method);
        },
        py::arg("phi"), py::arg("diffusion"), py::arg("time"), py::arg("params"), py::arg("p"),
        py::arg("q"), py::arg("r"), py::arg("method") = accel);

  m.def("read_function",
        [](const std::string& path) { return read_function(path); }, py::arg("path"));
  m.def("write_function",
        [](const std::string& path, const SampledFunction& f) { write_function(path, f); },
        py::arg("path"), py::arg("f"));
  m.def("read_spectrum",
        [](const std::string& path) { return read_spectrum(path); }, py::arg("path"));
  m.def("write_spectrum",
        [](const std::string& path, const Spectrum& f) { write_spectrum(path, f); },
        py::arg("path"), py::arg("f"));
}
