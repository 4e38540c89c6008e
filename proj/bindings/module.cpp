#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zlab/hardy.hpp"
#include "zlab/selfcheck.hpp"
#include "zlab/special_functions.hpp"
#include "zlab/zeros.hpp"
#include "zlab/zeta.hpp"

namespace py = pybind11;
using namespace zlab;

namespace {

ComplexPoint as_point(std::complex<double> s) { return ComplexPoint(s); }

std::vector<std::complex<double>> jet_coeffs(const Jet& j) { return j.coeffs(); }

FamilyId make_family(const std::string& kind, int n) {
    FamilyId id;
    if (kind == "F" || kind == "f") id.kind = FamilyKind::F;
    else if (kind == "H" || kind == "h") id.kind = FamilyKind::H;
    else if (kind == "G" || kind == "g") id.kind = FamilyKind::G;
    else throw DomainViolation("family must be F, H or G");
    id.n = n;
    id.validate();
    return id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hardy Z-function laboratory: zeta/theta/omega kernels, the "
              "f_n/h_n/g_n derivative families, critical-line zero scans, "
              "interlacing checks and argument-principle censuses.";

    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<DomainViolation>(m, "DomainViolation");
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
    py::register_exception<PoleProximity>(m, "PoleProximity");
    py::register_exception<NearZeroDenominator>(m, "NearZeroDenominator");
    py::register_exception<RealityCheckFailed>(m, "RealityCheckFailed");
    py::register_exception<UnstableScan>(m, "UnstableScan");
    py::register_exception<BoundaryTooClose>(m, "BoundaryTooClose");
    py::register_exception<WindingUnresolved>(m, "WindingUnresolved");
    py::register_exception<FitAmbiguous>(m, "FitAmbiguous");

    py::class_<PrecisionConfig>(m, "PrecisionConfig")
        .def(py::init<>())
        .def_readwrite("em_cutoff", &PrecisionConfig::em_cutoff)
        .def_readwrite("em_depth", &PrecisionConfig::em_depth)
        .def_readwrite("cauchy_radius", &PrecisionConfig::cauchy_radius)
        .def_readwrite("cauchy_nodes", &PrecisionConfig::cauchy_nodes)
        .def_readwrite("target_eps", &PrecisionConfig::target_eps)
        .def("validate", &PrecisionConfig::validate);

    py::class_<ZeroRecord>(m, "ZeroRecord")
        .def_readonly("n", &ZeroRecord::n)
        .def_readonly("t", &ZeroRecord::t)
        .def_readonly("bracket_width", &ZeroRecord::bracket_width)
        .def_readonly("sign_before", &ZeroRecord::sign_before)
        .def_readonly("sign_after", &ZeroRecord::sign_after)
        .def("__repr__", [](const ZeroRecord& z) {
            return "ZeroRecord(n=" + std::to_string(z.n) + ", t=" + std::to_string(z.t) + ")";
        });

    py::class_<GapRecord>(m, "GapRecord")
        .def_readonly("left", &GapRecord::left)
        .def_readonly("right", &GapRecord::right)
        .def_readonly("count", &GapRecord::count);

    py::class_<InterlaceReport>(m, "InterlaceReport")
        .def_readonly("n", &InterlaceReport::n)
        .def_readonly("t_lo", &InterlaceReport::t_lo)
        .def_readonly("t_hi", &InterlaceReport::t_hi)
        .def_readonly("gaps", &InterlaceReport::gaps)
        .def_readonly("violations", &InterlaceReport::violations)
        .def_readonly("ambiguous", &InterlaceReport::ambiguous)
        .def_readonly("smallest_clean_t", &InterlaceReport::smallest_clean_t);

    py::class_<CountReport>(m, "CountReport")
        .def_readonly("n", &CountReport::n)
        .def_readonly("T", &CountReport::T)
        .def_readonly("observed", &CountReport::observed)
        .def_readonly("main_term", &CountReport::main_term)
        .def_readonly("residual", &CountReport::residual)
        .def_readonly("residual_over_log", &CountReport::residual_over_log)
        .def_readonly("note", &CountReport::note);

    m.def("zeta", [](std::complex<double> s, double eps) {
              PrecisionConfig base;
              base.target_eps = eps;
              return zeta_auto(as_point(s), base);
          },
          py::arg("s"), py::arg("eps") = 1e-13);
    m.def("zeta_jet", [](std::complex<double> s, int order) {
              return jet_coeffs(zeta_jet(as_point(s), order));
          },
          py::arg("s"), py::arg("order"),
          "Taylor coefficients zeta^(k)(s)/k! for k = 0..order");
    m.def("chi", [](std::complex<double> s) { return chi(as_point(s)); }, py::arg("s"));
    m.def("omega", [](std::complex<double> s, int order) {
              return jet_coeffs(omega_jet(as_point(s), order));
          },
          py::arg("s"), py::arg("order") = 0);
    m.def("log_gamma", [](std::complex<double> s) { return log_gamma(as_point(s)); },
          py::arg("s"));
    m.def("digamma", [](std::complex<double> s, int order) {
              return jet_coeffs(digamma_jet(as_point(s), order));
          },
          py::arg("s"), py::arg("order") = 0);
    m.def("theta", [](double t, int order) {
              std::vector<double> out;
              for (const Complex& c : theta_jet(t, order).coeffs()) out.push_back(c.real());
              return out;
          },
          py::arg("t"), py::arg("order") = 0);

    m.def("f", [](int n, std::complex<double> s, int order) {
              return jet_coeffs(f_jet(n, as_point(s), order));
          },
          py::arg("n"), py::arg("s"), py::arg("order") = 0);
    m.def("h", [](int n, std::complex<double> s, int order) {
              return jet_coeffs(h_jet(n, as_point(s), order));
          },
          py::arg("n"), py::arg("s"), py::arg("order") = 0);
    m.def("g", [](int n, std::complex<double> s) { return g_value(n, as_point(s)); },
          py::arg("n"), py::arg("s"));
    m.def("a_coeffs", [](int n, std::complex<double> s) {
              return a_coeffs(n, as_point(s)).values;
          },
          py::arg("n"), py::arg("s"));

    m.def("z", [](int n, double t) { return z_derivative(n, t); }, py::arg("n"), py::arg("t"),
          "Z^(n)(t)");
    m.def("z_checked", [](int n, double t) {
              ZEval z = z_derivative_checked(n, t);
              return py::make_tuple(z.value, z.im_residual);
          },
          py::arg("n"), py::arg("t"), "(Z^(n)(t), discarded imaginary part)");
    m.def("ratio_identity_residual",
          [](int n, double t) { return ratio_identity_residual(n, t); }, py::arg("n"),
          py::arg("t"));

    m.def("scan_zeros", [](int n, double lo, double hi, int threads) {
              return scan_zeros(n, lo, hi, PrecisionConfig{}, threads);
          },
          py::arg("n"), py::arg("t_lo"), py::arg("t_hi"), py::arg("threads") = 1);
    m.def("interlace_check", [](int n, double lo, double hi, int threads) {
              return interlace_check(n, lo, hi, PrecisionConfig{}, threads);
          },
          py::arg("n"), py::arg("t_lo"), py::arg("t_hi"), py::arg("threads") = 1);
    m.def("count_zeros", [](int n, double T, int threads) {
              return count_zeros(n, T, PrecisionConfig{}, threads);
          },
          py::arg("n"), py::arg("T"), py::arg("threads") = 1);
    m.def("winding_count", [](const std::string& family, int n, double sigma_lo, double sigma_hi,
                              double t_lo, double t_hi, int nodes_per_unit) {
              Rectangle rect{sigma_lo, sigma_hi, t_lo, t_hi};
              return winding_count(make_family(family, n), rect, nodes_per_unit);
          },
          py::arg("family"), py::arg("n"), py::arg("sigma_lo"), py::arg("sigma_hi"),
          py::arg("t_lo"), py::arg("t_hi"), py::arg("nodes_per_unit") = 64);
    m.def("pole_order", [](const std::string& family, int n, std::complex<double> center) {
              return pole_order_estimate(make_family(family, n), as_point(center));
          },
          py::arg("family"), py::arg("n"), py::arg("center"));
    m.def("ratio_monotonicity_probe",
          [](int n, double lo, double hi, int samples, int threads) {
              return ratio_monotonicity_probe(n, lo, hi, samples, PrecisionConfig{}, threads);
          },
          py::arg("n"), py::arg("t_lo"), py::arg("t_hi"), py::arg("samples"),
          py::arg("threads") = 1);
    m.def("negative_fraction", &negative_fraction);

    m.attr("__version__") = "1.0.0";
}
