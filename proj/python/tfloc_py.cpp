#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tfloc/config.hpp"
#include "tfloc/error.hpp"
#include "tfloc/io.hpp"
#include "tfloc/locop.hpp"
#include "tfloc/modulation.hpp"
#include "tfloc/orlicz.hpp"
#include "tfloc/stft.hpp"
#include "tfloc/verify.hpp"
#include "tfloc/young.hpp"

namespace py = pybind11;
using namespace tfloc;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;
using DArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

CArray to_numpy(std::span<const cplx> v) {
  CArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Signal signal_from(const LatticeSpec& spec, const CArray& values) {
  if (values.ndim() != 1 || static_cast<std::size_t>(values.size()) != spec.size()) {
    throw ShapeError("signal needs " + std::to_string(spec.size()) + " values");
  }
  return Signal(spec, std::vector<cplx>(values.data(), values.data() + values.size()));
}

MeasureSpec measure_from(const std::string& kind, const TorusGrid& torus) {
  if (kind == "counting") return MeasureSpec::counting();
  if (kind == "quadrature") return MeasureSpec::quadrature(torus);
  if (kind == "product") return MeasureSpec::product(torus);
  throw UsageError("measure must be counting, quadrature or product");
}

OrliczVariant variant_from(const std::string& name) {
  if (name == "MPhi") return OrliczVariant::M_Phi;
  if (name == "MPhiPsi") return OrliczVariant::M_PhiPsi;
  if (name == "WPhiPsi") return OrliczVariant::W_PhiPsi;
  throw UsageError("variant must be MPhi, MPhiPsi or WPhiPsi");
}

py::dict summary_dict(const SpectralSummary& s) {
  py::dict d;
  d["singular_values"] = s.singular_values;
  d["trace"] = s.trace;
  d["hs_norm"] = s.hs_norm;
  d["schatten"] = s.schatten;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tfloc, m) {
  m.doc() = "Time-frequency localization operators on Z^n x T^n";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<ConditioningError>(m, "ConditioningError", base.ptr());
  py::register_exception<UnboundedError>(m, "UnboundedError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::class_<LatticeSpec>(m, "LatticeSpec")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("K"), py::arg("C"))
      .def(py::init([](int n, int K) { return LatticeSpec::with_defaults(n, K); }), py::arg("n"),
           py::arg("K"))
      .def_readonly("n", &LatticeSpec::n)
      .def_readonly("K", &LatticeSpec::K)
      .def_readonly("C", &LatticeSpec::C)
      .def_property_readonly("size", &LatticeSpec::size)
      .def("__eq__", [](const LatticeSpec& a, const LatticeSpec& b) { return a == b; })
      .def("__repr__", [](const LatticeSpec& s) {
        return "LatticeSpec(n=" + std::to_string(s.n) + ", K=" + std::to_string(s.K) +
               ", C=" + std::to_string(s.C) + ")";
      });

  py::class_<TorusGrid>(m, "TorusGrid")
      .def(py::init<int, int>(), py::arg("n"), py::arg("M"))
      .def_static("for_lattice", &TorusGrid::for_lattice)
      .def_property_readonly("n", &TorusGrid::dim)
      .def_property_readonly("M", &TorusGrid::samples)
      .def_property_readonly("size", &TorusGrid::size)
      .def_property_readonly("weight", &TorusGrid::weight);

  py::class_<Signal>(m, "Signal")
      .def(py::init<LatticeSpec>())
      .def(py::init(&signal_from), py::arg("spec"), py::arg("values"))
      .def_property_readonly("spec", &Signal::spec)
      .def_property_readonly("values", [](const Signal& f) { return to_numpy(f.values()); })
      .def_property_readonly("admissible", &Signal::admissible)
      .def_property_readonly("support_radius", &Signal::support_radius)
      .def("norm", &Signal::norm)
      .def("to_json", &signal_to_json)
      .def_static("from_json", [](const std::string& s) { return signal_from_json(s); });

  py::class_<PhaseSpaceField>(m, "PhaseSpaceField")
      .def_property_readonly("spec", &PhaseSpaceField::spec)
      .def_property_readonly("torus", &PhaseSpaceField::torus)
      .def_property_readonly("m_radius", &PhaseSpaceField::m_radius)
      .def_property_readonly("degree_bound", &PhaseSpaceField::degree_bound)
      .def_property_readonly("values",
                             [](const PhaseSpaceField& F) {
                               CArray a = to_numpy(F.values());
                               return a.reshape({static_cast<py::ssize_t>(F.m_box().size()),
                                                 static_cast<py::ssize_t>(F.torus().size())});
                             })
      .def("l2_norm", &PhaseSpaceField::l2_norm)
      .def("l1_norm", &PhaseSpaceField::l1_norm)
      .def("sup_norm", &PhaseSpaceField::sup_norm)
      .def("mass", &PhaseSpaceField::mass)
      .def("to_json", &field_to_json)
      .def_static("from_json", [](const std::string& s) { return field_from_json(s); });

  m.def("delta", py::overload_cast<const LatticeSpec&, int>(&delta), py::arg("spec"), py::arg("k"));
  m.def("inner", py::overload_cast<const Signal&, const Signal&>(&inner));
  m.def("translate", py::overload_cast<const Signal&, int>(&translate));
  m.def("modulate", py::overload_cast<const Signal&, double>(&modulate));
  m.def("gabor_atom", py::overload_cast<const Signal&, int, double>(&gabor_atom));
  m.def(
      "make_window",
      [](const LatticeSpec& spec, const std::string& kind, double width) {
        if (kind == "gaussian") return make_window(WindowSpec::gaussian(width), spec);
        if (kind == "kronecker") return make_window(WindowSpec::kronecker(), spec);
        throw UsageError("window kind must be gaussian or kronecker");
      },
      py::arg("spec"), py::arg("kind") = "gaussian", py::arg("width") = 0.0);

  m.def("stft", &stft, py::arg("f"), py::arg("g"), py::arg("torus"));
  m.def("stft_adjoint", &stft_adjoint, py::arg("F"), py::arg("g"));
  m.def("invert", &invert, py::arg("F"), py::arg("g"), py::arg("h"));

  py::class_<YoungFunction>(m, "YoungFunction")
      .def_static("power", &YoungFunction::power)
      .def_static("eq5", &YoungFunction::eq5)
      .def_static("quasi", &YoungFunction::quasi)
      .def_static("conjugate", &YoungFunction::conjugate)
      .def_static("parse", [](const std::string& s) { return parse_young(s); })
      .def("__call__", &YoungFunction::evaluate)
      .def("__eq__", [](const YoungFunction& a, const YoungFunction& b) { return a == b; })
      .def_property_readonly("name", &YoungFunction::name)
      .def("__repr__", [](const YoungFunction& f) { return "YoungFunction(" + f.name() + ")"; });
  m.def("complementary", &complementary, py::arg("phi"), py::arg("y"));
  m.def("delta2_probe", &delta2_probe, py::arg("phi"), py::arg("r"), py::arg("samples") = 256);

  m.def(
      "luxemburg",
      [](const DArray& v, const YoungFunction& phi, const std::string& measure,
         const TorusGrid& torus) {
        return luxemburg(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())),
                         measure_from(measure, torus), phi);
      },
      py::arg("values"), py::arg("phi"), py::arg("measure") = "counting",
      py::arg("torus") = TorusGrid(1, 1));
  m.def("mixed_norm", &mixed_norm);
  m.def("mixed_norm_swapped", &mixed_norm_swapped);
  m.def("orlicz_norm", &orlicz_norm);
  m.def("holder_pairing", &holder_pairing);
  m.def("convolve_phase_space", &convolve_phase_space);

  m.def("modulation_norm", &modulation_norm, py::arg("f"), py::arg("window"), py::arg("torus"),
        py::arg("p"));
  m.def(
      "orlicz_modulation_norm",
      [](const Signal& f, const Signal& g, const TorusGrid& torus, const YoungFunction& phi,
         std::optional<YoungFunction> psi, const std::string& variant) {
        return orlicz_modulation_norm(f, g, torus, phi, psi, variant_from(variant));
      },
      py::arg("f"), py::arg("window"), py::arg("torus"), py::arg("phi"),
      py::arg("psi") = std::nullopt, py::arg("variant") = "MPhi");

  m.def("constant_symbol", &constant_symbol);
  m.def("apply", &apply, py::arg("sigma"), py::arg("g1"), py::arg("g2"), py::arg("f"));
  m.def("weak_pairing", &weak_pairing);
  m.def("kernel", [](const PhaseSpaceField& s, const Signal& g1, const Signal& g2) {
    return Eigen::MatrixXcd(kernel(s, g1, g2).matrix);
  });
  m.def(
      "spectrum",
      [](const Eigen::MatrixXcd& A, const std::vector<double>& ps) {
        OperatorKernel K{LatticeSpec{}, A, "python"};
        return summary_dict(spectrum(K, ps));
      },
      py::arg("matrix"), py::arg("ps") = std::vector<double>{1.0, 2.0, INFINITY});

  m.def("registry", [] {
    py::list out;
    for (const auto& c : registry()) {
      py::dict d;
      d["id"] = c.id;
      d["module"] = c.module;
      d["trials"] = c.default_trials;
      d["tolerance"] = c.default_tolerance;
      d["summary"] = c.summary;
      out.append(d);
    }
    return out;
  });
  m.def(
      "run_config",
      [](const std::string& config_json) {
        const Config c = parse_config(config_json);
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(resolved_checks(c), make_environment(c));
        }
        return report_jsonl(results);
      },
      py::arg("config_json") = "{}",
      "Run the checks a JSON config asks for and return the JSON-Lines report.");
  m.def("default_config", [] { return serialize_config(default_config()); });
}
