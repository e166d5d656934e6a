#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "gjef/basis_checker.hpp"
#include "gjef/elliptic.hpp"
#include "gjef/fourier.hpp"
#include "gjef/k_analysis.hpp"
#include "gjef/operator.hpp"
#include "gjef/trig.hpp"

namespace py = pybind11;
using namespace gjef;

namespace {

template <class Kind>
Kind lookup(const std::map<std::string, Kind>& names, const std::string& name) {
  const auto it = names.find(name);
  if (it == names.end()) {
    throw py::value_error("unknown function '" + name + "'");
  }
  return it->second;
}

const std::map<std::string, TrigKind> kTrig = {{"sin", TrigKind::Sin}, {"cos", TrigKind::Cos}, {"tan", TrigKind::Tan}};
const std::map<std::string, HypKind> kHyp = {{"sinh", HypKind::Sinh}, {"cosh", HypKind::Cosh}, {"tanh", HypKind::Tanh}};
const std::map<std::string, EllipticKind> kEll = {
    {"sn", EllipticKind::Sn}, {"cn", EllipticKind::Cn}, {"dn", EllipticKind::Dn}};

py::dict details(const CheckReport& r) {
  py::dict d;
  for (const auto& [name, value] : r.details) d[py::str(name)] = value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized trigonometric and Jacobian elliptic functions";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<PoleError> pole_error(m, "PoleError", PyExc_ValueError);
  static py::exception<RefusedError> refused_error(m, "RefusedError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PoleError& e) {
      py::set_error(pole_error, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const RefusedError& e) {
      py::set_error(refused_error, e.what());
    }
  });

  py::class_<ExponentPair>(m, "ExponentPair")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_static("conjugate_pair", &ExponentPair::conjugate_pair, py::arg("r"))
      .def_property_readonly("p", &ExponentPair::p)
      .def_property_readonly("q", &ExponentPair::q)
      .def_property_readonly("p_prime", &ExponentPair::p_prime)
      .def_property_readonly("r", &ExponentPair::r)
      .def("__repr__", [](const ExponentPair& e) { return describe(e); });

  m.def("beta", &beta, py::arg("x"), py::arg("y"));
  m.def("pi_pq", [](double p, double q) { return pi_pq(ExponentPair(p, q)); }, py::arg("p"), py::arg("q"));
  m.def(
      "trig",
      [](const std::string& func, double p, double q, py::array_t<double> x) {
        const TrigFunctions tf(ExponentPair(p, q));
        const TrigKind kind = lookup(kTrig, func);
        return py::vectorize([&](double v) { return tf.eval(kind, v); })(x);
      },
      py::arg("func"), py::arg("p"), py::arg("q"), py::arg("x"));
  m.def(
      "hyp",
      [](const std::string& func, double p, double q, py::array_t<double> x) {
        const HyperbolicFunctions hf(ExponentPair(p, q));
        const HypKind kind = lookup(kHyp, func);
        return py::vectorize([&](double v) { return hf.eval(kind, v); })(x);
      },
      py::arg("func"), py::arg("p"), py::arg("q"), py::arg("x"));
  m.def(
      "elliptic",
      [](const std::string& func, double p, double q, double k, py::array_t<double> x) {
        const EllipticFunction ef(EllipticParams(p, q, k));
        const EllipticKind kind = lookup(kEll, func);
        return py::vectorize([&](double v) { return ef.eval(kind, v); })(x);
      },
      py::arg("func"), py::arg("p"), py::arg("q"), py::arg("k"), py::arg("x"));
  m.def(
      "complete_K", [](double p, double q, double k) { return complete_K(EllipticParams(p, q, k)); }, py::arg("p"),
      py::arg("q"), py::arg("k"));

  py::class_<SandwichBounds>(m, "SandwichBounds")
      .def_readonly("lower", &SandwichBounds::lower)
      .def_readonly("value", &SandwichBounds::value)
      .def_readonly("upper_tanh", &SandwichBounds::upper_tanh)
      .def_readonly("upper_alg", &SandwichBounds::upper_alg)
      .def("ordered", &SandwichBounds::ordered, py::arg("slack") = 1e-12);
  m.def("sandwich", &sandwich, py::arg("r"), py::arg("k"));
  m.def(
      "symmetry_residual", [](double p, double q, double k) { return symmetry_residual(ExponentPair(p, q), k); },
      py::arg("p"), py::arg("q"), py::arg("k"));
  m.def(
      "homo_gap", [](double p, double q, double k) { return homo_gap(ExponentPair(p, q), k); }, py::arg("p"),
      py::arg("q"), py::arg("k"));

  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("criterion", [](const CheckReport& r) { return std::string(to_string(r.criterion)); })
      .def_property_readonly("p", [](const CheckReport& r) { return r.params.e.p(); })
      .def_property_readonly("q", [](const CheckReport& r) { return r.params.e.q(); })
      .def_property_readonly("k", [](const CheckReport& r) { return r.params.k; })
      .def_readonly("lhs", &CheckReport::lhs)
      .def_readonly("rhs", &CheckReport::rhs)
      .def_readonly("margin", &CheckReport::margin)
      .def_readonly("satisfied", &CheckReport::satisfied)
      .def_property_readonly("verdict", [](const CheckReport& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("M", &CheckReport::M)
      .def_property_readonly("details", &details);
  m.def(
      "check",
      [](const std::string& criterion, double p, double q, double k, int M) {
        return check(parse_criterion(criterion), EllipticParams(p, q, k), M);
      },
      py::arg("criterion"), py::arg("p"), py::arg("q"), py::arg("k"), py::arg("M") = kDefaultCutoff);
  m.def(
      "k_star",
      [](const std::string& criterion, double p, double q, int M) {
        const ExponentPair e(p, q);
        const Criterion c = parse_criterion(criterion);
        KStar ks;
        {
          py::gil_scoped_release release;
          ks = k_star(e, c, M);
        }
        return py::make_tuple(std::string(to_string(ks.status)), ks.k);
      },
      py::arg("criterion"), py::arg("p"), py::arg("q"), py::arg("M") = kDefaultCutoff);

  py::class_<SineCoefficients>(m, "SineCoefficients")
      .def_readonly("K", &SineCoefficients::K)
      .def_readonly("M", &SineCoefficients::M)
      .def_readonly("quad_err", &SineCoefficients::quad_err)
      .def_property_readonly("values", [](const SineCoefficients& c) { return py::array_t<double>(py::cast(c.values)); })
      .def("tau", &SineCoefficients::tau, py::arg("m"));
  m.def(
      "sine_coefficients",
      [](double p, double q, double k, int M) {
        py::gil_scoped_release release;
        return sine_coefficients(EllipticParams(p, q, k), M);
      },
      py::arg("p"), py::arg("q"), py::arg("k"), py::arg("M") = kDefaultCutoff);
  m.def(
      "tau_bound", [](double p, double q, double k, int mm) { return tau_bound(EllipticParams(p, q, k), mm); },
      py::arg("p"), py::arg("q"), py::arg("k"), py::arg("m"));

  py::class_<NeumannMargin>(m, "NeumannMargin")
      .def_readonly("tau1", &NeumannMargin::tau1)
      .def_readonly("sum_small", &NeumannMargin::sum_small)
      .def_readonly("tail_bound", &NeumannMargin::tail_bound)
      .def_readonly("margin", &NeumannMargin::margin)
      .def_readonly("M", &NeumannMargin::M)
      .def_readonly("quad_err", &NeumannMargin::quad_err)
      .def_property_readonly("rho", &NeumannMargin::rho);
  m.def(
      "neumann_margin",
      [](double p, double q, double k, int M) {
        py::gil_scoped_release release;
        return neumann_margin(EllipticParams(p, q, k), M);
      },
      py::arg("p"), py::arg("q"), py::arg("k"), py::arg("M") = kDefaultCutoff);

  py::class_<BasisExpansion>(m, "BasisExpansion")
      .def_readonly("alpha", &BasisExpansion::alpha)
      .def_readonly("N", &BasisExpansion::N)
      .def_readonly("N_exp", &BasisExpansion::N_exp)
      .def_property_readonly("coefficients",
                             [](const BasisExpansion& e) { return py::array_t<double>(py::cast(e.coefficients)); })
      .def_readonly("residual_norm", &BasisExpansion::residual_norm)
      .def_readonly("iterations", &BasisExpansion::iterations);
  m.def(
      "expand",
      [](const std::vector<double>& samples, double p, double q, double k, int n_exp, double alpha, int M) {
        const GridFunction u(samples, alpha);
        py::gil_scoped_release release;
        return expand_in_basis(u, sine_coefficients(EllipticParams(p, q, k), M), n_exp);
      },
      py::arg("samples"), py::arg("p"), py::arg("q"), py::arg("k"), py::arg("n_exp"), py::arg("alpha") = 2.0,
      py::arg("M") = kDefaultCutoff,
      "Coefficients of midpoint samples u((j + 1/2)/N), j < N, in the basis f_n.");
  m.attr("DEFAULT_CUTOFF") = kDefaultCutoff;
}
