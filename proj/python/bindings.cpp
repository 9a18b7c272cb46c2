#include "ptq/classical.hpp"
#include "ptq/errors.hpp"
#include "ptq/gegenbauer.hpp"
#include "ptq/group_law.hpp"
#include "ptq/mpt.hpp"
#include "ptq/rhp.hpp"
#include "ptq/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

// Coefficients as "p/q" strings, lowest power first; the Python layer turns
// them into Fractions.
std::vector<std::string> coefficient_strings(const ptq::ExactPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(ptq::to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poschl-Teller / relativistic oscillator numerics";

  py::register_exception<ptq::NonNormalizableError>(m, "NonNormalizableError", PyExc_ValueError);
  py::register_exception<ptq::BranchError>(m, "BranchError", PyExc_ValueError);
  py::register_exception<ptq::QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

  m.def("rhp_coefficients", [](const std::string& N, unsigned n) {
    return coefficient_strings(ptq::rhp_polynomial(ptq::parse_rational(N), n));
  }, py::arg("N"), py::arg("n"));
  m.def("rodrigues_coefficients", [](const std::string& N, unsigned n) {
    return coefficient_strings(ptq::rhp_rodrigues_oracle(ptq::parse_rational(N), n));
  }, py::arg("N"), py::arg("n"));
  m.def("ode_residual_is_zero", [](const std::string& N, unsigned n) {
    return ptq::rhp_ode_residual_polynomial(ptq::parse_rational(N), n).is_zero();
  }, py::arg("N"), py::arg("n"));
  m.def("gegenbauer_coefficients", [](const std::string& lambda, unsigned n) {
    return coefficient_strings(ptq::gegenbauer_poly(ptq::parse_rational(lambda), n));
  }, py::arg("lam"), py::arg("n"));
  m.def("hermite_limit_error", py::overload_cast<unsigned, double>(&ptq::hermite_limit_error), py::arg("n"),
        py::arg("N"));

  m.def("bargmann_index", &ptq::bargmann_index, py::arg("mass"), py::arg("depth"), py::arg("alpha"),
        py::arg("hbar") = 1.0);
  m.def("spectrum", [](double mass, double depth, double alpha, double hbar) {
    py::list rows;
    for (const auto& s : ptq::spectrum(ptq::MptSystem{mass, depth, alpha, hbar})) {
      py::dict d;
      d["n"] = s.n;
      d["energy"] = s.energy;
      d["normalizable"] = s.normalizable;
      d["norm_constant"] = s.norm_constant ? py::cast(*s.norm_constant) : py::none();
      rows.append(d);
    }
    return rows;
  }, py::arg("mass") = 1.0, py::arg("depth") = 1.0, py::arg("alpha") = 1.0, py::arg("hbar") = 1.0);
  m.def("eigenfunction", [](double q, unsigned n, double u, bool normalized) {
    const ptq::MptEigenfunction e(q, n);
    return normalized ? e.normalized(u) : e(u);
  }, py::arg("q"), py::arg("n"), py::arg("u"), py::arg("normalized") = false);
  m.def("mpt_overlap", [](double q, unsigned n, unsigned k) {
    return ptq::mpt_inner_product(ptq::MptEigenfunction(q, n), ptq::MptEigenfunction(q, k));
  }, py::arg("q"), py::arg("n"), py::arg("m"));
  m.def("ladder_coefficient", [](double q, const std::string& direction, unsigned n) {
    const auto d = direction == "raise" ? ptq::Direction::raise : ptq::Direction::lower;
    return ptq::mpt_ladder_apply(q, d, n).coefficient;
  }, py::arg("q"), py::arg("direction"), py::arg("n"));

  m.def("hamiltonian", [](double xi, double p, double mass, double depth, double alpha) {
    return ptq::hamiltonian(ptq::MptSystem{mass, depth, alpha, 1.0}, {xi, p, 0.0});
  }, py::arg("xi"), py::arg("p"), py::arg("mass") = 1.0, py::arg("depth") = 1.0, py::arg("alpha") = 1.0);
  m.def("so21_residual", [](double xi, double p) {
    return ptq::so21_bracket_check(ptq::MptSystem{}, {xi, p, 0.0}).max_relative();
  }, py::arg("xi"), py::arg("p"));

  m.def("compose", [](std::array<double, 4> a, std::array<double, 4> b, double mass, double c, double omega,
                      double hbar) {
    ptq::RhoParams p;
    p.mass = mass;
    p.light_speed = c;
    p.frequency = omega;
    p.hbar = hbar;
    const auto g = ptq::compose({a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}, p);
    return std::array<double, 4>{g.tau, g.y, g.pi, g.phase};
  }, py::arg("a"), py::arg("b"), py::arg("mass") = 1.0, py::arg("c") = 1.0, py::arg("omega") = 1.0,
        py::arg("hbar") = 1.0);

  m.def("suite_names", &ptq::suite_names);
  m.def("run_verify", [](const std::string& suite, std::uint64_t seed) {
    ptq::VerifyOptions opts;
    opts.seed = seed;
    std::vector<ptq::CheckResult> results;
    {
      py::gil_scoped_release release;
      results = ptq::run_verify(suite, opts);
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["suite"] = r.suite;
      d["check"] = r.check;
      d["measured"] = r.measured;
      d["tolerance"] = r.tolerance;
      d["passed"] = r.passed;
      out.append(d);
    }
    return out;
  }, py::arg("suite") = "all", py::arg("seed") = 42);
}
