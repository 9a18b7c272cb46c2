#include "ptq/classical.hpp"

#include "ptq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace ptq {

namespace {

double stretch(const MptSystem& s, double xi) { return 1.0 + s.alpha * s.alpha * xi * xi; }

struct Derivative {
  double dxi;
  double dp;
};

Derivative hamilton_rhs(const MptSystem& s, double xi, double p) {
  const double a2 = s.alpha * s.alpha;
  const double w = 1.0 + a2 * xi * xi;
  return {w * p / s.mass, -a2 * xi * p * p / s.mass - 2.0 * s.depth * a2 * xi / (w * w)};
}

void require_bound_energy(const MptSystem& s, double eps) {
  s.validate();
  if (!(eps > 0.0) || !(eps < s.depth)) throw std::domain_error("bound motion needs 0 < eps < D");
}

double max_abs(std::initializer_list<double> xs) {
  double m = 1.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double xi_from_x(double x, double alpha) { return std::sinh(alpha * x) / alpha; }
double x_from_xi(double xi, double alpha) { return std::asinh(alpha * xi) / alpha; }

double hamiltonian(const MptSystem& system, const PhaseState& state) {
  const double w = stretch(system, state.xi);
  return w * state.p * state.p / (2.0 * system.mass) - system.depth / w;
}

double velocity(const MptSystem& system, const PhaseState& state) {
  return stretch(system, state.xi) * state.p / system.mass;
}

double momentum_from_velocity(const MptSystem& system, double xi, double xi_dot) {
  return system.mass * xi_dot / stretch(system, xi);
}

double energy_frequency(const MptSystem& system, double eps) {
  return std::sqrt(2.0 * eps * system.alpha * system.alpha / system.mass);
}

double turning_amplitude(const MptSystem& system, double eps) {
  return std::sqrt((system.depth - eps) / (system.alpha * system.alpha * eps));
}

PhaseState closed_form_trajectory(const MptSystem& system, double eps, double xi0, double t, int velocity_sign) {
  require_bound_energy(system, eps);
  const double A = turning_amplitude(system, eps);
  const double slack = A * A - xi0 * xi0;
  if (slack < -1e-12 * A * A) throw std::domain_error("xi0 lies beyond the turning points");
  const double w = energy_frequency(system, eps);
  const double v0 = (velocity_sign < 0 ? -1.0 : 1.0) * w * std::sqrt(std::max(0.0, slack));
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double xi = xi0 * c + (v0 / w) * s;
  const double v = v0 * c - w * xi0 * s;
  return {xi, momentum_from_velocity(system, xi, v), t};
}

PhaseState closed_form_from_initial(const MptSystem& system, double xi0, double v0, double t) {
  const double eps = -hamiltonian(system, {xi0, momentum_from_velocity(system, xi0, v0), 0.0});
  require_bound_energy(system, eps);
  const double w = energy_frequency(system, eps);
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double xi = xi0 * c + (v0 / w) * s;
  const double v = v0 * c - w * xi0 * s;
  return {xi, momentum_from_velocity(system, xi, v), t};
}

PhaseState harmonic_trajectory(const MptSystem& system, double omega, double xi0, double v0, double t) {
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  const double xi = xi0 * c + (v0 / omega) * s;
  const double v = v0 * c - omega * xi0 * s;
  return {xi, momentum_from_velocity(system, xi, v), t};
}

PhaseState rk4_step(const MptSystem& s, const PhaseState& y, double dt) {
  const Derivative k1 = hamilton_rhs(s, y.xi, y.p);
  const Derivative k2 = hamilton_rhs(s, y.xi + 0.5 * dt * k1.dxi, y.p + 0.5 * dt * k1.dp);
  const Derivative k3 = hamilton_rhs(s, y.xi + 0.5 * dt * k2.dxi, y.p + 0.5 * dt * k2.dp);
  const Derivative k4 = hamilton_rhs(s, y.xi + dt * k3.dxi, y.p + dt * k3.dp);
  return {y.xi + dt / 6.0 * (k1.dxi + 2.0 * k2.dxi + 2.0 * k3.dxi + k4.dxi),
          y.p + dt / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp), y.t + dt};
}

std::vector<PhaseState> integrate_trajectory(const MptSystem& system, const PhaseState& initial, double t_end,
                                             double dt) {
  system.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_trajectory: dt must be > 0");
  if (t_end < initial.t) throw std::invalid_argument("integrate_trajectory: t_end precedes the initial time");
  const auto steps = static_cast<std::size_t>(std::ceil((t_end - initial.t) / dt - 1e-9));
  std::vector<PhaseState> out;
  out.reserve(steps + 1);
  out.push_back(initial);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double target = k == steps ? t_end : initial.t + static_cast<double>(k) * dt;
    PhaseState next = rk4_step(system, out.back(), target - out.back().t);
    next.t = target;
    out.push_back(next);
  }
  return out;
}

double measured_period(const MptSystem& system, double eps, double dt) {
  require_bound_energy(system, eps);
  if (!(dt > 0.0)) throw std::invalid_argument("measured_period: dt must be > 0");
  // Start at xi = 0 moving up, so the first upward crossing after going
  // negative closes one period.
  PhaseState y = closed_form_trajectory(system, eps, 0.0, 0.0, 1);
  const double bound = 100.0 * 2.0 * std::acos(-1.0) / energy_frequency(system, eps);
  bool went_negative = false;
  while (y.t < bound) {
    const PhaseState next = rk4_step(system, y, dt);
    if (next.xi < 0.0) went_negative = true;
    if (went_negative && y.xi < 0.0 && next.xi >= 0.0) {
      // Cubic Hermite interpolant on [y.t, next.t], root by bisection.
      const double v0 = velocity(system, y) * dt, v1 = velocity(system, next) * dt;
      auto h = [&](double s) {
        const double s2 = s * s, s3 = s2 * s;
        return (2 * s3 - 3 * s2 + 1) * y.xi + (s3 - 2 * s2 + s) * v0 + (-2 * s3 + 3 * s2) * next.xi + (s3 - s2) * v1;
      };
      double lo = 0.0, hi = 1.0;
      for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
      }
      return y.t + 0.5 * (lo + hi) * dt;
    }
    y = next;
  }
  throw std::runtime_error("measured_period: no closed orbit found");
}

Generators so21_generators(const MptSystem& s, const PhaseState& at) {
  const double H = hamiltonian(s, at);
  const double root = std::sqrt(std::abs(H));
  Generators g;
  g.primed = H < 0.0;
  g.E = 2.0 * std::sqrt(s.depth) * root;
  g.X = std::sqrt(2.0 / s.depth) * root * at.xi;
  g.P = std::sqrt(2.0) * stretch(s, at.xi) * at.p;
  return g;
}

double So21Residuals::max_relative() const {
  return std::max({residual[0], residual[1], residual[2]}) / scale;
}

double DiagonalGenerators::max_relative() const {
  return std::max({residual[0], residual[1], residual[2]}) / scale;
}

namespace {

void require_nonzero_energy(const MptSystem& s, double H) {
  if (std::abs(H) < 1e-9 * s.depth) throw BranchError("zero-energy singularity: sqrt(H) is not differentiable at H = 0");
}

}  // namespace

So21Residuals so21_bracket_check(const MptSystem& s, const PhaseState& at) {
  s.validate();
  const double H = hamiltonian(s, at);
  require_nonzero_energy(s, H);
  const double m = s.mass;
  const double W2 = s.omega() * s.omega();

  auto E = [&](const PhaseState& z) { return so21_generators(s, z).E; };
  auto X = [&](const PhaseState& z) { return so21_generators(s, z).X; };
  auto P = [&](const PhaseState& z) { return so21_generators(s, z).P; };
  const Generators g = so21_generators(s, at);

  So21Residuals r;
  r.energy = H;
  r.primed = g.primed;
  const double ex_sign = g.primed ? 1.0 : -1.0;
  r.residual[0] = std::abs(poisson_bracket(E, P, at) + m * W2 * g.X);
  r.residual[1] = std::abs(poisson_bracket(E, X, at) - ex_sign * g.P / m);
  r.residual[2] = std::abs(poisson_bracket(X, P, at) - g.E / s.depth);
  r.scale = max_abs({m * W2 * g.X, g.P / m, g.E / s.depth});
  return r;
}

std::array<std::complex<double>, 3> complex_abc(const MptSystem& s, const PhaseState& at) {
  const std::complex<double> root = std::sqrt(std::complex<double>(hamiltonian(s, at), 0.0));
  const std::complex<double> E = 2.0 * std::sqrt(s.depth) * root;
  const std::complex<double> X = std::sqrt(2.0 / s.depth) * root * at.xi;
  const double P = std::sqrt(2.0) * stretch(s, at.xi) * at.p;
  const double W = s.omega();
  return {E / W, (P + s.mass * W * X) / (2.0 * s.alpha), (P - s.mass * W * X) / (2.0 * s.alpha)};
}

DiagonalGenerators diagonal_generators(const MptSystem& s, EnergySign sign, const PhaseState& at) {
  s.validate();
  const double H = hamiltonian(s, at);
  require_nonzero_energy(s, H);
  if ((H > 0.0) != (sign == EnergySign::positive))
    throw BranchError("energy sign at the point does not match the requested diagonalization");

  const double W = s.omega();
  const double m = s.mass;
  const double a = s.alpha;
  using cd = std::complex<double>;
  constexpr cd I(0.0, 1.0);

  DiagonalGenerators d;
  d.sign = sign;
  if (sign == EnergySign::positive) {
    auto A = [&](const PhaseState& z) { return so21_generators(s, z).E / W; };
    auto B = [&](const PhaseState& z) {
      const Generators g = so21_generators(s, z);
      return (g.P + m * W * g.X) / (2.0 * a);
    };
    auto C = [&](const PhaseState& z) {
      const Generators g = so21_generators(s, z);
      return (g.P - m * W * g.X) / (2.0 * a);
    };
    const double a0 = A(at), b0 = B(at), c0 = C(at);
    d.values = {a0, b0, c0};
    d.residual[0] = std::abs(poisson_bracket(A, B, at) + b0);
    d.residual[1] = std::abs(poisson_bracket(A, C, at) - c0);
    d.residual[2] = std::abs(poisson_bracket(B, C, at) - a0);
    d.scale = max_abs({a0, b0, c0});
    return d;
  }

  auto L0 = [&](const PhaseState& z) { return cd(so21_generators(s, z).E / W, 0.0); };
  auto Lm = [&](const PhaseState& z) {
    const Generators g = so21_generators(s, z);
    return (g.P - I * (m * W * g.X)) / (2.0 * a);
  };
  auto Lp = [&](const PhaseState& z) {
    const Generators g = so21_generators(s, z);
    return (g.P + I * (m * W * g.X)) / (2.0 * a);
  };
  const cd l0 = L0(at), lm = Lm(at), lp = Lp(at);
  d.values = {l0, lm, lp};
  d.residual[0] = std::abs(poisson_bracket(L0, Lp, at) - I * lp);
  d.residual[1] = std::abs(poisson_bracket(L0, Lm, at) + I * lm);
  d.residual[2] = std::abs(poisson_bracket(Lp, Lm, at) - I * l0);
  d.scale = std::max({1.0, std::abs(l0), std::abs(lm), std::abs(lp)});
  return d;
}

}  // namespace ptq
