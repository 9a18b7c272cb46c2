#include "ptq/group_law.hpp"

#include "ptq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptq {

namespace {

using cd = std::complex<double>;

std::size_t index(Generator g) { return static_cast<std::size_t>(g); }

GroupElement unit_step(Generator g, double eps) {
  GroupElement e;
  switch (g) {
    case Generator::tau: e.tau = eps; break;
    case Generator::y: e.y = eps; break;
    case Generator::pi: e.pi = eps; break;
    case Generator::phase: e.phase = eps; break;
  }
  return e;
}

Tangent as_tangent(const GroupElement& g) { return {g.tau, g.y, g.pi, g.phase}; }

GroupElement from_tangent(const Tangent& t) { return {t[0], t[1], t[2], t[3]}; }

double fd_step(double coordinate) { return 1e-4 * (1.0 + std::abs(coordinate)); }

template <class F>
Tangent tangent_derivative(const F& f, double h) {
  auto central = [&](double step) {
    const Tangent a = f(step), b = f(-step);
    Tangent d{};
    for (std::size_t k = 0; k < 4; ++k) d[k] = (a[k] - b[k]) / (2.0 * step);
    return d;
  };
  const Tangent coarse = central(h), fine = central(0.5 * h);
  Tangent out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
  return out;
}

void require_principal(double omega_tau) {
  if (!(std::abs(omega_tau) < 0.5 * std::numbers::pi))
    throw BranchError("group element outside the principal patch |omega tau| < pi/2");
}

double delta(const RhoParams& p, double tau, double y, double pi) {
  return -p.mass * p.light_speed * p.light_speed * tau - f_phase(p, y, pi);
}

using FieldFn = Tangent (*)(Side, Generator, const GroupElement&, const RhoParams&);

Tangent bracket_of(FieldFn field_a, Side side_a, Generator a, FieldFn field_b, Side side_b, Generator b,
                   const GroupElement& at, const RhoParams& p) {
  const Tangent X = field_a(side_a, a, at, p);
  const Tangent Y = field_b(side_b, b, at, p);
  const Tangent g = as_tangent(at);
  Tangent out{};
  for (std::size_t j = 0; j < 4; ++j) {
    if (X[j] == 0.0 && Y[j] == 0.0) continue;
    auto shifted = [&](std::size_t jj, double eps) {
      Tangent q = g;
      q[jj] += eps;
      return from_tangent(q);
    };
    const double h = fd_step(g[j]);
    const Tangent dY = tangent_derivative([&](double e) { return field_b(side_b, b, shifted(j, e), p); }, h);
    const Tangent dX = tangent_derivative([&](double e) { return field_a(side_a, a, shifted(j, e), p); }, h);
    for (std::size_t k = 0; k < 4; ++k) out[k] += X[j] * dY[k] - Y[j] * dX[k];
  }
  return out;
}

double max_deviation(const Tangent& bracket, const Tangent& coefficients, Side side, const GroupElement& at,
                     const RhoParams& p) {
  Tangent expected{};
  for (Generator c : kGenerators) {
    const double w = coefficients[index(c)];
    if (w == 0.0) continue;
    const Tangent field = invariant_field(side, c, at, p);
    for (std::size_t k = 0; k < 4; ++k) expected[k] += w * field[k];
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(bracket[k] - expected[k]));
  return worst;
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::tau: return "tau";
    case Generator::y: return "y";
    case Generator::pi: return "pi";
    case Generator::phase: return "phase";
  }
  return "?";
}

double pi_zero(const RhoParams& p, double y, double pi) {
  const double mc = p.mass * p.light_speed;
  const double mwy = p.mass * p.frequency * y;
  return std::sqrt(mc * mc + pi * pi + mwy * mwy);
}

double f_phase(const RhoParams& p, double y, double pi) {
  const double a = p.frequency * y / p.light_speed;
  const double b = pi / (p.mass * p.light_speed);
  const double beta = std::sqrt(1.0 + a * a);
  const double root = std::sqrt(1.0 + a * a + b * b);
  const double scale = 2.0 * p.mass * p.light_speed * p.light_speed / p.frequency;
  return -scale * std::atan(a * b / ((beta + 1.0) * (root + beta)));
}

double f_phase_literal(const RhoParams& p, double y, double pi) {
  const double mc2 = p.mass * p.light_speed * p.light_speed;
  const double beta = p.beta(y);
  const double arg =
      mc2 / (p.frequency * pi * y) * (beta - 1.0) * (pi_zero(p, y, pi) / (p.mass * p.light_speed) - beta);
  return -(2.0 * mc2 / p.frequency) * std::atan(arg);
}

double f_phase_taylor(const RhoParams& p, double y, double pi) {
  const double a = p.frequency * y / p.light_speed;
  const double b = pi / (p.mass * p.light_speed);
  return -0.5 * pi * y * (1.0 - 0.5 * a * a - 0.25 * b * b);
}

double df_dpi(const RhoParams& p, double y, double pi) {
  const double mc = p.mass * p.light_speed;
  const double P0 = pi_zero(p, y, pi);
  return -mc * mc * y / (P0 * (P0 + mc));
}

GroupElement compose_unwrapped(const GroupElement& g2, const GroupElement& g, const RhoParams& p) {
  p.validate();
  const double w = p.frequency;
  const double mu = p.mass;
  const double c = p.light_speed;
  require_principal(w * g2.tau);
  require_principal(w * g.tau);

  const double s = std::sin(w * g.tau), co = std::cos(w * g.tau);
  const double s2 = std::sin(w * g2.tau), co2 = std::cos(w * g2.tau);
  const double beta = p.beta(g.y), beta2 = p.beta(g2.y);
  const double P0 = pi_zero(p, g.y, g.pi), P02 = pi_zero(p, g2.y, g2.pi);

  GroupElement out;
  out.y = (g2.pi * beta / (mu * w)) * s + beta * g2.y * co + g.y * P02 / (mu * c);
  out.pi = (w * g.y * g.pi / (beta * c * c)) * ((g2.pi / mu) * s + w * g2.y * co) +
           (P0 / (c * beta)) * ((g2.pi / mu) * co - w * g2.y * s) + g.pi * P02 / (mu * c);
  const double beta_out = p.beta(out.y);
  const double sin_out =
      (w / beta_out) *
      ((beta / (mu * c * c * beta2)) * g2.pi * g2.y * s2 * s + (beta * P02 / (mu * w * beta2 * c)) * co2 * s +
       (w / (beta2 * mu * c * c * c)) * g.y * g2.y * P02 * s2 + (beta2 * beta / w) * co * s2 +
       (g2.pi * g.y / (mu * c * c * beta2)) * co2);
  if (!(std::abs(sin_out) < 1.0)) throw BranchError("composed element leaves the principal patch");
  // The sin law alone cannot see omega tau'' crossing pi/2. d(sin omega tau'')/d tau'
  // carries the sign of cos omega tau'' while d tau''/d tau' > 0, so a negative
  // value means the product has left the patch.
  const double dsin_dtau2 =
      (w * w / beta_out) *
      (((beta / (mu * c * c * beta2)) * g2.pi * g2.y * s + (w / (beta2 * mu * c * c * c)) * g.y * g2.y * P02 +
        (beta2 * beta / w) * co) * co2 -
       ((beta * P02 / (mu * w * beta2 * c)) * s + (g2.pi * g.y / (mu * c * c * beta2))) * s2);
  if (!(dsin_dtau2 > 0.0)) throw BranchError("composed element leaves the principal patch (cos omega tau'' <= 0)");
  out.tau = std::asin(sin_out) / w;
  out.phase = g2.phase + g.phase +
              (delta(p, out.tau, out.y, out.pi) - delta(p, g2.tau, g2.y, g2.pi) - delta(p, g.tau, g.y, g.pi)) / p.hbar;
  return out;
}

GroupElement compose(const GroupElement& g2, const GroupElement& g, const RhoParams& p) {
  GroupElement out = compose_unwrapped(g2, g, p);
  const double two_pi = 2.0 * std::numbers::pi;
  out.phase = std::fmod(out.phase, two_pi);
  if (out.phase < 0.0) out.phase += two_pi;
  return out;
}

Tangent invariant_field(Side side, Generator generator, const GroupElement& at, const RhoParams& p) {
  p.validate();
  const double mu = p.mass, c = p.light_speed, w = p.frequency, hb = p.hbar;
  const double y = at.y, pi = at.pi;
  const double beta = p.beta(y);
  const double P0 = pi_zero(p, y, pi);
  const double mc = mu * c;

  if (generator == Generator::phase) return {0.0, 0.0, 0.0, 1.0};

  if (side == Side::left) {
    switch (generator) {
      case Generator::tau: return {P0 / (mc * beta * beta), pi / mu, -mu * w * w * y, 0.0};
      case Generator::pi: return {0.0, 0.0, P0 / mc, mc * y / ((P0 + mc) * hb)};
      case Generator::y: return {pi / (mu * c * c * beta * beta), P0 / mc, 0.0, -mc * pi / ((P0 + mc) * hb)};
      default: break;
    }
  }

  const double s = std::sin(w * at.tau), co = std::cos(w * at.tau);
  switch (generator) {
    case Generator::tau: return {1.0, 0.0, 0.0, 0.0};
    case Generator::pi:
      return {y / (mu * c * c * beta) * co, beta / (mu * w) * s,
              w * y * pi / (mu * c * c * beta) * s + P0 / (mc * beta) * co,
              -(P0 * y * co - pi * c / w * s) / ((P0 + mc) * beta * hb)};
    case Generator::y:
      return {-y * w / (c * c * beta) * s, beta * co, w * w * y * pi / (c * c * beta) * co - P0 * w / (c * beta) * s,
              mu * (P0 * w * y * s + pi * c * co) / ((P0 + mc) * beta * hb)};
    default: break;
  }
  return {};
}

Tangent derived_field(Side side, Generator generator, const GroupElement& at, const RhoParams& p) {
  auto moved = [&](double eps) {
    const GroupElement e = unit_step(generator, eps);
    return as_tangent(side == Side::right ? compose_unwrapped(e, at, p) : compose_unwrapped(at, e, p));
  };
  return tangent_derivative(moved, 1e-4);
}

Tangent lie_bracket(Side side_a, Generator a, Side side_b, Generator b, const GroupElement& at, const RhoParams& p) {
  return bracket_of(&invariant_field, side_a, a, &invariant_field, side_b, b, at, p);
}

Tangent structure_constants(Side side, Generator a, Generator b, const RhoParams& p, StructureTable table) {
  const double mu = p.mass, c = p.light_speed, w = p.frequency, hb = p.hbar;
  Tangent rhs{};
  double sign = 1.0;
  if (index(a) > index(b)) {
    std::swap(a, b);
    sign = -1.0;
  }
  if (a == b || a == Generator::phase || b == Generator::phase) return rhs;
  const bool flipped = table == StructureTable::flipped;
  if (a == Generator::tau && b == Generator::y) rhs[index(Generator::pi)] = -mu * w * w;
  if (a == Generator::tau && b == Generator::pi) rhs[index(Generator::y)] = flipped ? -1.0 / mu : 1.0 / mu;
  if (a == Generator::y && b == Generator::pi) {
    rhs[index(Generator::tau)] = 1.0 / (mu * c * c);
    rhs[index(Generator::phase)] = flipped ? 1.0 : -1.0 / hb;
  }
  if (side == Side::left) sign = -sign;
  for (double& v : rhs) v *= sign;
  return rhs;
}

double commutator_residual(Generator a, Generator b, const GroupElement& at, const RhoParams& p,
                           StructureTable table) {
  return max_deviation(lie_bracket(Side::right, a, Side::right, b, at, p),
                       structure_constants(Side::right, a, b, p, table), Side::right, at, p);
}

double left_commutator_residual(Generator a, Generator b, const GroupElement& at, const RhoParams& p) {
  return max_deviation(lie_bracket(Side::left, a, Side::left, b, at, p), structure_constants(Side::left, a, b, p),
                       Side::left, at, p);
}

double left_right_commutator(Generator a, Generator b, const GroupElement& at, const RhoParams& p) {
  const Tangent br = lie_bracket(Side::left, a, Side::right, b, at, p);
  double worst = 0.0;
  for (double v : br) worst = std::max(worst, std::abs(v));
  return worst;
}

std::vector<ContractionRow> contraction_check(ContractionLimit limit, const std::vector<double>& parameters,
                                              const GroupElement& at, const RhoParams& base) {
  const std::array<std::pair<Generator, Generator>, 3> pairs = {
      std::pair{Generator::tau, Generator::y}, std::pair{Generator::tau, Generator::pi},
      std::pair{Generator::y, Generator::pi}};
  std::vector<ContractionRow> rows;
  for (double value : parameters) {
    RhoParams p = base;
    if (limit == ContractionLimit::free_particle)
      p.frequency = value;
    else
      p.light_speed = value;
    ContractionRow row;
    row.parameter = value;
    for (const auto& [a, b] : pairs) {
      const Tangent br = lie_bracket(Side::right, a, Side::right, b, at, p);
      Tangent target = structure_constants(Side::right, a, b, p);
      if (limit == ContractionLimit::free_particle && a == Generator::tau && b == Generator::y) target = {};
      if (limit == ContractionLimit::nonrelativistic && a == Generator::y && b == Generator::pi)
        target[index(Generator::tau)] = 0.0;
      row.residual = std::max(row.residual, max_deviation(br, target, Side::right, at, p));
      row.baseline =
          std::max(row.baseline, max_deviation(br, structure_constants(Side::right, a, b, p), Side::right, at, p));
    }
    rows.push_back(row);
  }
  return rows;
}

std::complex<double> polarized_wavefunction(unsigned n, const GroupElement& at, const RhoParams& p) {
  const RhoCovariantWavefunction psi(p, n);
  return std::exp(cd(0.0, at.phase + f_phase(p, at.y, at.pi) / p.hbar)) * psi(at.y, at.tau);
}

std::pair<std::complex<double>, std::complex<double>> polarization_residual(unsigned n, const GroupElement& at,
                                                                            const RhoParams& p) {
  const RhoCovariantWavefunction psi(p, n);
  const cd base = psi(at.y, at.tau);
  // Everything except exp(i phase); Xi only sees that factor.
  auto reduced = [&](double pi) { return std::exp(cd(0.0, f_phase(p, at.y, pi) / p.hbar)) * base; };
  const cd rotor = std::exp(cd(0.0, at.phase));
  const cd value = rotor * reduced(at.pi);
  const cd xi_psi = cd(0.0, 1.0) * value;  // d/dphase of exp(i phase) R = i exp(i phase) R

  const double h = fd_step(at.pi) * p.mass * p.light_speed;
  auto central = [&](double step) { return (reduced(at.pi + step) - reduced(at.pi - step)) / (2.0 * step); };
  const cd d_pi = rotor * (4.0 * central(0.5 * h) - central(h)) / 3.0;

  const Tangent field = invariant_field(Side::left, Generator::pi, at, p);
  const cd x_pi = field[2] * d_pi + field[3] * xi_psi;
  return {xi_psi - cd(0.0, 1.0) * value, x_pi};
}

}  // namespace ptq
