#include "ptq/rho.hpp"

#include "ptq/finite_difference.hpp"
#include "ptq/rhp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptq {

using namespace std::complex_literals;

void RhoParams::validate() const {
  if (!(mass > 0.0) || !(light_speed > 0.0) || !(frequency > 0.0) || !(hbar > 0.0))
    throw std::domain_error("RhoParams: mass, light_speed, frequency and hbar must be positive");
}

double RhoParams::beta(double y) const {
  const double r = frequency * y / light_speed;
  return std::sqrt(1.0 + r * r);
}

double RhoParams::zeta(double y) const { return std::sqrt(mass * frequency / hbar) * y; }

double RhoParams::period() const { return 2.0 * std::numbers::pi / frequency; }

double RhoParams::length_scale() const { return light_speed / frequency; }

RhoParams RhoParams::with_index(double N) {
  RhoParams p;
  p.mass = N;
  return p;
}

namespace {

void require_index_above_half(const RhoParams& params) {
  params.validate();
  if (!(params.index() > 0.5)) throw std::domain_error("RHO states need N > 1/2 (Gamma(N - 1/2) must be finite)");
}

double covariant_norm(const RhoParams& p, unsigned n) {
  const double N = p.index();
  const double nd = static_cast<double>(n);
  const double log_ratio = (nd - 0.5) * std::log(N) + std::lgamma(2.0 * N) + std::lgamma(N) - std::lgamma(nd + 1.0) -
                           std::lgamma(2.0 * N + nd) - std::lgamma(N - 0.5);
  return std::sqrt(p.frequency / (2.0 * std::numbers::pi)) *
         std::pow(p.mass * p.frequency / (p.hbar * std::numbers::pi), 0.25) * std::exp(0.5 * log_ratio);
}

// Smallest length the states vary on; finite-difference steps scale with it.
double fd_length(const RhoParams& p) { return std::min(p.length_scale(), std::sqrt(p.hbar / (p.mass * p.frequency))); }

double fd_step(const RhoParams& p, double y) {
  const double ell = fd_length(p);
  return 1e-3 * ell * std::max(1.0, std::abs(y) / ell);
}

}  // namespace

RhoState rho_state(const RhoParams& params, unsigned n) {
  require_index_above_half(params);
  RhoState s;
  s.N = params.index();
  s.n = n;
  s.energy = params.hbar * params.frequency * (s.N + n);
  s.covariant_norm = covariant_norm(params, n);
  s.minimal_norm = std::sqrt((s.N + n) / (s.N - 0.5)) * s.covariant_norm;
  return s;
}

RhoCovariantWavefunction::RhoCovariantWavefunction(const RhoParams& params, unsigned n)
    : params_(params), n_(n), N_(params.index()), norm_(rho_state(params, n).covariant_norm),
      h_(rhp_polynomial(params.index(), n)) {}

double RhoCovariantWavefunction::amplitude(double y) const {
  return norm_ * std::pow(params_.beta(y), -(N_ + n_)) * h_.evaluate(params_.zeta(y));
}

std::complex<double> RhoCovariantWavefunction::operator()(double y, double tau) const {
  return std::exp(-1i * ((N_ + n_) * params_.frequency * tau)) * amplitude(y);
}

std::complex<double> RhoCovariantWavefunction::reduced(double y, double tau) const {
  return std::exp(-1i * (static_cast<double>(n_) * params_.frequency * tau)) * amplitude(y);
}

RhoMinimalWavefunction::RhoMinimalWavefunction(const RhoParams& params, unsigned n)
    : params_(params), n_(n), N_(params.index()), norm_(rho_state(params, n).minimal_norm),
      h_(rhp_polynomial(params.index(), n)) {}

double RhoMinimalWavefunction::operator()(double y) const {
  return norm_ * std::pow(params_.beta(y), -(N_ + n_)) * h_.evaluate(params_.zeta(y));
}

std::complex<double> kg_residual(const RhoParams& params, const SpacetimeFunction& f, double y, double tau) {
  params.validate();
  const double c = params.light_speed;
  const double w = params.frequency;
  const double N = params.index();
  const double hy = 1e-3 * params.length_scale();
  const double ht = 1e-3 / w;
  const double beta2 = 1.0 + (w * y / c) * (w * y / c);

  auto along_y = [&](double yy) { return f(yy, tau); };
  auto along_t = [&](double tt) { return f(y, tt); };
  const std::complex<double> f_tt = richardson_derivative(along_t, tau, 2, ht);
  const std::complex<double> f_y = richardson_derivative(along_y, y, 1, hy);
  const std::complex<double> f_yy = richardson_derivative(along_y, y, 2, hy);

  const std::complex<double> box = f_tt / (c * c * beta2) - (2.0 * w * w * y / (c * c)) * f_y - beta2 * f_yy;
  return -(c * c / (w * w)) * box - N * (N - 1.0) * f(y, tau);
}

std::complex<double> kg_residual(const RhoParams& params, unsigned n, double y, double tau) {
  const RhoCovariantWavefunction psi(params, n);
  return kg_residual(params, [&](double yy, double tt) { return psi(yy, tt); }, y, tau);
}

LadderAction rho_ladder_apply(const RhoParams& params, Realization, Direction direction, unsigned n) {
  require_index_above_half(params);
  const double N = params.index();
  const double nd = static_cast<double>(n);
  if (direction == Direction::lower) {
    if (n == 0) return {0.0, 0};
    return {std::sqrt(nd * (2.0 * N + nd - 1.0) / (2.0 * N)), static_cast<int>(n) - 1};
  }
  return {std::sqrt((nd + 1.0) * (2.0 * N + nd) / (2.0 * N)), static_cast<int>(n) + 1};
}

std::complex<double> apply_covariant_ladder(const RhoParams& params, Direction direction,
                                            const SpacetimeFunction& psi, double y, double tau) {
  params.validate();
  const double mu = params.mass;
  const double c = params.light_speed;
  const double w = params.frequency;
  const double hb = params.hbar;
  const double beta = params.beta(y);
  const double beta2 = beta * beta;

  auto along_y = [&](double yy) { return psi(yy, tau); };
  auto along_t = [&](double tt) { return psi(y, tt); };
  const std::complex<double> d_y = richardson_derivative(along_y, y, 1, fd_step(params, y));
  const std::complex<double> d_t = richardson_derivative(along_t, tau, 1, 1e-3 / w);

  const double sign = direction == Direction::lower ? 1.0 : -1.0;
  const std::complex<double> phase = std::exp(1i * (sign * w * tau));
  const std::complex<double> bracket =
      sign * d_y + 1i * (w * y / (c * c * beta2)) * d_t + (mu * w * y / (hb * beta2)) * psi(y, tau);
  return std::sqrt(hb / (2.0 * mu * w)) * phase * beta * bracket;
}

double apply_minimal_ladder(const RhoParams& params, Direction direction, unsigned n, const LineFunction& psi,
                            double y) {
  require_index_above_half(params);
  const double mu = params.mass;
  const double w = params.frequency;
  const double hb = params.hbar;
  const double N = params.index();
  const double Nn = N + static_cast<double>(n);
  const double beta = params.beta(y);

  const double d_y = richardson_derivative(psi, y, 1, fd_step(params, y));
  const double drift = (mu * w * y / (hb * beta * beta)) * Nn / N * psi(y);
  if (direction == Direction::lower)
    return std::sqrt(hb / (2.0 * mu * w)) * std::sqrt(std::max(0.0, (Nn - 1.0) / Nn)) * beta * (d_y + drift);
  return std::sqrt(hb / (2.0 * mu * w)) * std::sqrt((Nn + 1.0) / Nn) * beta * (-d_y + drift);
}

namespace {
constexpr int kPeriodNodes = 64;
}

std::complex<double> rho_inner_product_covariant(const SpacetimeFunction& f, const SpacetimeFunction& g,
                                                 const RhoParams& params, const QuadratureSpec& spec) {
  params.validate();
  const double ell = params.length_scale();
  auto slice = [&](double tau) {
    return integrate_real_line(
        [&](double s) {
          const double y = ell * std::sinh(s);
          return std::conj(f(y, tau)) * g(y, tau) * (ell * std::cosh(s));
        },
        spec);
  };
  return integrate_interval(slice, 0.0, params.period(), kPeriodNodes);
}

double rho_inner_product_minimal(const LineFunction& f, const LineFunction& g, const RhoParams& params,
                                 const QuadratureSpec& spec) {
  params.validate();
  const double ell = params.length_scale();
  const double line = integrate_real_line(
      [&](double s) {
        const double y = ell * std::sinh(s);
        return f(y) * g(y) * ell / std::cosh(s);
      },
      spec);
  return params.period() * line;
}

}  // namespace ptq
