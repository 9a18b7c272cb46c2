#pragma once

#include "ptq/ladder.hpp"
#include "ptq/polynomial.hpp"
#include "ptq/quadrature.hpp"

#include <complex>
#include <functional>

namespace ptq {

// Relativistic harmonic oscillator. Index N = mass c^2 / (hbar omega).
struct RhoParams {
  double mass = 1.0;
  double light_speed = 1.0;
  double frequency = 1.0;
  double hbar = 1.0;

  void validate() const;
  double index() const { return mass * light_speed * light_speed / (hbar * frequency); }
  double beta(double y) const;
  double zeta(double y) const;   // sqrt(mass omega / hbar) y
  double period() const;         // 2 pi / omega
  double length_scale() const;   // c / omega

  // mass = N, everything else 1.
  static RhoParams with_index(double N);
};

enum class Realization { covariant, minimal };

struct RhoState {
  double N = 0.0;
  unsigned n = 0;
  double energy = 0.0;          // hbar omega (N + n)
  double covariant_norm = 0.0;  // C_n^N
  double minimal_norm = 0.0;    // C'_n^N
};

// Throws std::domain_error unless N > 1/2.
RhoState rho_state(const RhoParams& params, unsigned n);

using SpacetimeFunction = std::function<std::complex<double>(double y, double tau)>;
using LineFunction = std::function<double(double y)>;

// Psi_n^N(y, tau) = C_n^N e^{-i(N+n) omega tau} beta^{-(N+n)} H_n^N(zeta).
class RhoCovariantWavefunction {
 public:
  RhoCovariantWavefunction(const RhoParams& params, unsigned n);

  std::complex<double> operator()(double y, double tau) const;
  // Same state with the rest energy removed from the phase: e^{-i n omega tau}.
  // This is the form the covariant ladder operators act on.
  std::complex<double> reduced(double y, double tau) const;
  double amplitude(double y) const;  // C beta^{-(N+n)} H(zeta), real

  unsigned n() const { return n_; }
  const RhoParams& params() const { return params_; }

 private:
  RhoParams params_;
  unsigned n_;
  double N_;
  double norm_;
  FloatPolynomial h_;
};

// Psi'_n^N(y) = C'_n^N beta^{-(N+n)} H_n^N(zeta).
class RhoMinimalWavefunction {
 public:
  RhoMinimalWavefunction(const RhoParams& params, unsigned n);
  double operator()(double y) const;
  unsigned n() const { return n_; }

 private:
  RhoParams params_;
  unsigned n_;
  double N_;
  double norm_;
  FloatPolynomial h_;
};

// -(c^2/omega^2) Box f - N(N-1) f with Box the anti-de Sitter d'Alembertian,
// central differences with one Richardson step (h = 1e-3 in units of c/omega
// and 1/omega).
std::complex<double> kg_residual(const RhoParams& params, const SpacetimeFunction& f, double y, double tau);
std::complex<double> kg_residual(const RhoParams& params, unsigned n, double y, double tau);

// Coefficients sqrt(n(2N+n-1)/(2N)) (lower) and sqrt((n+1)(2N+n)/(2N))
// (raise); identical for both realizations.
LadderAction rho_ladder_apply(const RhoParams& params, Realization realization, Direction direction, unsigned n);

// Differential realizations. The covariant operators act on the rest-energy
// stripped form (RhoCovariantWavefunction::reduced); the minimal ones are
// defined on the energy eigenfunction of level n.
std::complex<double> apply_covariant_ladder(const RhoParams& params, Direction direction,
                                            const SpacetimeFunction& psi, double y, double tau);
double apply_minimal_ladder(const RhoParams& params, Direction direction, unsigned n, const LineFunction& psi,
                            double y);

// Covariant: integral of f* g dy dtau over one period 2 pi / omega.
// Minimal: integral of f g dy / beta^2, times the period 2 pi / omega that the
// factored-out time dependence integrates to.
// Both use y = (c/omega) sinh(s), so beta = cosh(s).
std::complex<double> rho_inner_product_covariant(const SpacetimeFunction& f, const SpacetimeFunction& g,
                                                 const RhoParams& params, const QuadratureSpec& spec = {});
double rho_inner_product_minimal(const LineFunction& f, const LineFunction& g, const RhoParams& params,
                                 const QuadratureSpec& spec = {});

}  // namespace ptq
