#pragma once

#include "ptq/rho.hpp"

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ptq {

// Coordinates (tau, y, pi, phase) of the centrally extended SL(2,R) group of
// the relativistic oscillator; zeta = exp(i phase). mass plays the role of mu.
struct GroupElement {
  double tau = 0.0;
  double y = 0.0;
  double pi = 0.0;
  double phase = 0.0;
};

enum class Generator { tau, y, pi, phase };
inline constexpr std::array<Generator, 4> kGenerators = {Generator::tau, Generator::y, Generator::pi, Generator::phase};
std::string to_string(Generator g);

// Components along (d/dtau, d/dy, d/dpi, d/dphase).
using Tangent = std::array<double, 4>;

// Pi_0 = sqrt(mu^2 c^2 + pi^2 + mu^2 omega^2 y^2).
double pi_zero(const RhoParams& p, double y, double pi);

// f(y, pi) in the cancellation-free form
//   -(2 mu c^2 / omega) atan(a b / ((beta + 1)(sqrt(1 + a^2 + b^2) + beta))),
// a = omega y / c, b = pi / (mu c). Equal to the direct form
//   -(2 mu c^2 / omega) atan[(mu c^2 / (omega pi y)) (beta - 1)(Pi_0/(mu c) - beta)]
// which is also provided (undefined at pi y = 0), and to the small-argument
// expansion -(pi y / 2)(1 - a^2/2 - b^2/4).
double f_phase(const RhoParams& p, double y, double pi);
double f_phase_literal(const RhoParams& p, double y, double pi);
double f_phase_taylor(const RhoParams& p, double y, double pi);
double df_dpi(const RhoParams& p, double y, double pi);  // -mu^2 c^2 y / (Pi_0 (Pi_0 + mu c))

// g'' = g' * g. tau'' = asin(...)/omega on the principal branch; throws
// BranchError unless |omega tau| < pi/2 for both inputs and the product stays
// in the patch (|sin omega tau''| < 1 and d sin(omega tau'')/d tau' > 0).
// compose wraps the phase into [0, 2 pi); compose_unwrapped leaves it as a
// plain sum, which is what derivatives need.
GroupElement compose(const GroupElement& g_prime, const GroupElement& g, const RhoParams& p);
GroupElement compose_unwrapped(const GroupElement& g_prime, const GroupElement& g, const RhoParams& p);

enum class Side { left, right };

// Closed-form invariant fields. Right fields generate left translations
// (d/de (e * g)), left fields generate right translations (d/de (g * e)).
// Central components are in units of d/dphase.
Tangent invariant_field(Side side, Generator generator, const GroupElement& at, const RhoParams& p);

// The same fields obtained by differentiating compose_unwrapped at the
// identity (central differences, one Richardson step).
Tangent derived_field(Side side, Generator generator, const GroupElement& at, const RhoParams& p);

// [X, Y]^k = X^j d_j Y^k - Y^j d_j X^k with Jacobians by central differences.
Tangent lie_bracket(Side side_a, Generator a, Side side_b, Generator b, const GroupElement& at, const RhoParams& p);

// Right-hand side of [X_a, X_b] as coefficients on (X_tau, X_y, X_pi, d/dphase).
// realized: what the closed-form right fields satisfy,
//   [tau, y] = -mu w^2 pi,  [tau, pi] = (1/mu) y,  [y, pi] = (1/(mu c^2)) tau - (1/hbar) phase.
// flipped: the same table with [tau, pi] = -(1/mu) y and [y, pi] central term +d/dphase.
// Left fields satisfy the realized table with every sign reversed.
enum class StructureTable { realized, flipped };
Tangent structure_constants(Side side, Generator a, Generator b, const RhoParams& p,
                            StructureTable table = StructureTable::realized);

// max_k |[X_a, X_b]^k - sum_c C_ab^c X_c^k| on the right fields.
double commutator_residual(Generator a, Generator b, const GroupElement& at, const RhoParams& p,
                           StructureTable table = StructureTable::realized);
// Same for left fields.
double left_commutator_residual(Generator a, Generator b, const GroupElement& at, const RhoParams& p);
// max_k |[X_a^L, X_b^R]^k|.
double left_right_commutator(Generator a, Generator b, const GroupElement& at, const RhoParams& p);

enum class ContractionLimit { free_particle, nonrelativistic };

struct ContractionRow {
  double parameter = 0.0;  // omega for the free limit, c for the nonrelativistic one
  double residual = 0.0;   // against the limit algebra, max over generator pairs
  double baseline = 0.0;   // against the full realized algebra at the same parameter
};

// free_particle: omega -> 0, limit algebra [tau,y] = 0, others unchanged.
// nonrelativistic: c -> infinity, limit algebra [y,pi] = -(1/hbar) d/dphase.
std::vector<ContractionRow> contraction_check(ContractionLimit limit, const std::vector<double>& parameters,
                                              const GroupElement& at, const RhoParams& base = {});

// Psi = exp(i phase) exp((i/hbar) f(y, pi)) psi_n(y, tau) with psi_n the
// covariant solution. Returns (Xi.Psi - i Psi, X_pi^L . Psi). Xi acts on the
// exp(i phase) factor analytically; X_pi^L uses a central difference in pi.
std::pair<std::complex<double>, std::complex<double>> polarization_residual(unsigned n, const GroupElement& at,
                                                                            const RhoParams& p);
std::complex<double> polarized_wavefunction(unsigned n, const GroupElement& at, const RhoParams& p);

}  // namespace ptq
