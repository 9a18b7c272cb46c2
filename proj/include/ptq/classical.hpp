#pragma once

#include "ptq/mpt.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace ptq {

// Point (xi, p_xi) at time t; xi = sinh(alpha x) / alpha.
struct PhaseState {
  double xi = 0.0;
  double p = 0.0;
  double t = 0.0;
};

double xi_from_x(double x, double alpha);
double x_from_xi(double xi, double alpha);

// H = (1 + alpha^2 xi^2) p^2 / 2m - D / (1 + alpha^2 xi^2).
double hamiltonian(const MptSystem& system, const PhaseState& state);
// xi-dot = (1 + alpha^2 xi^2) p / m.
double velocity(const MptSystem& system, const PhaseState& state);
// p = m xi-dot / (1 + alpha^2 xi^2).
double momentum_from_velocity(const MptSystem& system, double xi, double xi_dot);

// omega(eps) = sqrt(2 eps alpha^2 / m), eps = -H > 0.
double energy_frequency(const MptSystem& system, double eps);
// Turning point sqrt((D - eps) / (alpha^2 eps)).
double turning_amplitude(const MptSystem& system, double eps);

// Bound motion at energy -eps from xi0 at t = 0:
//   xi = xi0 cos(w t) + (v0 / w) sin(w t),  v0 = +-w sqrt(A^2 - xi0^2).
// velocity_sign picks the branch of v0 (the sign of the initial velocity).
// Throws std::domain_error unless 0 < eps < D and |xi0| <= A.
PhaseState closed_form_trajectory(const MptSystem& system, double eps, double xi0, double t, int velocity_sign = 1);
// Same motion fixed by (xi0, v0) instead; the energy follows from H.
PhaseState closed_form_from_initial(const MptSystem& system, double xi0, double v0, double t);
// Free oscillator xi0 cos(w t) + (v0/w) sin(w t), the deep-well limit with w = Omega.
PhaseState harmonic_trajectory(const MptSystem& system, double omega, double xi0, double v0, double t);

inline constexpr double kDefaultTimeStep = 1e-3;

// Fixed-step RK4 on Hamilton's equations. Returns the initial state and one
// state per step; the last step is shortened to land on t_end.
std::vector<PhaseState> integrate_trajectory(const MptSystem& system, const PhaseState& initial, double t_end,
                                             double dt = kDefaultTimeStep);
PhaseState rk4_step(const MptSystem& system, const PhaseState& state, double dt);

// Time between successive upward zero crossings of xi, from RK4 with cubic
// Hermite location of the crossing.
double measured_period(const MptSystem& system, double eps, double dt = kDefaultTimeStep);

// {F, G} = dF/dxi dG/dp - dF/dp dG/dxi by central differences,
// h = 1e-6 (1 + |coordinate|) unless a step is given. F and G take a
// PhaseState and may be real or complex valued.
template <class F, class G>
auto poisson_bracket(const F& f, const G& g, const PhaseState& at, std::optional<double> step = std::nullopt,
                     bool richardson = false) {
  auto partials = [&](const auto& fn, double h_xi, double h_p) {
    PhaseState a = at, b = at, c = at, d = at;
    a.xi += h_xi;
    b.xi -= h_xi;
    c.p += h_p;
    d.p -= h_p;
    return std::make_pair((fn(a) - fn(b)) / (2.0 * h_xi), (fn(c) - fn(d)) / (2.0 * h_p));
  };
  auto bracket = [&](double scale) {
    const double h_xi = scale * step.value_or(1e-6) * (1.0 + std::abs(at.xi));
    const double h_p = scale * step.value_or(1e-6) * (1.0 + std::abs(at.p));
    const auto [f_xi, f_p] = partials(f, h_xi, h_p);
    const auto [g_xi, g_p] = partials(g, h_xi, h_p);
    return f_xi * g_p - f_p * g_xi;
  };
  if (!richardson) return bracket(1.0);
  return (4.0 * bracket(0.5) - bracket(1.0)) / 3.0;
}

// Generators E = 2 sqrt(D) sqrt(H), X = sqrt(2/D) sqrt(H) xi, P = sqrt(2)(1 + alpha^2 xi^2) p.
// For H < 0 the primed real versions E' = -iE, X' = -iX are returned instead.
struct Generators {
  bool primed = false;
  double E = 0.0;
  double X = 0.0;
  double P = 0.0;
};
Generators so21_generators(const MptSystem& system, const PhaseState& at);

struct So21Residuals {
  double energy = 0.0;
  bool primed = false;
  // H > 0: |{E,P} + m Omega^2 X|, |{E,X} + P/m|, |{X,P} - E/D|.
  // H < 0: |{E',P} + m Omega^2 X'|, |{E',X'} - P/m|, |{X',P} - E'/D|.
  std::array<double, 3> residual{};
  double scale = 1.0;  // max(1, |m Omega^2 X|, |P/m|, |E/D|)
  double max_relative() const;
};

// Throws BranchError ("zero-energy singularity") when |H| < 1e-9 D.
So21Residuals so21_bracket_check(const MptSystem& system, const PhaseState& at);

enum class EnergySign { positive, negative };

// H > 0: A = E/Omega, B = (P + m Omega X)/(2 alpha), C = (P - m Omega X)/(2 alpha),
//   residuals {A,B} + B, {A,C} - C, {B,C} - A.
// H < 0: L0 = E'/Omega, L- = (P' - i m Omega X')/(2 alpha), L+ = (P' + i m Omega X')/(2 alpha),
//   residuals {L0,L+} - i L+, {L0,L-} + i L-, {L+,L-} - i L0.
// values holds (A, B, C) or (L0, L-, L+). Throws BranchError if the sign of
// H at the point differs from the requested branch.
struct DiagonalGenerators {
  EnergySign sign = EnergySign::positive;
  std::array<std::complex<double>, 3> values{};
  std::array<double, 3> residual{};
  double scale = 1.0;
  double max_relative() const;
};
DiagonalGenerators diagonal_generators(const MptSystem& system, EnergySign sign, const PhaseState& at);

// A, B, C built with the complex principal root sqrt(H); at H < 0 these are
// the values that L+ = B, L- = C, L0 = -iA compare against.
std::array<std::complex<double>, 3> complex_abc(const MptSystem& system, const PhaseState& at);

}  // namespace ptq
