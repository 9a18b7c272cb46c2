#pragma once

#include "ptq/ladder.hpp"
#include "ptq/polynomial.hpp"
#include "ptq/quadrature.hpp"
#include "ptq/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ptq {

// q = (-1 + sqrt(1 + 8 m D / (alpha^2 hbar^2))) / 2, the positive root of
// q(q+1) = 2 m D / (alpha hbar)^2. Values within 1e-12 (relative) of a
// half-integer are snapped onto it so the n < q census is not decided by
// rounding. Throws std::domain_error on nonpositive input.
double bargmann_index(double mass, double depth, double alpha, double hbar = 1.0);

// V(x) = -D / cosh^2(alpha x).
struct MptSystem {
  double mass = 1.0;
  double depth = 1.0;
  double alpha = 1.0;
  double hbar = 1.0;

  void validate() const;
  double q() const { return bargmann_index(mass, depth, alpha, hbar); }
  double omega() const;  // small-oscillation frequency sqrt(2 alpha^2 D / m)
  double energy(unsigned n) const;  // -(hbar alpha)^2 (q - n)^2 / (2m)

  // m = alpha = hbar = 1 and D = q(q+1)/2.
  static MptSystem from_index(double q);
};

// True when 2q is an integer (to 1e-12 relative).
bool is_half_integer(double q);

// Number of n with n < q.
unsigned normalizable_count(double q);

// 1/2 + sqrt(q(q+1)), the semiclassical count.
double wkb_state_count(double q);

// Orthonormalizing constant of (1-u^2)^{(q-n)/2} H_n^{-q}(sqrt(q) u) under
// the du/(1-u^2) product:
//   (2^{-q} / Gamma(q+1)) sqrt((q-n) Gamma(2q-n+1) / n!) q^{n/2}.
// Throws NonNormalizableError for n >= q.
double mpt_norm_constant(double q, unsigned n);
// The same without the q^{n/2} factor; normalizes the state to q^{-n}.
double mpt_norm_constant_unscaled(double q, unsigned n);

// Psi_n^q(u) = (1-u^2)^{(q-n)/2} H_n^{-q}(sqrt(q) u). The polynomial is built
// exactly whenever 2q is an integer (or q is given as a Rational).
class MptEigenfunction {
 public:
  MptEigenfunction(double q, unsigned n);
  MptEigenfunction(const Rational& q, unsigned n);

  double q() const { return q_; }
  unsigned n() const { return n_; }
  bool normalizable() const { return static_cast<double>(n_) < q_; }

  // P(u) = H_n^{-q}(sqrt(q) u).
  const FloatPolynomial& polynomial() const { return p_; }

  double operator()(double u) const;            // unnormalized
  double at_mapped(const MappedPoint& p) const;  // unnormalized, accurate near |u| = 1
  double at_s(double s) const;                   // unnormalized, u = tanh(s)

  // Orthonormal versions; throw NonNormalizableError when n >= q.
  double normalized(double u) const;
  double normalized_at_s(double s) const;
  double norm_constant() const;

 private:
  double q_;
  unsigned n_;
  FloatPolynomial p_;
};

struct EigenState {
  double q = 0.0;
  unsigned n = 0;
  double energy = 0.0;
  bool normalizable = false;
  std::optional<double> norm_constant;  // set only when normalizable
  MptEigenfunction wavefunction;
};

// States n = 0 .. max_n ordered by n. Default max_n = floor(2q), which is the
// top of the 2q+1 dimensional representation for integer or half-integer q.
std::vector<EigenState> spectrum(const MptSystem& system, std::optional<unsigned> max_n = std::nullopt);

// Integral of f g du/(1-u^2) over (-1, 1). Divergent integrals raise
// QuadratureError.
double mpt_inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                         const QuadratureSpec& spec = {});
// Same product between eigenfunctions, evaluated in s = atanh(u).
double mpt_inner_product(const MptEigenfunction& a, const MptEigenfunction& b, bool normalized = true,
                         const QuadratureSpec& spec = {});

// (hbar^2/2m) chi'' + (E_n + D sech^2(alpha x)) chi, chi(x) = Psi_n^q(tanh(alpha x)),
// with chi'' from exact polynomial calculus.
double schrodinger_residual(const MptSystem& system, unsigned n, double x);
// Exact certificate for m = alpha = hbar = 1, D = q(q+1)/2: the residual above
// equals sech^{q-n}(x) q^{n/2} R(tanh x) with R returned here; it is the zero
// polynomial exactly when chi solves the equation.
ExactPolynomial schrodinger_residual_polynomial(const Rational& q, unsigned n);
// D * max |chi| on |x| <= 5/alpha; the scale residuals are measured against.
double schrodinger_scale(const MptSystem& system, unsigned n);

// Lowering sqrt(n(2q-n+1)/(2q)), raising sqrt((n+1)(2q-n)/(2q)). Lowering n = 0
// and raising n = 2q give coefficient 0. Throws std::domain_error when the
// radicand is negative (n beyond the representation).
LadderAction mpt_ladder_apply(double q, Direction direction, unsigned n);

// Differential ladder operators in s = alpha x acting on a function of s that
// stands for the normalized level-n state (q - n != 0):
//   lower: cosh(s) sqrt((q-n+1)/(2q(q-n))) [ psi' + (q-n) tanh(s) psi ]
//   raise: cosh(s) sqrt((q-n-1)/(2q(q-n))) [-psi' + (q-n) tanh(s) psi ]
// psi' by central differences with one Richardson step.
double mpt_apply_ladder(double q, Direction direction, unsigned n, const std::function<double(double)>& psi,
                        double s);

// Projection of the differential ladder image of the normalized level-n state
// onto the normalized target state. Needs both states normalizable.
double mpt_ladder_projection(double q, Direction direction, unsigned n, const QuadratureSpec& spec = {});

struct HarmonicLimitRow {
  double depth = 0.0;
  double alpha = 0.0;
  double q = 0.0;
  double shifted_energy = 0.0;  // E_n + D
  double oscillator_energy = 0.0;  // hbar Omega (n + 1/2)
  double gap = 0.0;
};

// Deepens the well at fixed Omega (alpha^2 = m Omega^2 / (2D)). The gap is
// O(1/D).
std::vector<HarmonicLimitRow> harmonic_limit_check(unsigned n, const std::vector<double>& depths,
                                                   double hbar_omega = 1.0, double mass = 1.0, double hbar = 1.0);

}  // namespace ptq
