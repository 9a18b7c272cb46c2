#include "ptq/mpt.hpp"

#include "ptq/errors.hpp"
#include "ptq/finite_difference.hpp"
#include "ptq/rhp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptq {

namespace {

constexpr double kSnapTolerance = 1e-12;

double snap_half_integer(double q) {
  const double twice = std::round(2.0 * q);
  if (std::abs(2.0 * q - twice) <= kSnapTolerance * std::max(1.0, q)) return 0.5 * twice;
  return q;
}

// log cosh(s) without overflow.
double log_cosh(double s) {
  const double a = std::abs(s);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

void require_positive_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("Bargmann index q must be positive and finite");
}

template <class Coefficients>
FloatPolynomial scale_by_root_q(const Coefficients& c, double q) {
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = to_double(c[k]) * std::pow(q, 0.5 * static_cast<double>(k));
  return FloatPolynomial(std::move(out));
}

FloatPolynomial build_polynomial(double q, unsigned n) {
  require_positive_q(q);
  if (is_half_integer(q)) {
    const Rational exact = make_rational(std::lround(2.0 * q), 2);
    return scale_by_root_q(rhp_polynomial(Rational(-exact), n).coefficients(), q);
  }
  return scale_by_root_q(rhp_polynomial(-q, n).coefficients(), q);
}

double log_norm_unscaled(double q, unsigned n) {
  const double nd = static_cast<double>(n);
  return -q * std::numbers::ln2 - std::lgamma(q + 1.0) +
         0.5 * (std::log(q - nd) + std::lgamma(2.0 * q - nd + 1.0) - std::lgamma(nd + 1.0));
}

void require_normalizable(double q, unsigned n) {
  require_positive_q(q);
  if (!(static_cast<double>(n) < q))
    throw NonNormalizableError("non-normalizable state: n = " + std::to_string(n) + " is not below q");
}

}  // namespace

double bargmann_index(double mass, double depth, double alpha, double hbar) {
  if (!(mass > 0.0) || !(depth > 0.0) || !(alpha > 0.0) || !(hbar > 0.0))
    throw std::domain_error("bargmann_index: m, D, alpha and hbar must be positive");
  const double r = 8.0 * mass * depth / (alpha * alpha * hbar * hbar);
  // (-1 + sqrt(1 + r)) / 2 rewritten to avoid cancellation for shallow wells.
  const double q = 0.5 * r / (1.0 + std::sqrt(1.0 + r));
  return snap_half_integer(q);
}

void MptSystem::validate() const { (void)q(); }

double MptSystem::omega() const {
  validate();
  return std::sqrt(2.0 * alpha * alpha * depth / mass);
}

double MptSystem::energy(unsigned n) const {
  const double d = q() - static_cast<double>(n);
  return -(hbar * hbar * alpha * alpha / (2.0 * mass)) * d * d;
}

MptSystem MptSystem::from_index(double q) {
  require_positive_q(q);
  MptSystem s;
  s.depth = 0.5 * q * (q + 1.0);
  return s;
}

bool is_half_integer(double q) { return std::abs(2.0 * q - std::round(2.0 * q)) <= kSnapTolerance * std::max(1.0, q); }

unsigned normalizable_count(double q) {
  require_positive_q(q);
  return static_cast<unsigned>(std::ceil(snap_half_integer(q)));
}

double wkb_state_count(double q) {
  require_positive_q(q);
  return 0.5 + std::sqrt(q * (q + 1.0));
}

double mpt_norm_constant_unscaled(double q, unsigned n) {
  require_normalizable(q, n);
  return std::exp(log_norm_unscaled(q, n));
}

double mpt_norm_constant(double q, unsigned n) {
  require_normalizable(q, n);
  return std::exp(log_norm_unscaled(q, n) + 0.5 * static_cast<double>(n) * std::log(q));
}

MptEigenfunction::MptEigenfunction(double q, unsigned n) : q_(q), n_(n), p_(build_polynomial(q, n)) {}

MptEigenfunction::MptEigenfunction(const Rational& q, unsigned n) : q_(to_double(q)), n_(n) {
  require_positive_q(q_);
  p_ = scale_by_root_q(rhp_polynomial(Rational(-q), n).coefficients(), q_);
}

double MptEigenfunction::operator()(double u) const {
  if (!(std::abs(u) < 1.0)) throw std::domain_error("MptEigenfunction: u must lie in (-1, 1)");
  return at_mapped({std::atanh(u), u, (1.0 - u) * (1.0 + u)});
}

double MptEigenfunction::at_mapped(const MappedPoint& p) const {
  return std::pow(p.one_minus_u2, 0.5 * (q_ - n_)) * p_.evaluate(p.u);
}

double MptEigenfunction::at_s(double s) const {
  return std::exp(-(q_ - n_) * log_cosh(s)) * p_.evaluate(std::tanh(s));
}

double MptEigenfunction::norm_constant() const { return mpt_norm_constant(q_, n_); }

double MptEigenfunction::normalized(double u) const { return norm_constant() * (*this)(u); }

double MptEigenfunction::normalized_at_s(double s) const { return norm_constant() * at_s(s); }

std::vector<EigenState> spectrum(const MptSystem& system, std::optional<unsigned> max_n) {
  const double q = system.q();
  const unsigned top = max_n.value_or(static_cast<unsigned>(std::floor(2.0 * q)));
  std::vector<EigenState> out;
  out.reserve(top + 1);
  for (unsigned n = 0; n <= top; ++n) {
    const bool ok = static_cast<double>(n) < q;
    out.push_back(EigenState{q, n, system.energy(n), ok,
                             ok ? std::optional<double>(mpt_norm_constant(q, n)) : std::nullopt,
                             MptEigenfunction(q, n)});
  }
  return out;
}

double mpt_inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                         const QuadratureSpec& spec) {
  return integrate_weighted(std::function<double(double)>([&](double u) { return f(u) * g(u); }), spec);
}

double mpt_inner_product(const MptEigenfunction& a, const MptEigenfunction& b, bool normalized,
                         const QuadratureSpec& spec) {
  const double scale = normalized ? a.norm_constant() * b.norm_constant() : 1.0;
  return scale * integrate_real_line([&](double s) { return a.at_s(s) * b.at_s(s); }, spec);
}

double schrodinger_residual(const MptSystem& system, unsigned n, double x) {
  const double q = system.q();
  const MptEigenfunction psi(q, n);
  const FloatPolynomial& P = psi.polynomial();
  const FloatPolynomial dP = P.derivative();
  const FloatPolynomial ddP = dP.derivative();

  const double theta = system.alpha * x;
  const double t = std::tanh(theta);
  const double sech = 1.0 / std::cosh(theta);
  const double w = sech * sech;  // 1 - t^2
  const double a = q - static_cast<double>(n);
  const double Sa = std::exp(-a * log_cosh(theta));

  const double p = P.evaluate(t), p1 = dP.evaluate(t), p2 = ddP.evaluate(t);
  const double G = -a * t * p + w * p1;
  const double dG = -a * p - a * t * p1 - 2.0 * t * p1 + w * p2;
  const double chi = Sa * p;
  const double chi2 = system.alpha * system.alpha * Sa * (-a * t * G + w * dG);

  return system.hbar * system.hbar / (2.0 * system.mass) * chi2 + (system.energy(n) + system.depth * w) * chi;
}

ExactPolynomial schrodinger_residual_polynomial(const Rational& q, unsigned n) {
  if (sgn(q) <= 0) throw std::domain_error("Bargmann index q must be positive");
  // H_n^{-q} has parity n, so H(sqrt(q) t) = q^{n/2} sum_k c_k q^{(k-n)/2} t^k
  // with (k - n)/2 an integer.
  const ExactPolynomial H = rhp_polynomial(Rational(-q), n);
  const auto& c = H.coefficients();
  std::vector<Rational> r(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const long shift = (static_cast<long>(k) - static_cast<long>(n)) / 2;
    Rational factor(1);
    for (long j = 0; j < std::abs(shift); ++j) factor *= q;
    r[k] = shift >= 0 ? Rational(c[k] * factor) : Rational(c[k] / factor);
  }
  const ExactPolynomial P(std::move(r));
  const Rational a = q - n;
  const ExactPolynomial t = ExactPolynomial::monomial(Rational(1), 1);
  const ExactPolynomial w = ExactPolynomial::constant(Rational(1)) - ExactPolynomial::monomial(Rational(1), 2);
  const ExactPolynomial G = Rational(-a) * (t * P) + w * P.derivative();
  const Rational half(1, 2);
  const Rational depth = half * q * (q + 1);
  const Rational energy = -half * a * a;
  return half * (Rational(-a) * (t * G) + w * G.derivative()) +
         (ExactPolynomial::constant(energy) + depth * w) * P;
}

double schrodinger_scale(const MptSystem& system, unsigned n) {
  const MptEigenfunction psi(system.q(), n);
  double peak = 0.0;
  constexpr int kSamples = 2001;
  for (int i = 0; i < kSamples; ++i) {
    const double theta = -5.0 + 10.0 * i / (kSamples - 1);
    peak = std::max(peak, std::abs(psi.at_s(theta)));
  }
  return system.depth * peak;
}

LadderAction mpt_ladder_apply(double q, Direction direction, unsigned n) {
  require_positive_q(q);
  const double nd = static_cast<double>(n);
  if (direction == Direction::lower) {
    if (n == 0) return {0.0, 0};
    const double radicand = nd * (2.0 * q - nd + 1.0) / (2.0 * q);
    if (radicand < -kSnapTolerance) throw std::domain_error("mpt_ladder_apply: n lies outside the representation");
    return {std::sqrt(std::max(0.0, radicand)), static_cast<int>(n) - 1};
  }
  const double radicand = (nd + 1.0) * (2.0 * q - nd) / (2.0 * q);
  if (radicand < -kSnapTolerance) throw std::domain_error("mpt_ladder_apply: n lies outside the representation");
  return {std::sqrt(std::max(0.0, radicand)), static_cast<int>(n) + 1};
}

double mpt_apply_ladder(double q, Direction direction, unsigned n, const std::function<double(double)>& psi,
                        double s) {
  require_positive_q(q);
  const double a = q - static_cast<double>(n);
  if (a == 0.0) throw std::domain_error("mpt_apply_ladder: undefined at n = q");
  constexpr double kStep = 1e-3;
  const double d = richardson_derivative(psi, s, 1, kStep);
  const double drift = a * std::tanh(s) * psi(s);
  if (direction == Direction::lower)
    return std::cosh(s) * std::sqrt((a + 1.0) / (2.0 * q * a)) * (d + drift);
  return std::cosh(s) * std::sqrt((a - 1.0) / (2.0 * q * a)) * (-d + drift);
}

double mpt_ladder_projection(double q, Direction direction, unsigned n, const QuadratureSpec& spec) {
  const LadderAction action = mpt_ladder_apply(q, direction, n);
  if (direction == Direction::lower && n == 0) throw std::domain_error("mpt_ladder_projection: no state below n = 0");
  const unsigned target = static_cast<unsigned>(action.target_n);
  require_normalizable(q, n);
  require_normalizable(q, target);
  const MptEigenfunction source(q, n);
  const MptEigenfunction dest(q, target);
  const double c_source = source.norm_constant();
  const double c_dest = dest.norm_constant();
  const std::function<double(double)> psi = [&](double s) { return c_source * source.at_s(s); };
  return integrate_real_line(
      [&](double s) { return mpt_apply_ladder(q, direction, n, psi, s) * c_dest * dest.at_s(s); }, spec);
}

std::vector<HarmonicLimitRow> harmonic_limit_check(unsigned n, const std::vector<double>& depths,
                                                   double hbar_omega, double mass, double hbar) {
  if (!(hbar_omega > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
    throw std::domain_error("harmonic_limit_check: hbar Omega, m and hbar must be positive");
  const double Omega = hbar_omega / hbar;
  std::vector<HarmonicLimitRow> rows;
  rows.reserve(depths.size());
  for (double D : depths) {
    MptSystem sys{mass, D, std::sqrt(mass * Omega * Omega / (2.0 * D)), hbar};
    HarmonicLimitRow row;
    row.depth = D;
    row.alpha = sys.alpha;
    row.q = sys.q();
    row.shifted_energy = sys.energy(n) + D;
    row.oscillator_energy = hbar_omega * (static_cast<double>(n) + 0.5);
    row.gap = std::abs(row.shifted_energy - row.oscillator_energy);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ptq
