#include "ptq/gegenbauer.hpp"

#include "ptq/errors.hpp"
#include "ptq/rhp.hpp"

#include <cmath>
#include <stdexcept>

namespace ptq {

bool is_degenerate_gegenbauer_index(double lambda) {
  if (lambda > 0.0) return false;
  const double twice = -2.0 * lambda;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

bool is_degenerate_gegenbauer_index(const Rational& lambda) {
  if (lambda > 0) return false;
  const Rational twice = -2 * lambda;
  return twice.get_den() == 1;
}

namespace {

template <class T>
Polynomial<T> recurrence(const T& lambda, unsigned n) {
  if (is_degenerate_gegenbauer_index(lambda))
    throw std::domain_error("Gegenbauer index is a nonpositive half-integer (degenerate recurrence)");
  Polynomial<T> prev = Polynomial<T>::constant(T(1));
  if (n == 0) return prev;
  Polynomial<T> cur{T(0), T(T(2) * lambda)};
  for (unsigned k = 2; k <= n; ++k) {
    const T kk(static_cast<long>(k));
    Polynomial<T> next = Polynomial<T>{T(0), T(T(2) * (kk + lambda - T(1)) / kk)} * cur -
                         prev * T((kk + T(2) * lambda - T(2)) / kk);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ExactPolynomial gegenbauer_poly(const Rational& lambda, unsigned n) { return recurrence(lambda, n); }
FloatPolynomial gegenbauer_poly(double lambda, unsigned n) { return recurrence(lambda, n); }

double rhp_gegenbauer_identity_residual(double N, unsigned n, double u) {
  if (!(N > 0.0)) throw std::domain_error("rhp_gegenbauer_identity_residual: N must be > 0");
  const double lhs = rhp_polynomial(N, n).evaluate(u * std::sqrt(N));
  const double nd = static_cast<double>(n);
  const double r = std::sqrt(1.0 + u * u);
  const double rhs = std::tgamma(nd + 1.0) / std::pow(N, 0.5 * nd) * std::pow(r, nd) *
                     gegenbauer_poly(N, n).evaluate(u / r);
  return lhs - rhs;
}

ProportionalityFit mpt_gegenbauer_proportionality(double q, unsigned n) {
  if (!(q > 0.0)) throw std::domain_error("mpt_gegenbauer_proportionality: q must be > 0");
  if (!(static_cast<double>(n) < q))
    throw NonNormalizableError("non-normalizable regime: n >= q, the proportionality constant diverges");

  const FloatPolynomial h = rhp_polynomial(-q, n);
  const FloatPolynomial c = gegenbauer_poly(q - static_cast<double>(n) + 0.5, n);
  const double sq = std::sqrt(q);

  double hc = 0.0, cc = 0.0;
  std::vector<double> hs, cs;
  for (int i = 0; i < kProportionalityGridPoints; ++i) {
    const double u = -kProportionalityGridHalfWidth + 2.0 * kProportionalityGridHalfWidth * i /
                                                          (kProportionalityGridPoints - 1);
    hs.push_back(h.evaluate(sq * u));
    cs.push_back(c.evaluate(u));
    hc += hs.back() * cs.back();
    cc += cs.back() * cs.back();
  }
  ProportionalityFit fit;
  fit.constant = hc / cc;
  double scale = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(hs[i] - fit.constant * cs[i]));
    scale = std::max(scale, std::abs(fit.constant * cs[i]));
  }
  fit.relative_residual = scale > 0.0 ? fit.max_residual / scale : fit.max_residual;
  return fit;
}

}  // namespace ptq
