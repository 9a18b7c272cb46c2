#include "ptq/rhp.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace ptq {

namespace {

template <class T>
void require_nonzero_index(const T& N) {
  if (N == T(0)) throw std::domain_error("relativistic Hermite index N must be nonzero");
}

template <class T>
Polynomial<T> rhp_recurrence(const T& N, unsigned n) {
  require_nonzero_index(N);
  const Polynomial<T> weight{T(1), T(0), T(T(1) / N)};  // 1 + zeta^2 / N
  Polynomial<T> p = Polynomial<T>::constant(T(1));
  for (unsigned k = 0; k < n; ++k) {
    const T slope = T(T(-2) * (N + T(static_cast<long>(k))) / N);
    p = weight * p.derivative() + Polynomial<T>{T(0), slope} * p;
  }
  if (n % 2 == 1) p *= T(-1);
  return p;
}

template <class T>
double ode_residual(const Polynomial<T>& h, const T& N, unsigned n, double zeta) {
  const double Nd = to_double(N);
  const double nd = static_cast<double>(n);
  const auto d1 = h.derivative();
  const auto d2 = d1.derivative();
  return (1.0 + zeta * zeta / Nd) * d2.evaluate(zeta) - (2.0 / Nd) * (Nd + nd - 1.0) * zeta * d1.evaluate(zeta) +
         (nd / Nd) * (2.0 * Nd + nd - 1.0) * h.evaluate(zeta);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

ExactPolynomial rhp_polynomial(const Rational& N, unsigned n) { return rhp_recurrence(N, n); }
FloatPolynomial rhp_polynomial(double N, unsigned n) { return rhp_recurrence(N, n); }

ExactPolynomial rhp_rodrigues_oracle(const Rational& N, unsigned n) {
  require_nonzero_index(N);
  if (n > kRodriguesOracleMaxDegree) throw std::invalid_argument("rhp_rodrigues_oracle: n must be <= 8");

  // key (a, j) -> coefficient of zeta^a (1 + zeta^2/N)^(-N-j)
  using Terms = std::map<std::pair<unsigned, unsigned>, Rational>;
  Terms terms{{{0u, 0u}, Rational(1)}};
  for (unsigned step = 0; step < n; ++step) {
    Terms next;
    for (const auto& [key, c] : terms) {
      const auto [a, j] = key;
      if (a > 0) next[{a - 1, j}] += c * a;
      // d/dz (1 + z^2/N)^(-N-j) = (-N-j)(2z/N)(1 + z^2/N)^(-N-j-1)
      next[{a + 1, j + 1}] += c * (-N - j) * 2 / N;
    }
    terms.clear();
    for (auto& [key, c] : next)
      if (c != 0) terms.emplace(key, c);
  }

  // zeta^a (1 + zeta^2/N)^(-N-j) * (1 + zeta^2/N)^(N+n) = zeta^a (1 + zeta^2/N)^(n-j)
  std::map<unsigned, Rational> coeffs;
  const Rational inv_n = Rational(1) / N;
  for (const auto& [key, c] : terms) {
    const auto [a, j] = key;
    const unsigned e = n - j;
    Rational inv_pow(1);
    for (unsigned k = 0; k <= e; ++k) {
      coeffs[a + 2 * k] += c * binomial(e, k) * inv_pow;
      inv_pow *= inv_n;
    }
  }
  unsigned top = 0;
  for (const auto& [power, c] : coeffs) top = std::max(top, power);
  std::vector<Rational> dense(top + 1, Rational(0));
  for (const auto& [power, c] : coeffs) dense[power] = (n % 2 == 1) ? Rational(-c) : c;
  return ExactPolynomial(std::move(dense));
}

ExactPolynomial rhp_ode_residual_polynomial(const Rational& N, unsigned n) {
  const ExactPolynomial h = rhp_polynomial(N, n);
  const Rational nr(static_cast<long>(n));
  const ExactPolynomial weight{Rational(1), Rational(0), Rational(1 / N)};
  const ExactPolynomial drift{Rational(0), Rational(-2 * (N + nr - 1) / N)};
  return weight * h.derivative().derivative() + drift * h.derivative() + h * Rational(nr * (2 * N + nr - 1) / N);
}

double rhp_ode_residual(const Rational& N, unsigned n, double zeta) {
  return rhp_ode_residual_polynomial(N, n).evaluate(zeta);
}

double rhp_ode_residual(double N, unsigned n, double zeta) {
  return ode_residual(rhp_polynomial(N, n), N, n, zeta);
}

ExactPolynomial hermite_polynomial(unsigned n) {
  ExactPolynomial prev = ExactPolynomial::constant(Rational(1));
  if (n == 0) return prev;
  ExactPolynomial cur{Rational(0), Rational(2)};
  const ExactPolynomial two_x{Rational(0), Rational(2)};
  for (unsigned k = 1; k < n; ++k) {
    ExactPolynomial next = two_x * cur - prev * Rational(2 * static_cast<long>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational hermite_limit_error(unsigned n, const Rational& N) {
  const ExactPolynomial diff = rhp_polynomial(N, n) - hermite_polynomial(n);
  Rational worst(0);
  for (const auto& c : diff.coefficients()) worst = std::max(worst, Rational(abs(c)));
  return worst;
}

double hermite_limit_error(unsigned n, double N) {
  return max_coefficient_difference(rhp_polynomial(N, n), hermite_polynomial(n));
}

}  // namespace ptq
