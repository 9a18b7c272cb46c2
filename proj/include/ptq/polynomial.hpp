#pragma once

#include "ptq/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ptq {

template <class T>
inline constexpr bool is_exact_scalar_v = std::is_same_v<T, Rational>;

// Dense univariate polynomial, coefficient index = power. Trailing zeros are
// stripped so the zero polynomial is the empty coefficient list and has
// degree -1. Instantiated for Rational (exact path) and double (float path).
template <class T>
class Polynomial {
 public:
  using scalar_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(const T& coefficient, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = coefficient;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : T(0); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = T(c_[k] * T(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  // Horner evaluation in the coefficient field.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
    return acc;
  }

  // Horner evaluation in binary64 regardless of field.
  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  Polynomial<double> to_float() const {
    std::vector<double> d;
    d.reserve(c_.size());
    for (const auto& v : c_) d.push_back(to_double(v));
    return Polynomial<double>(std::move(d));
  }

  // p(k x): used to rescale the argument (e.g. H(sqrt(q) u)).
  Polynomial scaled_argument(const T& k) const {
    std::vector<T> c = c_;
    T power(1);
    for (auto& v : c) {
      v = T(v * power);
      power = T(power * k);
    }
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = T(c_[k] + o.c_[k]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = T(c_[k] - o.c_[k]);
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v = T(v * s);
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = T(r[i + j] + a.c_[i] * b.c_[j]);
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
      if (p.c_[k] == T(0)) continue;
      if (!first) os << " + ";
      os << "(" << p.c_[k] << ")";
      if (k > 0) os << "*x";
      if (k > 1) os << "^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using ExactPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

template <class T>
Polynomial<T> poly_derivative(const Polynomial<T>& p) {
  return p.derivative();
}

// Largest absolute coefficient difference, in binary64.
template <class A, class B>
double max_coefficient_difference(const Polynomial<A>& a, const Polynomial<B>& b) {
  std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(to_double(a.coefficient(k)) - to_double(b.coefficient(k))));
  return worst;
}

}  // namespace ptq
