#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ptq {

// Default steps: order 1 uses 1e-6 * max(1, |x|); order 2 uses 1e-4 * max(1, |x|)
// because the second difference divides roundoff by h^2.
inline double default_step(double x, int order) {
  const double base = order == 1 ? 1e-6 : 1e-4;
  return base * std::max(1.0, std::abs(x));
}

// Second-order accurate central difference of order 1 or 2. Works for real or
// complex valued f.
template <class F>
auto central_derivative(F&& f, double x, int order, std::optional<double> step = std::nullopt) {
  if (order != 1 && order != 2) throw std::invalid_argument("central_derivative: order must be 1 or 2");
  const double h = step.value_or(default_step(x, order));
  if (!(h > 0.0)) throw std::invalid_argument("central_derivative: step must be > 0");
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// One Richardson step on top of central_derivative: (4 D(h/2) - D(h)) / 3.
template <class F>
auto richardson_derivative(F&& f, double x, int order, std::optional<double> step = std::nullopt) {
  const double h = step.value_or(default_step(x, order));
  auto coarse = central_derivative(f, x, order, h);
  auto fine = central_derivative(f, x, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace ptq
