#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ptq {

struct QuadratureSpec {
  int node_count = 200;      // nodes on the base interval [-tail_cutoff, tail_cutoff]
  double tail_cutoff = 20.0;  // in the mapped variable s
  double target_tol = 1e-12;

  void validate() const;
};

// Raised when node refinement or tail extension fails to settle within
// target_tol. For the singular-weight product this is how a divergent
// (non-normalizable) norm integral shows up.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double discrepancy)
      : std::runtime_error(what), estimate_(estimate), discrepancy_(discrepancy) {}
  double estimate() const { return estimate_; }
  double discrepancy() const { return discrepancy_; }

 private:
  double estimate_;
  double discrepancy_;
};

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule on [-1, 1]; Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

double integrate_interval(const std::function<double(double)>& f, double a, double b, int nodes);
std::complex<double> integrate_interval(const std::function<std::complex<double>(double)>& f, double a,
                                        double b, int nodes);

// Integral over the whole real line of a function that decays at both ends.
// Composite Gauss-Legendre on [-L, L], one node-doubling refinement, then the
// cutoff L is doubled until the added tail is below target_tol.
double integrate_real_line(const std::function<double(double)>& g, const QuadratureSpec& spec = {});
std::complex<double> integrate_real_line(const std::function<std::complex<double>(double)>& g,
                                         const QuadratureSpec& spec = {});

// Lambdas: pick the real or complex overload from the return type.
template <class F>
auto integrate_real_line(F&& g, const QuadratureSpec& spec = {}) -> std::decay_t<std::invoke_result_t<F&, double>> {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  const std::function<R(double)> fn(std::forward<F>(g));
  return integrate_real_line(fn, spec);
}

template <class F>
auto integrate_interval(F&& f, double a, double b, int nodes) -> std::decay_t<std::invoke_result_t<F&, double>> {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  const std::function<R(double)> fn(std::forward<F>(f));
  return integrate_interval(fn, a, b, nodes);
}

// A point of (-1, 1) reached through u = tanh(s). one_minus_u2 = sech^2(s) is
// exact to rounding even where u itself has rounded to +-1.
struct MappedPoint {
  double s;
  double u;
  double one_minus_u2;
};

MappedPoint mapped_point(double s);

// Integral of f(u) du / (1 - u^2) over (-1, 1).
double integrate_weighted(const std::function<double(double)>& f, const QuadratureSpec& spec = {});
double integrate_weighted(const std::function<double(const MappedPoint&)>& f, const QuadratureSpec& spec = {});

}  // namespace ptq
