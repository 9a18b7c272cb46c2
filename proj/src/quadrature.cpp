#include "ptq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace ptq {

void QuadratureSpec::validate() const {
  if (node_count < 2) throw std::invalid_argument("QuadratureSpec: node_count must be >= 2");
  if (!(target_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: target_tol must be > 0");
  if (!(tail_cutoff > 0.0)) throw std::invalid_argument("QuadratureSpec: tail_cutoff must be > 0");
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

const GaussLegendreRule& cached_rule(int n) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

template <class R>
bool finite(const R& v) {
  if constexpr (std::is_same_v<R, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <class R, class F>
R panel_sum(const F& g, double a, double b, int panels, const GaussLegendreRule& rule) {
  R total{};
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    R acc{};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * g(mid + 0.5 * width * rule.nodes[k]);
    total += 0.5 * width * acc;
  }
  return total;
}

constexpr int kPanelOrder = 50;
constexpr double kMaxCutoff = 640.0;

template <class R, class F>
R real_line(const F& g, const QuadratureSpec& spec) {
  spec.validate();
  const int order = std::min(kPanelOrder, spec.node_count);
  const int base_panels = std::max(1, spec.node_count / order);
  const auto& rule = cached_rule(order);

  double cutoff = spec.tail_cutoff;
  const R coarse = panel_sum<R>(g, -cutoff, cutoff, base_panels, rule);
  R value = panel_sum<R>(g, -cutoff, cutoff, 2 * base_panels, rule);
  if (!finite(value)) throw QuadratureError("integrand is not finite on the base interval", std::abs(value), INFINITY);
  const double refine_gap = std::abs(value - coarse);
  if (refine_gap > spec.target_tol * std::max(1.0, std::abs(value)))
    throw QuadratureError("node refinement did not converge", std::abs(value), refine_gap);

  const double fine_width = 2.0 * spec.tail_cutoff / (2 * base_panels);
  while (true) {
    const int panels = std::max(1, static_cast<int>(std::ceil(cutoff / fine_width)));
    const R tail = panel_sum<R>(g, cutoff, 2.0 * cutoff, panels, rule) +
                   panel_sum<R>(g, -2.0 * cutoff, -cutoff, panels, rule);
    if (!finite(tail))
      throw QuadratureError("integrand is not finite in the tail", std::abs(value), INFINITY);
    value += tail;
    if (std::abs(tail) <= spec.target_tol * std::max(1.0, std::abs(value))) return value;
    cutoff *= 2.0;
    if (cutoff >= kMaxCutoff)
      throw QuadratureError("tail contribution does not decay", std::abs(value), std::abs(tail));
  }
}

}  // namespace

double integrate_interval(const std::function<double(double)>& f, double a, double b, int nodes) {
  return panel_sum<double>(f, a, b, 1, cached_rule(nodes));
}

std::complex<double> integrate_interval(const std::function<std::complex<double>(double)>& f, double a,
                                        double b, int nodes) {
  return panel_sum<std::complex<double>>(f, a, b, 1, cached_rule(nodes));
}

double integrate_real_line(const std::function<double(double)>& g, const QuadratureSpec& spec) {
  return real_line<double>(g, spec);
}

std::complex<double> integrate_real_line(const std::function<std::complex<double>(double)>& g,
                                         const QuadratureSpec& spec) {
  return real_line<std::complex<double>>(g, spec);
}

MappedPoint mapped_point(double s) {
  const double sech = 1.0 / std::cosh(s);
  return {s, std::tanh(s), sech * sech};
}

double integrate_weighted(const std::function<double(const MappedPoint&)>& f, const QuadratureSpec& spec) {
  // du / (1 - u^2) = ds, so the weight disappears in s.
  return real_line<double>([&](double s) { return f(mapped_point(s)); }, spec);
}

double integrate_weighted(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return real_line<double>([&](double s) { return f(std::tanh(s)); }, spec);
}

}  // namespace ptq
