// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "ptq/classical.hpp"
#include "ptq/errors.hpp"
#include "ptq/gegenbauer.hpp"
#include "ptq/group_law.hpp"
#include "ptq/mpt.hpp"
#include "ptq/rhp.hpp"
#include "ptq/rho.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace ptq;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

ExactPolynomial poly(std::initializer_list<const char*> c) {
  std::vector<Rational> v;
  for (const char* s : c) v.push_back(parse_rational(s));
  return ExactPolynomial(v);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome table_exactness() {
  struct Entry {
    const char* N;
    unsigned n;
    ExactPolynomial H;
  };
  const std::vector<Entry> table = {
      {"-1", 0, poly({"1"})},
      {"-1", 1, poly({"0", "2"})},
      {"-1", 2, poly({"-2", "0", "2"})},
      {"-1", 3, ExactPolynomial()},
      {"-1", 4, ExactPolynomial()},
      {"-1", 5, ExactPolynomial()},
      {"-3/2", 0, poly({"1"})},
      {"-3/2", 1, poly({"0", "2"})},
      {"-3/2", 2, poly({"-2", "0", "8/3"})},
      {"-3/2", 3, poly({"0", "-4", "0", "16/9"})},
      {"-3/2", 4, poly({"4"})},
      {"-3/2", 5, poly({"0", "-40/3"})},
      {"-9/5", 0, poly({"1"})},
      {"-9/5", 1, poly({"0", "2"})},
      {"-9/5", 2, poly({"-2", "0", "26/9"})},
      {"-9/5", 3, poly({"0", "-16/3", "0", "208/81"})},
      {"-9/5", 4, poly({"16/3", "0", "-32/9", "0", "208/243"})},
      {"-9/5", 5, poly({"0", "-160/27", "0", "320/243", "0", "-416/2187"})},
  };
  int bad = 0;
  for (const auto& e : table) bad += rhp_polynomial(parse_rational(e.N), e.n) == e.H ? 0 : 1;
  for (unsigned k = 0; k <= 4; ++k) bad += rhp_polynomial(make_rational(-3, 2), 4 + k).degree() == static_cast<int>(k) ? 0 : 1;
  for (unsigned n = 3; n <= 8; ++n) bad += rhp_polynomial(make_rational(-1), n).is_zero() ? 0 : 1;
  return {bad == 0, std::to_string(table.size()) + " entries, " + std::to_string(bad) + " mismatches"};
}

const std::vector<const char*> kIndices = {"1", "-1", "3/2", "-3/2", "9/5", "-9/5", "4", "-4"};

Outcome rodrigues() {
  int bad = 0;
  for (const char* N : kIndices)
    for (unsigned n = 0; n <= 6; ++n) bad += rhp_polynomial(parse_rational(N), n) == rhp_rodrigues_oracle(parse_rational(N), n) ? 0 : 1;
  return {bad == 0, std::to_string(bad) + " of 56 differ"};
}

Outcome ode() {
  int bad = 0;
  for (const char* N : kIndices)
    for (unsigned n = 0; n <= 6; ++n) bad += rhp_ode_residual_polynomial(parse_rational(N), n).is_zero() ? 0 : 1;
  return {bad == 0, std::to_string(bad) + " of 56 nonzero"};
}

Outcome orthonormality() {
  double worst = 0.0;
  for (double q : {1.0, 1.5, 1.8, 2.5, 4.0})
    for (unsigned n = 0; n < q; ++n)
      for (unsigned m = 0; m < q; ++m)
        worst = std::max(worst, std::abs(mpt_inner_product(MptEigenfunction(q, n), MptEigenfunction(q, m)) - (n == m ? 1.0 : 0.0)));
  int detected = 0;
  for (double q : {1.0, 2.0, 3.0, 4.0}) {
    const MptEigenfunction top(q, static_cast<unsigned>(q));
    try {
      (void)mpt_inner_product(top, top, false);
    } catch (const QuadratureError&) {
      ++detected;
    }
  }
  return {worst < 1e-10 && detected == 4, "max |<n|m> - delta| = " + sci(worst) + ", divergence detected " + std::to_string(detected) + "/4"};
}

Outcome spectrum_check() {
  const MptSystem sys{1, 3, 1, 1};
  const auto states = spectrum(sys);
  const double E[] = {-2.0, -0.5, 0.0, -0.5, -2.0};
  bool ok = states.size() == 5;
  for (std::size_t i = 0; ok && i < 5; ++i) ok = states[i].energy == E[i] && states[i].normalizable == (i < 2);
  const double q = sys.q();
  ok = ok && std::abs(sys.energy(0) + q / (q + 1.0) * sys.depth) < 1e-15 && sys.energy(2) == 0.0;
  for (double qq : {1.0, 2.0, 3.0, 4.0}) ok = ok && normalizable_count(qq) == static_cast<unsigned>(qq);
  for (double qq : {1.5, 1.8, std::numbers::pi}) ok = ok && normalizable_count(qq) == static_cast<unsigned>(std::floor(qq)) + 1;
  return {ok, "q = " + sci(q) + ", energies and counts " + (ok ? "as expected" : "differ")};
}

Outcome schrodinger() {
  double worst = 0.0;
  for (double q : {1.0, 2.0, 2.5, 1.8}) {
    const MptSystem s = MptSystem::from_index(q);
    for (unsigned n = 0; n < q; ++n) {
      const double scale = schrodinger_scale(s, n);
      for (int i = 0; i <= 400; ++i) worst = std::max(worst, std::abs(schrodinger_residual(s, n, -5.0 + 0.025 * i)) / scale);
    }
  }
  const bool sech = schrodinger_residual_polynomial(make_rational(1), 0).is_zero();
  return {worst < 1e-8 && sech, "max relative residual " + sci(worst) + ", q=1 exact residual " + (sech ? "0" : "nonzero")};
}

Outcome ladders() {
  double worst = 0.0;
  for (double q : {1.5, 1.8, 2.5, 4.0})
    for (unsigned n = 0; n + 1.0 < q; ++n) {
      worst = std::max(worst, std::abs(mpt_ladder_projection(q, Direction::raise, n) - mpt_ladder_apply(q, Direction::raise, n).coefficient));
      worst = std::max(worst, std::abs(mpt_ladder_projection(q, Direction::lower, n + 1) -
                                       mpt_ladder_apply(q, Direction::lower, n + 1).coefficient));
    }
  bool annihilate = true;
  for (double q : {1.0, 1.5, 2.0, 2.5, 4.0})
    annihilate = annihilate && mpt_ladder_apply(q, Direction::lower, 0).coefficient == 0.0 &&
                 mpt_ladder_apply(q, Direction::raise, static_cast<unsigned>(2 * q)).coefficient == 0.0;
  return {worst < 1e-8 && annihilate, "max projection gap " + sci(worst) + ", end annihilation " + (annihilate ? "exact" : "fails")};
}

Outcome gegenbauer_bridge() {
  double identity = 0.0, prop = 0.0;
  for (double N : {1.0, 2.0, 2.5, 4.0})
    for (unsigned n = 0; n <= 6; ++n)
      for (int i = 0; i <= 20; ++i) identity = std::max(identity, std::abs(rhp_gegenbauer_identity_residual(N, n, -0.95 + 0.095 * i)));
  for (double q : {1.0, 1.5, 1.8, 2.5, 4.0})
    for (unsigned n = 0; n < q; ++n) prop = std::max(prop, mpt_gegenbauer_proportionality(q, n).relative_residual);
  return {identity < 1e-10 && prop < 1e-9, "identity " + sci(identity) + ", proportionality " + sci(prop)};
}

Outcome harmonic_limits() {
  const double e100 = hermite_limit_error(4, 100.0), e1000 = hermite_limit_error(4, 1000.0);
  double exponent_gap = 0.0;
  for (unsigned n = 2; n <= 6; ++n)
    exponent_gap = std::max(exponent_gap, std::abs(std::log10(hermite_limit_error(n, 1000.0) / hermite_limit_error(n, 100.0)) + 1.0));
  bool shrinking = true;
  for (unsigned n = 0; n <= 2; ++n) {
    const auto rows = harmonic_limit_check(n, {10.0, 100.0, 1000.0, 10000.0});
    for (std::size_t i = 1; i < rows.size(); ++i) shrinking = shrinking && rows[i].gap < rows[i - 1].gap;
  }
  return {exponent_gap < 0.1 && shrinking && e1000 < e100,
          "worst exponent offset " + sci(exponent_gap) + ", depth sweep " + (shrinking ? "monotone" : "not monotone")};
}

Outcome classical() {
  const MptSystem sys{1, 1, 1, 1};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  double brackets = 0.0;
  for (int count = 0; count < 100;) {
    const PhaseState z{U(rng), U(rng), 0.0};
    if (std::abs(hamiltonian(sys, z)) < 0.05) continue;
    brackets = std::max(brackets, so21_bracket_check(sys, z).max_relative());
    ++count;
  }
  const double eps = 0.5, T = 2 * std::numbers::pi / energy_frequency(sys, eps);
  const auto path = integrate_trajectory(sys, closed_form_trajectory(sys, eps, 0.4, 0.0), T);
  double dev = 0.0;
  for (const auto& z : path) dev = std::max(dev, std::abs(closed_form_trajectory(sys, eps, 0.4, z.t).xi - z.xi));
  double period = 0.0;
  for (double e : {0.1, 0.5, 0.9}) {
    const double Te = 2 * std::numbers::pi / energy_frequency(sys, e);
    period = std::max(period, std::abs(measured_period(sys, e) - Te) / Te);
  }
  return {brackets < 1e-6 && dev < 1e-8 && period < 1e-6,
          "brackets " + sci(brackets) + ", RK4 deviation " + sci(dev) + ", period " + sci(period)};
}

Outcome group_law() {
  RhoParams p;
  p.mass = 1.3;
  p.light_speed = 0.9;
  p.frequency = 1.1;
  p.hbar = 0.7;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> S(-0.1, 0.1), W(-0.8, 0.8);
  auto gap = [](const GroupElement& a, const GroupElement& b) {
    return std::max({std::abs(a.tau - b.tau), std::abs(a.y - b.y), std::abs(a.pi - b.pi), std::abs(a.phase - b.phase)});
  };
  double ident = 0.0, assoc = 0.0;
  for (int i = 0; i < 200; ++i) {
    const GroupElement a{S(rng), S(rng), S(rng), S(rng)}, b{S(rng), S(rng), S(rng), S(rng)}, c{S(rng), S(rng), S(rng), S(rng)};
    ident = std::max({ident, gap(compose_unwrapped(a, {}, p), a), gap(compose_unwrapped({}, a, p), a)});
    assoc = std::max(assoc, gap(compose_unwrapped(compose_unwrapped(a, b, p), c, p), compose_unwrapped(a, compose_unwrapped(b, c, p), p)));
  }
  double comm = 0.0;
  for (int i = 0; i < 20; ++i) {
    const GroupElement g{0.5 * W(rng), W(rng), W(rng), W(rng)};
    for (Generator a : kGenerators)
      for (Generator b : kGenerators) comm = std::max(comm, commutator_residual(a, b, g, p));
  }
  double ratio = 0.0;
  const GroupElement at{0.1, 0.2, 0.3, 0.0};
  for (auto [limit, sweep] : {std::pair{ContractionLimit::free_particle, std::vector<double>{1e-1, 1e-2, 1e-3}},
                              std::pair{ContractionLimit::nonrelativistic, std::vector<double>{1e1, 1e2, 1e3}}}) {
    const auto rows = contraction_check(limit, sweep, at);
    for (std::size_t i = 1; i < rows.size(); ++i) ratio = std::max(ratio, rows[i].residual / rows[i - 1].residual);
  }
  return {ident < 1e-12 && assoc < 1e-9 && comm < 1e-5 && ratio <= 0.1,
          "identity " + sci(ident) + ", associativity " + sci(assoc) + ", commutators " + sci(comm) + ", contraction ratio " + sci(ratio)};
}

Outcome rho_model() {
  double norms = 0.0, kg = 0.0, adjoint = 0.0;
  for (double N : {2.0, 2.5, 3.0}) {
    const RhoParams p = RhoParams::with_index(N);
    for (unsigned n = 0; n <= 3; ++n) {
      const RhoCovariantWavefunction f(p, n);
      const RhoMinimalWavefunction g(p, n);
      norms = std::max(norms, std::abs(rho_inner_product_covariant([&](double y, double t) { return f(y, t); },
                                                                   [&](double y, double t) { return f(y, t); }, p) - 1.0));
      norms = std::max(norms, std::abs(rho_inner_product_minimal([&](double y) { return g(y); }, [&](double y) { return g(y); }, p) - 1.0));
      double peak = 0.0, res = 0.0;
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
          const double y = -2.0 + 0.5 * i, tau = p.period() * j / 9.0;
          peak = std::max(peak, std::abs(f(y, tau)));
          res = std::max(res, std::abs(kg_residual(p, n, y, tau)));
        }
      kg = std::max(kg, res / peak);
    }
    for (unsigned n = 0; n <= 4; ++n)
      for (unsigned m = 0; m <= 4; ++m) {
        const RhoMinimalWavefunction a(p, n), b(p, m);
        const double lhs = rho_inner_product_minimal(
            [&](double y) { return apply_minimal_ladder(p, Direction::raise, n, [&](double z) { return a(z); }, y); },
            [&](double y) { return b(y); }, p);
        const double rhs = rho_inner_product_minimal(
            [&](double y) { return a(y); },
            [&](double y) { return apply_minimal_ladder(p, Direction::lower, m, [&](double z) { return b(z); }, y); }, p);
        adjoint = std::max(adjoint, std::abs(lhs - rhs));
      }
  }
  return {norms < 1e-8 && kg < 1e-6 && adjoint < 1e-8,
          "norms " + sci(norms) + ", Klein-Gordon " + sci(kg) + ", adjointness " + sci(adjoint)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"relativistic Hermite table exactness", table_exactness},
      {"Rodrigues cross-check", rodrigues},
      {"exact ODE certification", ode},
      {"Poschl-Teller orthonormality and n = q divergence", orthonormality},
      {"spectrum and normalizable census", spectrum_check},
      {"Schrodinger residual", schrodinger},
      {"ladder algebra", ladders},
      {"Gegenbauer bridge", gegenbauer_bridge},
      {"harmonic limits", harmonic_limits},
      {"classical layer", classical},
      {"group law", group_law},
      {"relativistic oscillator model", rho_model},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
