#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptq/rho.hpp"

#include <cmath>
#include <numbers>

using namespace ptq;

TEST_CASE("parameters") {
  const RhoParams p = RhoParams::with_index(2.5);
  CHECK(p.index() == 2.5);
  CHECK(p.beta(0.0) == 1.0);
  CHECK(p.period() == doctest::Approx(2.0 * std::numbers::pi));
  RhoParams bad;
  bad.light_speed = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK_THROWS_AS(rho_state(RhoParams::with_index(0.4), 0), std::domain_error);
}

TEST_CASE("energies are hbar omega (N + n)") {
  const RhoParams p = RhoParams::with_index(3.0);
  for (unsigned n = 0; n <= 5; ++n) CHECK(rho_state(p, n).energy == doctest::Approx(3.0 + n));
}

TEST_CASE("both realizations are unit normalized") {
  for (double N : {2.0, 2.5, 3.0}) {
    const RhoParams p = RhoParams::with_index(N);
    for (unsigned n = 0; n <= 3; ++n) {
      const RhoCovariantWavefunction f(p, n);
      const RhoMinimalWavefunction g(p, n);
      const auto cov = rho_inner_product_covariant([&](double y, double t) { return f(y, t); },
                                                   [&](double y, double t) { return f(y, t); }, p);
      const double mini =
          rho_inner_product_minimal([&](double y) { return g(y); }, [&](double y) { return g(y); }, p);
      CHECK(std::abs(cov - 1.0) < 1e-8);
      CHECK(std::abs(mini - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("covariant wavefunction phase") {
  const RhoParams p = RhoParams::with_index(2.0);
  const RhoCovariantWavefunction f(p, 1);
  const double y = 0.4, tau = 0.3;
  CHECK(std::abs(f(y, tau) - std::polar(1.0, -3.0 * tau) * f.amplitude(y)) < 1e-14);
  CHECK(std::abs(f.reduced(y, tau) - std::polar(1.0, -1.0 * tau) * f.amplitude(y)) < 1e-14);
}

TEST_CASE("Klein-Gordon residual is small on the solution and not on a non-solution") {
  const RhoParams p = RhoParams::with_index(2.5);
  for (unsigned n = 0; n <= 3; ++n)
    for (double y : {-1.5, 0.0, 0.8})
      for (double tau : {0.0, 1.1}) CHECK(std::abs(kg_residual(p, n, y, tau)) < 1e-6);
  // A solution of the wrong index fails.
  const RhoCovariantWavefunction other(RhoParams::with_index(3.0), 0);
  const auto res = kg_residual(p, [&](double y, double t) { return other(y, t); }, 0.3, 0.2);
  CHECK(std::abs(res) > 1e-2);
}

TEST_CASE("ladder coefficients") {
  const RhoParams p = RhoParams::with_index(1.5);
  CHECK(rho_ladder_apply(p, Realization::covariant, Direction::lower, 0).coefficient == 0.0);
  CHECK(rho_ladder_apply(p, Realization::minimal, Direction::lower, 2).coefficient ==
        doctest::Approx(std::sqrt(8.0 / 3.0)));
  CHECK(rho_ladder_apply(p, Realization::minimal, Direction::raise, 1).target_n == 2);
  CHECK(rho_ladder_apply(RhoParams::with_index(2.0), Realization::covariant, Direction::raise, 0).coefficient ==
        doctest::Approx(1.0));
}

TEST_CASE("differential ladders reproduce the coefficients") {
  const RhoParams p = RhoParams::with_index(2.5);
  for (unsigned n = 0; n <= 3; ++n) {
    const auto act = rho_ladder_apply(p, Realization::minimal, Direction::raise, n);
    const RhoMinimalWavefunction src(p, n), dst(p, n + 1);
    for (double y : {-0.7, 0.2, 1.3}) {
      const double got = apply_minimal_ladder(p, Direction::raise, n, [&](double z) { return src(z); }, y);
      CHECK(got == doctest::Approx(act.coefficient * dst(y)).epsilon(1e-8));
    }
  }
}

TEST_CASE("minimal ladders are mutually adjoint") {
  const RhoParams p = RhoParams::with_index(2.0);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      const RhoMinimalWavefunction f(p, n), g(p, m);
      const double lhs = rho_inner_product_minimal(
          [&](double y) { return apply_minimal_ladder(p, Direction::raise, n, [&](double z) { return f(z); }, y); },
          [&](double y) { return g(y); }, p);
      const double rhs = rho_inner_product_minimal(
          [&](double y) { return f(y); },
          [&](double y) { return apply_minimal_ladder(p, Direction::lower, m, [&](double z) { return g(z); }, y); }, p);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}
