#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptq/classical.hpp"
#include "ptq/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ptq;

namespace {
const MptSystem kSys{1.0, 1.0, 1.0, 1.0};
}

TEST_CASE("Hamiltonian and coordinates") {
  CHECK(hamiltonian(kSys, {0.0, 0.0, 0.0}) == -1.0);
  CHECK(hamiltonian(kSys, {1.0, 1.0, 0.0}) == 0.5);
  CHECK(xi_from_x(0.0, 2.0) == 0.0);
  CHECK(xi_from_x(1.0, 1.0) == doctest::Approx(std::sinh(1.0)));
  CHECK(x_from_xi(xi_from_x(-2.3, 0.5), 0.5) == doctest::Approx(-2.3).epsilon(1e-15));
  const PhaseState z{0.5, 0.2, 0.0};
  CHECK(momentum_from_velocity(kSys, z.xi, velocity(kSys, z)) == doctest::Approx(z.p));
}

TEST_CASE("frequency and turning points") {
  CHECK(energy_frequency(kSys, 0.5) == doctest::Approx(1.0));
  CHECK(turning_amplitude(kSys, 0.5) == doctest::Approx(1.0));
  // At the turning point the motion is at rest with H = -eps.
  CHECK(hamiltonian(kSys, {1.0, 0.0, 0.0}) == doctest::Approx(-0.5));
}

TEST_CASE("closed form solves Hamilton's equations") {
  const double eps = 0.3;
  for (double t : {0.0, 0.4, 2.1}) {
    const PhaseState z = closed_form_trajectory(kSys, eps, 0.2, t);
    CHECK(hamiltonian(kSys, z) == doctest::Approx(-eps).epsilon(1e-12));
    const double h = 1e-5;
    const double xi_dot =
        (closed_form_trajectory(kSys, eps, 0.2, t + h).xi - closed_form_trajectory(kSys, eps, 0.2, t - h).xi) / (2 * h);
    CHECK(xi_dot == doctest::Approx(velocity(kSys, z)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(closed_form_trajectory(kSys, 1.5, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(closed_form_trajectory(kSys, 0.5, 2.0, 0.0), std::domain_error);
}

TEST_CASE("RK4 against the closed form over one period") {
  const double eps = 0.5;
  const double T = 2 * std::numbers::pi / energy_frequency(kSys, eps);
  const PhaseState start = closed_form_trajectory(kSys, eps, -0.3, 0.0, -1);
  const auto path = integrate_trajectory(kSys, start, T);
  CHECK(path.back().t == doctest::Approx(T).epsilon(1e-15));
  double worst = 0.0;
  for (const auto& z : path) worst = std::max(worst, std::abs(closed_form_trajectory(kSys, eps, -0.3, z.t, -1).xi - z.xi));
  CHECK(worst < 1e-8);
  CHECK_THROWS_AS(integrate_trajectory(kSys, start, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("closed form from initial data") {
  const PhaseState a = closed_form_from_initial(kSys, 0.1, 0.4, 1.3);
  const PhaseState start{0.1, momentum_from_velocity(kSys, 0.1, 0.4), 0.0};
  const auto path = integrate_trajectory(kSys, start, 1.3);
  CHECK(a.xi == doctest::Approx(path.back().xi).epsilon(1e-9));
}

TEST_CASE("measured period") {
  for (double eps : {0.1, 0.5, 0.99}) {
    const double T = 2 * std::numbers::pi / energy_frequency(kSys, eps);
    CHECK(std::abs(measured_period(kSys, eps) - T) / T < 1e-6);
  }
}

TEST_CASE("Poisson bracket basics") {
  auto xi = [](const PhaseState& z) { return z.xi; };
  auto p = [](const PhaseState& z) { return z.p; };
  CHECK(poisson_bracket(xi, p, {0.3, -0.2, 0.0}) == doctest::Approx(1.0));
  auto H = [](const PhaseState& z) { return hamiltonian(kSys, z); };
  const PhaseState z{0.4, 0.7, 0.0};
  CHECK(poisson_bracket(xi, H, z, 1e-4, true) == doctest::Approx(velocity(kSys, z)).epsilon(1e-9));
}

TEST_CASE("SO(2,1) brackets on both energy signs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  int pos = 0, neg = 0;
  while (pos < 20 || neg < 20) {
    const PhaseState z{U(rng), U(rng), 0.0};
    const double H = hamiltonian(kSys, z);
    if (std::abs(H) < 0.05) continue;
    const So21Residuals r = so21_bracket_check(kSys, z);
    CHECK(r.primed == (H < 0));
    CHECK(r.max_relative() < 1e-6);
    const DiagonalGenerators d = diagonal_generators(kSys, H > 0 ? EnergySign::positive : EnergySign::negative, z);
    CHECK(d.max_relative() < 1e-6);
    (H > 0 ? pos : neg)++;
  }
}

TEST_CASE("generators") {
  const PhaseState z{0.2, 1.5, 0.0};
  REQUIRE(hamiltonian(kSys, z) > 0);
  const Generators g = so21_generators(kSys, z);
  CHECK_FALSE(g.primed);
  CHECK(g.E == doctest::Approx(2.0 * std::sqrt(hamiltonian(kSys, z))));
  CHECK(so21_generators(kSys, {0.0, 0.0, 0.0}).primed);
}

TEST_CASE("negative-energy diagonalization matches the continued positive one") {
  const PhaseState z{0.3, 0.2, 0.0};
  const auto d = diagonal_generators(kSys, EnergySign::negative, z);
  const auto abc = complex_abc(kSys, z);
  const std::complex<double> I(0.0, 1.0);
  CHECK(std::abs(d.values[2] - abc[1]) < 1e-14);
  CHECK(std::abs(d.values[1] - abc[2]) < 1e-14);
  CHECK(std::abs(d.values[0] + I * abc[0]) < 1e-14);
}

TEST_CASE("singular and mismatched points") {
  CHECK_THROWS_AS(so21_bracket_check(kSys, {0.0, std::sqrt(2.0), 0.0}), BranchError);
  CHECK_THROWS_AS(diagonal_generators(kSys, EnergySign::positive, {0.0, 0.0, 0.0}), BranchError);
  CHECK_THROWS_AS(diagonal_generators(kSys, EnergySign::negative, {1.0, 1.0, 0.0}), BranchError);
}

TEST_CASE("equilibrium stays put") {
  const auto path = integrate_trajectory(kSys, {0.0, 0.0, 0.0}, 3.0);
  CHECK(path.back().xi == 0.0);
  CHECK(path.back().p == 0.0);
}
