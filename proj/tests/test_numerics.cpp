#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptq/finite_difference.hpp"
#include "ptq/polynomial.hpp"
#include "ptq/quadrature.hpp"
#include "ptq/rational.hpp"

#include <cmath>
#include <numbers>

using namespace ptq;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == make_rational(7));
  CHECK(parse_rational("-9/5") == make_rational(-9, 5));
  CHECK(parse_rational("1.8") == make_rational(9, 5));
  CHECK(parse_rational("-0.25") == make_rational(-1, 4));
  CHECK(parse_rational("2e-3") == make_rational(1, 500));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
  const ExactPolynomial p{make_rational(1), make_rational(0), make_rational(2)};  // 1 + 2x^2
  const ExactPolynomial q{make_rational(-1), make_rational(1)};                   // x - 1
  CHECK((p * q).degree() == 3);
  CHECK((p * q)(make_rational(1)) == 0);
  CHECK(p.derivative() == ExactPolynomial{make_rational(0), make_rational(4)});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.scaled_argument(make_rational(3)) == ExactPolynomial{make_rational(1), make_rational(0), make_rational(18)});
  CHECK(p.evaluate(0.5) == doctest::Approx(1.5));
  CHECK(max_coefficient_difference(p, p.to_float()) == 0.0);
}

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 20, 50}) {
    const auto rule = gauss_legendre(n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    const int deg = 2 * n - 2;  // even, nonzero integral
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) integral += rule.weights[i] * std::pow(rule.nodes[i], deg);
    CHECK(integral == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("real-line and weighted quadrature") {
  CHECK(integrate_real_line([](double s) { return std::exp(-s * s); }) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(integrate_real_line([](double s) { return 1.0 / std::cosh(s); }) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-12));
  // (1-u^2) du/(1-u^2) over (-1,1) = 2.
  CHECK(integrate_weighted([](double u) { return 1.0 - u * u; }) == doctest::Approx(2.0).epsilon(1e-12));
  // 1 du/(1-u^2) diverges logarithmically.
  CHECK_THROWS_AS(integrate_weighted([](double) { return 1.0; }), QuadratureError);
  const auto c = integrate_real_line([](double s) { return std::complex<double>(std::exp(-s * s), 0.0); });
  CHECK(c.real() == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK(integrate_interval([](double x) { return x * x; }, 0.0, 3.0, 10) == doctest::Approx(9.0));
  QuadratureSpec bad;
  bad.node_count = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("mapped points keep 1-u^2 accurate") {
  const MappedPoint p = mapped_point(30.0);
  CHECK(p.one_minus_u2 > 0.0);
  CHECK(p.one_minus_u2 == doctest::Approx(1.0 / std::pow(std::cosh(30.0), 2)).epsilon(1e-12));
}

TEST_CASE("finite differences") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(std::abs(central_derivative(f, 0.7, 1) - std::cos(0.7)) < 1e-9);
  CHECK(std::abs(richardson_derivative(f, 0.7, 1, 1e-3) - std::cos(0.7)) < 1e-12);
  CHECK(std::abs(richardson_derivative(f, 0.7, 2, 1e-3) + std::sin(0.7)) < 1e-9);
  CHECK_THROWS_AS(central_derivative(f, 0.0, 3), std::invalid_argument);
}
