#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptq/errors.hpp"
#include "ptq/gegenbauer.hpp"

#include <cmath>

using namespace ptq;

TEST_CASE("Legendre special case lambda = 1/2") {
  const Rational h = make_rational(1, 2);
  CHECK(gegenbauer_poly(h, 2) == ExactPolynomial{make_rational(-1, 2), make_rational(0), make_rational(3, 2)});
  CHECK(gegenbauer_poly(h, 3) ==
        ExactPolynomial{make_rational(0), make_rational(-3, 2), make_rational(0), make_rational(5, 2)});
}

TEST_CASE("Chebyshev U special case lambda = 1") {
  // U_n(cos t) = sin((n+1)t)/sin t
  for (unsigned n = 0; n <= 6; ++n) {
    const FloatPolynomial C = gegenbauer_poly(1.0, n);
    const double t = 0.83;
    CHECK(C.evaluate(std::cos(t)) == doctest::Approx(std::sin((n + 1) * t) / std::sin(t)).epsilon(1e-12));
  }
}

TEST_CASE("C_n(1) = (2 lambda)_n / n!") {
  const Rational lambda = make_rational(7, 3);
  for (unsigned n = 0; n <= 6; ++n) {
    Rational expected(1);
    for (unsigned k = 0; k < n; ++k) expected = expected * (2 * lambda + k) / (k + 1);
    CHECK(gegenbauer_poly(lambda, n)(make_rational(1)) == expected);
  }
}

TEST_CASE("degenerate indices") {
  CHECK(is_degenerate_gegenbauer_index(0.0));
  CHECK(is_degenerate_gegenbauer_index(-1.5));
  CHECK_FALSE(is_degenerate_gegenbauer_index(-1.0 / 3.0));
  CHECK(is_degenerate_gegenbauer_index(make_rational(-2)));
  CHECK_THROWS_AS(gegenbauer_poly(-0.5, 2), std::domain_error);
}

TEST_CASE("relativistic Hermite bridge") {
  for (double N : {1.0, 2.0, 2.5, 4.0})
    for (unsigned n = 0; n <= 6; ++n)
      for (double u : {-0.9, -0.2, 0.0, 0.4, 0.95}) CHECK(std::abs(rhp_gegenbauer_identity_residual(N, n, u)) < 1e-10);
  CHECK_THROWS_AS(rhp_gegenbauer_identity_residual(-1.0, 1, 0.0), std::domain_error);
}

TEST_CASE("bound-state proportionality") {
  for (double q : {1.0, 1.5, 1.8, 2.5, 4.0})
    for (unsigned n = 0; n < q; ++n) CHECK(mpt_gegenbauer_proportionality(q, n).relative_residual < 1e-9);
  CHECK(mpt_gegenbauer_proportionality(1.5, 1).constant == doctest::Approx(std::sqrt(1.5)));
  CHECK_THROWS_AS(mpt_gegenbauer_proportionality(2.0, 2), NonNormalizableError);
}
