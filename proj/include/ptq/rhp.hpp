#pragma once

#include "ptq/polynomial.hpp"
#include "ptq/rational.hpp"

namespace ptq {

// Relativistic Hermite polynomials H_n^N(zeta), any real N != 0 (negative N
// is the Bargmann index -q of the Poschl-Teller well). Built with
//   P_0 = 1,  P_{k+1} = (1 + zeta^2/N) P_k' - (2(N+k)/N) zeta P_k,
//   H_n^N = (-1)^n P_n.
// Exact when N is rational; the double overload is the fallback for
// irrational N.
ExactPolynomial rhp_polynomial(const Rational& N, unsigned n);
FloatPolynomial rhp_polynomial(double N, unsigned n);

// Literal Rodrigues formula: n-fold product-rule differentiation of
// (1 + zeta^2/N)^(-N) kept as a sum of zeta^a (1 + zeta^2/N)^(-N-j) terms,
// then multiplied back by (-1)^n (1 + zeta^2/N)^(N+n). Independent check of
// rhp_polynomial; n <= 8.
ExactPolynomial rhp_rodrigues_oracle(const Rational& N, unsigned n);
inline constexpr unsigned kRodriguesOracleMaxDegree = 8;

// (1 + z^2/N) H'' - (2/N)(N+n-1) z H' + (n/N)(2N+n-1) H as an exact polynomial.
// Identically zero for every valid (N, n).
ExactPolynomial rhp_ode_residual_polynomial(const Rational& N, unsigned n);
double rhp_ode_residual(const Rational& N, unsigned n, double zeta);
double rhp_ode_residual(double N, unsigned n, double zeta);

// Physicists' Hermite polynomial, H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}.
ExactPolynomial hermite_polynomial(unsigned n);

// Max absolute coefficient difference between H_n^N and H_n.
Rational hermite_limit_error(unsigned n, const Rational& N);
double hermite_limit_error(unsigned n, double N);

}  // namespace ptq
