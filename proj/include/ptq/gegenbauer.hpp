#pragma once

#include "ptq/polynomial.hpp"
#include "ptq/rational.hpp"

namespace ptq {

// lambda in {0, -1/2, -1, -3/2, ...}: the three-term recurrence degenerates
// there and gegenbauer_poly refuses to evaluate.
bool is_degenerate_gegenbauer_index(double lambda);
bool is_degenerate_gegenbauer_index(const Rational& lambda);

// C_0 = 1, C_1 = 2 lambda u, n C_n = 2u(n + lambda - 1) C_{n-1} - (n + 2 lambda - 2) C_{n-2}.
ExactPolynomial gegenbauer_poly(const Rational& lambda, unsigned n);
FloatPolynomial gegenbauer_poly(double lambda, unsigned n);

// H_n^N(u sqrt N) - n!/N^{n/2} (1+u^2)^{n/2} C_n^N(u / sqrt(1+u^2)), N > 0.
double rhp_gegenbauer_identity_residual(double N, unsigned n, double u);

struct ProportionalityFit {
  double constant = 0.0;           // c in H_n^{-q}(sqrt(q) u) ~ c C_n^{q-n+1/2}(u)
  double max_residual = 0.0;       // max |H - c C| over the grid
  double relative_residual = 0.0;  // max_residual / max |c C|
};

inline constexpr int kProportionalityGridPoints = 41;
inline constexpr double kProportionalityGridHalfWidth = 0.9;

// Least-squares fit of the single constant over 41 equally spaced points of
// [-0.9, 0.9]. Throws NonNormalizableError for n >= q.
ProportionalityFit mpt_gegenbauer_proportionality(double q, unsigned n);

}  // namespace ptq
