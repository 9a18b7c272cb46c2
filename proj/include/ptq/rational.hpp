#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptq {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) as long as every constructor path goes through make_rational.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Parses "7", "-9/5", "1.8", "-0.25", "2e-3". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

std::string to_string(const Rational& r);

}  // namespace ptq
