#pragma once

#include <gmpxx.h>
#include <string>

namespace cps {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" (base 10, no whitespace). Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace cps
