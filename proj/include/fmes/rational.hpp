#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fmes {

using Integer = mpz_class;
using Rational = mpq_class;

// Renders as "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);

// Exact Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);

std::uint64_t hash_value(const Rational& q);

inline Rational rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace fmes
