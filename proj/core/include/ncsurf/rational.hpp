#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ncsurf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// n-th Catalan number, binom(2n, n) / (n + 1).
BigInt catalan(long n);

/// Generalized binomial coefficient binom(a, k) for rational a and k >= 0.
Rational binomial(const Rational& a, long k);

Rational rational_pow(const Rational& base, long exponent);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Parses "p", "p/q" or "-p/q".
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

}  // namespace ncsurf
