#include "ncsurf/rational.hpp"

namespace ncsurf {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw Error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt catalan(long n) {
  if (n < 0) throw Error("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("rational_pow: zero to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational r = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error("cannot parse rational '" + text + "'");
  }
  if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace ncsurf
