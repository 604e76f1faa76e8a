#pragma once

#include <string>

#include <mpfr.h>

#include "ncsurf/rational.hpp"

namespace ncsurf {

/// Fixed-precision binary floating point (MPFR) sized for a number of
/// decimal digits. Used only at the numeric boundary of the library.
class Decimal {
 public:
  explicit Decimal(int digits = 50);
  Decimal(const Rational& value, int digits);
  Decimal(long value, int digits);
  static Decimal parse(const std::string& text, int digits);
  static Decimal pi(int digits);

  Decimal(const Decimal& other);
  Decimal(Decimal&& other) noexcept;
  Decimal& operator=(const Decimal& other);
  Decimal& operator=(Decimal&& other) noexcept;
  ~Decimal();

  int digits() const { return digits_; }

  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  friend Decimal operator/(const Decimal& a, const Decimal& b);
  friend bool operator<(const Decimal& a, const Decimal& b);
  friend bool operator>(const Decimal& a, const Decimal& b) { return b < a; }

  Decimal pow(const Decimal& exponent) const;
  Decimal pow(long exponent) const;
  Decimal sqrt() const;
  Decimal abs() const;
  Decimal log() const;
  /// Gamma function, evaluated numerically.
  Decimal gamma() const;
  bool is_zero() const;

  double to_double() const;
  /// Scientific notation with `sig` significant digits, e.g. "1.2500e+03".
  std::string to_string(int sig) const;
  std::string to_string() const { return to_string(digits_); }

 private:
  static mpfr_prec_t bits_for(int digits);

  mpfr_t value_;
  int digits_;
};

}  // namespace ncsurf
