#pragma once

#include <span>
#include <string>
#include <vector>

#include "ncsurf/rational.hpp"

namespace ncsurf {

class SeriesError : public Error {
 public:
  using Error::Error;
};

/// Exact truncated power series in z, optionally polynomial in a second
/// variable u. Coefficients of z^n for n <= order() are retained; u
/// exponents are bounded by u_order() (0 for univariate series).
///
/// Operations between series require identical (order, u_order). The u
/// bound is a safety cap: a product that would create a nonzero term above
/// it throws instead of dropping the term.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order, int u_order = 0);

  static TruncatedSeries constant(int order, const Rational& c, int u_order = 0);
  static TruncatedSeries monomial(int order, int u_order, int z_exp, int u_exp,
                                  const Rational& c = 1);
  static TruncatedSeries z(int order, int u_order = 0) { return monomial(order, u_order, 1, 0); }
  static TruncatedSeries u(int order, int u_order) { return monomial(order, u_order, 0, 1); }
  static TruncatedSeries from_coefficients(int order, std::span<const Rational> coeffs);

  int order() const { return order_; }
  int u_order() const { return u_order_; }
  bool is_univariate() const { return u_order_ == 0; }

  /// Coefficient of z^n u^m; throws if n > order(). Exponents above the u cap
  /// or negative read as zero.
  const Rational& coeff(int n, int m = 0) const;
  void set_coeff(int n, int m, const Rational& value);

  /// Coefficients of z^0..z^order after setting u = 1.
  std::vector<Rational> at_u_one() const;
  TruncatedSeries specialize_u_one() const;

  bool is_zero() const;
  /// True when the z^0 coefficient is a constant (no u dependence).
  bool has_constant_leading() const;

  TruncatedSeries truncated(int new_order) const;
  /// Multiplies by z^k. Negative k requires the low coefficients to vanish.
  TruncatedSeries shift_z(int k) const;
  /// Multiplies by u^k. Negative k requires divisibility by u^{-k}.
  TruncatedSeries shift_u(int k) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  int stride() const { return u_order_ + 1; }
  Rational& at(int n, int m) { return coeffs_[static_cast<std::size_t>(n * stride() + m)]; }
  const Rational& at(int n, int m) const {
    return coeffs_[static_cast<std::size_t>(n * stride() + m)];
  }
  void require_compatible(const TruncatedSeries& other, const char* op) const;

  int order_ = 0;
  int u_order_ = 0;
  std::vector<Rational> coeffs_ = std::vector<Rational>(1);
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, int k);

/// Sum of a^k over k >= 0, i.e. 1/(1-a); a must have zero constant term.
TruncatedSeries seq(const TruncatedSeries& a);
/// z d/dz: the coefficient of z^n is multiplied by n.
TruncatedSeries point(const TruncatedSeries& a);
/// Square root with constant term +1; the input's constant term must be 1.
TruncatedSeries sqrt(const TruncatedSeries& a);
/// Multiplicative inverse; the constant term must be a nonzero constant.
TruncatedSeries invert(const TruncatedSeries& a);
Rational coeff(const TruncatedSeries& a, int n, int m = 0);

}  // namespace ncsurf
