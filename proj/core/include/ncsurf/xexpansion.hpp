#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>

#include "ncsurf/rational.hpp"
#include "ncsurf/series.hpp"

namespace ncsurf {

/// Laurent expansion in X = sqrt(1 - 4z) around z = 1/4.
///
/// Coefficients of X^k are known for k < precision(); an exact expansion
/// (finite support, nothing dropped) has precision() == kExact.
class XExpansion {
 public:
  static constexpr int kExact = INT_MAX;

  XExpansion() = default;
  static XExpansion monomial(int power, const Rational& c = 1);
  static XExpansion constant(const Rational& c) { return monomial(0, c); }
  /// z = (1 - X^2)/4, exact.
  static XExpansion z();
  static XExpansion from_coefficients(const std::map<int, Rational>& coeffs, int precision);

  int precision() const { return precision_; }
  bool is_exact() const { return precision_ == kExact; }
  Rational coeff(int k) const;
  const std::map<int, Rational>& terms() const { return coeffs_; }

  /// Lowest power with a nonzero coefficient, if one is known.
  std::optional<int> leading_power() const;
  Rational leading_coeff() const;

  XExpansion truncated(int precision) const;
  /// Multiplicative inverse, known up to (but excluding) X^target where the
  /// input precision allows it.
  XExpansion inverse(int target) const;
  XExpansion pow(int k, int target = kExact) const;

  XExpansion& operator+=(const XExpansion& other);
  XExpansion& operator-=(const XExpansion& other);
  friend XExpansion operator+(XExpansion a, const XExpansion& b) { return a += b; }
  friend XExpansion operator-(XExpansion a, const XExpansion& b) { return a -= b; }
  friend XExpansion operator*(const XExpansion& a, const XExpansion& b);
  friend XExpansion operator*(XExpansion a, const Rational& c);
  friend bool operator==(const XExpansion& a, const XExpansion& b) = default;

  /// Substitutes X = sqrt(1 - 4z) back; only defined for exact expansions.
  TruncatedSeries to_series(int order) const;

  std::string to_string() const;

 private:
  void set(int k, const Rational& c);
  Rational coeff_or_zero(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  void drop_unknown();

  std::map<int, Rational> coeffs_;
  int precision_ = kExact;
};

/// Finite sum of terms c * z^j * X^k with j, k of any sign: the shape of
/// every closed form for the tree families at u = 1.
class ClosedForm {
 public:
  ClosedForm() = default;
  static ClosedForm term(int z_pow, int x_pow, const Rational& c);

  ClosedForm& add(int z_pow, int x_pow, const Rational& c);
  ClosedForm& operator+=(const ClosedForm& other);
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

  /// Taylor coefficients at z = 0 of the function, through z^order. Throws if
  /// negative powers of z survive.
  TruncatedSeries to_series(int order) const;
  /// Expansion at z = 1/4 through X^(precision - 1).
  XExpansion to_x(int precision) const;

  /// x power -> (z power -> coefficient); no zero coefficients stored.
  const std::map<int, std::map<int, Rational>>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  std::map<int, std::map<int, Rational>> terms_;
};

}  // namespace ncsurf
