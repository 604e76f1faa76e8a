#include "ncsurf/xexpansion.hpp"

#include <algorithm>
#include <climits>
#include <vector>
#include <sstream>

namespace ncsurf {

namespace {

int sat_add(int a, int b) {
  if (a == XExpansion::kExact || b == XExpansion::kExact) return XExpansion::kExact;
  return a + b;
}

std::string power_label(const char* var, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string("*") + var;
  return std::string("*") + var + "^" + std::to_string(k);
}

}  // namespace

XExpansion XExpansion::monomial(int power, const Rational& c) {
  XExpansion e;
  e.set(power, c);
  return e;
}

XExpansion XExpansion::z() {
  XExpansion e;
  e.set(0, Rational(1, 4));
  e.set(2, Rational(-1, 4));
  return e;
}

XExpansion XExpansion::from_coefficients(const std::map<int, Rational>& coeffs, int precision) {
  XExpansion e;
  e.precision_ = precision;
  for (const auto& [k, c] : coeffs) e.set(k, c);
  e.drop_unknown();
  return e;
}

void XExpansion::set(int k, const Rational& c) {
  if (c == 0) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = c;
  }
}

void XExpansion::drop_unknown() {
  if (is_exact()) return;
  coeffs_.erase(coeffs_.lower_bound(precision_), coeffs_.end());
}

Rational XExpansion::coeff(int k) const {
  if (k >= precision_) {
    throw Error("X^" + std::to_string(k) + " lies beyond expansion precision " +
                std::to_string(precision_));
  }
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> XExpansion::leading_power() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

Rational XExpansion::leading_coeff() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.begin()->second;
}

XExpansion XExpansion::truncated(int precision) const {
  XExpansion e = *this;
  e.precision_ = std::min(precision_, precision);
  e.drop_unknown();
  return e;
}

XExpansion& XExpansion::operator+=(const XExpansion& other) {
  for (const auto& [k, c] : other.coeffs_) set(k, coeff_or_zero(k) + c);
  precision_ = std::min(precision_, other.precision_);
  drop_unknown();
  return *this;
}

XExpansion& XExpansion::operator-=(const XExpansion& other) {
  for (const auto& [k, c] : other.coeffs_) set(k, coeff_or_zero(k) - c);
  precision_ = std::min(precision_, other.precision_);
  drop_unknown();
  return *this;
}

XExpansion operator*(const XExpansion& a, const XExpansion& b) {
  if ((a.is_exact() && a.coeffs_.empty()) || (b.is_exact() && b.coeffs_.empty())) return {};
  const int la = a.coeffs_.empty() ? a.precision_ : a.coeffs_.begin()->first;
  const int lb = b.coeffs_.empty() ? b.precision_ : b.coeffs_.begin()->first;
  XExpansion out;
  out.precision_ = std::min(sat_add(a.precision_, lb), sat_add(b.precision_, la));
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) {
      if (!out.is_exact() && i + j >= out.precision_) break;
      out.coeffs_[i + j] += x * y;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

XExpansion operator*(XExpansion a, const Rational& c) {
  if (c == 0) {
    a.coeffs_.clear();
    return a;
  }
  for (auto& [k, v] : a.coeffs_) v *= c;
  return a;
}

XExpansion XExpansion::inverse(int target) const {
  if (coeffs_.empty()) throw Error("inverse of an expansion with no known nonzero term");
  const int l = coeffs_.begin()->first;
  const Rational inv0 = 1 / coeffs_.begin()->second;
  if (is_exact() && coeffs_.size() == 1) return monomial(-l, inv0).truncated(target);

  // Relative coefficients needed: j < count gives the X^(j - l) term.
  long count = LONG_MAX;
  if (target != kExact) count = static_cast<long>(target) + l;
  if (!is_exact()) count = std::min(count, static_cast<long>(precision_) - l);
  if (count == LONG_MAX) throw Error("inverse of a non-monomial needs a finite target precision");

  XExpansion out;
  out.precision_ = static_cast<int>(count - l);
  std::vector<Rational> rel(static_cast<std::size_t>(std::max<long>(count, 0)));
  for (long j = 0; j < count; ++j) {
    Rational acc = 0;
    if (j == 0) {
      acc = inv0;
    } else {
      for (long i = 1; i <= j; ++i) {
        auto it = coeffs_.find(static_cast<int>(l + i));
        if (it == coeffs_.end()) continue;
        acc -= it->second * rel[static_cast<std::size_t>(j - i)];
      }
      acc *= inv0;
    }
    rel[static_cast<std::size_t>(j)] = acc;
    out.set(static_cast<int>(j - l), acc);
  }
  return out;
}

XExpansion XExpansion::pow(int k, int target) const {
  if (k < 0) {
    if (coeffs_.empty()) throw Error("negative power of an expansion with no known nonzero term");
    const int l = coeffs_.begin()->first;
    const int inv_target = target == kExact ? kExact : target + (-k - 1) * l;
    return inverse(inv_target).pow(-k, target);
  }
  XExpansion result = constant(1);
  XExpansion base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result.truncated(target);
}

TruncatedSeries XExpansion::to_series(int order) const {
  if (!is_exact()) throw Error("to_series requires an exact X-expansion");
  TruncatedSeries s(order);
  for (const auto& [k, c] : coeffs_) {
    Rational half(k, 2);
    half.canonicalize();
    Rational b = 1;  // binom(k/2, n) * (-4)^n
    for (int n = 0; n <= order; ++n) {
      s.set_coeff(n, 0, s.coeff(n) + c * b);
      b *= (half - n) * Rational(-4) / (n + 1);
    }
  }
  return s;
}

std::string XExpansion::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << ncsurf::to_string(c) << power_label("X", k);
  }
  if (first) out << "0";
  if (!is_exact()) out << " + O(X^" << precision_ << ")";
  return out.str();
}

ClosedForm ClosedForm::term(int z_pow, int x_pow, const Rational& c) {
  ClosedForm f;
  f.add(z_pow, x_pow, c);
  return f;
}

ClosedForm& ClosedForm::add(int z_pow, int x_pow, const Rational& c) {
  auto& row = terms_[x_pow];
  row[z_pow] += c;
  if (row[z_pow] == 0) row.erase(z_pow);
  if (row.empty()) terms_.erase(x_pow);
  return *this;
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& other) {
  for (const auto& [k, row] : other.terms_)
    for (const auto& [j, c] : row) add(j, k, c);
  return *this;
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out = a;
  for (const auto& [k, row] : b.terms_)
    for (const auto& [j, c] : row) out.add(j, k, -c);
  return out;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out;
  for (const auto& [k1, row1] : a.terms_)
    for (const auto& [j1, c1] : row1)
      for (const auto& [k2, row2] : b.terms_)
        for (const auto& [j2, c2] : row2) out.add(j1 + j2, k1 + k2, c1 * c2);
  return out;
}

TruncatedSeries ClosedForm::to_series(int order) const {
  // z exponent -> coefficient, including negative exponents that must cancel.
  std::map<int, Rational> acc;
  for (const auto& [k, row] : terms_) {
    Rational half(k, 2);
    half.canonicalize();
    for (const auto& [j, c] : row) {
      Rational b = 1;
      for (int m = 0; j + m <= order; ++m) {
        acc[j + m] += c * b;
        b *= (half - m) * Rational(-4) / (m + 1);
      }
    }
  }
  TruncatedSeries s(order);
  for (const auto& [n, c] : acc) {
    if (c == 0) continue;
    if (n < 0) {
      throw SeriesError("closed form has a pole at z = 0 (z^" + std::to_string(n) + " term)");
    }
    s.set_coeff(n, 0, c);
  }
  return s;
}

XExpansion ClosedForm::to_x(int precision) const {
  XExpansion total;
  const XExpansion z = XExpansion::z();
  for (const auto& [k, row] : terms_) {
    for (const auto& [j, c] : row) {
      const int inner_target = precision == XExpansion::kExact ? precision : precision - k;
      total += z.pow(j, inner_target) * XExpansion::monomial(k, c);
    }
  }
  return total.truncated(precision);
}

std::string ClosedForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, row] : terms_) {
    for (const auto& [j, c] : row) {
      if (!first) out << " + ";
      first = false;
      out << ncsurf::to_string(c) << power_label("z", j) << power_label("X", k);
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace ncsurf
