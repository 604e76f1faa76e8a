#include "ncsurf/series.hpp"

#include <algorithm>
#include <sstream>

namespace ncsurf {

namespace {

// Largest u exponent carrying a nonzero coefficient in row n, or -1.
std::vector<int> row_degrees(const TruncatedSeries& s) {
  std::vector<int> deg(static_cast<std::size_t>(s.order() + 1), -1);
  for (int n = 0; n <= s.order(); ++n) {
    for (int m = s.u_order(); m >= 0; --m) {
      if (s.coeff(n, m) != 0) {
        deg[static_cast<std::size_t>(n)] = m;
        break;
      }
    }
  }
  return deg;
}

// Scales every coefficient by the lcm of the denominators.
struct IntegerImage {
  std::vector<BigInt> values;
  BigInt scale = 1;
};

IntegerImage integerize(const TruncatedSeries& s) {
  IntegerImage img;
  for (int n = 0; n <= s.order(); ++n)
    for (int m = 0; m <= s.u_order(); ++m) {
      const Rational& c = s.coeff(n, m);
      if (c != 0) mpz_lcm(img.scale.get_mpz_t(), img.scale.get_mpz_t(), c.get_den_mpz_t());
    }
  img.values.resize(static_cast<std::size_t>((s.order() + 1) * (s.u_order() + 1)));
  std::size_t idx = 0;
  for (int n = 0; n <= s.order(); ++n)
    for (int m = 0; m <= s.u_order(); ++m, ++idx) {
      const Rational& c = s.coeff(n, m);
      if (c == 0) continue;
      img.values[idx] = img.scale / c.get_den() * c.get_num();
    }
  return img;
}

[[noreturn]] void u_overflow(int u_order) {
  throw SeriesError("u-order overflow: product exceeds u cap " + std::to_string(u_order));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order, int u_order) : order_(order), u_order_(u_order) {
  if (order < 0 || u_order < 0) throw SeriesError("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>((order + 1) * (u_order + 1)), Rational(0));
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c, int u_order) {
  TruncatedSeries s(order, u_order);
  s.at(0, 0) = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int u_order, int z_exp, int u_exp,
                                          const Rational& c) {
  TruncatedSeries s(order, u_order);
  if (z_exp < 0 || u_exp < 0) throw SeriesError("negative monomial exponent");
  if (u_exp > u_order) throw SeriesError("monomial exceeds u cap");
  if (z_exp <= order) s.at(z_exp, u_exp) = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(int order, std::span<const Rational> coeffs) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order && n < static_cast<int>(coeffs.size()); ++n)
    s.at(n, 0) = coeffs[static_cast<std::size_t>(n)];
  return s;
}

const Rational& TruncatedSeries::coeff(int n, int m) const {
  static const Rational zero(0);
  if (n > order_) {
    throw SeriesError("coefficient z^" + std::to_string(n) + " beyond truncation order " +
                      std::to_string(order_));
  }
  if (n < 0 || m < 0 || m > u_order_) return zero;
  return at(n, m);
}

void TruncatedSeries::set_coeff(int n, int m, const Rational& value) {
  if (n < 0 || n > order_ || m < 0 || m > u_order_) throw SeriesError("set_coeff out of range");
  at(n, m) = value;
}

std::vector<Rational> TruncatedSeries::at_u_one() const {
  std::vector<Rational> out(static_cast<std::size_t>(order_ + 1));
  for (int n = 0; n <= order_; ++n)
    for (int m = 0; m <= u_order_; ++m) out[static_cast<std::size_t>(n)] += at(n, m);
  return out;
}

TruncatedSeries TruncatedSeries::specialize_u_one() const {
  auto c = at_u_one();
  return from_coefficients(order_, c);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool TruncatedSeries::has_constant_leading() const {
  for (int m = 1; m <= u_order_; ++m)
    if (at(0, m) != 0) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_) throw SeriesError("cannot raise truncation order");
  TruncatedSeries s(new_order, u_order_);
  for (int n = 0; n <= new_order; ++n)
    for (int m = 0; m <= u_order_; ++m) s.at(n, m) = at(n, m);
  return s;
}

TruncatedSeries TruncatedSeries::shift_z(int k) const {
  TruncatedSeries s(order_, u_order_);
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= u_order_; ++m) {
      const Rational& c = at(n, m);
      if (c == 0) continue;
      int target = n + k;
      if (target < 0) throw SeriesError("shift_z: series not divisible by z^" + std::to_string(-k));
      if (target <= order_) s.at(target, m) = c;
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::shift_u(int k) const {
  TruncatedSeries s(order_, u_order_);
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= u_order_; ++m) {
      const Rational& c = at(n, m);
      if (c == 0) continue;
      int target = m + k;
      if (target < 0) throw SeriesError("shift_u: negative u exponent");
      if (target > u_order_) u_overflow(u_order_);
      s.at(n, target) = c;
    }
  }
  return s;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other, const char* op) const {
  if (order_ != other.order_ || u_order_ != other.u_order_) {
    std::ostringstream msg;
    msg << op << ": order mismatch (" << order_ << "," << u_order_ << ") vs (" << other.order_
        << "," << other.u_order_ << ")";
    throw SeriesError(msg.str());
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "mul");
  const int N = a.order_;
  const int M = a.u_order_;
  const auto da = row_degrees(a);
  const auto db = row_degrees(b);
  const IntegerImage ia = integerize(a);
  const IntegerImage ib = integerize(b);
  const int stride = M + 1;

  std::vector<BigInt> acc(static_cast<std::size_t>((N + 1) * stride));
  for (int i = 0; i <= N; ++i) {
    const int pa = da[static_cast<std::size_t>(i)];
    if (pa < 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      const int pb = db[static_cast<std::size_t>(j)];
      if (pb < 0) continue;
      if (pa + pb > M) u_overflow(M);
      for (int p = 0; p <= pa; ++p) {
        const BigInt& x = ia.values[static_cast<std::size_t>(i * stride + p)];
        if (x == 0) continue;
        for (int q = 0; q <= pb; ++q) {
          const BigInt& y = ib.values[static_cast<std::size_t>(j * stride + q)];
          if (y == 0) continue;
          BigInt& target = acc[static_cast<std::size_t>((i + j) * stride + p + q)];
          mpz_addmul(target.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
      }
    }
  }

  TruncatedSeries out(N, M);
  const BigInt scale = ia.scale * ib.scale;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    Rational r(acc[k], scale);
    r.canonicalize();
    out.coeffs_[k] = std::move(r);
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.u_order_ == b.u_order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= u_order_; ++m) {
      const Rational& c = at(n, m);
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      out << ncsurf::to_string(c);
      if (n > 0) out << "*z^" << n;
      if (m > 0) out << "*u^" << m;
    }
  }
  if (first) out << "0";
  out << " + O(z^" << order_ + 1 << ")";
  return out.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries power(const TruncatedSeries& a, int k) {
  if (k < 0) return power(invert(a), -k);
  TruncatedSeries result = TruncatedSeries::constant(a.order(), 1, a.u_order());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

TruncatedSeries seq(const TruncatedSeries& a) {
  for (int m = 0; m <= a.u_order(); ++m) {
    if (a.coeff(0, m) != 0) throw SeriesError("seq: argument has a nonzero constant term");
  }
  return invert(TruncatedSeries::constant(a.order(), 1, a.u_order()) - a);
}

TruncatedSeries point(const TruncatedSeries& a) {
  TruncatedSeries out(a.order(), a.u_order());
  for (int n = 1; n <= a.order(); ++n)
    for (int m = 0; m <= a.u_order(); ++m) {
      const Rational& c = a.coeff(n, m);
      if (c != 0) out.set_coeff(n, m, c * n);
    }
  return out;
}

namespace {

// target += sign * (row i of a) x (row j of b), as polynomials in u.
void row_product_accumulate(std::vector<Rational>& target, const TruncatedSeries& a, int i,
                            const TruncatedSeries& b, int j, const std::vector<int>& da,
                            const std::vector<int>& db) {
  const int pa = da[static_cast<std::size_t>(i)];
  const int pb = db[static_cast<std::size_t>(j)];
  if (pa < 0 || pb < 0) return;
  if (pa + pb > a.u_order()) u_overflow(a.u_order());
  for (int p = 0; p <= pa; ++p) {
    const Rational& x = a.coeff(i, p);
    if (x == 0) continue;
    for (int q = 0; q <= pb; ++q) {
      const Rational& y = b.coeff(j, q);
      if (y == 0) continue;
      target[static_cast<std::size_t>(p + q)] += x * y;
    }
  }
}

}  // namespace

TruncatedSeries invert(const TruncatedSeries& a) {
  if (!a.has_constant_leading() || a.coeff(0, 0) == 0) {
    throw SeriesError("invert: constant term must be a nonzero constant");
  }
  const int N = a.order();
  const int M = a.u_order();
  const Rational inv0 = 1 / a.coeff(0, 0);
  TruncatedSeries b(N, M);
  b.set_coeff(0, 0, inv0);
  const auto da = row_degrees(a);
  std::vector<int> db(static_cast<std::size_t>(N + 1), -1);
  db[0] = 0;
  std::vector<Rational> row(static_cast<std::size_t>(M + 1));
  for (int n = 1; n <= N; ++n) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (int k = 1; k <= n; ++k) row_product_accumulate(row, a, k, b, n - k, da, db);
    for (int m = M; m >= 0; --m) {
      Rational v = -row[static_cast<std::size_t>(m)] * inv0;
      if (v != 0) {
        if (db[static_cast<std::size_t>(n)] < 0) db[static_cast<std::size_t>(n)] = m;
        b.set_coeff(n, m, v);
      }
    }
  }
  return b;
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (!a.has_constant_leading() || a.coeff(0, 0) != 1) {
    throw SeriesError("sqrt: constant term must be exactly 1");
  }
  const int N = a.order();
  const int M = a.u_order();
  TruncatedSeries s(N, M);
  s.set_coeff(0, 0, 1);
  std::vector<int> ds(static_cast<std::size_t>(N + 1), -1);
  ds[0] = 0;
  std::vector<Rational> row(static_cast<std::size_t>(M + 1));
  for (int n = 1; n <= N; ++n) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (int k = 1; k < n; ++k) row_product_accumulate(row, s, k, s, n - k, ds, ds);
    for (int m = M; m >= 0; --m) {
      Rational v = (a.coeff(n, m) - row[static_cast<std::size_t>(m)]) / 2;
      if (v != 0) {
        if (ds[static_cast<std::size_t>(n)] < 0) ds[static_cast<std::size_t>(n)] = m;
        s.set_coeff(n, m, v);
      }
    }
  }
  return s;
}

Rational coeff(const TruncatedSeries& a, int n, int m) { return a.coeff(n, m); }

}  // namespace ncsurf
