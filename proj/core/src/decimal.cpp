#include "ncsurf/decimal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ncsurf {

mpfr_prec_t Decimal::bits_for(int digits) {
  if (digits < 1) throw Error("decimal precision must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Decimal::Decimal(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_zero(value_, 1);
}

Decimal::Decimal(const Rational& value, int digits) : Decimal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Decimal::Decimal(long value, int digits) : Decimal(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Decimal Decimal::parse(const std::string& text, int digits) {
  Decimal d(digits);
  char* end = nullptr;
  if (text.empty() || mpfr_strtofr(d.value_, text.c_str(), &end, 10, MPFR_RNDN), end == nullptr || *end != '\0') {
    throw Error("not a decimal number: " + text);
  }
  return d;
}

Decimal Decimal::pi(int digits) {
  Decimal d(digits);
  mpfr_const_pi(d.value_, MPFR_RNDN);
  return d;
}

Decimal::Decimal(const Decimal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Decimal::Decimal(Decimal&& other) noexcept : Decimal(other) {}

Decimal& Decimal::operator=(const Decimal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Decimal& Decimal::operator=(Decimal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Decimal::~Decimal() { mpfr_clear(value_); }

namespace {

int common_digits(const Decimal& a, const Decimal& b) { return std::max(a.digits(), b.digits()); }

}  // namespace

#define NCSURF_BINARY_OP(op, fn)                                  \
  Decimal operator op(const Decimal& a, const Decimal& b) {       \
    Decimal r(common_digits(a, b));                               \
    fn(r.value_, a.value_, b.value_, MPFR_RNDN);                  \
    return r;                                                     \
  }
NCSURF_BINARY_OP(+, mpfr_add)
NCSURF_BINARY_OP(-, mpfr_sub)
NCSURF_BINARY_OP(*, mpfr_mul)
NCSURF_BINARY_OP(/, mpfr_div)
#undef NCSURF_BINARY_OP

bool operator<(const Decimal& a, const Decimal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

Decimal Decimal::pow(const Decimal& exponent) const {
  Decimal r(std::max(digits_, exponent.digits_));
  mpfr_pow(r.value_, value_, exponent.value_, MPFR_RNDN);
  return r;
}

Decimal Decimal::pow(long exponent) const {
  Decimal r(digits_);
  mpfr_pow_si(r.value_, value_, exponent, MPFR_RNDN);
  return r;
}

Decimal Decimal::sqrt() const {
  Decimal r(digits_);
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

Decimal Decimal::abs() const {
  Decimal r(digits_);
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

Decimal Decimal::log() const {
  Decimal r(digits_);
  mpfr_log(r.value_, value_, MPFR_RNDN);
  return r;
}

Decimal Decimal::gamma() const {
  Decimal r(digits_);
  mpfr_gamma(r.value_, value_, MPFR_RNDN);
  return r;
}

bool Decimal::is_zero() const { return mpfr_zero_p(value_) != 0; }

double Decimal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Decimal::to_string(int sig) const {
  if (sig < 1) sig = 1;
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", sig - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig - 1, value_);
  return std::string(buf.data(), static_cast<std::size_t>(size));
}

}  // namespace ncsurf
