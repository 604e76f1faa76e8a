#include "ncsurf/asymptotics.hpp"

#include <algorithm>
#include <map>

namespace ncsurf {

XExpansion to_x_expansion(TreeFamily f, int precision) { return closed_form(f).to_x(precision); }

XExpansion to_x_expansion(const ContributionSignature& sig, int precision) {
  if (sig.degenerate) return to_x_expansion(TreeFamily::T, precision);
  const std::vector<std::pair<TreeFamily, int>> factors = {
      {TreeFamily::T1, sig.e1},           {TreeFamily::T2, sig.e2},
      {TreeFamily::T3, sig.e3},           {TreeFamily::T, sig.block_excess},
      {TreeFamily::B, sig.nonblock_excess}, {TreeFamily::Tdot, sig.b},
      {TreeFamily::Bdot, sig.w}};
  // Every factor's own leading power is -1 or 0, so a margin of the total
  // absolute exponent covers what products and inverses lose.
  int margin = 2;
  for (const auto& [f, k] : factors) margin += 2 * std::abs(k);
  XExpansion out = XExpansion::constant(1);
  for (const auto& [f, k] : factors) {
    if (k == 0) continue;
    const XExpansion base = to_x_expansion(f, precision + margin);
    out = out * base.pow(k, precision + margin);
  }
  out = out.truncated(precision);
  if (out.precision() < precision) throw Error("X-expansion lost precision below the requested order");
  return out;
}

int expected_singular_power(const Scheme& sch) {
  if (sch.degenerate) return 1;
  return -stats(sch).e_total;
}

SchemeSingularity g_at_quarter(const Scheme& sch) {
  SchemeSingularity out;
  out.expected_power = expected_singular_power(sch);
  const XExpansion x = to_x_expansion(ContributionSignature::of(sch), out.expected_power + 4);
  out.leading_power = x.leading_power();
  if (sch.degenerate) {
    // T = 2 - 2X + ...: the constant is analytic, X^1 carries the singularity.
    out.value = x.coeff(out.expected_power);
    return out;
  }
  if (out.leading_power && *out.leading_power < out.expected_power) {
    throw Error("scheme contribution more singular than its edge count allows");
  }
  if (out.leading_power && *out.leading_power == out.expected_power) {
    out.value = x.leading_coeff();
  } else {
    out.cancellation = true;
    out.value = out.leading_power ? x.leading_coeff() : Rational(0);
  }
  return out;
}

CSigma c_sigma_details(const Surface& s) {
  CSigma out;
  const bool disk = s.orientable && s.count == 0 && s.beta == 1;
  out.schemes = disk ? enumerate_schemes(s) : enumerate_cubic_schemes(s);
  std::map<ContributionSignature, SchemeSingularity> memo;
  out.value = 0;
  for (const Scheme& sch : out.schemes) {
    const auto sig = ContributionSignature::of(sch);
    auto it = memo.find(sig);
    if (it == memo.end()) it = memo.emplace(sig, g_at_quarter(sch)).first;
    out.per_scheme.push_back(it->second);
    out.value += it->second.value;
    out.cancellation = out.cancellation || it->second.cancellation;
  }
  return out;
}

Rational c_sigma(const Surface& s) { return c_sigma_details(s).value; }

std::optional<ExactGamma> exact_gamma(const Rational& alpha) {
  if (is_integer(alpha)) {
    const BigInt k = alpha.get_num();
    if (k <= 0) throw Error("Gamma has a pole at " + to_string(alpha));
    return ExactGamma{Rational(factorial(k.get_si() - 1)), 0};
  }
  if (alpha.get_den() != 2) return std::nullopt;
  // alpha = m + 1/2, walked from Gamma(1/2) = sqrt(pi).
  const long m = BigInt((alpha.get_num() - 1) / 2).get_si();
  Rational r = 1;
  if (m >= 0) {
    for (long j = 0; j < m; ++j) r *= Rational(2 * j + 1, 2);
  } else {
    for (long j = 0; j < -m; ++j) r /= Rational(-2 * j - 1, 2);
  }
  r.canonicalize();
  return ExactGamma{r, 1};
}

Decimal gamma_value(const Rational& alpha, int digits) {
  if (auto g = exact_gamma(alpha)) {
    Decimal v(g->rational, digits);
    if (g->sqrt_pi_power == 1) v = v * Decimal::pi(digits).sqrt();
    return v;
  }
  return Decimal(alpha, digits).gamma();
}

Decimal transfer_estimate(const Rational& c, const Rational& alpha, const Rational& rho, long n, int digits) {
  if (n < 1) throw Error("transfer estimate needs n >= 1");
  if (rho <= 0) throw Error("radius must be positive");
  const Decimal gamma = gamma_value(alpha, digits);
  const Decimal growth(rational_pow(1 / rho, n), digits);
  const Decimal poly = Decimal(n, digits).pow(Decimal(alpha - 1, digits));
  return Decimal(c, digits) * poly / gamma * growth;
}

AsymptoticEstimate asymptotic_estimate(const Surface& s, int digits) {
  AsymptoticEstimate est;
  est.c = c_sigma(s);
  est.exponent = asymptotic_exponent(s);
  est.alpha = est.exponent + 1;
  est.constant = Decimal(est.c, digits) / gamma_value(est.alpha, digits);
  return est;
}

Decimal upper_bound(const AsymptoticEstimate& est, long n) {
  return transfer_estimate(est.c, est.alpha, Rational(1, 4), n, est.constant.digits());
}

Decimal upper_bound(const Surface& s, long n, int digits) { return upper_bound(asymptotic_estimate(s, digits), n); }

LiteratureBound c_sigma_literature_bound(const Surface& s, const Decimal& t_g) {
  const int digits = t_g.digits();
  const int chi = s.euler_characteristic();
  LiteratureBound out{Decimal(digits), false};
  const Rational binom = binomial(Rational(-6 * chi), s.beta - 1);
  if (binom == 0) {
    out.binomial_zero = true;
    return out;
  }
  const Decimal beta_factor = Decimal(s.beta, digits).pow(Decimal(Rational(-5 * chi, 2), digits));
  const Decimal twelve_root3 = Decimal(12, digits) * Decimal(3, digits).sqrt();
  out.value = t_g * beta_factor * twelve_root3.pow(s.beta) * Decimal(binom, digits) *
              Decimal(rational_pow(2, s.beta), digits);
  return out;
}

}  // namespace ncsurf
