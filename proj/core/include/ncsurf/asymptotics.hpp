#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncsurf/assembly.hpp"
#include "ncsurf/decimal.hpp"
#include "ncsurf/schemes.hpp"
#include "ncsurf/surface.hpp"
#include "ncsurf/trees.hpp"
#include "ncsurf/xexpansion.hpp"

namespace ncsurf {

/// Expansion of a tree family at u = 1 around z = 1/4, through X^(precision-1).
XExpansion to_x_expansion(TreeFamily f, int precision);
/// Expansion of a scheme contribution at u = 1 (a product of tree families).
XExpansion to_x_expansion(const ContributionSignature& sig, int precision);

/// Power of X at which a scheme's singular term sits: -e for ordinary
/// schemes, and 1 = -(2 beta - 3 chi) for the disk's degenerate scheme.
int expected_singular_power(const Scheme& sch);

struct SchemeSingularity {
  /// g(1/4), or the coefficient at the leading power actually present when
  /// the expected one cancels.
  Rational value;
  int expected_power = 0;
  std::optional<int> leading_power;
  bool cancellation = false;
};

SchemeSingularity g_at_quarter(const Scheme& sch);

struct CSigma {
  Rational value;
  /// The schemes summed: the cubic ones, or the degenerate scheme for the disk.
  std::vector<Scheme> schemes;
  std::vector<SchemeSingularity> per_scheme;
  bool cancellation = false;
};

CSigma c_sigma_details(const Surface& s);
Rational c_sigma(const Surface& s);

/// Exact Gamma at integers and half-integers: rational * sqrt(pi)^k, k in {0, 1}.
struct ExactGamma {
  Rational rational;
  int sqrt_pi_power = 0;
};

/// Throws at poles (non-positive integers); nullopt for other non-half-integers.
std::optional<ExactGamma> exact_gamma(const Rational& alpha);
Decimal gamma_value(const Rational& alpha, int digits);

/// c n^(alpha-1) / Gamma(alpha) * rho^(-n).
Decimal transfer_estimate(const Rational& c, const Rational& alpha, const Rational& rho, long n,
                          int digits = 50);

struct AsymptoticEstimate {
  Rational c;
  Rational alpha;
  /// c / Gamma(alpha)
  Decimal constant{50};
  /// alpha - 1
  Rational exponent;
  int base = 4;
  std::string error_order = "n^(-1/2)";
};

AsymptoticEstimate asymptotic_estimate(const Surface& s, int digits = 50);
/// c(s) / Gamma(alpha) n^(alpha-1) 4^n.
Decimal upper_bound(const Surface& s, long n, int digits = 50);
Decimal upper_bound(const AsymptoticEstimate& est, long n);

struct LiteratureBound {
  Decimal value{50};
  /// binom(-6 chi, beta - 1) vanished, so the product carries no information.
  bool binomial_zero = false;
};

/// t_g beta^(-5 chi/2) (12 sqrt 3)^beta binom(-6 chi, beta - 1) 2^beta, with
/// t_g supplied by the caller.
LiteratureBound c_sigma_literature_bound(const Surface& s, const Decimal& t_g);

}  // namespace ncsurf
