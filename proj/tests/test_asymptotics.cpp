#include <doctest.h>

#include <cmath>

#include "ncsurf/asymptotics.hpp"

using namespace ncsurf;

namespace {

double rel_error(const Decimal& estimate, const BigInt& exact) {
  const Decimal e(Rational(exact), estimate.digits());
  return ((estimate - e) / e).abs().to_double();
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("family expansions") {
    const XExpansion t = to_x_expansion(TreeFamily::T, 4);
    CHECK(t.coeff(0) == 2);
    CHECK(t.coeff(1) == -2);
    CHECK(t.coeff(2) == 2);
    // Bdot = z/X = X^-1/4 - X/4.
    const XExpansion bd = to_x_expansion(TreeFamily::Bdot, 4);
    CHECK(bd.leading_power() == -1);
    CHECK(bd.coeff(-1) == Rational(1, 4));
    CHECK(bd.coeff(1) == Rational(-1, 4));
    CHECK(bd.coeff(0) == 0);
  }

  TEST_CASE("product expansion against the series product") {
    // A product of exact closed forms still re-expands to the product series.
    const ContributionSignature sig{.e3 = 2, .w = 1};
    const XExpansion x = to_x_expansion(sig, 6);
    const XExpansion exact = closed_form(TreeFamily::T3).to_x(XExpansion::kExact).pow(2) *
                             closed_form(TreeFamily::Bdot).to_x(XExpansion::kExact);
    CHECK(x == exact.truncated(6));
  }

  TEST_CASE("cubic schemes sit exactly at X^-e") {
    for (const char* name : {"cylinder", "mobius", "torus1", "klein1", "orient:g=0,b=3"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      for (const Scheme& sch : enumerate_cubic_schemes(s)) {
        const SchemeSingularity g = g_at_quarter(sch);
        CHECK_FALSE(g.cancellation);
        CHECK(g.leading_power == -stats(sch).e_total);
        CHECK(g.expected_power == 3 * s.euler_characteristic() - 2 * s.beta);
        CHECK(g.value > 0);
        CHECK(g.value <= rational_pow(2, s.beta));
      }
    }
  }

  TEST_CASE("fewer edges means a weaker singularity") {
    const Surface s = parse_surface("cylinder");
    for (const Scheme& sch : enumerate_schemes(s)) {
      const SchemeSingularity g = g_at_quarter(sch);
      CHECK(g.expected_power == -stats(sch).e_total);
      CHECK(g.expected_power >= 3 * s.euler_characteristic() - 2 * s.beta);
    }
  }

  TEST_CASE("constants c") {
    // Cylinder: p_n = (n - 1) 4^(n - 2), so p_n / (n 4^n) -> 1/16.
    CHECK(c_sigma(parse_surface("cylinder")) == Rational(1, 16));
    // Disk: C(n) ~ 4^n n^(-3/2) / sqrt(pi) and Gamma(-1/2) = -2 sqrt(pi).
    CHECK(c_sigma(parse_surface("disk")) == -2);
    for (const char* name : {"cylinder", "mobius", "torus1", "klein1"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const CSigma c = c_sigma_details(s);
      CHECK(c.value > 0);
      CHECK(c.value <= rational_pow(2, s.beta) * Rational(static_cast<long>(c.schemes.size())));
    }
  }

  TEST_CASE("each cubic vertex weighs 1/8") {
    // Every cubic scheme has -2 chi + beta inner vertices and g = 8^-(that).
    for (const char* name : {"cylinder", "mobius", "torus1", "klein1", "orient:g=0,b=3", "nonorient:h=1,b=2"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const CSigma c = c_sigma_details(s);
      const long vertices = -2 * s.euler_characteristic() + s.beta;
      for (const auto& g : c.per_scheme) CHECK(g.value == rational_pow(Rational(1, 8), vertices));
      CHECK(c.value == Rational(static_cast<long>(c.schemes.size())) * rational_pow(Rational(1, 8), vertices));
    }
  }

  TEST_CASE("c matches a coefficient-ratio fit") {
    // p_n n^(1 - alpha) 4^-n Gamma(alpha) approaches c with O(n^-1/2) error.
    for (const char* name : {"mobius", "torus1", "klein1"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const AsymptoticEstimate est = asymptotic_estimate(s, 30);
      const SurfaceSeries ss = p_series(s, 300);
      double last = 1e9;
      for (int n : {75, 150, 300}) {
        const double ratio = (Decimal(ss.coeff_at_one(n), 30) / upper_bound(est, n)).to_double();
        CAPTURE(n);
        CHECK(std::abs(ratio - 1) < last);
        last = std::abs(ratio - 1);
      }
      CHECK(last < 0.25);
    }
  }

  TEST_CASE("exact Gamma") {
    CHECK(exact_gamma(Rational(5))->rational == 24);
    CHECK(exact_gamma(Rational(1, 2))->rational == 1);
    CHECK(exact_gamma(Rational(1, 2))->sqrt_pi_power == 1);
    CHECK(exact_gamma(Rational(5, 2))->rational == Rational(3, 4));
    CHECK(exact_gamma(Rational(-1, 2))->rational == -2);
    CHECK(exact_gamma(Rational(-3, 2))->rational == Rational(4, 3));
    CHECK_FALSE(exact_gamma(Rational(1, 3)).has_value());
    CHECK_THROWS_AS(exact_gamma(Rational(0)), Error);
    CHECK_THROWS_AS(exact_gamma(Rational(-2)), Error);
    CHECK(std::abs(gamma_value(Rational(1, 3), 30).to_double() - 2.678938534707747) < 1e-12);
    CHECK(std::abs(gamma_value(Rational(-3, 2), 30).to_double() - 2.363271801207355) < 1e-12);
  }

  TEST_CASE("transfer estimate of central binomials") {
    double last = 1;
    for (long n : {10, 100, 1000}) {
      const double err = rel_error(transfer_estimate(1, Rational(1, 2), Rational(1, 4), n), binomial(2 * n, n));
      CAPTURE(n);
      CHECK(err < last);
      last = err;
    }
    CHECK(rel_error(transfer_estimate(1, Rational(1, 2), Rational(1, 4), 100), binomial(200, 100)) < 0.02);
    CHECK(transfer_estimate(3, 1, Rational(1, 2), 10).to_string(10) == "3.072000000e+03");
    CHECK_THROWS_AS(transfer_estimate(1, -1, Rational(1, 4), 5), Error);
    CHECK_THROWS_AS(transfer_estimate(1, 1, Rational(1, 4), 0), Error);
  }

  TEST_CASE("upper bound for the disk tracks Catalan") {
    const Surface disk = parse_surface("disk");
    double last = 1;
    for (long n : {50, 200, 800}) {
      const double err = rel_error(upper_bound(disk, n), catalan(n));
      CHECK(err < last);
      last = err;
    }
    const Decimal b = upper_bound(disk, 1000);
    const double root = std::exp(b.log().to_double() / 1000);
    CHECK(std::abs(root - 4) < 0.1);
  }

  TEST_CASE("literature bound") {
    const LiteratureBound disk = c_sigma_literature_bound(parse_surface("disk"), Decimal(1, 30));
    CHECK_FALSE(disk.binomial_zero);
    // beta^(-5/2) (12 sqrt 3) binom(-6, 0) 2 with beta = 1.
    CHECK(std::abs(disk.value.to_double() - 24 * std::sqrt(3.0)) < 1e-12);
    const LiteratureBound cyl = c_sigma_literature_bound(parse_surface("cylinder"), Decimal(1, 30));
    CHECK(cyl.binomial_zero);
    CHECK(cyl.value.is_zero());
    const LiteratureBound torus = c_sigma_literature_bound(parse_surface("torus1"), Decimal(1, 30));
    CHECK_FALSE(torus.binomial_zero);
    CHECK(torus.value > Decimal(0L, 30));
  }

  TEST_CASE("decimal formatting is fixed") {
    CHECK(Decimal(Rational(1, 3), 20).to_string(5) == "3.3333e-01");
    CHECK(Decimal::parse("2.5", 20).to_string(3) == "2.50e+00");
    CHECK_THROWS_AS(Decimal::parse("abc", 20), Error);
  }
}
