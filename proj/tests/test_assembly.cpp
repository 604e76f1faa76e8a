#include <doctest.h>

#include "ncsurf/assembly.hpp"
#include "ncsurf/oracle.hpp"

using namespace ncsurf;

TEST_SUITE("assembly") {
  TEST_CASE("disk gives Catalan numbers") {
    const SurfaceSeries ss = p_series(parse_surface("disk"), 25);
    for (int n = 0; n <= 25; ++n) CHECK(ss.coeff_at_one(n) == Rational(catalan(n)));
  }

  TEST_CASE("cylinder closed form (n - 1) 4^(n - 2)") {
    // Derived from the cylinder's schemes at u = 1 and confirmed below by
    // the dual enumeration for n <= 6.
    const SurfaceSeries ss = p_series(parse_surface("cylinder"), 60);
    CHECK(ss.coeff_at_one(0) == 0);
    CHECK(ss.coeff_at_one(1) == 0);
    for (int n = 2; n <= 60; ++n) CHECK(ss.coeff_at_one(n) == Rational(n - 1) * rational_pow(4, n - 2));
  }

  TEST_CASE("series agree with brute-force duals") {
    for (auto [name, max_n] : {std::pair{"disk", 8}, std::pair{"cylinder", 6}, std::pair{"mobius", 5},
                               std::pair{"torus1", 4}, std::pair{"klein1", 4}, std::pair{"orient:g=0,b=3", 4},
                               std::pair{"nonorient:h=1,b=2", 4}}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const SurfaceSeries ss = p_series(s, max_n);
      for (int n = 0; n <= max_n; ++n) {
        CAPTURE(n);
        CHECK(ss.coeff_at_one(n) == Rational(count_duals(s, n)));
      }
    }
  }

  TEST_CASE("bivariate assembly specializes to the univariate one") {
    for (const char* name : {"disk", "cylinder", "mobius"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const SurfaceSeries uni = p_series(s, 9);
      const SurfaceSeries bi = p_series(s, 9, {.bivariate = true});
      CHECK_FALSE(bi.series.is_univariate());
      CHECK(bi.series.specialize_u_one() == uni.series);
    }
  }

  TEST_CASE("bivariate disk counts partitions by blocks") {
    const SurfaceSeries bi = p_series(parse_surface("disk"), 6, {.bivariate = true});
    // [z^4] T: Narayana numbers 1, 6, 6, 1 by number of blocks.
    CHECK(bi.series.coeff(4, 1) == 1);
    CHECK(bi.series.coeff(4, 2) == 6);
    CHECK(bi.series.coeff(4, 3) == 6);
    CHECK(bi.series.coeff(4, 4) == 1);
  }

  TEST_CASE("cubic schemes dominate") {
    const Surface s = parse_surface("torus1");
    const SurfaceSeries full = p_series(s, 200);
    const SurfaceSeries cubic = p_series(s, 200, {.cubic_only = true});
    Rational previous = 0;
    for (int n : {25, 50, 100, 200}) {
      const Rational r = cubic.coeff_at_one(n) / full.coeff_at_one(n);
      CAPTURE(n);
      CHECK(r < 1);
      CHECK(r > previous);
      previous = r;
    }
    // The gap closes like n^(-1/2): about 0.31 left at n = 200.
    CHECK(previous > Rational(2, 3));
  }

  TEST_CASE("signatures are shared") {
    const SurfaceSeries ss = p_series(parse_surface("klein1"), 6);
    CHECK(ss.signatures.size() < ss.schemes.size());
    TruncatedSeries sum(6);
    for (std::size_t i = 0; i < ss.schemes.size(); ++i) sum += ss.per_scheme(i);
    CHECK(sum == ss.series);
  }
}
