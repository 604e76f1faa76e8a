#include <doctest.h>

#include <map>
#include <set>

#include "ncsurf/assembly.hpp"
#include "ncsurf/oracle.hpp"
#include "ncsurf/schemes.hpp"

using namespace ncsurf;

TEST_SUITE("schemes") {
  TEST_CASE("catalogue sizes") {
    struct Row {
      const char* surface;
      std::size_t all, cubic;
    };
    // Recorded from the generator; the oracle cross-check in assembly and
    // the per-scheme check below guard them.
    for (const Row& r : {Row{"disk", 1, 0}, Row{"cylinder", 6, 4}, Row{"mobius", 2, 2}, Row{"torus1", 18, 8},
                         Row{"klein1", 96, 48}}) {
      CAPTURE(r.surface);
      const Surface s = parse_surface(r.surface);
      CHECK(enumerate_schemes(s).size() == r.all);
      CHECK(enumerate_cubic_schemes(s).size() == r.cubic);
    }
  }

  TEST_CASE("cubic schemes have the extremal shape") {
    for (const char* name : {"cylinder", "mobius", "torus1", "klein1", "orient:g=0,b=3"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const int chi = s.euler_characteristic();
      for (const Scheme& sch : enumerate_cubic_schemes(s)) {
        validate_scheme(sch, s);
        const SchemeStats st = stats(sch);
        CHECK(st.e_total == 2 * s.beta - 3 * chi);
        CHECK(st.v1 + st.v2 == -2 * chi + s.beta);
        CHECK(st.e_total == scheme_edge_bound(s));
      }
    }
  }

  TEST_CASE("every scheme validates and is distinct") {
    for (const char* name : {"disk", "cylinder", "mobius", "torus1", "klein1"}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      std::set<std::vector<int>> keys;
      for (const Scheme& sch : enumerate_schemes(s)) {
        CHECK_NOTHROW(validate_scheme(sch, s));
        keys.insert(scheme_key(sch));
        const SchemeStats st = stats(sch);
        if (!sch.degenerate) CHECK(st.e_total <= scheme_edge_bound(s));
      }
      CHECK(keys.size() == enumerate_schemes(s).size());
    }
  }

  TEST_CASE("edge budget below the bound is rejected") {
    CHECK_THROWS_AS(enumerate_schemes(parse_surface("cylinder"), 3), Error);
    CHECK_THROWS_AS(scheme_edge_bound(Surface::orient(1, 0)), Error);
  }

  TEST_CASE("extracting schemes from brute-force duals") {
    // Pruning each oracle dual must land on a catalogued scheme, and the
    // number of duals per scheme must equal that scheme's own coefficient.
    for (auto [name, max_n] : {std::pair{"cylinder", 5}, std::pair{"mobius", 5}, std::pair{"torus1", 4}}) {
      CAPTURE(name);
      const Surface s = parse_surface(name);
      const SurfaceSeries ss = p_series(s, max_n);
      std::map<std::vector<int>, std::size_t> index;
      for (std::size_t i = 0; i < ss.schemes.size(); ++i) index[scheme_key(ss.schemes[i])] = i;
      for (int n = 1; n <= max_n; ++n) {
        std::vector<long> per(ss.schemes.size(), 0);
        for (const BipartiteDualMap& d : enumerate_duals(s, n)) {
          TaggedMap t{d.map, {}, d.roots, d.root_side};
          for (DualKind k : d.kind) t.vertex_tag.push_back(static_cast<int>(k));
          const Scheme sch = extract_scheme(t);
          CHECK_NOTHROW(validate_scheme(sch, s));
          auto it = index.find(scheme_key(sch));
          REQUIRE(it != index.end());
          ++per[it->second];
        }
        for (std::size_t i = 0; i < ss.schemes.size(); ++i) {
          CAPTURE(n);
          CAPTURE(i);
          CHECK(ss.per_scheme(i).coeff(n) == per[i]);
        }
      }
    }
  }
}
