#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "ncsurf/oracle.hpp"

using namespace ncsurf;

TEST_SUITE("oracle") {
  TEST_CASE("disk duals are counted by Catalan numbers") {
    const Surface disk = parse_surface("disk");
    for (int n = 0; n <= 8; ++n) CHECK(count_duals(disk, n) == catalan_number(n));
    CHECK(catalan_number(10) == 16796);
  }

  TEST_CASE("disk duals biject with non-crossing partitions") {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      std::set<std::vector<std::vector<int>>> seen;
      const auto duals = enumerate_duals(parse_surface("disk"), n);
      for (const BipartiteDualMap& d : duals) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : dual_to_partition(d).blocks) {
          std::vector<int> block;
          for (const OraclePoint& p : b) {
            CHECK(p.boundary == 1);
            block.push_back(p.index);
          }
          blocks.push_back(block);
        }
        std::sort(blocks.begin(), blocks.end());
        seen.insert(blocks);
      }
      CHECK(seen.size() == duals.size());
      CHECK(seen == brute::noncrossing_partitions(n));
    }
  }

  TEST_CASE("duals satisfy the structural constraints") {
    for (const char* name : {"cylinder", "mobius", "torus1"}) {
      const Surface s = parse_surface(name);
      for (const BipartiteDualMap& d : enumerate_duals(s, 4)) {
        d.map.validate();
        CHECK(euler_characteristic(d.map) == s.closed_euler());
        CHECK(is_orientable(d.map) == s.orientable);
        CHECK(trace_faces(d.map).count() == s.beta);
        const auto vertex = d.map.vertex_of();
        const auto degree = d.map.vertex_degrees();
        for (int x = 0; x < d.map.num_darts(); ++x) {
          const DualKind a = d.kind[static_cast<std::size_t>(vertex[static_cast<std::size_t>(x)])];
          const DualKind b = d.kind[static_cast<std::size_t>(vertex[static_cast<std::size_t>(d.map.alpha[static_cast<std::size_t>(x)])])];
          CHECK((a == DualKind::NonBlock) != (b == DualKind::NonBlock));
          if (a == DualKind::Dangling) CHECK(degree[static_cast<std::size_t>(vertex[static_cast<std::size_t>(x)])] == 1);
        }
        int total = 0;
        for (int k : dangling_distribution(d)) {
          CHECK(k >= 1);
          total += k;
        }
        CHECK(total == 4);
      }
    }
  }

  TEST_CASE("small cases") {
    CHECK(enumerate_duals(parse_surface("disk"), 0).size() == 1);
    CHECK(enumerate_duals(parse_surface("cylinder"), 1).empty());
    CHECK(count_duals(parse_surface("cylinder"), 2) == 1);
    CHECK_THROWS_AS(enumerate_duals(parse_surface("disk"), 13), Error);
    CHECK_THROWS_AS(count_duals(parse_surface("disk"), 5, {.max_darts = 16}), Error);
    CHECK(count_duals(parse_surface("disk"), 10) == catalan(10));
  }

  TEST_CASE("distinct partitions") {
    const Surface cyl = parse_surface("cylinder");
    CHECK(count_partitions(parse_surface("disk"), std::vector<int>{4}) == 14);
    // One point per boundary: only the block joining both points is
    // irreducible, two singletons leave a non-contractible white region.
    CHECK(count_partitions(cyl, std::vector<int>{1, 1}) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(count_partitions(cyl, std::vector<int>{n, 0}) >= catalan(n));
    // Two different duals may realize the same partition.
    const auto duals = enumerate_duals(cyl, 4);
    std::set<NcPartition> distinct;
    for (const auto& d : duals) distinct.insert(dual_to_partition(d));
    CHECK(distinct.size() < duals.size());
    CHECK_THROWS_AS(count_partitions(cyl, std::vector<int>{1}), Error);
  }

  TEST_CASE("deterministic") {
    const auto a = enumerate_duals(parse_surface("mobius"), 4);
    const auto b = enumerate_duals(parse_surface("mobius"), 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].map == b[i].map);
      CHECK(dual_to_partition(a[i]) == dual_to_partition(b[i]));
    }
  }
}
