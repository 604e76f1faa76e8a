#pragma once

#include <span>
#include <vector>

#include "ncsurf/comb_map.hpp"
#include "ncsurf/rational.hpp"
#include "ncsurf/surface.hpp"

namespace ncsurf {

enum class DualKind { Dangling = 0, Block = 1, NonBlock = 2 };

/// Dual of an irreducible bipartite subdivision, with one root dangling per
/// boundary component. Danglings have degree one and hang from non-block
/// vertices; block vertices only see non-block vertices; around a non-block
/// vertex block vertices and danglings alternate. Faces are the boundary
/// components, roots[j] lies in the face of boundary j + 1.
struct BipartiteDualMap {
  CombMap map;
  std::vector<DualKind> kind;  // indexed as map.vertex_of()
  std::vector<int> roots;
  std::vector<int> root_side;
};

struct OraclePoint {
  int boundary = 1;  // 1-based
  int index = 1;     // 1-based, counterclockwise from the root
  auto operator<=>(const OraclePoint&) const = default;
};

/// Blocks sorted internally and among themselves.
struct NcPartition {
  std::vector<std::vector<OraclePoint>> blocks;
  auto operator<=>(const NcPartition&) const = default;
};

struct OracleOptions {
  int max_darts = 48;
};

/// Every dual with exactly n danglings on s, up to isomorphism preserving all
/// roots. The disk with n = 0 yields one empty dual (the empty configuration).
std::vector<BipartiteDualMap> enumerate_duals(const Surface& s, int n, OracleOptions opts = {});

/// Same count without materializing the list.
BigInt count_duals(const Surface& s, int n, OracleOptions opts = {});

/// Danglings per boundary, in root order.
std::vector<int> dangling_distribution(const BipartiteDualMap& d);

NcPartition dual_to_partition(const BipartiteDualMap& d);

/// Number of distinct partitions realized by irreducible duals with
/// n_per_boundary[j] points on boundary j + 1. Boundaries without points are
/// capped off first.
BigInt count_partitions(const Surface& s, std::span<const int> n_per_boundary, OracleOptions opts = {});

BigInt catalan_number(long n);

}  // namespace ncsurf
