#pragma once

#include <span>
#include <string>
#include <vector>

#include "ncsurf/comb_map.hpp"
#include "ncsurf/surface.hpp"

namespace ncsurf {

enum class VertexColor { Root, Block, NonBlock };

std::string color_name(VertexColor c);

/// Rooted bicoloured map on the closed surface: beta faces, one root leaf per
/// face, every other vertex of degree >= 3.
///
/// Vertices are numbered as in map.vertex_of(). roots[j] is the dart of the
/// leaf rooting boundary j + 1 and root_side[j] its side; roots[0] is dart
/// 0 with side +1. On orientable surfaces every side follows the orientation
/// induced by the first root.
struct Scheme {
  CombMap map;
  std::vector<VertexColor> color;
  std::vector<int> roots;
  std::vector<int> root_side;
  /// The disk's scheme: the root edge alone, nothing survives pruning.
  bool degenerate = false;
};

struct SchemeStats {
  int v1 = 0, v2 = 0;
  int e1 = 0, e2 = 0, e3 = 0;
  int b = 0, w = 0;
  int e_total = 0;
  /// Per vertex d(x) and r(x) (root leaves included, with r = 0).
  std::vector<int> degrees;
  std::vector<int> root_incidence;
  /// Sum of d(x) - 2 r(x) over block and non-block vertices.
  int block_excess = 0;
  int nonblock_excess = 0;
};

/// Edge bound 2 beta - 3 chi; throws for beta < 1.
int scheme_edge_bound(const Surface& s);

/// All schemes of s, in a deterministic order. max_edges must be at least
/// scheme_edge_bound(s).
std::vector<Scheme> enumerate_schemes(const Surface& s, int max_edges);
std::vector<Scheme> enumerate_schemes(const Surface& s);
/// Schemes whose non-root vertices all have degree three.
std::vector<Scheme> enumerate_cubic_schemes(const Surface& s);

SchemeStats stats(const Scheme& sch);

/// Throws unless the scheme is a valid scheme of s: Euler characteristic,
/// orientability class, beta faces each holding one root, degrees.
void validate_scheme(const Scheme& sch, const Surface& s);

/// Invariant of a scheme up to rooted isomorphism, including colours, root
/// order and root sides.
std::vector<int> scheme_key(const Scheme& sch);

/// Input shape for extract_scheme: a map whose vertices are tagged
/// 0 (dangling), 1 (block) or 2 (non-block), plus ordered root danglings.
struct TaggedMap {
  CombMap map;
  std::vector<int> vertex_tag;  // indexed as map.vertex_of()
  std::vector<int> roots;
  std::vector<int> root_side;
};

/// Recursively deletes non-root leaves and dissolves vertices of degree two.
Scheme extract_scheme(const TaggedMap& dual);

}  // namespace ncsurf
