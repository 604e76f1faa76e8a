#include "ncsurf/schemes.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ncsurf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kLeaf = 0;
constexpr int kInternal = 1;
constexpr std::uint32_t bit(int kind) { return std::uint32_t{1} << kind; }

struct SchemePolicy {
  int max_darts;
  int beta;
  int non_tree;
  bool orientable;
  bool cubic;
  std::vector<CombMap> found;

  std::vector<VertexSpec> root_vertices() const { return {{kLeaf, {bit(kInternal)}}}; }

  std::vector<VertexSpec> new_vertices(const MapBuilder& b, int) const {
    std::vector<VertexSpec> out;
    const int avail = max_darts - b.num_darts();
    if (avail >= 1 && b.count_kind(kLeaf) < beta) out.push_back({kLeaf, {bit(kInternal)}});
    const int max_degree = cubic ? std::min(3, avail) : avail;
    for (int k = 3; k <= max_degree; ++k) {
      out.push_back({kInternal, std::vector<std::uint32_t>(idx(k), bit(kLeaf) | bit(kInternal))});
    }
    return out;
  }

  bool allow_pair(const MapBuilder& b, int, int) const { return b.non_tree_edges < non_tree; }
  bool allow_twist() const { return !orientable; }

  void emit(const MapBuilder& b) {
    if (b.non_tree_edges != non_tree || b.count_kind(kLeaf) != beta) return;
    CombMap m = b.to_map();
    if (is_orientable(m) != orientable) return;
    const FaceTrace faces = trace_faces(m);
    if (faces.count() != beta) return;
    std::set<int> seen;
    for (int v = 0; v < b.num_vertices(); ++v) {
      if (b.vertex_kind[idx(v)] != kLeaf) continue;
      seen.insert(faces.face_of({b.vertex_first[idx(v)], 1}));
    }
    if (static_cast<int>(seen.size()) != beta) return;
    found.push_back(std::move(m));
  }
};

Scheme degenerate_disk_scheme() {
  Scheme s;
  s.map.alpha = {1, 0};
  s.map.sigma = {0, 1};
  s.map.sign = {1, 1};
  s.color = {VertexColor::Root, VertexColor::Root};
  s.roots = {0};
  s.root_side = {1};
  s.degenerate = true;
  return s;
}

void expand(const CombMap& m, const Surface& surf, std::vector<Scheme>& out) {
  const auto vertex = m.vertex_of();
  const auto degrees = m.vertex_degrees();
  const int nv = static_cast<int>(degrees.size());

  std::vector<int> internal;
  std::vector<int> other_roots;
  for (int d = 0; d < m.num_darts(); ++d) {
    const int v = vertex[idx(d)];
    if (d != 0 && degrees[idx(v)] == 1) other_roots.push_back(d);
  }
  for (int v = 0; v < nv; ++v)
    if (degrees[idx(v)] != 1) internal.push_back(v);

  std::vector<int> base_orientation(idx(nv), 1);
  if (surf.orientable) base_orientation = canonical_form(m, {0, 1}, {}).orientation;

  const int k = static_cast<int>(internal.size());
  const int side_bits = surf.orientable ? 0 : static_cast<int>(other_roots.size());
  for (long mask = 0; mask < (1L << k); ++mask) {
    std::vector<VertexColor> color(idx(nv), VertexColor::Root);
    for (int i = 0; i < k; ++i) {
      color[idx(internal[idx(i)])] = (mask >> i) & 1 ? VertexColor::NonBlock : VertexColor::Block;
    }
    std::vector<int> perm = other_roots;
    do {
      for (long sides = 0; sides < (1L << side_bits); ++sides) {
        Scheme s;
        s.map = m;
        s.color = color;
        s.roots.push_back(0);
        s.root_side.push_back(1);
        for (std::size_t j = 0; j < perm.size(); ++j) {
          s.roots.push_back(perm[j]);
          const int side = surf.orientable ? base_orientation[idx(vertex[idx(perm[j])])]
                                           : ((sides >> j) & 1 ? -1 : 1);
          s.root_side.push_back(side);
        }
        out.push_back(std::move(s));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

std::vector<Scheme> enumerate(const Surface& s, int max_edges, bool cubic) {
  const int bound = scheme_edge_bound(s);
  if (max_edges < bound) {
    throw Error("max_edges " + std::to_string(max_edges) + " is below the intrinsic bound " +
                std::to_string(bound));
  }
  if (s.euler_characteristic() == 1 && s.beta == 1) {
    // The disk: pruning removes everything but the root edge.
    if (cubic) return {};
    return {degenerate_disk_scheme()};
  }
  SchemePolicy policy{2 * max_edges, s.beta, 1 - s.euler_characteristic(), s.orientable, cubic, {}};
  MapGenerator<SchemePolicy> gen(policy);
  gen.run();
  std::vector<Scheme> out;
  for (const CombMap& m : policy.found) expand(m, s, out);
  return out;
}

}  // namespace

std::string color_name(VertexColor c) {
  switch (c) {
    case VertexColor::Root: return "root";
    case VertexColor::Block: return "block";
    case VertexColor::NonBlock: return "nonblock";
  }
  return "?";
}

int scheme_edge_bound(const Surface& s) {
  if (s.beta < 1) throw Error("schemes need at least one boundary component");
  return 2 * s.beta - 3 * s.euler_characteristic();
}

std::vector<Scheme> enumerate_schemes(const Surface& s, int max_edges) {
  return enumerate(s, max_edges, false);
}

std::vector<Scheme> enumerate_schemes(const Surface& s) {
  return enumerate(s, std::max(scheme_edge_bound(s), 1), false);
}

std::vector<Scheme> enumerate_cubic_schemes(const Surface& s) {
  return enumerate(s, std::max(scheme_edge_bound(s), 1), true);
}

SchemeStats stats(const Scheme& sch) {
  SchemeStats st;
  const auto vertex = sch.map.vertex_of();
  st.degrees = sch.map.vertex_degrees();
  st.root_incidence.assign(st.degrees.size(), 0);
  st.e_total = sch.map.num_edges();
  if (sch.degenerate) return st;

  for (std::size_t v = 0; v < sch.color.size(); ++v) {
    if (sch.color[v] == VertexColor::Block) ++st.v1;
    if (sch.color[v] == VertexColor::NonBlock) ++st.v2;
  }
  for (int d = 0; d < sch.map.num_darts(); ++d) {
    const int e = sch.map.alpha[idx(d)];
    if (e < d) continue;
    const int x = vertex[idx(d)];
    const int y = vertex[idx(e)];
    const VertexColor cx = sch.color[idx(x)];
    const VertexColor cy = sch.color[idx(y)];
    if (cx == VertexColor::Root || cy == VertexColor::Root) {
      const int inner = cx == VertexColor::Root ? y : x;
      const VertexColor c = sch.color[idx(inner)];
      if (c == VertexColor::Root) throw Error("root leaves joined to each other");
      ++st.root_incidence[idx(inner)];
      if (c == VertexColor::Block) ++st.b;
      else ++st.w;
    } else if (cx == VertexColor::Block && cy == VertexColor::Block) {
      ++st.e1;
    } else if (cx == VertexColor::NonBlock && cy == VertexColor::NonBlock) {
      ++st.e3;
    } else {
      ++st.e2;
    }
  }
  for (std::size_t v = 0; v < sch.color.size(); ++v) {
    const int excess = st.degrees[v] - 2 * st.root_incidence[v];
    if (sch.color[v] == VertexColor::Block) st.block_excess += excess;
    if (sch.color[v] == VertexColor::NonBlock) st.nonblock_excess += excess;
  }
  if (st.e1 + st.e2 + st.e3 + st.b + st.w != st.e_total) {
    throw Error("scheme edge types do not add up to the edge count");
  }
  return st;
}

void validate_scheme(const Scheme& sch, const Surface& s) {
  if (sch.degenerate) {
    if (!(s.orientable && s.count == 0 && s.beta == 1)) throw Error("degenerate scheme outside the disk");
    return;
  }
  const CombMap& m = sch.map;
  m.validate();
  if (!m.is_connected()) throw Error("scheme map is disconnected");
  if (euler_characteristic(m) != s.closed_euler()) throw Error("scheme has the wrong Euler characteristic");
  if (is_orientable(m) != s.orientable) throw Error("scheme has the wrong orientability");
  const FaceTrace faces = trace_faces(m);
  if (faces.count() != s.beta) throw Error("scheme face count differs from beta");
  if (static_cast<int>(sch.roots.size()) != s.beta || sch.root_side.size() != sch.roots.size()) {
    throw Error("scheme must carry one root per boundary component");
  }
  const auto vertex = m.vertex_of();
  const auto degrees = m.vertex_degrees();
  std::set<int> root_faces;
  std::set<int> root_vertices;
  for (int r : sch.roots) {
    const int v = vertex[idx(r)];
    if (degrees[idx(v)] != 1 || sch.color[idx(v)] != VertexColor::Root) throw Error("root vertex must be a leaf");
    root_faces.insert(faces.face_of({r, 1}));
    root_vertices.insert(v);
  }
  if (static_cast<int>(root_faces.size()) != s.beta) throw Error("two roots share a face");
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    const bool is_root = root_vertices.count(static_cast<int>(v)) > 0;
    if (is_root != (sch.color[v] == VertexColor::Root)) throw Error("root colour on a non-root vertex");
    if (!is_root && degrees[v] < 3) throw Error("non-root vertex of degree below three");
  }
}

std::vector<int> scheme_key(const Scheme& sch) {
  if (sch.degenerate) return {-1};
  const auto vertex = sch.map.vertex_of();
  std::vector<int> label(sch.color.size());
  for (std::size_t v = 0; v < label.size(); ++v) label[v] = static_cast<int>(sch.color[v]);
  for (std::size_t j = 0; j < sch.roots.size(); ++j) label[idx(vertex[idx(sch.roots[j])])] = 10 + static_cast<int>(j);
  CanonicalForm c = canonical_form(sch.map, {sch.roots[0], sch.root_side[0]}, label);
  for (std::size_t j = 0; j < sch.roots.size(); ++j) {
    c.code.push_back(sch.root_side[j] * c.orientation[idx(vertex[idx(sch.roots[j])])]);
  }
  return c.code;
}

Scheme extract_scheme(const TaggedMap& dual) {
  const CombMap& m = dual.map;
  const int n = m.num_darts();
  const auto vertex = m.vertex_of();
  const int nv = static_cast<int>(dual.vertex_tag.size());
  std::vector<int> deg = m.vertex_degrees();
  std::vector<std::vector<int>> darts_of(idx(nv));
  for (int d = 0; d < n; ++d) darts_of[idx(vertex[idx(d)])].push_back(d);
  std::vector<char> is_root(idx(nv), 0);
  for (int r : dual.roots) is_root[idx(vertex[idx(r)])] = 1;

  std::vector<char> alive(idx(n), 1);
  std::deque<int> queue;
  for (int v = 0; v < nv; ++v)
    if (deg[idx(v)] == 1 && !is_root[idx(v)]) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (deg[idx(v)] != 1) continue;
    int d = -1;
    for (int x : darts_of[idx(v)])
      if (alive[idx(x)]) d = x;
    const int e = m.alpha[idx(d)];
    alive[idx(d)] = alive[idx(e)] = 0;
    deg[idx(v)] = 0;
    const int w = vertex[idx(e)];
    if (--deg[idx(w)] == 1 && !is_root[idx(w)]) queue.push_back(w);
  }

  bool any_root_alive = false;
  for (int r : dual.roots) any_root_alive = any_root_alive || alive[idx(r)];
  if (!any_root_alive) {
    if (dual.roots.size() != 1) throw Error("pruning removed a root of a multi-boundary map");
    return degenerate_disk_scheme();
  }

  // Rotation and involution restricted to surviving darts.
  std::vector<int> alpha = m.alpha;
  std::vector<int> sign = m.sign;
  std::vector<int> sigma(idx(n), -1);
  for (int d = 0; d < n; ++d) {
    if (!alive[idx(d)]) continue;
    int x = m.sigma[idx(d)];
    while (!alive[idx(x)]) x = m.sigma[idx(x)];
    sigma[idx(d)] = x;
  }

  for (int v = 0; v < nv; ++v) {
    if (deg[idx(v)] != 2 || is_root[idx(v)]) continue;
    int a = -1;
    for (int x : darts_of[idx(v)])
      if (alive[idx(x)]) a = x;
    const int b = sigma[idx(a)];
    const int x = alpha[idx(a)];
    const int y = alpha[idx(b)];
    if (x == b) throw Error("isolated cycle while dissolving degree-two vertices");
    const int s = sign[idx(a)] * sign[idx(b)];
    alpha[idx(x)] = y;
    alpha[idx(y)] = x;
    sign[idx(x)] = sign[idx(y)] = s;
    alive[idx(a)] = alive[idx(b)] = 0;
    deg[idx(v)] = 0;
  }

  std::vector<int> fresh(idx(n), -1);
  int count = 0;
  for (int d = 0; d < n; ++d)
    if (alive[idx(d)]) fresh[idx(d)] = count++;
  Scheme out;
  out.map.alpha.resize(idx(count));
  out.map.sigma.resize(idx(count));
  out.map.sign.resize(idx(count));
  for (int d = 0; d < n; ++d) {
    if (!alive[idx(d)]) continue;
    const int f = fresh[idx(d)];
    out.map.alpha[idx(f)] = fresh[idx(alpha[idx(d)])];
    out.map.sigma[idx(f)] = fresh[idx(sigma[idx(d)])];
    out.map.sign[idx(f)] = sign[idx(d)];
  }
  const auto new_vertex = out.map.vertex_of();
  out.color.assign(idx(out.map.num_vertices()), VertexColor::Root);
  for (int d = 0; d < n; ++d) {
    if (!alive[idx(d)]) continue;
    const int tag = dual.vertex_tag[idx(vertex[idx(d)])];
    const VertexColor c = tag == 1 ? VertexColor::Block : tag == 2 ? VertexColor::NonBlock : VertexColor::Root;
    out.color[idx(new_vertex[idx(fresh[idx(d)])])] = c;
  }
  for (std::size_t j = 0; j < dual.roots.size(); ++j) {
    out.roots.push_back(fresh[idx(dual.roots[j])]);
    out.root_side.push_back(dual.root_side[j]);
  }
  return out;
}

}  // namespace ncsurf
