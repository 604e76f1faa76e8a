#include "ncsurf/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ncsurf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kDangling = static_cast<int>(DualKind::Dangling);
constexpr int kBlock = static_cast<int>(DualKind::Block);
constexpr int kNonBlock = static_cast<int>(DualKind::NonBlock);
constexpr std::uint32_t bit(int kind) { return std::uint32_t{1} << kind; }

struct RootedDual {
  CombMap map;
  std::vector<DualKind> kind;
};

// Duals rooted at the dangling of boundary 1 only (dart 0, side +1).
struct DualPolicy {
  int n;
  int darts;
  int non_tree;
  int beta;
  bool orientable;
  std::vector<RootedDual> found;

  std::vector<VertexSpec> root_vertices() const { return {{kDangling, {bit(kNonBlock)}}}; }

  std::vector<VertexSpec> new_vertices(const MapBuilder& b, int d) const {
    std::vector<VertexSpec> out;
    const int avail = darts - b.num_darts();
    const int parent = b.kind_of_dart(d);
    if (parent == kNonBlock) {
      if (avail >= 1 && b.count_kind(kDangling) < n) out.push_back({kDangling, {bit(kNonBlock)}});
      for (int k = 1; k <= avail; ++k) {
        out.push_back({kBlock, std::vector<std::uint32_t>(idx(k), bit(kNonBlock))});
      }
    } else {
      // A non-block vertex: its neighbours alternate between the parent's
      // kind and the other kind.
      const int other = parent == kBlock ? kDangling : kBlock;
      for (int k = 2; k <= avail; k += 2) {
        std::vector<std::uint32_t> wants(idx(k));
        for (int i = 0; i < k; ++i) wants[idx(i)] = bit(i % 2 == 0 ? parent : other);
        out.push_back({kNonBlock, std::move(wants)});
      }
    }
    return out;
  }

  bool allow_pair(const MapBuilder& b, int, int) const { return b.non_tree_edges < non_tree; }
  bool allow_twist() const { return !orientable; }

  void emit(const MapBuilder& b) {
    if (b.num_darts() != darts || b.non_tree_edges != non_tree) return;
    if (b.count_kind(kDangling) != n) return;
    CombMap m = b.to_map();
    if (is_orientable(m) != orientable) return;
    if (trace_faces(m).count() != beta) return;
    RootedDual r;
    r.map = std::move(m);
    for (int k : b.vertex_kind) r.kind.push_back(static_cast<DualKind>(k));
    found.push_back(std::move(r));
  }
};

bool is_disk(const Surface& s) { return s.orientable && s.count == 0 && s.beta == 1; }

std::vector<RootedDual> rooted_duals(const Surface& s, int n, const OracleOptions& opts) {
  if (s.beta < 1) throw Error("the oracle needs at least one boundary component");
  if (n < s.beta) return {};
  // Each dangling accounts for one edge to a non-block vertex and, by
  // alternation, one more edge from that vertex to a block vertex.
  const int darts = 4 * n;
  if (darts > opts.max_darts) {
    throw Error("oracle cap exceeded: " + std::to_string(darts) + " darts > " +
                std::to_string(opts.max_darts));
  }
  DualPolicy policy{n, darts, 1 - s.euler_characteristic(), s.beta, s.orientable, {}};
  MapGenerator<DualPolicy> gen(policy);
  gen.run();
  return std::move(policy.found);
}

// Danglings of every face, keyed by face index.
std::vector<std::vector<int>> danglings_by_face(const CombMap& m, const std::vector<DualKind>& kind,
                                                const FaceTrace& faces) {
  std::vector<std::vector<int>> out(idx(faces.count()));
  const auto vertex = m.vertex_of();
  for (int d = 0; d < m.num_darts(); ++d) {
    if (kind[idx(vertex[idx(d)])] == DualKind::Dangling) out[idx(faces.face_of({d, 1}))].push_back(d);
  }
  return out;
}

// Attaches roots 2..beta in every possible way: face order, root dangling
// within each face and, on non-orientable surfaces, root side.
template <class Sink>
void expand_roots(const RootedDual& r, const Surface& s, Sink&& sink) {
  const CombMap& m = r.map;
  const auto vertex = m.vertex_of();
  const FaceTrace faces = trace_faces(m);
  const auto dangling = danglings_by_face(m, r.kind, faces);
  const int root_face = faces.face_of({0, 1});
  std::vector<int> order;
  for (int f = 0; f < faces.count(); ++f) {
    if (f == root_face) continue;
    if (dangling[idx(f)].empty()) return;
    order.push_back(f);
  }

  std::vector<int> orientation(idx(m.num_vertices()), 1);
  if (s.orientable) orientation = canonical_form(m, {0, 1}, {}).orientation;
  const int side_bits = s.orientable ? 0 : static_cast<int>(order.size());

  do {
    std::vector<std::size_t> choice(order.size(), 0);
    while (true) {
      for (long sides = 0; sides < (1L << side_bits); ++sides) {
        BipartiteDualMap d;
        d.map = m;
        d.kind = r.kind;
        d.roots.push_back(0);
        d.root_side.push_back(1);
        for (std::size_t j = 0; j < order.size(); ++j) {
          const int root = dangling[idx(order[j])][choice[j]];
          d.roots.push_back(root);
          d.root_side.push_back(s.orientable ? orientation[idx(vertex[idx(root)])]
                                             : ((sides >> j) & 1 ? -1 : 1));
        }
        sink(std::move(d));
      }
      std::size_t j = 0;
      while (j < order.size() && ++choice[j] == dangling[idx(order[j])].size()) choice[j++] = 0;
      if (j == order.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

// Flags of one face starting at a root flag.
std::vector<Flag> walk_face(const CombMap& m, const std::vector<int>& sigma_inv, Flag start) {
  std::vector<Flag> out;
  Flag f = start;
  do {
    out.push_back(f);
    const int s = f.side * m.sign[idx(f.dart)];
    const int e = m.alpha[idx(f.dart)];
    f = {s > 0 ? m.sigma[idx(e)] : sigma_inv[idx(e)], s};
  } while (!(f == start));
  return out;
}

}  // namespace

std::vector<BipartiteDualMap> enumerate_duals(const Surface& s, int n, OracleOptions opts) {
  std::vector<BipartiteDualMap> out;
  if (n == 0 && is_disk(s)) {
    out.emplace_back();  // the empty configuration
    return out;
  }
  for (const RootedDual& r : rooted_duals(s, n, opts)) {
    expand_roots(r, s, [&out](BipartiteDualMap&& d) { out.push_back(std::move(d)); });
  }
  return out;
}

BigInt count_duals(const Surface& s, int n, OracleOptions opts) {
  if (n == 0 && is_disk(s)) return 1;
  BigInt total = 0;
  for (const RootedDual& r : rooted_duals(s, n, opts)) {
    expand_roots(r, s, [&total](BipartiteDualMap&&) { ++total; });
  }
  return total;
}

std::vector<int> dangling_distribution(const BipartiteDualMap& d) {
  if (d.roots.empty()) return {0};
  const FaceTrace faces = trace_faces(d.map);
  const auto dangling = danglings_by_face(d.map, d.kind, faces);
  std::vector<int> out;
  for (int r : d.roots) out.push_back(static_cast<int>(dangling[idx(faces.face_of({r, 1}))].size()));
  return out;
}

NcPartition dual_to_partition(const BipartiteDualMap& d) {
  NcPartition p;
  if (d.roots.empty()) return p;
  const CombMap& m = d.map;
  const auto vertex = m.vertex_of();
  std::vector<int> sigma_inv(m.sigma.size());
  for (std::size_t i = 0; i < m.sigma.size(); ++i) sigma_inv[idx(m.sigma[i])] = static_cast<int>(i);

  // Point i of a boundary sits between dangling i and dangling i + 1 of its
  // face; the unique block corner met there is its block.
  std::map<int, std::vector<OraclePoint>> by_block;
  for (std::size_t j = 0; j < d.roots.size(); ++j) {
    const auto walk = walk_face(m, sigma_inv, {d.roots[j], d.root_side[j]});
    int index = 0;
    for (const Flag& f : walk) {
      const int v = vertex[idx(f.dart)];
      if (d.kind[idx(v)] == DualKind::Dangling) {
        ++index;
      } else if (d.kind[idx(v)] == DualKind::Block) {
        by_block[v].push_back({static_cast<int>(j) + 1, index});
      }
    }
  }
  for (auto& [v, points] : by_block) {
    std::sort(points.begin(), points.end());
    p.blocks.push_back(std::move(points));
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

BigInt count_partitions(const Surface& s, std::span<const int> n_per_boundary, OracleOptions opts) {
  if (static_cast<int>(n_per_boundary.size()) != s.beta) {
    throw Error("count_partitions needs one point count per boundary component");
  }
  std::vector<int> wanted;
  Surface target = s;
  for (int k : n_per_boundary) {
    if (k < 0) throw Error("negative point count");
    if (k == 0) {
      target = target.capped();
    } else {
      wanted.push_back(k);
    }
  }
  if (wanted.empty()) return 1;  // no points: only the empty partition
  const int n = std::accumulate(wanted.begin(), wanted.end(), 0);
  std::set<NcPartition> seen;
  for (const RootedDual& r : rooted_duals(target, n, opts)) {
    expand_roots(r, target, [&](BipartiteDualMap&& d) {
      if (dangling_distribution(d) == wanted) seen.insert(dual_to_partition(d));
    });
  }
  return static_cast<unsigned long>(seen.size());
}

BigInt catalan_number(long n) { return catalan(n); }

}  // namespace ncsurf
