#include "ncsurf/comb_map.hpp"

#include <algorithm>
#include <numeric>

namespace ncsurf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::size_t flag_index(int dart, int side) { return idx(2 * dart + (side > 0 ? 0 : 1)); }

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[idx(p[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace

void CombMap::validate() const {
  const int n = num_darts();
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(sign.size()) != n) {
    throw Error("map arrays have inconsistent sizes");
  }
  std::vector<char> seen(idx(n), 0);
  for (int d = 0; d < n; ++d) {
    const int a = alpha[idx(d)];
    const int s = sigma[idx(d)];
    if (a < 0 || a >= n || a == d || alpha[idx(a)] != d) throw Error("alpha is not a fixed-point-free involution");
    if (s < 0 || s >= n || seen[idx(s)]) throw Error("sigma is not a permutation");
    seen[idx(s)] = 1;
    if (sign[idx(d)] != 1 && sign[idx(d)] != -1) throw Error("edge sign must be +1 or -1");
    if (sign[idx(d)] != sign[idx(a)]) throw Error("edge sign differs between the two darts of an edge");
  }
}

std::vector<int> CombMap::vertex_of() const {
  std::vector<int> v(idx(num_darts()), -1);
  int next = 0;
  for (int d = 0; d < num_darts(); ++d) {
    if (v[idx(d)] >= 0) continue;
    int x = d;
    do {
      v[idx(x)] = next;
      x = sigma[idx(x)];
    } while (x != d);
    ++next;
  }
  return v;
}

int CombMap::num_vertices() const {
  const auto v = vertex_of();
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end()) + 1;
}

std::vector<int> CombMap::vertex_degrees() const {
  const auto v = vertex_of();
  std::vector<int> deg(idx(num_vertices()), 0);
  for (int x : v) ++deg[idx(x)];
  return deg;
}

bool CombMap::is_connected() const {
  const int n = num_darts();
  if (n == 0) return true;
  std::vector<char> seen(idx(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    ++count;
    for (int e : {alpha[idx(d)], sigma[idx(d)]}) {
      if (!seen[idx(e)]) {
        seen[idx(e)] = 1;
        stack.push_back(e);
      }
    }
  }
  return count == n;
}

FaceTrace trace_faces(const CombMap& m) {
  const int n = m.num_darts();
  const auto sigma_inv = inverse_permutation(m.sigma);
  auto next = [&](Flag f) {
    const int s = f.side * m.sign[idx(f.dart)];
    const int e = m.alpha[idx(f.dart)];
    return Flag{s > 0 ? m.sigma[idx(e)] : sigma_inv[idx(e)], s};
  };
  auto reverse = [&](Flag f) {
    return Flag{m.alpha[idx(f.dart)], -f.side * m.sign[idx(f.dart)]};
  };

  FaceTrace out;
  out.face_of_flag.assign(idx(2 * n), -1);
  for (int d = 0; d < n; ++d) {
    for (int side : {1, -1}) {
      if (out.face_of_flag[flag_index(d, side)] >= 0) continue;
      const int id = out.count();
      std::vector<Flag> orbit;
      Flag f{d, side};
      do {
        orbit.push_back(f);
        out.face_of_flag[flag_index(f.dart, f.side)] = id;
        f = next(f);
      } while (!(f == Flag{d, side}));
      // The reversed traversal belongs to the same face.
      for (const Flag& g : orbit) {
        const Flag r = reverse(g);
        out.face_of_flag[flag_index(r.dart, r.side)] = id;
      }
      out.faces.push_back(std::move(orbit));
    }
  }
  return out;
}

bool is_orientable(const CombMap& m) {
  const int n = m.num_darts();
  const auto vertex = m.vertex_of();
  std::vector<int> orient(idx(m.num_vertices()), 0);
  for (int start = 0; start < n; ++start) {
    if (orient[idx(vertex[idx(start)])] != 0) continue;
    orient[idx(vertex[idx(start)])] = 1;
    std::vector<int> stack = {vertex[idx(start)]};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d = 0; d < n; ++d) {
        if (vertex[idx(d)] != v) continue;
        const int w = vertex[idx(m.alpha[idx(d)])];
        const int want = orient[idx(v)] * m.sign[idx(d)];
        if (orient[idx(w)] == 0) {
          orient[idx(w)] = want;
          stack.push_back(w);
        } else if (orient[idx(w)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

int euler_characteristic(const CombMap& m) {
  return m.num_vertices() - m.num_edges() + trace_faces(m).count();
}

CanonicalForm canonical_form(const CombMap& m, Flag root, std::span<const int> vertex_label) {
  const int n = m.num_darts();
  const auto vertex = m.vertex_of();
  const auto sigma_inv = inverse_permutation(m.sigma);
  if (root.dart < 0 || root.dart >= n) throw Error("root dart out of range");

  CanonicalForm out;
  out.relabel.assign(idx(n), -1);
  std::vector<int> order;  // new label -> old dart
  std::vector<int> orient(idx(m.num_vertices()), 0);
  std::vector<int> first_of_new_vertex;

  auto open_vertex = [&](int start, int side) {
    const int v = vertex[idx(start)];
    orient[idx(v)] = side;
    first_of_new_vertex.push_back(static_cast<int>(order.size()));
    out.vertex_label.push_back(vertex_label.empty() ? 0 : vertex_label[idx(v)]);
    int x = start;
    do {
      out.relabel[idx(x)] = static_cast<int>(order.size());
      order.push_back(x);
      x = side > 0 ? m.sigma[idx(x)] : sigma_inv[idx(x)];
    } while (x != start);
  };

  open_vertex(root.dart, root.side);
  for (std::size_t label = 0; label < order.size(); ++label) {
    const int x = order[label];
    const int y = m.alpha[idx(x)];
    if (out.relabel[idx(y)] < 0) open_vertex(y, orient[idx(vertex[idx(x)])] * m.sign[idx(x)]);
  }
  if (static_cast<int>(order.size()) != n) throw Error("canonical_form requires a connected map");

  CombMap& c = out.map;
  c.alpha.assign(idx(n), 0);
  c.sigma.assign(idx(n), 0);
  c.sign.assign(idx(n), 1);
  first_of_new_vertex.push_back(n);
  for (std::size_t v = 0; v + 1 < first_of_new_vertex.size(); ++v) {
    const int lo = first_of_new_vertex[v];
    const int hi = first_of_new_vertex[v + 1];
    for (int d = lo; d < hi; ++d) c.sigma[idx(d)] = d + 1 < hi ? d + 1 : lo;
  }
  for (int label = 0; label < n; ++label) {
    const int x = order[idx(label)];
    const int y = m.alpha[idx(x)];
    c.alpha[idx(label)] = out.relabel[idx(y)];
    c.sign[idx(label)] =
        orient[idx(vertex[idx(x)])] * orient[idx(vertex[idx(y)])] * m.sign[idx(x)];
  }

  const int nv = static_cast<int>(out.vertex_label.size());
  out.orientation = orient;
  out.code.reserve(idx(1 + 2 * nv + 2 * n));
  out.code.push_back(nv);
  for (int v = 0; v < nv; ++v) {
    out.code.push_back(out.vertex_label[idx(v)]);
    out.code.push_back(first_of_new_vertex[idx(v + 1)] - first_of_new_vertex[idx(v)]);
  }
  for (int d = 0; d < n; ++d) {
    out.code.push_back(c.alpha[idx(d)]);
    out.code.push_back(c.sign[idx(d)]);
  }
  return out;
}

int MapBuilder::count_kind(int kind) const {
  return static_cast<int>(std::count(vertex_kind.begin(), vertex_kind.end(), kind));
}

CombMap MapBuilder::to_map() const {
  CombMap m;
  m.alpha = alpha;
  m.sign = sign;
  m.sigma.resize(alpha.size());
  for (int v = 0; v < num_vertices(); ++v) {
    const int lo = vertex_first[idx(v)];
    const int hi = lo + vertex_degree[idx(v)];
    for (int d = lo; d < hi; ++d) m.sigma[idx(d)] = d + 1 < hi ? d + 1 : lo;
  }
  return m;
}

}  // namespace ncsurf
