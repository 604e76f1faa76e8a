#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncsurf/rational.hpp"

namespace ncsurf {

/// Combinatorial map with signed edges (a "general" rotation system).
///
/// Darts are 0..n-1. alpha pairs the two darts of an edge, sigma is the
/// counterclockwise successor around a vertex, and sign[d] == sign[alpha[d]]
/// is -1 on edges that flip the local orientation.
struct CombMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> sign;

  int num_darts() const { return static_cast<int>(alpha.size()); }
  int num_edges() const { return num_darts() / 2; }

  /// Throws unless alpha is a fixed-point-free involution, sigma a
  /// permutation and signs symmetric under alpha.
  void validate() const;

  /// Vertex index per dart; vertices numbered by their smallest dart.
  std::vector<int> vertex_of() const;
  int num_vertices() const;
  std::vector<int> vertex_degrees() const;
  bool is_connected() const;

  friend bool operator==(const CombMap&, const CombMap&) = default;
};

/// A dart together with a side (+1 follows sigma, -1 follows sigma^-1).
struct Flag {
  int dart = 0;
  int side = 1;
  friend bool operator==(const Flag&, const Flag&) = default;
};

struct FaceTrace {
  /// One representative orbit per face.
  std::vector<std::vector<Flag>> faces;
  /// Face index of every flag, indexed by 2 * dart + (side > 0 ? 0 : 1).
  std::vector<int> face_of_flag;

  int count() const { return static_cast<int>(faces.size()); }
  int face_of(Flag f) const { return face_of_flag[static_cast<std::size_t>(2 * f.dart + (f.side > 0 ? 0 : 1))]; }
};

/// Sign-aware face tracing: the flag (d, s) is followed by
/// (sigma^{s'}(alpha d), s') with s' = s * sign[d]. Each face is traversed
/// once in each direction; both traversals get the same face index.
FaceTrace trace_faces(const CombMap& m);

/// True iff some choice of vertex flips makes every edge sign positive.
bool is_orientable(const CombMap& m);

/// v - e + f.
int euler_characteristic(const CombMap& m);

struct CanonicalForm {
  CombMap map;
  /// Per new vertex (vertices numbered in discovery order).
  std::vector<int> vertex_label;
  /// old dart -> new dart
  std::vector<int> relabel;
  /// Per old vertex: +1 if its rotation was kept, -1 if it was reversed.
  std::vector<int> orientation;
  /// Complete invariant of the rooted, labelled map.
  std::vector<int> code;
};

/// Breadth-first relabelling from a root flag. The root vertex's darts get
/// 0..k-1 following the root side; darts are then processed in label order,
/// a dart whose partner is unseen opens a new vertex whose darts get the
/// next free labels and whose orientation makes the edge positive. Two
/// rooted maps with per-vertex labels are isomorphic iff their codes agree.
CanonicalForm canonical_form(const CombMap& m, Flag root, std::span<const int> vertex_label);

/// Search state of the rooted map generator. Vertex darts are consecutive
/// and sigma runs through them in increasing order.
struct MapBuilder {
  std::vector<int> alpha;  // -1 while unpaired
  std::vector<int> sign;
  std::vector<int> vertex_of;
  std::vector<std::uint32_t> wants;  // allowed partner kinds, as a bitmask
  std::vector<int> vertex_first;
  std::vector<int> vertex_degree;
  std::vector<int> vertex_kind;
  int unpaired = 0;
  int non_tree_edges = 0;
  int twisted_edges = 0;

  int num_darts() const { return static_cast<int>(alpha.size()); }
  int num_vertices() const { return static_cast<int>(vertex_first.size()); }
  int kind_of_dart(int d) const { return vertex_kind[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(d)])]; }
  int count_kind(int kind) const;

  CombMap to_map() const;
};

struct VertexSpec {
  int kind = 0;
  /// wants.size() is the degree; wants[0] belongs to the dart that attaches
  /// the vertex to its parent.
  std::vector<std::uint32_t> wants;
};

/// Enumerates rooted maps (root flag = dart 0, side +1) exactly once each up
/// to rooted isomorphism, in the labelling produced by canonical_form.
///
/// The policy supplies
///   std::vector<VertexSpec> root_vertices();
///   std::vector<VertexSpec> new_vertices(const MapBuilder&, int dart);
///   bool allow_pair(const MapBuilder&, int d, int e);
///   bool allow_twist() const;
///   void emit(const MapBuilder&);
/// Kind compatibility through `wants` is checked here.
template <class Policy>
class MapGenerator {
 public:
  explicit MapGenerator(Policy& policy) : policy_(policy) {}

  void run() {
    for (const VertexSpec& spec : policy_.root_vertices()) {
      b_ = MapBuilder{};
      add_vertex(spec);
      step(0);
    }
  }

 private:
  void add_vertex(const VertexSpec& spec) {
    const int first = b_.num_darts();
    const int v = b_.num_vertices();
    b_.vertex_first.push_back(first);
    b_.vertex_degree.push_back(static_cast<int>(spec.wants.size()));
    b_.vertex_kind.push_back(spec.kind);
    for (std::uint32_t w : spec.wants) {
      b_.alpha.push_back(-1);
      b_.sign.push_back(1);
      b_.vertex_of.push_back(v);
      b_.wants.push_back(w);
    }
    b_.unpaired += static_cast<int>(spec.wants.size());
  }

  void remove_last_vertex() {
    const int first = b_.vertex_first.back();
    b_.unpaired -= b_.num_darts() - first;
    b_.alpha.resize(static_cast<std::size_t>(first));
    b_.sign.resize(static_cast<std::size_t>(first));
    b_.vertex_of.resize(static_cast<std::size_t>(first));
    b_.wants.resize(static_cast<std::size_t>(first));
    b_.vertex_first.pop_back();
    b_.vertex_degree.pop_back();
    b_.vertex_kind.pop_back();
  }

  bool compatible(int d, int e) const {
    const auto bit = [](int kind) { return std::uint32_t{1} << kind; };
    return (b_.wants[static_cast<std::size_t>(d)] & bit(b_.kind_of_dart(e))) &&
           (b_.wants[static_cast<std::size_t>(e)] & bit(b_.kind_of_dart(d)));
  }

  void pair(int d, int e, int s) {
    b_.alpha[static_cast<std::size_t>(d)] = e;
    b_.alpha[static_cast<std::size_t>(e)] = d;
    b_.sign[static_cast<std::size_t>(d)] = s;
    b_.sign[static_cast<std::size_t>(e)] = s;
    b_.unpaired -= 2;
  }

  void unpair(int d, int e) {
    b_.alpha[static_cast<std::size_t>(d)] = -1;
    b_.alpha[static_cast<std::size_t>(e)] = -1;
    b_.sign[static_cast<std::size_t>(d)] = 1;
    b_.sign[static_cast<std::size_t>(e)] = 1;
    b_.unpaired += 2;
  }

  void step(int cursor) {
    while (cursor < b_.num_darts() && b_.alpha[static_cast<std::size_t>(cursor)] >= 0) ++cursor;
    if (cursor == b_.num_darts()) {
      policy_.emit(b_);
      return;
    }
    const int d = cursor;

    for (const VertexSpec& spec : policy_.new_vertices(b_, d)) {
      const int first = b_.num_darts();
      add_vertex(spec);
      if (compatible(d, first)) {
        pair(d, first, 1);
        step(d + 1);
        unpair(d, first);
      }
      remove_last_vertex();
    }

    for (int e = d + 1; e < b_.num_darts(); ++e) {
      if (b_.alpha[static_cast<std::size_t>(e)] >= 0 || !compatible(d, e)) continue;
      if (!policy_.allow_pair(b_, d, e)) continue;
      ++b_.non_tree_edges;
      pair(d, e, 1);
      step(d + 1);
      unpair(d, e);
      if (policy_.allow_twist()) {
        ++b_.twisted_edges;
        pair(d, e, -1);
        step(d + 1);
        unpair(d, e);
        --b_.twisted_edges;
      }
      --b_.non_tree_edges;
    }
  }

  Policy& policy_;
  MapBuilder b_;
};

}  // namespace ncsurf
