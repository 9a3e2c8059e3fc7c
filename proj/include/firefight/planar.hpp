#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "firefight/error.hpp"

namespace firefight {

using VertexId = int;
using EdgeId = int;
using DartId = int;

/// Neighbor lists indexed by vertex. For a RotationGraph these are the
/// clockwise rotations; the game engine accepts any symmetric adjacency.
using Adjacency = std::vector<std::vector<VertexId>>;

/// Unordered edge normalized so that first < second.
struct Edge {
  VertexId first;
  VertexId second;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A connected simple plane graph given by a rotation system.
///
/// rotation(v) lists the neighbors of v in clockwise order. A face is traced
/// by the rule: after the dart u->v comes v->w, where w follows u in the
/// rotation of v. With clockwise rotations every bounded face is traced
/// counterclockwise. Worked example on the 4-cycle 0-1-2-3:
///
///   rotation 0: 1 3   1: 2 0   2: 3 1   3: 0 2
///   0->1, then w = succ_1(0) = 2, then succ_2(1) = 3, then succ_3(2) = 0
///   gives the walk (0 1 2 3); starting from 1->0 gives (1 0 3 2).
///
/// Darts are numbered consecutively per vertex in rotation order, so
/// dart(v, i) = offset(v) + i.
class RotationGraph {
 public:
  RotationGraph() = default;

  /// Validates and builds. outer, if given, must be one of the traced faces
  /// (either orientation, any starting vertex); otherwise the face containing
  /// dart 0 is designated outer.
  static RotationGraph build(int n, Adjacency rotations,
                             std::optional<std::vector<VertexId>> outer = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const Adjacency& rotations() const { return rot_; }
  std::span<const VertexId> rotation(VertexId v) const { return rot_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }

  /// Sorted by (first, second); EdgeId is the index into this list.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }

  int dart_count() const { return static_cast<int>(head_.size()); }
  std::optional<DartId> dart(VertexId from, VertexId to) const;
  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return head_[d]; }
  DartId reverse(DartId d) const { return rev_[d]; }
  EdgeId dart_edge(DartId d) const { return dart_edge_[d]; }
  int face_of(DartId d) const { return face_of_[d]; }

  /// Facial walks as vertex sequences; walk i starts at the tail of
  /// face_darts(i)[0].
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
  const std::vector<std::vector<DartId>>& face_darts() const { return face_darts_; }
  int outer_face() const { return outer_; }
  bool outer_given() const { return outer_given_; }

 private:
  int n_ = 0;
  Adjacency rot_;
  std::vector<int> offset_;
  std::vector<VertexId> tail_;
  std::vector<VertexId> head_;
  std::vector<DartId> rev_;
  std::vector<EdgeId> dart_edge_;
  std::vector<int> face_of_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> faces_;
  std::vector<std::vector<DartId>> face_darts_;
  int outer_ = 0;
  bool outer_given_ = false;
};

/// A RotationGraph whose every face is a triangle.
class Triangulation : public RotationGraph {
 public:
  Triangulation() = default;

  /// Throws Errc::NotTriangulation listing the offending faces.
  static Triangulation from(RotationGraph g);

 private:
  explicit Triangulation(RotationGraph g) : RotationGraph(std::move(g)) {}
};

struct TriangulationCheck {
  bool ok = false;
  std::vector<int> non_triangular_faces;
};

TriangulationCheck is_triangulation(const RotationGraph& g);

/// Plain degree query, kept as a free function for symmetry with the rest of
/// the API.
inline int degree(const RotationGraph& g, VertexId v) { return g.degree(v); }

struct FanResult {
  Triangulation triangulation;
  std::vector<Edge> added;  // sorted

  bool is_original(VertexId a, VertexId b) const;
};

/// Triangulates every face of length >= 4. Each face is fanned from its
/// smallest vertex, falling back to the following walk vertices as apex; if
/// every apex would duplicate an edge, ears are cut one at a time.
FanResult triangulate_by_fan(const RotationGraph& g);

/// Rotation system recovered from consistently oriented triangular (or
/// polygonal) faces: a face (a, b, c, ...) traced a->b->c forces c to follow
/// a in the rotation of b.
Adjacency rotations_from_faces(int n, const std::vector<std::vector<VertexId>>& faces);

/// Removes edges from a rotation system, keeping the cyclic order of the
/// remaining neighbors.
Adjacency remove_edges(const Adjacency& rotations, std::span<const Edge> doomed);

}  // namespace firefight
