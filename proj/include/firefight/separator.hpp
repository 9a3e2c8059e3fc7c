#pragma once

#include <optional>
#include <vector>

#include "firefight/planar.hpp"

namespace firefight {

struct BfsTree {
  VertexId root = 0;
  std::vector<std::optional<VertexId>> parent;
  std::vector<int> dist;

  bool is_tree_edge(VertexId a, VertexId b) const {
    return parent[a] == b || parent[b] == a;
  }
};

/// Breadth-first tree; each vertex scans its rotation starting from its
/// lowest-id neighbor.
BfsTree bfs_tree(const RotationGraph& g, VertexId root);

/// The unique cycle of T + e as [lca, ..., a, b, ..., child of lca] for
/// e = (a, b). Throws Errc::EdgeInTree unless e is a non-tree edge of g.
std::vector<VertexId> fundamental_cycle(const RotationGraph& g, const BfsTree& tree, Edge e);

struct CycleSides {
  std::vector<VertexId> inside;   // sorted
  std::vector<VertexId> outside;  // sorted; the side holding the outer face
};

/// Splits the vertices off a simple cycle by the two face components left
/// when the dual edges crossing the cycle are deleted.
CycleSides cycle_sides(const RotationGraph& g, const std::vector<VertexId>& cycle);

enum class RootPlace { OnCycle, Inside, Outside };

struct FundamentalCycle {
  Edge nontree_edge{};
  std::vector<VertexId> cycle;
  std::vector<VertexId> inside;
  std::vector<VertexId> outside;
  RootPlace root_place = RootPlace::OnCycle;

  int with_inside() const { return static_cast<int>(cycle.size() + inside.size()); }
  int with_outside() const { return static_cast<int>(cycle.size() + outside.size()); }
};

/// Side sizes of the fundamental cycle of one non-tree edge.
struct EdgeSides {
  EdgeId edge = 0;
  int cycle_length = 0;
  int inside = 0;
  int outside = 0;
};

/// Side counts for every non-tree edge, in EdgeId order, from one pass over
/// the interdigitating dual tree (rooted at the outer face). Faces below the
/// dual edge of e are exactly the faces inside its cycle, and for a
/// triangulated disc with f faces bounded by L cycle vertices the number of
/// interior vertices is (f - L + 2) / 2.
std::vector<EdgeSides> dual_tree_side_counts(const Triangulation& g, const BfsTree& tree);

/// Same table computed edge by edge with cycle_sides; the reference for the
/// dual-tree pass.
std::vector<EdgeSides> naive_side_counts(const RotationGraph& g, const BfsTree& tree);

/// True if three times each side is below 2n.
bool is_balanced(const EdgeSides& s, int n);

/// A fundamental cycle with both sides strictly below 2n/3. Among the
/// balanced edges the one maximizing min(|C u in|, |C u out|) wins, ties going
/// to the lowest EdgeId. Throws Errc::NoBalancedCycle if none exists, which
/// never happens for a valid triangulation.
FundamentalCycle find_balanced_cycle(const Triangulation& g, const BfsTree& tree);

/// Number of cycle vertices per BFS level.
std::vector<int> level_histogram(const std::vector<VertexId>& cycle, const BfsTree& tree);

}  // namespace firefight
