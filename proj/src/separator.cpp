#include "firefight/separator.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace firefight {

BfsTree bfs_tree(const RotationGraph& g, VertexId root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw Error(Errc::OutOfRange, "root " + std::to_string(root));
  BfsTree t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.dist.assign(n, -1);
  t.dist[root] = 0;
  std::queue<VertexId> q;
  q.push(root);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    const auto rot = g.rotation(v);
    if (rot.empty()) continue;
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(rot.begin(), rot.end()) - rot.begin());
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const VertexId w = rot[(start + i) % rot.size()];
      if (t.dist[w] != -1) continue;
      t.dist[w] = t.dist[v] + 1;
      t.parent[w] = v;
      q.push(w);
    }
  }
  return t;
}

namespace {

int cycle_length(const BfsTree& t, VertexId a, VertexId b) {
  int len = 1;
  while (a != b) {
    if (t.dist[a] >= t.dist[b]) {
      a = *t.parent[a];
    } else {
      b = *t.parent[b];
    }
    ++len;
  }
  return len;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<VertexId> fundamental_cycle(const RotationGraph& g, const BfsTree& tree, Edge e) {
  const auto a = e.first;
  const auto b = e.second;
  if (!g.has_edge(a, b)) {
    throw Error(Errc::EdgeInTree, std::to_string(a) + "-" + std::to_string(b) +
                                      " is not an edge of the graph");
  }
  if (tree.is_tree_edge(a, b)) {
    throw Error(Errc::EdgeInTree, std::to_string(a) + "-" + std::to_string(b) +
                                      " belongs to the tree");
  }
  std::vector<VertexId> up_a;  // a, parent(a), ..., lca
  std::vector<VertexId> up_b;  // b, parent(b), ..., below lca
  VertexId x = a;
  VertexId y = b;
  while (x != y) {
    if (tree.dist[x] >= tree.dist[y]) {
      up_a.push_back(x);
      x = *tree.parent[x];
    } else {
      up_b.push_back(y);
      y = *tree.parent[y];
    }
  }
  std::vector<VertexId> cycle;
  cycle.reserve(up_a.size() + up_b.size() + 1);
  cycle.push_back(x);
  cycle.insert(cycle.end(), up_a.rbegin(), up_a.rend());
  cycle.insert(cycle.end(), up_b.begin(), up_b.end());
  return cycle;
}

CycleSides cycle_sides(const RotationGraph& g, const std::vector<VertexId>& cycle) {
  const int n = g.vertex_count();
  const std::size_t len = cycle.size();
  if (len < 3) throw Error(Errc::NotACycle, "cycle of length " + std::to_string(len));
  std::vector<char> on_cycle(n, 0);
  std::vector<char> cut_edge(g.edge_count(), 0);
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId v = cycle[i];
    if (v < 0 || v >= n || on_cycle[v]) {
      throw Error(Errc::NotACycle, "vertex " + std::to_string(v) + " repeated or out of range");
    }
    on_cycle[v] = 1;
    const VertexId w = cycle[(i + 1) % len];
    const auto e = g.edge_id(v, w);
    if (!e) {
      throw Error(Errc::NotACycle, std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
    }
    cut_edge[*e] = 1;
  }

  DisjointSets faces(g.face_count());
  int components = g.face_count();
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (cut_edge[g.dart_edge(d)]) continue;
    if (faces.unite(g.face_of(d), g.face_of(g.reverse(d)))) --components;
  }
  if (components != 2) {
    throw Error(Errc::SidesNotTwo, "cycle leaves " + std::to_string(components) +
                                       " face components");
  }

  const int outer = faces.find(g.outer_face());
  CycleSides sides;
  for (VertexId v = 0; v < n; ++v) {
    if (on_cycle[v]) continue;
    const auto d0 = *g.dart(v, g.rotation(v).front());
    const int comp = faces.find(g.face_of(d0));
    for (std::size_t i = 1; i < g.rotation(v).size(); ++i) {
      if (faces.find(g.face_of(d0 + static_cast<int>(i))) != comp) {
        throw Error(Errc::SidesNotTwo, "vertex " + std::to_string(v) + " touches both sides");
      }
    }
    (comp == outer ? sides.outside : sides.inside).push_back(v);
  }
  return sides;
}

std::vector<EdgeSides> dual_tree_side_counts(const Triangulation& g, const BfsTree& tree) {
  const int n = g.vertex_count();
  const int faces = g.face_count();

  // Dual adjacency over non-tree edges only.
  std::vector<std::vector<std::pair<int, EdgeId>>> dual(faces);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edges()[e];
    if (tree.is_tree_edge(a, b)) continue;
    const DartId d = *g.dart(a, b);
    const int f1 = g.face_of(d);
    const int f2 = g.face_of(g.reverse(d));
    dual[f1].push_back({f2, e});
    dual[f2].push_back({f1, e});
  }

  // Iterative DFS from the outer face; order holds faces in discovery order.
  std::vector<int> parent_face(faces, -1);
  std::vector<EdgeId> parent_edge(faces, -1);
  std::vector<int> order;
  order.reserve(faces);
  std::vector<char> seen(faces, 0);
  std::vector<int> stack = {g.outer_face()};
  seen[g.outer_face()] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    order.push_back(f);
    for (const auto& [h, e] : dual[f]) {
      if (seen[h]) continue;
      seen[h] = 1;
      parent_face[h] = f;
      parent_edge[h] = e;
      stack.push_back(h);
    }
  }
  if (static_cast<int>(order.size()) != faces) {
    throw Error(Errc::SidesNotTwo, "non-tree edges do not span the dual");
  }

  std::vector<int> below(faces, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent_face[*it] >= 0) below[parent_face[*it]] += below[*it];
  }

  std::vector<EdgeSides> table;
  table.reserve(faces - 1);
  std::vector<int> child_of_edge(g.edge_count(), -1);
  for (int f = 0; f < faces; ++f) {
    if (parent_edge[f] >= 0) child_of_edge[parent_edge[f]] = f;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int child = child_of_edge[e];
    if (child < 0) continue;
    const auto [a, b] = g.edges()[e];
    EdgeSides s;
    s.edge = e;
    s.cycle_length = cycle_length(tree, a, b);
    s.inside = (below[child] - s.cycle_length + 2) / 2;
    s.outside = n - s.cycle_length - s.inside;
    table.push_back(s);
  }
  return table;
}

std::vector<EdgeSides> naive_side_counts(const RotationGraph& g, const BfsTree& tree) {
  std::vector<EdgeSides> table;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge edge = g.edges()[e];
    if (tree.is_tree_edge(edge.first, edge.second)) continue;
    const auto cycle = fundamental_cycle(g, tree, edge);
    const auto sides = cycle_sides(g, cycle);
    table.push_back({e, static_cast<int>(cycle.size()), static_cast<int>(sides.inside.size()),
                     static_cast<int>(sides.outside.size())});
  }
  return table;
}

bool is_balanced(const EdgeSides& s, int n) {
  return 3 * s.inside < 2 * n && 3 * s.outside < 2 * n;
}

FundamentalCycle find_balanced_cycle(const Triangulation& g, const BfsTree& tree) {
  const int n = g.vertex_count();
  const auto table = dual_tree_side_counts(g, tree);
  const EdgeSides* best = nullptr;
  int best_score = -1;
  for (const auto& s : table) {
    if (!is_balanced(s, n)) continue;
    const int score = s.cycle_length + std::min(s.inside, s.outside);
    if (score > best_score) {
      best = &s;
      best_score = score;
    }
  }
  if (!best) {
    std::ostringstream os;
    os << "no balanced fundamental cycle for root " << tree.root << " on n = " << n << " ("
       << table.size() << " non-tree edges scanned)";
    throw Error(Errc::NoBalancedCycle, os.str());
  }

  FundamentalCycle fc;
  fc.nontree_edge = g.edges()[best->edge];
  fc.cycle = fundamental_cycle(g, tree, fc.nontree_edge);
  auto sides = cycle_sides(g, fc.cycle);
  if (static_cast<int>(sides.inside.size()) != best->inside ||
      static_cast<int>(fc.cycle.size()) != best->cycle_length) {
    throw Error(Errc::NoBalancedCycle, "dual-tree side count disagrees with face classification");
  }
  fc.inside = std::move(sides.inside);
  fc.outside = std::move(sides.outside);
  if (std::binary_search(fc.inside.begin(), fc.inside.end(), tree.root)) {
    fc.root_place = RootPlace::Inside;
  } else if (std::binary_search(fc.outside.begin(), fc.outside.end(), tree.root)) {
    fc.root_place = RootPlace::Outside;
  } else {
    fc.root_place = RootPlace::OnCycle;
  }
  return fc;
}

std::vector<int> level_histogram(const std::vector<VertexId>& cycle, const BfsTree& tree) {
  int top = 0;
  for (VertexId v : cycle) top = std::max(top, tree.dist[v]);
  std::vector<int> hist(top + 1, 0);
  for (VertexId v : cycle) ++hist[tree.dist[v]];
  return hist;
}

}  // namespace firefight
