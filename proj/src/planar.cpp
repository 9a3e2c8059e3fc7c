#include "firefight/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace firefight {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Duplicate: return "Duplicate";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::BadOuterFace: return "BadOuterFace";
    case Errc::NotTriangulation: return "NotTriangulation";
    case Errc::TooSmall: return "TooSmall";
    case Errc::CannotTriangulate: return "CannotTriangulate";
    case Errc::Parse: return "Parse";
    case Errc::BadSize: return "BadSize";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParam: return "BadParam";
    case Errc::EdgeInTree: return "EdgeInTree";
    case Errc::NotACycle: return "NotACycle";
    case Errc::SidesNotTwo: return "SidesNotTwo";
    case Errc::NoBalancedCycle: return "NoBalancedCycle";
    case Errc::IllegalProtection: return "IllegalProtection";
    case Errc::OverBudget: return "OverBudget";
    case Errc::VertexMismatch: return "VertexMismatch";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::Inapplicable: return "Inapplicable";
    case Errc::ScheduleFailed: return "ScheduleFailed";
    case Errc::BadDegree: return "BadDegree";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string walk_string(std::span<const VertexId> walk) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < walk.size(); ++i) os << (i ? " " : "") << walk[i];
  os << ')';
  return os.str();
}

// True if b is a cyclic rotation of a, read forwards (or also backwards).
bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b, bool either_way) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  if (k == 0) return true;
  for (std::size_t s = 0; s < k; ++s) {
    bool fwd = true;
    bool bwd = either_way;
    for (std::size_t i = 0; i < k && (fwd || bwd); ++i) {
      if (a[i] != b[(s + i) % k]) fwd = false;
      if (a[i] != b[(s + k - i) % k]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace

RotationGraph RotationGraph::build(int n, Adjacency rotations,
                                   std::optional<std::vector<VertexId>> outer) {
  if (n < 1) throw Error(Errc::TooSmall, "graph needs at least one vertex");
  if (static_cast<int>(rotations.size()) != n) {
    throw Error(Errc::OutOfRange, "expected " + std::to_string(n) + " rotations, got " +
                                      std::to_string(rotations.size()));
  }

  RotationGraph g;
  g.n_ = n;
  g.rot_ = std::move(rotations);
  g.offset_.assign(n + 1, 0);

  for (VertexId v = 0; v < n; ++v) {
    const auto& r = g.rot_[v];
    for (VertexId w : r) {
      if (w < 0 || w >= n) {
        throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " lists neighbor " +
                                          std::to_string(w) + " outside [0, " +
                                          std::to_string(n) + ")");
      }
      if (w == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(v));
    }
    std::vector<VertexId> sorted(r.begin(), r.end());
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      throw Error(Errc::Duplicate, "vertex " + std::to_string(v) + " lists neighbor " +
                                       std::to_string(*it) + " twice");
    }
    g.offset_[v + 1] = g.offset_[v] + static_cast<int>(r.size());
  }

  const int darts = g.offset_[n];
  g.tail_.resize(darts);
  g.head_.resize(darts);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < g.rot_[v].size(); ++i) {
      g.tail_[g.offset_[v] + i] = v;
      g.head_[g.offset_[v] + i] = g.rot_[v][i];
    }
  }

  // Reverse darts by sorting on the undirected key.
  std::vector<DartId> order(darts);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](DartId d) {
    return std::tuple(std::min(g.tail_[d], g.head_[d]), std::max(g.tail_[d], g.head_[d]),
                      g.tail_[d]);
  };
  std::sort(order.begin(), order.end(), [&](DartId a, DartId b) { return key(a) < key(b); });
  g.rev_.assign(darts, -1);
  g.dart_edge_.assign(darts, -1);
  for (int i = 0; i < darts;) {
    const DartId d = order[i];
    const Edge e = make_edge(g.tail_[d], g.head_[d]);
    if (i + 1 < darts && make_edge(g.tail_[order[i + 1]], g.head_[order[i + 1]]) == e) {
      const DartId d2 = order[i + 1];
      g.rev_[d] = d2;
      g.rev_[d2] = d;
      g.dart_edge_[d] = g.dart_edge_[d2] = static_cast<EdgeId>(g.edges_.size());
      g.edges_.push_back(e);
      i += 2;
    } else {
      throw Error(Errc::NonSymmetric, std::to_string(g.tail_[d]) + " lists " +
                                          std::to_string(g.head_[d]) + " but " +
                                          std::to_string(g.head_[d]) + " does not list " +
                                          std::to_string(g.tail_[d]));
    }
  }

  {
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId w : g.rot_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached != n) {
      const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
      throw Error(Errc::Disconnected, "vertex " + std::to_string(missing) +
                                          " unreachable from vertex 0");
    }
  }

  g.face_of_.assign(darts, -1);
  if (n == 1) {
    g.faces_.push_back({0});
    g.face_darts_.push_back({});
  }
  for (DartId start = 0; start < darts; ++start) {
    if (g.face_of_[start] != -1) continue;
    const int f = static_cast<int>(g.faces_.size());
    std::vector<VertexId> walk;
    std::vector<DartId> walk_darts;
    DartId d = start;
    do {
      g.face_of_[d] = f;
      walk.push_back(g.tail_[d]);
      walk_darts.push_back(d);
      // position of tail(d) in rotation(head(d)) is the local index of rev(d)
      const DartId back = g.rev_[d];
      const VertexId v = g.head_[d];
      const int deg = g.offset_[v + 1] - g.offset_[v];
      d = g.offset_[v] + (back - g.offset_[v] + 1) % deg;
    } while (d != start);
    g.faces_.push_back(std::move(walk));
    g.face_darts_.push_back(std::move(walk_darts));
  }

  const int m = g.edge_count();
  const int f = g.face_count();
  if (n - m + f != 2) {
    throw Error(Errc::EulerViolation, "n - m + F = " + std::to_string(n) + " - " +
                                          std::to_string(m) + " + " + std::to_string(f) +
                                          " != 2; rotations do not describe a plane embedding");
  }

  if (outer) {
    auto it = std::find_if(g.faces_.begin(), g.faces_.end(),
                           [&](const auto& walk) { return same_cycle(walk, *outer, false); });
    if (it == g.faces_.end()) {
      it = std::find_if(g.faces_.begin(), g.faces_.end(),
                        [&](const auto& walk) { return same_cycle(walk, *outer, true); });
    }
    if (it == g.faces_.end()) {
      throw Error(Errc::BadOuterFace, walk_string(*outer) + " is not a facial walk");
    }
    g.outer_ = static_cast<int>(it - g.faces_.begin());
    g.outer_given_ = true;
  }
  return g;
}

std::optional<DartId> RotationGraph::dart(VertexId from, VertexId to) const {
  if (from < 0 || from >= n_) return std::nullopt;
  const auto& r = rot_[from];
  const auto it = std::find(r.begin(), r.end(), to);
  if (it == r.end()) return std::nullopt;
  return offset_[from] + static_cast<int>(it - r.begin());
}

std::optional<EdgeId> RotationGraph::edge_id(VertexId a, VertexId b) const {
  const Edge e = make_edge(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

TriangulationCheck is_triangulation(const RotationGraph& g) {
  TriangulationCheck check;
  for (int f = 0; f < g.face_count(); ++f) {
    if (g.faces()[f].size() != 3) check.non_triangular_faces.push_back(f);
  }
  check.ok = g.vertex_count() >= 3 && check.non_triangular_faces.empty();
  return check;
}

Triangulation Triangulation::from(RotationGraph g) {
  const auto check = is_triangulation(g);
  if (!check.ok) {
    std::ostringstream os;
    if (g.vertex_count() < 3) os << "n = " << g.vertex_count() << " < 3";
    for (int f : check.non_triangular_faces) {
      os << " face " << f << ' ' << walk_string(g.faces()[f]);
    }
    throw Error(Errc::NotTriangulation, os.str());
  }
  return Triangulation(std::move(g));
}

bool FanResult::is_original(VertexId a, VertexId b) const {
  return !std::binary_search(added.begin(), added.end(), make_edge(a, b));
}

namespace {

class FaceFiller {
 public:
  explicit FaceFiller(const RotationGraph& g) : rot_(g.rotations()) {
    for (const Edge& e : g.edges()) present_.insert(e);
  }

  // Fills one facial walk with triangles.
  void fill(std::vector<VertexId> walk) {
    if (walk.size() <= 3) return;
    if (try_fans(walk)) return;
    cut_ears(walk);
  }

  Adjacency take_rotations() { return std::move(rot_); }
  std::vector<Edge> take_added() {
    std::sort(added_.begin(), added_.end());
    return std::move(added_);
  }

 private:
  bool adjacent(VertexId a, VertexId b) const { return present_.count(make_edge(a, b)) != 0; }

  // The walk enters walk[i] from walk[i-1]; the face's corner at walk[i] is
  // the wedge directly after walk[i-1] in its rotation.
  void insert_after(VertexId at, VertexId after, VertexId inserted) {
    auto& r = rot_[at];
    const auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, inserted);
  }

  // Cuts the ear (walk[i-1], walk[i], walk[i+1]) with the chord
  // walk[i-1]--walk[i+1].
  void cut_ear(std::vector<VertexId>& walk, std::size_t i) {
    const std::size_t k = walk.size();
    const VertexId z = walk[(i + k - 2) % k];
    const VertexId a = walk[(i + k - 1) % k];
    const VertexId b = walk[i];
    const VertexId c = walk[(i + 1) % k];
    insert_after(a, z, c);
    insert_after(c, b, a);
    present_.insert(make_edge(a, c));
    added_.push_back(make_edge(a, c));
    walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i));
  }

  bool fan_ok(const std::vector<VertexId>& walk, std::size_t j) const {
    const std::size_t k = walk.size();
    const VertexId apex = walk[j];
    if (std::count(walk.begin(), walk.end(), apex) != 1) return false;
    std::vector<VertexId> targets;
    for (std::size_t s = 2; s + 1 < k; ++s) targets.push_back(walk[(j + s) % k]);
    for (VertexId t : targets) {
      if (adjacent(apex, t)) return false;
    }
    std::sort(targets.begin(), targets.end());
    return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
  }

  bool try_fans(std::vector<VertexId>& walk) {
    const std::size_t k = walk.size();
    const std::size_t first =
        static_cast<std::size_t>(std::min_element(walk.begin(), walk.end()) - walk.begin());
    for (std::size_t step = 0; step < k; ++step) {
      const std::size_t j = (first + step) % k;
      if (!fan_ok(walk, j)) continue;
      // Rotate so the apex sits at index 0, then repeatedly cut the ear at 1.
      std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(j), walk.end());
      while (walk.size() > 3) cut_ear(walk, 1);
      return true;
    }
    return false;
  }

  void cut_ears(std::vector<VertexId>& walk) {
    while (walk.size() > 3) {
      const std::size_t k = walk.size();
      bool cut = false;
      for (std::size_t i = 0; i < k && !cut; ++i) {
        const VertexId a = walk[(i + k - 1) % k];
        const VertexId c = walk[(i + 1) % k];
        if (a != c && !adjacent(a, c)) {
          cut_ear(walk, i);
          cut = true;
        }
      }
      if (!cut) {
        throw Error(Errc::CannotTriangulate,
                    "every chord of face " + walk_string(walk) + " duplicates an existing edge");
      }
    }
  }

  Adjacency rot_;
  std::set<Edge> present_;
  std::vector<Edge> added_;
};

}  // namespace

FanResult triangulate_by_fan(const RotationGraph& g) {
  if (g.vertex_count() < 3) {
    throw Error(Errc::TooSmall, "fan triangulation needs n >= 3, got " +
                                    std::to_string(g.vertex_count()));
  }
  FaceFiller filler(g);
  for (const auto& walk : g.faces()) filler.fill(walk);

  const DartId outer_dart = g.face_darts()[g.outer_face()].front();
  const VertexId ot = g.tail(outer_dart);
  const VertexId oh = g.head(outer_dart);

  auto tri = RotationGraph::build(g.vertex_count(), filler.take_rotations());
  const DartId d = *tri.dart(ot, oh);
  auto outer = tri.faces()[tri.face_of(d)];
  tri = RotationGraph::build(g.vertex_count(), Adjacency(tri.rotations()), std::move(outer));
  return FanResult{Triangulation::from(std::move(tri)), filler.take_added()};
}

Adjacency rotations_from_faces(int n, const std::vector<std::vector<VertexId>>& faces) {
  std::vector<std::map<VertexId, VertexId>> succ(n);
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId prev = f[(i + k - 1) % k];
      const VertexId at = f[i];
      const VertexId next = f[(i + 1) % k];
      if (!succ.at(at).emplace(prev, next).second) {
        throw Error(Errc::BadParam, "faces are not consistently oriented at vertex " +
                                        std::to_string(at));
      }
    }
  }
  Adjacency rot(n);
  for (VertexId v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    VertexId w = succ[v].begin()->first;
    for (std::size_t i = 0; i < succ[v].size(); ++i) {
      rot[v].push_back(w);
      const auto it = succ[v].find(w);
      if (it == succ[v].end()) {
        throw Error(Errc::BadParam, "broken corner cycle at vertex " + std::to_string(v));
      }
      w = it->second;
    }
    if (w != rot[v].front()) {
      throw Error(Errc::BadParam, "corners at vertex " + std::to_string(v) +
                                      " do not close into a single rotation");
    }
  }
  return rot;
}

Adjacency remove_edges(const Adjacency& rotations, std::span<const Edge> doomed) {
  std::set<Edge> gone(doomed.begin(), doomed.end());
  Adjacency out(rotations.size());
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    for (VertexId w : rotations[v]) {
      if (!gone.count(make_edge(static_cast<VertexId>(v), w))) out[v].push_back(w);
    }
  }
  return out;
}

}  // namespace firefight
