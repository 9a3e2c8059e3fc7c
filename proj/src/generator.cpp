#include "firefight/generator.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace firefight {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Apollonian: return "apollonian";
    case GenKind::Flip: return "flip";
    case GenKind::Wheel: return "wheel";
    case GenKind::K2n: return "k2n";
    case GenKind::Octahedron: return "octahedron";
    case GenKind::Icosahedron: return "icosahedron";
  }
  return "?";
}

GenKind parse_gen_kind(const std::string& name) {
  for (GenKind k : {GenKind::Apollonian, GenKind::Flip, GenKind::Wheel, GenKind::K2n,
                    GenKind::Octahedron, GenKind::Icosahedron}) {
    if (name == gen_kind_name(k)) return k;
  }
  throw Error(Errc::UnknownName, "unknown generator kind '" + name + "'");
}

namespace {

constexpr int kMaxVertices = 1 << 20;

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId inserted) {
  const auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, inserted);
}

VertexId succ(const std::vector<VertexId>& rot, VertexId w) {
  const auto it = std::find(rot.begin(), rot.end(), w);
  return std::next(it) == rot.end() ? rot.front() : *std::next(it);
}

bool listed(const std::vector<VertexId>& rot, VertexId w) {
  return std::find(rot.begin(), rot.end(), w) != rot.end();
}

const std::vector<VertexId> kOuter = {0, 1, 2};

// Rotations of the stacked triangulation; the outer face stays 0 1 2.
Adjacency apollonian_rotations(int n, Rng& rng) {
  Adjacency rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  std::vector<std::array<VertexId, 3>> faces = {{0, 3, 1}, {1, 3, 2}, {2, 3, 0}};
  rot.reserve(n);
  faces.reserve(2 * n);
  for (VertexId x = 4; x < n; ++x) {
    const std::size_t i = rng.below(faces.size());
    const auto [a, b, c] = faces[i];
    insert_after(rot[a], c, x);
    insert_after(rot[b], a, x);
    insert_after(rot[c], b, x);
    rot.push_back({a, c, b});
    faces[i] = {a, x, c};
    faces.push_back({b, x, a});
    faces.push_back({c, x, b});
  }
  return rot;
}

void check_size(int n) {
  if (n < 4 || n > kMaxVertices) {
    throw Error(Errc::BadSize, "triangulation size must lie in [4, " +
                                   std::to_string(kMaxVertices) + "], got " + std::to_string(n));
  }
}

}  // namespace

Triangulation gen_apollonian(int n, std::uint64_t seed) {
  check_size(n);
  Rng rng(seed);
  return Triangulation::from(RotationGraph::build(n, apollonian_rotations(n, rng), kOuter));
}

Triangulation gen_flip(int n, std::uint64_t seed, int flips) {
  check_size(n);
  if (flips < 0) throw Error(Errc::BadSize, "negative flip count");
  Rng rng(seed);
  Adjacency rot = apollonian_rotations(n, rng);

  std::vector<Edge> interior;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rot[v]) {
      if (w <= v) continue;
      const bool on_outer = v <= 2 && w <= 2;
      if (!on_outer) interior.push_back({v, w});
    }
  }

  for (int attempt = 0; attempt < flips; ++attempt) {
    const std::size_t i = rng.below(interior.size());
    const auto [a, b] = interior[i];
    const VertexId c = succ(rot[b], a);  // face a b c
    const VertexId d = succ(rot[a], b);  // face b a d
    const bool triangles = succ(rot[c], b) == a && succ(rot[d], a) == b;
    if (!triangles || c == d || listed(rot[c], d)) continue;
    std::erase(rot[a], b);
    std::erase(rot[b], a);
    insert_after(rot[c], b, d);
    insert_after(rot[d], a, c);
    interior[i] = make_edge(c, d);
  }
  return Triangulation::from(RotationGraph::build(n, std::move(rot), kOuter));
}

RotationGraph gen_named(const std::string& name, int param) {
  if (name == "k2n") {
    if (param < 1 || param > kMaxVertices) {
      throw Error(Errc::BadParam, "k2n needs 1 <= param, got " + std::to_string(param));
    }
    // 0 and 1 form the small side; 2 .. param+1 the large side.
    const int n = param + 2;
    Adjacency rot(n);
    for (VertexId i = 2; i < n; ++i) {
      rot[0].push_back(i);
      rot[1].insert(rot[1].begin(), i);
      rot[i] = {0, 1};
    }
    return RotationGraph::build(n, std::move(rot), std::vector<VertexId>{0, 2, 1, n - 1});
  }
  if (name == "wheel") {
    if (param < 3 || param > kMaxVertices) {
      throw Error(Errc::BadParam, "wheel needs at least 3 rim vertices, got " +
                                      std::to_string(param));
    }
    const int k = param;
    Adjacency rot(k + 1);
    for (VertexId i = 1; i <= k; ++i) {
      rot[0].push_back(i);
      const VertexId prev = i == 1 ? k : i - 1;
      const VertexId next = i == k ? 1 : i + 1;
      rot[i] = {0, prev, next};
    }
    std::vector<VertexId> rim;
    for (VertexId i = 1; i <= k; ++i) rim.push_back(i);
    return RotationGraph::build(k + 1, std::move(rot), rim);
  }
  if (name == "octahedron") {
    // 0 top, 5 bottom, equator 1 2 3 4
    std::vector<std::vector<VertexId>> faces;
    for (VertexId i = 1; i <= 4; ++i) {
      const VertexId j = i == 4 ? 1 : i + 1;
      faces.push_back({0, j, i});
      faces.push_back({i, j, 5});
    }
    return RotationGraph::build(6, rotations_from_faces(6, faces), faces.front());
  }
  if (name == "icosahedron") {
    // 0 top, upper ring 1..5, lower ring 6..10, 11 bottom; low(i) sits
    // between up(i) and up(i + 1)
    std::vector<std::vector<VertexId>> faces;
    auto up = [](int i) { return 1 + (i % 5); };
    auto low = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
      faces.push_back({0, up(i + 1), up(i)});
      faces.push_back({up(i), up(i + 1), low(i)});
      faces.push_back({low(i), up(i + 1), low(i + 1)});
      faces.push_back({low(i), low(i + 1), 11});
    }
    return RotationGraph::build(12, rotations_from_faces(12, faces), faces.front());
  }
  throw Error(Errc::UnknownName, "unknown named graph '" + name + "'");
}

RotationGraph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Apollonian: return gen_apollonian(spec.n, spec.seed);
    case GenKind::Flip: return gen_flip(spec.n, spec.seed, spec.flips);
    case GenKind::Wheel: return gen_named("wheel", spec.n);
    case GenKind::K2n: return gen_named("k2n", spec.n);
    case GenKind::Octahedron: return gen_named("octahedron");
    case GenKind::Icosahedron: return gen_named("icosahedron");
  }
  throw Error(Errc::UnknownName, "unknown generator kind");
}

}  // namespace firefight
