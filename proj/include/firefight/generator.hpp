#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "firefight/planar.hpp"

namespace firefight {

/// Seeded source for every generator. The engine is std::mt19937_64 seeded
/// with the 64-bit seed directly; bounded draws use rejection on the raw
/// 64-bit output (reject x < 2^64 mod bound, then return x mod bound), so a
/// sequence of draws is reproducible on any conforming implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { Apollonian, Flip, Wheel, K2n, Octahedron, Icosahedron };

struct GenSpec {
  GenKind kind = GenKind::Apollonian;
  int n = 4;  // vertex count; for Wheel the rim size, for K2n the large side
  std::uint64_t seed = 0;
  int flips = 0;
};

const char* gen_kind_name(GenKind kind);
GenKind parse_gen_kind(const std::string& name);

/// Stacked triangulation grown from K4 (outer face 0 1 2) by repeatedly
/// inserting a vertex into a uniformly chosen bounded face.
Triangulation gen_apollonian(int n, std::uint64_t seed);

/// gen_apollonian followed by `flips` attempted diagonal flips of uniformly
/// chosen edges off the outer face. Attempts that would duplicate an edge are
/// skipped but still counted.
Triangulation gen_flip(int n, std::uint64_t seed, int flips);

/// Named families: "k2n" (K_{2,param}), "wheel" (param rim vertices),
/// "octahedron", "icosahedron". Only the last two are triangulations.
RotationGraph gen_named(const std::string& name, int param = 0);

RotationGraph generate(const GenSpec& spec);

}  // namespace firefight
