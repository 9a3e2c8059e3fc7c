#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "firefight/planar.hpp"

namespace firefight {

/// Text format "planar-rot v1":
///
///   planar-rot v1
///   n m
///   v: w1 w2 ... wd        (one line per vertex, clockwise rotation)
///   outer: f1 f2 ... fk    (optional facial walk)
///
/// Lines starting with '#' are comments. Errors carry Errc::Parse and the
/// 1-based line number.
RotationGraph parse_planar_rot(std::istream& in);
RotationGraph read_planar_rot(const std::filesystem::path& path);

void write_planar_rot(std::ostream& out, const RotationGraph& g);
void save_planar_rot(const std::filesystem::path& path, const RotationGraph& g);

/// Per-vertex role for DOT coloring.
enum class Paint : unsigned char { Plain, Burned, Protected, Saved };

void write_dot(std::ostream& out, const Adjacency& adj, std::span<const Paint> paint,
               const std::string& name = "G");

}  // namespace firefight
