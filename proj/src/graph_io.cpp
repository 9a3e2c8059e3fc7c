#include "firefight/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace firefight {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<VertexId> read_ints(std::istringstream& is, int line) {
  std::vector<VertexId> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      parse_fail(line, "bad integer '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

RotationGraph parse_planar_rot(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0 header, 1 counts, 2 rotations
  int n = 0;
  int m = 0;
  Adjacency rot;
  std::vector<char> seen;
  int seen_count = 0;
  std::optional<std::vector<VertexId>> outer;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') continue;
    const std::string text = raw.substr(first);

    if (stage == 0) {
      if (text != "planar-rot v1") parse_fail(line_no, "expected header 'planar-rot v1'");
      stage = 1;
      continue;
    }
    if (stage == 1) {
      std::istringstream is(text);
      const auto counts = read_ints(is, line_no);
      if (counts.size() != 2 || counts[0] < 1 || counts[1] < 0) {
        parse_fail(line_no, "expected 'n m' with n >= 1");
      }
      n = counts[0];
      m = counts[1];
      rot.assign(n, {});
      seen.assign(n, 0);
      stage = 2;
      continue;
    }

    const auto colon = text.find(':');
    if (colon == std::string::npos) parse_fail(line_no, "expected 'v: ...' or 'outer: ...'");
    const std::string label = text.substr(0, colon);
    std::istringstream rest(text.substr(colon + 1));
    if (label == "outer") {
      if (outer) parse_fail(line_no, "duplicate outer line");
      outer = read_ints(rest, line_no);
      if (outer->empty()) parse_fail(line_no, "empty outer face");
      continue;
    }
    std::istringstream lab(label);
    const auto vs = read_ints(lab, line_no);
    if (vs.size() != 1) parse_fail(line_no, "bad vertex label '" + label + "'");
    const VertexId v = vs[0];
    if (v < 0 || v >= n) parse_fail(line_no, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) parse_fail(line_no, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    ++seen_count;
    rot[v] = read_ints(rest, line_no);
  }

  if (stage < 2) parse_fail(line_no, "truncated file");
  if (seen_count != n) {
    for (VertexId v = 0; v < n; ++v) {
      if (!seen[v]) parse_fail(line_no, "missing rotation line for vertex " + std::to_string(v));
    }
  }
  std::size_t half_edges = 0;
  for (const auto& r : rot) half_edges += r.size();
  if (half_edges != 2 * static_cast<std::size_t>(m)) {
    parse_fail(line_no, "header says m = " + std::to_string(m) + " but rotations list " +
                            std::to_string(half_edges) + " half-edges");
  }
  return RotationGraph::build(n, std::move(rot), std::move(outer));
}

RotationGraph read_planar_rot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  try {
    return parse_planar_rot(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_planar_rot(std::ostream& out, const RotationGraph& g) {
  out << "planar-rot v1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (VertexId w : g.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  if (g.outer_given()) {
    out << "outer:";
    for (VertexId v : g.faces()[g.outer_face()]) out << ' ' << v;
    out << '\n';
  }
}

void save_planar_rot(const std::filesystem::path& path, const RotationGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  write_planar_rot(out, g);
}

void write_dot(std::ostream& out, const Adjacency& adj, std::span<const Paint> paint,
               const std::string& name) {
  out << "graph " << name << " {\n  node [style=filled];\n";
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const Paint p = v < paint.size() ? paint[v] : Paint::Plain;
    const char* color = "white";
    switch (p) {
      case Paint::Burned: color = "orangered"; break;
      case Paint::Protected: color = "steelblue"; break;
      case Paint::Saved: color = "palegreen"; break;
      case Paint::Plain: break;
    }
    out << "  " << v << " [fillcolor=" << color << "];\n";
  }
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (VertexId w : adj[v]) {
      if (static_cast<std::size_t>(w) > v) out << "  " << v << " -- " << w << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace firefight
