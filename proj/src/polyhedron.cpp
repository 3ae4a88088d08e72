#include "orthocusp/polyhedron.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "orthocusp/error.hpp"

namespace orthocusp::core {

Polyhedron3::Polyhedron3(int vertex_count, std::vector<int> ideal_vertices,
                         std::vector<std::vector<int>> faces)
    : vertex_count_(vertex_count), ideal_(std::move(ideal_vertices)), faces_(std::move(faces)) {
  if (vertex_count_ < 0) throw PreconditionError("negative vertex count");
  ideal_mask_.assign(vertex_count_, 0);
  for (int v : ideal_) {
    if (v < 0 || v >= vertex_count_)
      throw PreconditionError("ideal vertex " + std::to_string(v) + " is not declared");
    if (ideal_mask_[v]) throw PreconditionError("ideal vertex " + std::to_string(v) + " repeated");
    ideal_mask_[v] = 1;
  }
  std::sort(ideal_.begin(), ideal_.end());

  std::set<Edge> edges;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& face = faces_[f];
    if (face.size() < 3)
      throw PreconditionError("face " + std::to_string(f) + " has fewer than three vertices");
    std::set<int> seen;
    for (int v : face) {
      if (v < 0 || v >= vertex_count_)
        throw PreconditionError("face " + std::to_string(f) + ": vertex id " + std::to_string(v) +
                                " out of range");
      if (!seen.insert(v).second)
        throw PreconditionError("face " + std::to_string(f) + ": duplicate vertex " +
                                std::to_string(v));
    }
    for (std::size_t i = 0; i < face.size(); ++i)
      edges.emplace(face[i], face[(i + 1) % face.size()]);
  }
  edges_.assign(edges.begin(), edges.end());
}

std::vector<int> Polyhedron3::vertex_degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const auto& f : faces_)
    for (int v : f) ++deg[v];
  return deg;
}

// ---------------------------------------------------------------------------
// POLY3 text format

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int column_of(const std::string& line, const std::string& token, std::size_t from = 0) {
  const auto pos = line.find(token, from);
  return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
}

int parse_int(const Line& line, const std::string& tok) {
  const int col = column_of(line.text, tok);
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line.number, col, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line.number, col, "integer out of range");
  }
}

std::string after_key(const Line& line, const std::string& key) {
  const auto trimmed_start = line.text.find_first_not_of(" \t");
  if (trimmed_start == std::string::npos || line.text.compare(trimmed_start, key.size(), key) != 0)
    throw ParseError(line.number, static_cast<int>(trimmed_start == std::string::npos ? 1 : trimmed_start + 1),
                     "expected '" + key + "'");
  return line.text.substr(trimmed_start + key.size());
}

}  // namespace

Polyhedron3 parse_poly3(std::string_view text) {
  std::vector<Line> lines;
  {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string raw(text.substr(pos, end - pos));
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t") != std::string::npos) lines.push_back({number, raw});
      pos = end + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty document");

  std::size_t i = 0;
  if (split_ws(lines[0].text) != std::vector<std::string>{"poly3", "v1"})
    throw ParseError(lines[0].number, 1, "expected header 'poly3 v1'");
  ++i;

  if (i >= lines.size()) throw ParseError(lines.back().number + 1, 1, "missing 'vertices:' line");
  const auto vtoks = split_ws(after_key(lines[i], "vertices:"));
  if (vtoks.size() != 1)
    throw ParseError(lines[i].number, 1, "'vertices:' takes exactly one integer");
  const int n = parse_int(lines[i], vtoks[0]);
  ++i;

  if (i >= lines.size()) throw ParseError(lines.back().number + 1, 1, "missing 'ideal:' line");
  std::vector<int> ideal;
  {
    const Line& line = lines[i];
    std::set<int> seen;
    for (const auto& tok : split_ws(after_key(line, "ideal:"))) {
      const int v = parse_int(line, tok);
      if (v >= n)
        throw ParseError(line.number, column_of(line.text, tok),
                         "ideal id " + std::to_string(v) + " not declared (vertices: " +
                             std::to_string(n) + ")");
      if (!seen.insert(v).second)
        throw ParseError(line.number, column_of(line.text, tok),
                         "ideal id " + std::to_string(v) + " listed twice");
      ideal.push_back(v);
    }
  }
  ++i;

  std::vector<std::vector<int>> faces;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::vector<int> face;
    std::set<int> seen;
    std::size_t search_from = line.text.find("face:");
    for (const auto& tok : split_ws(after_key(line, "face:"))) {
      const int col = column_of(line.text, tok, search_from + 5);
      search_from = static_cast<std::size_t>(col);
      const int v = parse_int(line, tok);
      if (v >= n)
        throw ParseError(line.number, col, "vertex id " + std::to_string(v) + " out of range");
      if (!seen.insert(v).second)
        throw ParseError(line.number, col, "duplicate vertex " + std::to_string(v) + " in face");
      face.push_back(v);
    }
    if (face.size() < 3)
      throw ParseError(line.number, 1, "a face needs at least three vertices");
    faces.push_back(std::move(face));
  }
  return Polyhedron3(n, std::move(ideal), std::move(faces));
}

std::string format_poly3(const Polyhedron3& p, std::string_view comment) {
  std::ostringstream out;
  out << "poly3 v1\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "vertices: " << p.vertex_count() << "\n";
  out << "ideal:";
  for (int v : p.ideal_vertices()) out << ' ' << v;
  out << "\n";
  for (const auto& f : p.faces()) {
    out << "face:";
    for (int v : f) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const Polyhedron3& p, const std::optional<DegreeProfile>& profile) {
  ValidationReport report;
  const int n = p.vertex_count();

  // Each undirected edge must be walked once in each direction.
  std::map<std::pair<int, int>, int> darts;
  for (const auto& f : p.faces())
    for (std::size_t i = 0; i < f.size(); ++i) ++darts[{f[i], f[(i + 1) % f.size()]}];
  for (const Edge& e : p.edges()) {
    const int fwd = darts.count({e.u, e.v}) ? darts[{e.u, e.v}] : 0;
    const int bwd = darts.count({e.v, e.u}) ? darts[{e.v, e.u}] : 0;
    if (fwd + bwd != 2) {
      report.violations.push_back({"edge-face-count", "edge " + std::to_string(e.u) + "-" +
                                                          std::to_string(e.v) + " lies on " +
                                                          std::to_string(fwd + bwd) + " faces"});
    } else if (fwd != 1) {
      report.violations.push_back({"edge-orientation", "edge " + std::to_string(e.u) + "-" +
                                                           std::to_string(e.v) +
                                                           " traversed twice in one direction"});
    }
  }

  const auto deg = p.vertex_degrees();
  for (int v = 0; v < n; ++v)
    if (deg[v] == 0) report.violations.push_back({"isolated-vertex", "vertex " + std::to_string(v)});

  if (report.violations.empty()) {
    // Vertex links must close up into a single cycle.
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : p.faces()) {
      const std::size_t k = f.size();
      for (std::size_t i = 0; i < k; ++i) succ[f[(i + 1) % k]][f[i]] = f[(i + 2) % k];
    }
    for (int v = 0; v < n; ++v) {
      int u = succ[v].begin()->first;
      const int u0 = u;
      std::size_t steps = 0;
      do {
        u = succ[v][u];
        ++steps;
      } while (u != u0 && steps <= succ[v].size());
      if (steps != succ[v].size())
        report.violations.push_back({"vertex-link", "vertex " + std::to_string(v) +
                                                        " is not a manifold point"});
    }
  }

  {
    // Incidence graph connectivity, via vertex adjacency along faces.
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : p.edges()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> mark(n, 0);
    int reached = 0;
    if (n > 0) {
      std::vector<int> stack{0};
      mark[0] = 1;
      reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (!mark[w]) {
            mark[w] = 1;
            ++reached;
            stack.push_back(w);
          }
      }
    }
    if (reached != n || p.face_count() == 0)
      report.violations.push_back({"disconnected", std::to_string(reached) + " of " +
                                                       std::to_string(n) + " vertices reachable"});
  }

  const int euler = p.vertex_count() - p.edge_count() + p.face_count();
  if (euler != 2)
    report.violations.push_back({"euler", "V - E + F = " + std::to_string(euler)});

  {
    std::map<std::pair<int, int>, int> shared;
    std::map<std::pair<int, int>, int> face_of_dart;
    for (int f = 0; f < p.face_count(); ++f) {
      const auto& face = p.faces()[f];
      for (std::size_t i = 0; i < face.size(); ++i)
        face_of_dart[{face[i], face[(i + 1) % face.size()]}] = f;
    }
    for (const Edge& e : p.edges()) {
      auto a = face_of_dart.find({e.u, e.v});
      auto b = face_of_dart.find({e.v, e.u});
      if (a == face_of_dart.end() || b == face_of_dart.end()) continue;
      ++shared[{std::min(a->second, b->second), std::max(a->second, b->second)}];
    }
    for (const auto& [pair, count] : shared)
      if (count > 1)
        report.notes.push_back({"multi-edge", "faces " + std::to_string(pair.first) + " and " +
                                                  std::to_string(pair.second) + " share " +
                                                  std::to_string(count) + " edges"});
  }

  if (profile) {
    for (int v = 0; v < n; ++v) {
      const bool ideal = p.is_ideal(v);
      const int required = ideal ? profile->ideal_degree : profile->finite_degree;
      if (deg[v] != required) report.degree_violations.push_back({v, ideal, deg[v], required});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Derived structure

int Topology::edge_id(int a, int b) const {
  const Edge e(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  return (it != edges.end() && *it == e) ? static_cast<int>(it - edges.begin()) : -1;
}

namespace {

void require_valid(const Polyhedron3& p) {
  const auto report = validate(p);
  if (!report.valid())
    throw PreconditionError("invalid polyhedron: " + report.violations.front().kind + " (" +
                            report.violations.front().witness + ")");
}

}  // namespace

Topology topology(const Polyhedron3& p) {
  require_valid(p);
  Topology t;
  t.edges = p.edges();
  t.edge_faces.assign(t.edges.size(), {-1, -1});
  std::map<std::pair<int, int>, int> face_of_dart;
  t.face_edges.resize(p.face_count());
  for (int f = 0; f < p.face_count(); ++f) {
    const auto& face = p.faces()[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % face.size()];
      face_of_dart[{a, b}] = f;
      const int e = t.edge_id(a, b);
      t.face_edges[f].push_back(e);
      if (a < b) t.edge_faces[e].first = f;
      else t.edge_faces[e].second = f;
    }
  }
  const PlaneMap map = to_plane_map(p);
  const int n = p.vertex_count();
  t.vertex_faces.resize(n);
  t.vertex_edges.resize(n);
  t.degree.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int u : map.rot[v]) {
      t.vertex_faces[v].push_back(face_of_dart.at({u, v}));
      t.vertex_edges[v].push_back(t.edge_id(u, v));
    }
    t.degree[v] = map.degree(v);
  }
  return t;
}

PlaneMap to_plane_map(const Polyhedron3& p) { return map_from_faces(p.vertex_count(), p.faces()); }

Polyhedron3 from_plane_map(const PlaneMap& map, std::vector<int> ideal) {
  return Polyhedron3(map.vertex_count(), std::move(ideal), map.faces());
}

Polyhedron3 dual(const Polyhedron3& p) {
  const Topology t = topology(p);
  std::vector<std::vector<int>> faces(t.vertex_faces.begin(), t.vertex_faces.end());
  return Polyhedron3(p.face_count(), {}, std::move(faces));
}

Polyhedron3 with_ideal(const Polyhedron3& p, std::vector<int> ideal) {
  return Polyhedron3(p.vertex_count(), std::move(ideal), p.faces());
}

Polyhedron3 contract_edge(const Polyhedron3& p, Edge e) {
  const Topology t = topology(p);
  const int id = t.edge_id(e.u, e.v);
  if (id < 0)
    throw PreconditionError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  for (int v : {e.u, e.v}) {
    if (p.is_ideal(v))
      throw PreconditionError("edge endpoint " + std::to_string(v) + " is ideal");
    if (t.degree[v] != 3)
      throw PreconditionError("edge endpoint " + std::to_string(v) + " does not have degree 3");
  }
  for (int f : {t.edge_faces[id].first, t.edge_faces[id].second})
    if (p.faces()[f].size() < 4)
      throw PreconditionError("face " + std::to_string(f) + " containing the edge is a triangle");

  const int keep = e.u;
  const int drop = e.v;
  auto relabel = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };
  std::vector<std::vector<int>> faces;
  for (const auto& f : p.faces()) {
    std::vector<int> out;
    for (int v : f) {
      const int w = relabel(v);
      if (!out.empty() && out.back() == w) continue;
      out.push_back(w);
    }
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    faces.push_back(std::move(out));
  }
  std::vector<int> ideal;
  for (int v : p.ideal_vertices()) ideal.push_back(relabel(v));
  ideal.push_back(relabel(keep));
  return Polyhedron3(p.vertex_count() - 1, std::move(ideal), std::move(faces));
}

// ---------------------------------------------------------------------------
// Canonical forms

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

CanonicalLabelling labelling_of(const Polyhedron3& p) {
  require_valid(p);
  std::vector<std::uint8_t> colors(p.vertex_count(), 0);
  for (int v : p.ideal_vertices()) colors[v] = 1;
  return canonical_labelling(to_plane_map(p), colors);
}

}  // namespace

CanonicalCode canonical_code(const Polyhedron3& p) { return {labelling_of(p).code}; }

Polyhedron3 canonical_form(const Polyhedron3& p) {
  const auto lab = labelling_of(p);
  std::vector<std::vector<int>> faces;
  for (const auto& f : p.faces()) {
    std::vector<int> g;
    for (int v : f) g.push_back(lab.number[v]);
    if (lab.mirrored) std::reverse(g.begin(), g.end());
    std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
    faces.push_back(std::move(g));
  }
  std::sort(faces.begin(), faces.end());
  std::vector<int> ideal;
  for (int v : p.ideal_vertices()) ideal.push_back(lab.number[v]);
  return Polyhedron3(p.vertex_count(), std::move(ideal), std::move(faces));
}

FaceLattice to_face_lattice(const Polyhedron3& p) {
  const Topology t = topology(p);
  FaceLattice lattice(3);
  for (int v = 0; v < p.vertex_count(); ++v) lattice.add_face(0, {}, p.is_ideal(v));
  const int edge_base = p.vertex_count();
  for (const Edge& e : t.edges) lattice.add_face(1, {e.u, e.v});
  for (const auto& fe : t.face_edges) {
    std::vector<int> below;
    for (int e : fe) below.push_back(edge_base + e);
    lattice.add_face(2, std::move(below));
  }
  return lattice;
}

// ---------------------------------------------------------------------------
// Fixtures

Polyhedron3 tetrahedron() {
  return Polyhedron3(4, {}, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

Polyhedron3 triangular_prism() {
  return Polyhedron3(6, {}, {{0, 1, 4, 3}, {0, 2, 1}, {0, 3, 5, 2}, {1, 2, 5, 4}, {3, 4, 5}});
}

Polyhedron3 square_pyramid() {
  return Polyhedron3(5, {}, {{0, 1, 4}, {0, 3, 2, 1}, {0, 4, 3}, {1, 2, 4}, {2, 3, 4}});
}

Polyhedron3 cube() {
  return Polyhedron3(8, {},
                     {{0, 1, 3, 2}, {0, 2, 6, 4}, {0, 4, 5, 1}, {1, 5, 7, 3}, {2, 3, 7, 6}, {4, 6, 7, 5}});
}

Polyhedron3 dodecahedron() {
  return Polyhedron3(20, {},
                     {{0, 8, 4, 15, 9},
                      {0, 9, 1, 13, 10},
                      {0, 10, 2, 14, 8},
                      {1, 9, 15, 5, 11},
                      {1, 11, 17, 3, 13},
                      {2, 10, 13, 3, 12},
                      {2, 12, 18, 6, 14},
                      {3, 17, 7, 18, 12},
                      {4, 8, 14, 6, 16},
                      {4, 16, 19, 5, 15},
                      {5, 19, 7, 17, 11},
                      {6, 18, 7, 19, 16}});
}

Polyhedron3 contracted_dodecahedron() { return contract_edge(dodecahedron(), Edge(0, 8)); }

bool is_tetrahedron_type(const Polyhedron3& p) {
  if (p.face_count() != 4 || p.vertex_count() != 4) return false;
  return std::all_of(p.faces().begin(), p.faces().end(), [](const auto& f) { return f.size() == 3; });
}

bool is_triangular_prism_type(const Polyhedron3& p) {
  if (p.face_count() != 5 || p.vertex_count() != 6) return false;
  std::vector<std::size_t> sizes;
  for (const auto& f : p.faces()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes == std::vector<std::size_t>{3, 3, 4, 4, 4};
}

}  // namespace orthocusp::core
