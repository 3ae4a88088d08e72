#include "orthocusp/andreev.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orthocusp/error.hpp"

namespace orthocusp::andreev {

using core::Edge;
using core::Polyhedron3;
using core::Topology;

AngleAssignment AngleAssignment::all_right(const Polyhedron3& p) {
  AngleAssignment a;
  for (const Edge& e : p.edges()) a.set(e, make_rational(1, 2));
  return a;
}

void AngleAssignment::set(Edge e, Rational q) { angles_[e] = std::move(q); }

const Rational* AngleAssignment::find(Edge e) const {
  auto it = angles_.find(e);
  return it == angles_.end() ? nullptr : &it->second;
}

AngleAssignment parse_angles(std::string_view text) {
  AngleAssignment out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    if (key != "angle:") throw ParseError(number, 1, "expected 'angle:'");
    long u, v, p, q;
    if (!(words >> u >> v >> p >> q)) throw ParseError(number, 1, "expected 'angle: u v p q'");
    std::string extra;
    if (words >> extra) throw ParseError(number, 1, "trailing text '" + extra + "'");
    if (q == 0) throw ParseError(number, 1, "zero denominator");
    out.set(Edge(static_cast<int>(u), static_cast<int>(v)), make_rational(p, q));
  }
  return out;
}

FaceAdjacency::FaceAdjacency(const Polyhedron3& p) : topology_(core::topology(p)) {
  const int f = p.face_count();
  shared_.assign(f, std::vector<std::vector<int>>(f));
  for (std::size_t e = 0; e < topology_.edges.size(); ++e) {
    const auto [a, b] = topology_.edge_faces[e];
    shared_[a][b].push_back(static_cast<int>(e));
    shared_[b][a].push_back(static_cast<int>(e));
  }
}

std::vector<int> FaceAdjacency::neighbours(int f) const {
  std::vector<int> out;
  for (int g = 0; g < face_count(); ++g)
    if (adjacent(f, g)) out.push_back(g);
  return out;
}

FaceAdjacency adjacency(const Polyhedron3& p) { return FaceAdjacency(p); }

namespace {

std::set<int> crossing_endpoints(const FaceAdjacency& adj, int f, int g) {
  std::set<int> out;
  for (int e : adj.shared_edges(f, g)) {
    out.insert(adj.topology().edges[e].u);
    out.insert(adj.topology().edges[e].v);
  }
  return out;
}

bool pairwise_disjoint(const std::vector<std::set<int>>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      for (int v : sets[i])
        if (sets[j].count(v)) return false;
  return true;
}

std::vector<PrismaticCircuit> circuits(const FaceAdjacency& adj, int length) {
  const int n = adj.face_count();
  std::vector<PrismaticCircuit> out;
  if (length == 3) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!adj.adjacent(a, b)) continue;
        for (int c = b + 1; c < n; ++c) {
          if (!adj.adjacent(a, c) || !adj.adjacent(b, c)) continue;
          if (pairwise_disjoint({crossing_endpoints(adj, a, b), crossing_endpoints(adj, b, c),
                                 crossing_endpoints(adj, c, a)}))
            out.push_back({{a, b, c}});
        }
      }
  } else if (length == 4) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!adj.adjacent(a, b)) continue;
        for (int d = b + 1; d < n; ++d) {
          if (!adj.adjacent(a, d)) continue;
          for (int c = a + 1; c < n; ++c) {
            if (c == b || c == d || !adj.adjacent(b, c) || !adj.adjacent(c, d)) continue;
            if (pairwise_disjoint({crossing_endpoints(adj, a, b), crossing_endpoints(adj, b, c),
                                   crossing_endpoints(adj, c, d), crossing_endpoints(adj, d, a)}))
              out.push_back({{a, b, c, d}});
          }
        }
      }
  } else {
    throw PreconditionError("circuit length must be 3 or 4");
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rational& angle_between(const FaceAdjacency& adj, const AngleAssignment& angles, int f, int g) {
  const int e = adj.shared_edges(f, g).front();
  return *angles.find(adj.topology().edges[e]);
}

bool contains(const std::vector<int>& face, int v) {
  return std::find(face.begin(), face.end(), v) != face.end();
}

struct Evaluation {
  Condition a{"a", "angle sum at a vertex >= pi (= pi at a 3-valent cusp)", {}};
  Condition b{"b", "all angles at a 4-valent cusp equal pi/2", {}};
  Condition c{"c", "angle sum < pi on a prismatic 3-circuit", {}};
  Condition d{"d", "not both right: face adjacent to two non-adjacent faces through a cusp it misses", {}};
  Condition e{"e", "some angle != pi/2 on a prismatic 4-circuit", {}};
};

// Conditions (c), (d), (e) only need the face structure and the angles.
void evaluate_circuits(const Polyhedron3& p, const FaceAdjacency& adj,
                       const AngleAssignment& angles, Evaluation& ev) {
  const Rational half = make_rational(1, 2);
  for (const auto& circ : circuits(adj, 3)) {
    const auto& f = circ.faces;
    const Rational sum = angle_between(adj, angles, f[0], f[1]) +
                         angle_between(adj, angles, f[1], f[2]) +
                         angle_between(adj, angles, f[2], f[0]);
    if (sum >= 1) ev.c.witnesses.push_back({f});
  }
  for (const auto& circ : circuits(adj, 4)) {
    const auto& f = circ.faces;
    bool all_right = true;
    for (int i = 0; i < 4; ++i)
      if (angle_between(adj, angles, f[i], f[(i + 1) % 4]) != half) all_right = false;
    if (all_right) ev.e.witnesses.push_back({f});
  }
  const Topology& t = adj.topology();
  for (int cusp : p.ideal_vertices()) {
    const auto& around = t.vertex_faces[cusp];
    for (std::size_t x = 0; x < around.size(); ++x)
      for (std::size_t y = x + 1; y < around.size(); ++y) {
        const int j = std::min(around[x], around[y]);
        const int k = std::max(around[x], around[y]);
        if (j == k || adj.adjacent(j, k)) continue;
        for (int i = 0; i < p.face_count(); ++i) {
          if (contains(p.faces()[i], cusp)) continue;
          if (!adj.adjacent(i, j) || !adj.adjacent(i, k)) continue;
          if (angle_between(adj, angles, i, j) == half && angle_between(adj, angles, i, k) == half)
            ev.d.witnesses.push_back({{i, j, k}, cusp});
        }
      }
  }
}

// Andreev's theorem says nothing about the two small families, whatever the
// angles; the right-angled conditions are necessary everywhere, so there a
// failure still counts.
void finish(ConditionReport& report, const Polyhedron3& p, bool scope_first) {
  report.excluded_family = core::is_tetrahedron_type(p) || core::is_triangular_prism_type(p);
  const bool all_ok = std::all_of(report.conditions.begin(), report.conditions.end(),
                                  [](const Condition& c) { return c.ok(); });
  if (report.excluded_family && (scope_first || all_ok)) report.verdict = Verdict::outside_scope;
  else if (!all_ok) report.verdict = Verdict::fail;
  else report.verdict = Verdict::pass;
}

}  // namespace

std::vector<PrismaticCircuit> prismatic_circuits(const Polyhedron3& p, int length) {
  if (length != 3 && length != 4) throw PreconditionError("circuit length must be 3 or 4");
  return circuits(FaceAdjacency(p), length);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::outside_scope: return "outside-scope";
  }
  return "?";
}

const Condition& ConditionReport::condition(std::string_view id) const {
  for (const auto& c : conditions)
    if (c.id == id) return c;
  throw PreconditionError("no condition '" + std::string(id) + "' in report");
}

ConditionReport check_andreev(const Polyhedron3& p, const AngleAssignment& angles) {
  const FaceAdjacency adj(p);
  const Topology& t = adj.topology();
  for (const Edge& e : t.edges) {
    const Rational* q = angles.find(e);
    if (!q)
      throw PreconditionError("missing angle for edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));
    if (*q <= 0 || *q > make_rational(1, 2))
      throw PreconditionError("angle of edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " outside (0, 1/2]");
  }
  for (const auto& [e, q] : angles.entries())
    if (t.edge_id(e.u, e.v) < 0)
      throw PreconditionError("angle given for non-edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));

  Evaluation ev;
  const Rational half = make_rational(1, 2);
  for (int v = 0; v < p.vertex_count(); ++v) {
    const int deg = t.degree[v];
    const bool ideal = p.is_ideal(v);
    if ((!ideal && deg != 3) || (ideal && deg != 3 && deg != 4))
      throw PreconditionError("not almost simple: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(deg));
    Rational sum = 0;
    bool all_right = true;
    for (int e : t.vertex_edges[v]) {
      const Rational& q = *angles.find(t.edges[e]);
      sum += q;
      if (q != half) all_right = false;
    }
    if (deg == 3) {
      const bool ok = ideal ? sum == 1 : sum >= 1;
      if (!ok) ev.a.witnesses.push_back({t.vertex_faces[v], v});
    } else if (!all_right) {
      ev.b.witnesses.push_back({t.vertex_faces[v], v});
    }
  }
  evaluate_circuits(p, adj, angles, ev);

  ConditionReport report;
  report.conditions = {ev.a, ev.b, ev.c, ev.d, ev.e};
  finish(report, p, true);
  return report;
}

ConditionReport check_right_angled(const Polyhedron3& p) {
  const FaceAdjacency adj(p);
  const Topology& t = adj.topology();
  const AngleAssignment angles = AngleAssignment::all_right(p);

  Condition small{"1", "every face has edges + cusps >= 5", {}};
  Condition multi{"2", "adjacent faces share exactly one edge", {}};
  Condition finite_deg{"3", "every finite vertex lies on exactly three edges", {}};
  Condition cusp_deg{"cusp-degree", "every cusp lies on exactly four faces", {}};

  for (int f = 0; f < p.face_count(); ++f) {
    const auto& face = p.faces()[f];
    const long cusps = std::count_if(face.begin(), face.end(), [&](int v) { return p.is_ideal(v); });
    if (static_cast<long>(face.size()) + cusps < 5) small.witnesses.push_back({{f}});
  }
  for (int f = 0; f < p.face_count(); ++f)
    for (int g = f + 1; g < p.face_count(); ++g)
      if (adj.multiplicity(f, g) > 1) multi.witnesses.push_back({{f, g}});

  Evaluation ev;
  for (int v = 0; v < p.vertex_count(); ++v) {
    const int deg = t.degree[v];
    if (p.is_ideal(v)) {
      if (deg != 4) cusp_deg.witnesses.push_back({t.vertex_faces[v], v});
      // Three right angles never sum to exactly pi.
      if (deg == 3) ev.a.witnesses.push_back({t.vertex_faces[v], v});
    } else if (deg != 3) {
      finite_deg.witnesses.push_back({t.vertex_faces[v], v});
    }
  }
  evaluate_circuits(p, adj, angles, ev);

  ConditionReport report;
  report.conditions = {ev.a, ev.b, ev.c, ev.d, ev.e, small, multi, finite_deg, cusp_deg};
  finish(report, p, false);
  return report;
}

}  // namespace orthocusp::andreev
