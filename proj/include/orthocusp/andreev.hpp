#pragma once

// Andreev's conditions for acute-angled almost simple 3-polyhedra, and the
// stricter right-angled conditions (1)-(5).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orthocusp/polyhedron.hpp"
#include "orthocusp/rational.hpp"

namespace orthocusp::andreev {

/// Dihedral angles as multiples of pi, each in (0, 1/2].
class AngleAssignment {
 public:
  AngleAssignment() = default;

  static AngleAssignment all_right(const core::Polyhedron3& p);

  void set(core::Edge e, Rational q);
  const Rational* find(core::Edge e) const;
  const std::map<core::Edge, Rational>& entries() const { return angles_; }

 private:
  std::map<core::Edge, Rational> angles_;
};

/// Reads `angle: u v p q` lines (edge {u,v} has angle (p/q)pi).
AngleAssignment parse_angles(std::string_view text);

class FaceAdjacency {
 public:
  explicit FaceAdjacency(const core::Polyhedron3& p);

  int face_count() const { return static_cast<int>(shared_.size()); }
  bool adjacent(int f, int g) const { return !shared_[f][g].empty(); }
  int multiplicity(int f, int g) const { return static_cast<int>(shared_[f][g].size()); }
  /// Edge ids (into core::Topology::edges) shared by f and g.
  const std::vector<int>& shared_edges(int f, int g) const { return shared_[f][g]; }
  std::vector<int> neighbours(int f) const;
  const core::Topology& topology() const { return topology_; }

 private:
  core::Topology topology_;
  std::vector<std::vector<std::vector<int>>> shared_;
};

FaceAdjacency adjacency(const core::Polyhedron3& p);

/// Faces cyclically adjacent such that the crossed edges have pairwise
/// distinct endpoints (so no vertex or cusp is common to consecutive faces).
struct PrismaticCircuit {
  std::vector<int> faces;
  auto operator<=>(const PrismaticCircuit&) const = default;
};

/// Each circuit is listed once, starting from its smallest face, with the
/// lexicographically smaller of the two directions.
std::vector<PrismaticCircuit> prismatic_circuits(const core::Polyhedron3& p, int length);

enum class Verdict { pass, fail, outside_scope };
std::string to_string(Verdict v);

struct Witness {
  std::vector<int> faces;
  int vertex = -1;  // for vertex-based conditions
};

struct Condition {
  std::string id;           // "a".."e", or "1", "2", "3", "cusp-degree"
  std::string description;
  std::vector<Witness> witnesses;

  bool ok() const { return witnesses.empty(); }
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool excluded_family = false;
  Verdict verdict = Verdict::pass;

  const Condition& condition(std::string_view id) const;
};

/// Throws PreconditionError when p is not almost simple (finite vertices of
/// degree 3, cusps of degree 3 or 4), when an edge has no angle, or when an
/// angle lies outside (0, 1/2].
ConditionReport check_andreev(const core::Polyhedron3& p, const AngleAssignment& angles);

/// All dihedral angles pi/2. Never throws on valid input; every problem is a
/// report entry.
ConditionReport check_right_angled(const core::Polyhedron3& p);

}  // namespace orthocusp::andreev
