#pragma once

// Combinatorial 3-polyhedra: faces as cyclic vertex sequences plus cusp marks.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthocusp/face_lattice.hpp"
#include "orthocusp/plane_map.hpp"

namespace orthocusp::core {

struct Edge {
  int u = 0;
  int v = 0;  // u < v

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

class Polyhedron3 {
 public:
  Polyhedron3() = default;
  /// Throws PreconditionError on out-of-range ids, repeated vertices inside a
  /// face cycle, or faces with fewer than three vertices. Topology is not
  /// checked here; see validate().
  Polyhedron3(int vertex_count, std::vector<int> ideal_vertices,
              std::vector<std::vector<int>> faces);

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int ideal_count() const { return static_cast<int>(ideal_.size()); }
  int finite_vertex_count() const { return vertex_count_ - ideal_count(); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& ideal_vertices() const { return ideal_; }
  bool is_ideal(int v) const { return ideal_mask_[v] != 0; }
  /// Distinct undirected edges, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of faces through each vertex (equals the edge degree on valid input).
  std::vector<int> vertex_degrees() const;

  bool operator==(const Polyhedron3&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<int> ideal_;
  std::vector<char> ideal_mask_;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  int finite_degree = 3;
  int ideal_degree = 4;

  static DegreeProfile right_angled() { return {3, 4}; }
};

struct Issue {
  std::string kind;
  std::string witness;
};

struct DegreeViolation {
  int vertex = 0;
  bool ideal = false;
  int degree = 0;
  int required = 0;
};

struct ValidationReport {
  std::vector<Issue> violations;               // broken Polyhedron3 invariants
  std::vector<DegreeViolation> degree_violations;
  std::vector<Issue> notes;                    // permitted but flagged (multi-edges)

  bool valid() const { return violations.empty(); }
  bool ok() const { return violations.empty() && degree_violations.empty(); }
};

/// Derived incidence data of a valid polyhedron.
struct Topology {
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> edge_faces;  // the two faces of each edge
  std::vector<std::vector<int>> face_edges;     // edge ids along each face cycle
  std::vector<std::vector<int>> vertex_faces;   // faces around each vertex, rotation order
  std::vector<std::vector<int>> vertex_edges;
  std::vector<int> degree;

  int edge_id(int a, int b) const;  // -1 when absent
};

Polyhedron3 parse_poly3(std::string_view text);
std::string format_poly3(const Polyhedron3& p, std::string_view comment = {});

ValidationReport validate(const Polyhedron3& p,
                          const std::optional<DegreeProfile>& profile = std::nullopt);

/// Throws PreconditionError when p is not valid.
Topology topology(const Polyhedron3& p);
PlaneMap to_plane_map(const Polyhedron3& p);
Polyhedron3 from_plane_map(const PlaneMap& map, std::vector<int> ideal = {});

Polyhedron3 dual(const Polyhedron3& p);
Polyhedron3 contract_edge(const Polyhedron3& p, Edge e);
Polyhedron3 with_ideal(const Polyhedron3& p, std::vector<int> ideal);

struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Polyhedron3& p);
/// p relabelled by its canonical numbering, faces rotated to start at their
/// smallest vertex and sorted. Isomorphic inputs give equal outputs.
Polyhedron3 canonical_form(const Polyhedron3& p);

FaceLattice to_face_lattice(const Polyhedron3& p);

/// Fixture polyhedra.
Polyhedron3 tetrahedron();
Polyhedron3 triangular_prism();
Polyhedron3 square_pyramid();
Polyhedron3 cube();
Polyhedron3 dodecahedron();
/// The 12-face one-cusp type: the dodecahedron with one edge contracted.
Polyhedron3 contracted_dodecahedron();

bool is_tetrahedron_type(const Polyhedron3& p);
bool is_triangular_prism_type(const Polyhedron3& p);

}  // namespace orthocusp::core
