#pragma once

// Rotation-system representation of a connected plane graph, shared by the
// polyhedron model and the enumerator.
//
// Convention: rot[v] lists the neighbours of v in cyclic order such that a
// face walk u -> v continues to the neighbour that follows u in rot[v].

#include <cstdint>
#include <string>
#include <vector>

namespace orthocusp {

struct PlaneMap {
  std::vector<std::vector<int>> rot;

  int vertex_count() const { return static_cast<int>(rot.size()); }
  int edge_count() const;
  int degree(int v) const { return static_cast<int>(rot[v].size()); }

  /// Position of w in rot[v], or -1.
  int position(int v, int w) const;
  /// The neighbour following u in rot[v].
  int next(int v, int u) const;

  /// Face boundaries, each starting from its first dart in (v, rot index) order.
  std::vector<std::vector<int>> faces() const;

  /// Inserts a new vertex adjacent to v and to the window rot[v][start..start+k-1]
  /// (cyclic), deleting the edges from v to the interior of the window.
  /// k = 2, 3, 4 are the face, edge and degree-5 expansions of a triangulation.
  int expand(int v, int start, int k);

  void remove_edge(int a, int b);

  bool is_connected() const;
  bool is_three_connected() const;
};

/// Canonical labelling of a plane map up to relabelling and reflection.
/// `colors` (optional, one per vertex) must be preserved by isomorphisms.
struct CanonicalLabelling {
  std::string code;           // opaque, comparable, hashable
  std::vector<int> number;    // number[v] = canonical index of v
  bool mirrored = false;      // best code was reached on the reflected map
};

CanonicalLabelling canonical_labelling(const PlaneMap& map,
                                       const std::vector<std::uint8_t>& colors = {});

PlaneMap tetrahedron_map();

}  // namespace orthocusp

namespace orthocusp {

/// Builds the rotation system of a sphere given by consistently oriented face
/// cycles. Throws PreconditionError when some vertex link is not one cycle.
PlaneMap map_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces);

}  // namespace orthocusp
