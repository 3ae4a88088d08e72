#pragma once

// Isomorph-free generation of almost-simple 3-polyhedra with a prescribed
// number of degree-4 cusps, worked on the dual side: sphere triangulations
// are grown from K4 by the degree-3/4/5 vertex expansions, and each cusp
// becomes a quadrilateral by deleting one diagonal.
//
// enumerate() runs the OpenMP kernels; enumerate_serial() is the plain
// reference used by tests and the benchmark. Both return identical reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthocusp/plane_map.hpp"
#include "orthocusp/polyhedron.hpp"

namespace orthocusp::enum3 {

inline constexpr int kDefaultFaceCap = 13;

enum class Filter { all_almost_simple, right_angled };

struct EnumSpec {
  int max_faces = 12;
  int num_cusps = 0;
  Filter filter = Filter::right_angled;
  int hard_cap = kDefaultFaceCap;
  int workers = 0;  // 0: OpenMP default
};

struct TypeRecord {
  core::CanonicalCode code;
  core::Polyhedron3 polyhedron;  // canonical form
  int faces = 0;
  int both_cusp_faces = 0;  // 2-faces containing both cusps (two-cusp runs)
};

struct EnumReport {
  EnumSpec spec;
  std::vector<TypeRecord> types;                 // accepted, sorted by code
  std::map<int, long> accepted;                  // per face count
  std::map<int, long> candidates;                // 3-connected almost-simple types
  std::map<int, long> non_polyhedral;            // simple, min degree 3, not 3-connected
  std::map<int, long> non_polyhedral_passing;    // ... whose dual passes check_right_angled

  long count(int faces) const;
  long count_up_to(int faces) const;
};

/// Throws PreconditionError when max_faces exceeds hard_cap or num_cusps > 2.
EnumReport enumerate(const EnumSpec& spec);
EnumReport enumerate_serial(const EnumSpec& spec);

/// Triangulations of the sphere with exactly `vertices` vertices, one per
/// isomorphism class (reflections identified), sorted by canonical code.
std::vector<PlaneMap> triangulations(int vertices, bool parallel = true, int workers = 0);

struct Lemma31Report {
  std::map<int, long> counts;        // accepted one-cusp types per face count <= 12
  std::vector<int> face_sizes;       // sorted, of the unique 12-face type
  std::vector<int> cusp_face_sizes;  // around the cusp, starting at a quadrilateral
  bool quads_non_adjacent = false;
  bool matches_contracted_dodecahedron = false;
  bool passes_right_angled = false;

  long below_twelve() const;
  long at_twelve() const;
  bool ok() const;
  std::string summary() const;
};

Lemma31Report verify_lemma31(int workers = 0);

struct MinimaReport {
  int budget = 0;
  std::map<int, std::map<int, long>> counts;  // t -> faces -> accepted types
  std::map<int, int> floor;                   // t -> required minimum face count
  std::vector<std::string> violations;

  std::optional<int> smallest(int t) const;
  bool ok() const { return violations.empty(); }
};

MinimaReport two_cusp_minima(int budget, int workers = 0);

}  // namespace orthocusp::enum3
