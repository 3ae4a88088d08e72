#pragma once

#include <vector>

namespace orthocusp {

/// Dimension-graded face poset. Dimension-0 elements may carry a cusp flag;
/// cusps are points at infinity, not faces, so they are left out of a_0.
class FaceLattice {
 public:
  explicit FaceLattice(int dimension);

  int dimension() const { return dimension_; }

  /// Adds a face of dimension `dim` covering the listed (dim-1)-faces.
  /// Throws PreconditionError on dimension mismatches or unknown ids.
  int add_face(int dim, std::vector<int> below = {}, bool cusp = false);

  int size() const { return static_cast<int>(faces_.size()); }
  int dim(int id) const { return faces_[id].dim; }
  bool is_cusp(int id) const { return faces_[id].cusp; }
  const std::vector<int>& below(int id) const { return faces_[id].below; }

  /// a_k: number of k-faces (finite vertices only for k = 0).
  long count(int k) const;
  long cusp_count() const;
  std::vector<int> faces_of_dim(int k) const;

  /// Number of l-faces contained in face `id` (cusps excluded for l = 0).
  long faces_below(int id, int l) const;
  /// Cusps contained in face `id`.
  long cusps_below(int id) const;

 private:
  struct Face {
    int dim;
    bool cusp;
    std::vector<int> below;
  };

  std::vector<int> closure(int id) const;

  int dimension_;
  std::vector<Face> faces_;
};

/// A 2-dimensional lattice for a polygon with `edges` sides, `cusps` of whose
/// vertices are at infinity.
FaceLattice polygon_lattice(int edges, int cusps);

}  // namespace orthocusp
