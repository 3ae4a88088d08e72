#include "orthocusp/face_lattice.hpp"

#include <algorithm>
#include <string>

#include "orthocusp/error.hpp"

namespace orthocusp {

FaceLattice::FaceLattice(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw PreconditionError("lattice dimension must be positive");
}

int FaceLattice::add_face(int dim, std::vector<int> below, bool cusp) {
  if (dim < 0 || dim >= dimension_)
    throw PreconditionError("face dimension " + std::to_string(dim) + " outside 0.." +
                            std::to_string(dimension_ - 1));
  if (cusp && dim != 0) throw PreconditionError("only 0-dimensional faces can be cusps");
  for (int b : below) {
    if (b < 0 || b >= size()) throw PreconditionError("unknown face id " + std::to_string(b));
    if (faces_[b].dim != dim - 1)
      throw PreconditionError("containment must join consecutive dimensions");
  }
  std::sort(below.begin(), below.end());
  below.erase(std::unique(below.begin(), below.end()), below.end());
  faces_.push_back({dim, cusp, std::move(below)});
  return size() - 1;
}

long FaceLattice::count(int k) const {
  return std::count_if(faces_.begin(), faces_.end(),
                       [k](const Face& f) { return f.dim == k && !f.cusp; });
}

long FaceLattice::cusp_count() const {
  return std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.cusp; });
}

std::vector<int> FaceLattice::faces_of_dim(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (faces_[i].dim == k && !faces_[i].cusp) out.push_back(i);
  return out;
}

std::vector<int> FaceLattice::closure(int id) const {
  std::vector<int> layer{id};
  std::vector<int> all;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int f : layer) next.insert(next.end(), faces_[f].below.begin(), faces_[f].below.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

long FaceLattice::faces_below(int id, int l) const {
  const auto all = closure(id);
  return std::count_if(all.begin(), all.end(),
                       [&](int f) { return faces_[f].dim == l && !faces_[f].cusp; });
}

long FaceLattice::cusps_below(int id) const {
  const auto all = closure(id);
  return std::count_if(all.begin(), all.end(), [&](int f) { return faces_[f].cusp; });
}

FaceLattice polygon_lattice(int edges, int cusps) {
  if (edges < 3 || cusps < 0 || cusps > edges)
    throw PreconditionError("polygon needs >= 3 edges and at most that many cusps");
  FaceLattice lattice(2);
  for (int v = 0; v < edges; ++v) lattice.add_face(0, {}, v < cusps);
  for (int e = 0; e < edges; ++e) lattice.add_face(1, {e, (e + 1) % edges});
  return lattice;
}

}  // namespace orthocusp
