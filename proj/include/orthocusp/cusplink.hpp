#pragma once

// The 2(n-1) hyperfaces through one cusp of a right-angled polyhedron, with
// hyperface i parallel to hyperface 2(n-1)+1-i. A k-face through the cusp is
// the intersection of n-k hyperfaces, no two of them parallel.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "orthocusp/rational.hpp"

namespace orthocusp::cusplink {

class CuspLink {
 public:
  explicit CuspLink(int n);

  int dimension() const { return n_; }
  int hyperface_count() const { return 2 * (n_ - 1); }
  int parallel(int i) const { return hyperface_count() + 1 - i; }

 private:
  int n_;
};

/// Set of hyperface ids (1-based) stored as a bitmask.
class CuspFace {
 public:
  CuspFace() = default;
  CuspFace(int n, std::initializer_list<int> hyperfaces);
  static CuspFace from_mask(int n, std::uint32_t mask) { return CuspFace(n, mask); }

  int link_dimension() const { return n_; }
  int size() const;
  /// Dimension of the face: n - |S|.
  int face_dimension() const { return n_ - size(); }
  std::uint32_t mask() const { return mask_; }
  bool contains(int hyperface) const { return (mask_ >> hyperface) & 1u; }
  bool subset_of(const CuspFace& other) const { return (mask_ & ~other.mask_) == 0; }
  /// True when no two members are parallel.
  bool is_valid() const;
  std::vector<int> members() const;
  std::string to_string() const;

  auto operator<=>(const CuspFace&) const = default;

 private:
  CuspFace(int n, std::uint32_t mask) : n_(n), mask_(mask) {}

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Every valid CuspFace of dimension k in the n-dimensional link.
std::vector<CuspFace> enumerate_cusp_faces(int n, int k);

/// C(n-1, n-k) * 2^(n-k), cross-checked against enumerate_cusp_faces.
long count_cusp_faces(int n, int k);

/// Number of 3-faces through the cusp that contain a fixed edge through it:
/// C(n-1, n-3), cross-checked by enumeration.
long faces_through_edge(int n);

/// Equal-dimension cusp faces meeting in a face one dimension lower.
bool is_adjacent(const CuspFace& f, const CuspFace& g);

enum class SecondCusp { face3, face2, edge };
std::string to_string(SecondCusp c);

/// Hyperfaces through the second cusp: {1,2,3}, {1,2,3,4} or {1,2,3,4,5} (n = 6).
CuspFace carrier(SecondCusp c);

/// The 3-faces through both cusps: every 3-subset of the carrier.
std::vector<CuspFace> two_cusp_faces(SecondCusp c);

using TripleRow = std::array<CuspFace, 3>;

std::vector<TripleRow> table1();       // twelve rows, second cusp on a 2-face
std::vector<TripleRow> table2();       // twenty rows, second cusp on an edge
std::vector<TripleRow> case41_rows();  // four rows, second cusp on a 3-face only

struct TableReport {
  int rows = 0;
  int distinct_faces = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Checks every member is a valid 3-face outside the carrier (so through
/// exactly one cusp), members of a row are pairwise adjacent, and no face
/// repeats across the table.
TableReport verify_table(SecondCusp c, const std::vector<TripleRow>& rows);

struct AveragingVerdict {
  bool contradiction = false;
  BigInt deficit;
  BigInt surplus;
  BigInt margin;  // surplus - deficit
};

/// Faces below the average bound contribute their deficits; each listed
/// surplus face is at least one above it. A surplus covering the deficit pushes
/// the average to the bound, contradicting the strict inequality.
/// Throws PreconditionError on negative deficits or deficits above the bound.
AveragingVerdict averaging_contradiction(const Rational& total_bound,
                                         const std::vector<long>& deficits, long surplus_count);

}  // namespace orthocusp::cusplink
