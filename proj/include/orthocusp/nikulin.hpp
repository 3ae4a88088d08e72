#pragma once

// Face averages a_k^l, the Nikulin-Khovanskij upper bound on them, the
// small-dimension face inequalities, and the compact-exclusion argument.

#include <string>
#include <vector>

#include "orthocusp/face_lattice.hpp"
#include "orthocusp/rational.hpp"

namespace orthocusp::nikulin {

/// a_k^l(L) = (1 / a_k) * sum over k-faces F of a_l(F).
Rational face_average(const FaceLattice& lattice, int k, int l);

/// C(n-l, n-k) * (C(n/2, l) + C((n+1)/2, l)) / (C(n/2, k) + C((n+1)/2, k)),
/// for 0 <= l < k <= floor(n/2).
Rational nikulin_rhs(int n, int k, int l);

struct AuditRecord {
  int k = 0;
  int l = 0;
  Rational average;
  Rational bound;
  bool strict_ok = false;  // average < bound
};

struct NikulinAudit {
  int dimension = 0;
  std::vector<AuditRecord> records;

  bool ok() const;
};

/// One record per admissible l < k <= floor(n/2); pairs with no k-faces are skipped.
NikulinAudit audit(const FaceLattice& lattice);

struct Inequality {
  std::string name;  // e.g. "a1+c>=5"
  BigInt lhs;
  BigInt rhs;
  bool ok = false;
};

struct SmallReport {
  int dimension = 0;
  std::vector<Inequality> inequalities;

  bool ok() const;
};

/// Dimension 2: a1 + c >= 5, and a1 >= 5 when compact.
/// Dimension 3: a2 >= 6 and a2 + 2c >= 12.
SmallReport check_small(const FaceLattice& lattice);

struct CompactExclusion {
  int n = 0;
  Rational bound;          // nikulin_rhs(n, 2, 1)
  Rational compact_floor;  // 5: every compact polygon has at least five edges
  bool excluded = false;   // bound <= floor
};

/// Throws PreconditionError for n < 5.
CompactExclusion compact_exclusion(int n);

}  // namespace orthocusp::nikulin
