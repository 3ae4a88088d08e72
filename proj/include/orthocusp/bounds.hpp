#pragma once

// Certified arithmetic behind the lower bounds c(Q^n) for 6 <= n <= 12.

#include <map>
#include <string>
#include <vector>

#include "orthocusp/cusplink.hpp"
#include "orthocusp/rational.hpp"

namespace orthocusp::bounds {

/// -45 C(m-l,2) - 45 l(m-l) - 28 C(l,2) + sum_{j=1}^{m-1} 3(240 - 15 j), for 2 <= l <= m.
Rational n7_preform(long l, long m);

/// 17 l^2 - 17 l - 90 m^2 + 1530 m - 1440.
BigInt n7_polynomial(long l, long m);

struct N7Step {
  long m = 0;
  BigInt one_cusp_faces;  // 240 - 15(m-1): must stay positive for the argument
  BigInt polynomial;      // n7_polynomial(2, m): must be >= 0 to rule m out
  bool ruled_out = false;
};

struct N7Certificate {
  std::vector<N7Step> steps;  // m = 1..16
  long bound = 0;             // 17 when every step rules m out
};

N7Certificate n7_certificate();

struct Lemma61Params {
  int n = 0;
  long m = 0;    // lower bound on cusps of every (n-1)-face
  long k = 0;    // cusps on neither L nor L'
  long c_l = 0;  // cusps of L
  long c_lp = 0; // cusps of L'
};

/// 3m - 2n + 1. Throws PreconditionError unless 8 <= n <= 12 and m >= 2(n-1).
long lemma61(int n, long m);

/// (m-1-k)(m-1) <= (2(n-1)-1)(c(L')-1).
bool eq2_check(const Lemma61Params& p);

/// 2m - 2 + (2n-3)/(m-1) + (m - 2(n-1))/(m-1) * c(L').
Rational lemma61_chain(int n, long m, long c_lp);

struct SixCase {
  std::string name;            // "one-cusp", "face3 case", "face2 case", "edge case"
  std::vector<long> deficits;  // per face below the bound 12
  long surplus = 0;            // faces certified above 12
  cusplink::AveragingVerdict verdict;
};

struct BoundEntry {
  int n = 0;
  long bound = 0;
  std::vector<std::string> trail;  // rendered arithmetic steps
};

struct BoundsCertificate {
  std::vector<BoundEntry> entries;  // n = 6..12
  std::vector<SixCase> six_cases;
  N7Certificate n7;

  long bound(int n) const;
  bool ok() const;
};

/// Floors on the number of 2-faces of a 3-face through both cusps, by how the
/// second cusp sits: 8 (3-face only), 9 (a 2-face), 10 (an edge).
long two_cusp_floor(cusplink::SecondCusp c);

BoundsCertificate main_bounds();

/// The published table {6:3, 7:17, 8:36, 9:91, 10:254, 11:741, 12:2200}.
const std::map<int, long>& published_bounds();

}  // namespace orthocusp::bounds
