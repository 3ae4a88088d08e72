#include "orthocusp/bounds.hpp"

#include <algorithm>

#include "orthocusp/error.hpp"
#include "orthocusp/nikulin.hpp"

namespace orthocusp::bounds {

Rational n7_preform(long l, long m) {
  if (l < 2 || l > m) throw PreconditionError("n7_preform needs 2 <= l <= m");
  BigInt v = -45 * binomial(m - l, 2) - BigInt(45) * l * (m - l) - 28 * binomial(l, 2);
  for (long j = 1; j <= m - 1; ++j) v += 3 * (240 - 15 * BigInt(j));
  return Rational(v);
}

BigInt n7_polynomial(long l, long m) {
  const BigInt L = l;
  const BigInt M = m;
  return 17 * L * L - 17 * L - 90 * M * M + 1530 * M - 1440;
}

N7Certificate n7_certificate() {
  N7Certificate cert;
  bool all = true;
  for (long m = 1; m <= 16; ++m) {
    N7Step s;
    s.m = m;
    s.one_cusp_faces = 240 - 15 * BigInt(m - 1);
    s.polynomial = n7_polynomial(2, m);
    s.ruled_out = s.one_cusp_faces > 0 && s.polynomial >= 0;
    all = all && s.ruled_out;
    cert.steps.push_back(std::move(s));
  }
  cert.bound = all ? 17 : 0;
  return cert;
}

long lemma61(int n, long m) {
  if (n < 8 || n > 12) throw PreconditionError("lemma61 is scoped to 8 <= n <= 12");
  if (m < 2L * (n - 1))
    throw PreconditionError("lemma61 needs m >= 2(n-1) = " + std::to_string(2 * (n - 1)));
  return 3 * m - 2L * n + 1;
}

bool eq2_check(const Lemma61Params& p) {
  const BigInt lhs = BigInt(p.m - 1 - p.k) * (p.m - 1);
  const BigInt rhs = BigInt(2L * (p.n - 1) - 1) * (p.c_lp - 1);
  return lhs <= rhs;
}

Rational lemma61_chain(int n, long m, long c_lp) {
  if (m < 2) throw PreconditionError("lemma61_chain needs m >= 2");
  const BigInt den = m - 1;
  return Rational(2 * BigInt(m) - 2) + Rational(BigInt(2L * n - 3), den) +
         Rational(BigInt(m - 2L * (n - 1)) * c_lp, den);
}

long two_cusp_floor(cusplink::SecondCusp c) {
  switch (c) {
    case cusplink::SecondCusp::face3: return 8;
    case cusplink::SecondCusp::face2: return 9;
    case cusplink::SecondCusp::edge: return 10;
  }
  return 0;
}

const std::map<int, long>& published_bounds() {
  static const std::map<int, long> table = {{6, 3},   {7, 17},  {8, 36},   {9, 91},
                                            {10, 254}, {11, 741}, {12, 2200}};
  return table;
}

long BoundsCertificate::bound(int n) const {
  for (const auto& e : entries)
    if (e.n == n) return e.bound;
  throw PreconditionError("no bound recorded for n=" + std::to_string(n));
}

bool BoundsCertificate::ok() const {
  const bool cases = std::all_of(six_cases.begin(), six_cases.end(),
                                 [](const SixCase& c) { return c.verdict.contradiction; });
  if (!cases || n7.bound != 17 || entries.size() != published_bounds().size()) return false;
  for (const auto& e : entries)
    if (published_bounds().at(e.n) != e.bound) return false;
  return true;
}

BoundsCertificate main_bounds() {
  using cusplink::SecondCusp;
  BoundsCertificate cert;

  // n = 6. Every 3-face through at most one cusp has at least twelve 2-faces,
  // while the average must stay strictly below nikulin_rhs(6,3,2) = 12.
  const Rational six_bound = nikulin::nikulin_rhs(6, 3, 2);
  BoundEntry six{6, 0, {}};
  const auto excl = nikulin::compact_exclusion(6);
  six.trail.push_back("compact excluded: a_2^1 < " + to_string(excl.bound) + " <= 5");
  six.trail.push_back("a_3^2(Q^6) < " + to_string(six_bound));
  {
    SixCase one{"one-cusp", {}, 0, cusplink::averaging_contradiction(six_bound, {}, 0)};
    cert.six_cases.push_back(one);
  }
  struct CaseSpec {
    SecondCusp which;
    std::vector<cusplink::TripleRow> rows;
    const char* name;
  };
  const std::vector<CaseSpec> cases = {{SecondCusp::face3, cusplink::case41_rows(), "face3 case"},
                                       {SecondCusp::face2, cusplink::table1(), "face2 case"},
                                       {SecondCusp::edge, cusplink::table2(), "edge case"}};
  for (const auto& cs : cases) {
    const auto table = cusplink::verify_table(cs.which, cs.rows);
    const long floor = two_cusp_floor(cs.which);
    const std::vector<long> deficits(cusplink::two_cusp_faces(cs.which).size(), 12 - floor);
    const long surplus = table.ok() ? table.rows : 0;
    cert.six_cases.push_back(
        {cs.name, deficits, surplus, cusplink::averaging_contradiction(six_bound, deficits, surplus)});
  }
  bool six_ok = excl.excluded;
  six.trail.push_back("one-cusp: every 3-face has a_2 >= 12 = bound, so a_3^2 >= 12 (contradiction)");
  for (const auto& c : cert.six_cases) {
    if (c.name == "one-cusp") {
      six_ok = six_ok && c.verdict.contradiction;
      continue;
    }
    six.trail.push_back(c.name + ": surplus " + c.verdict.surplus.str() + " >= deficit " +
                        c.verdict.deficit.str() + (c.verdict.contradiction ? " (contradiction)" : " (open)"));
    six_ok = six_ok && c.verdict.contradiction;
  }
  six.bound = six_ok ? 3 : 0;
  cert.entries.push_back(six);

  // n = 7.
  cert.n7 = n7_certificate();
  BoundEntry seven{7, cert.n7.bound, {}};
  seven.trail.push_back("a_3^2(Q^7) < " + to_string(nikulin::nikulin_rhs(7, 3, 2)));
  for (const auto& s : cert.n7.steps)
    seven.trail.push_back("m=" + std::to_string(s.m) + ": 240-15(m-1)=" + s.one_cusp_faces.str() +
                          " > 0, 17l^2-17l-90m^2+1530m-1440 at l=2 = " + s.polynomial.str() +
                          " >= 0" + (s.ruled_out ? " -> impossible" : " -> NOT ruled out"));
  cert.entries.push_back(seven);

  // n = 8..12: each (n-1)-face is a Q^(n-1).
  long previous = cert.n7.bound;
  for (int n = 8; n <= 12; ++n) {
    BoundEntry e{n, 0, {}};
    if (previous >= 2L * (n - 1)) {
      e.bound = lemma61(n, previous);
      e.trail.push_back("3*" + std::to_string(previous) + " - 2*" + std::to_string(n) + " + 1 = " +
                        std::to_string(e.bound));
    } else {
      e.trail.push_back("m=" + std::to_string(previous) + " < 2(n-1); recursion not applicable");
    }
    previous = e.bound;
    cert.entries.push_back(e);
  }
  return cert;
}

}  // namespace orthocusp::bounds
