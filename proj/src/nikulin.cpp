#include "orthocusp/nikulin.hpp"

#include <algorithm>

#include "orthocusp/error.hpp"

namespace orthocusp::nikulin {

Rational face_average(const FaceLattice& lattice, int k, int l) {
  if (l < 0 || l >= k || k >= lattice.dimension())
    throw PreconditionError("face_average needs 0 <= l < k <= n-1");
  const auto faces = lattice.faces_of_dim(k);
  if (faces.empty()) throw PreconditionError("no faces of dimension " + std::to_string(k));
  BigInt total = 0;
  for (int f : faces) total += lattice.faces_below(f, l);
  return Rational(total, BigInt(faces.size()));
}

Rational nikulin_rhs(int n, int k, int l) {
  if (n < 1 || l < 0 || l >= k || k > n / 2)
    throw PreconditionError("nikulin_rhs needs 0 <= l < k <= floor(n/2)");
  const long lo = n / 2;
  const long hi = (n + 1) / 2;
  const BigInt num = binomial(n - l, n - k) * (binomial(lo, l) + binomial(hi, l));
  const BigInt den = binomial(lo, k) + binomial(hi, k);
  return Rational(num, den);
}

bool NikulinAudit::ok() const {
  return std::all_of(records.begin(), records.end(), [](const AuditRecord& r) { return r.strict_ok; });
}

NikulinAudit audit(const FaceLattice& lattice) {
  NikulinAudit out;
  const int n = lattice.dimension();
  out.dimension = n;
  for (int k = 1; k <= n / 2 && k <= n - 1; ++k)
    for (int l = 0; l < k; ++l) {
      if (lattice.count(k) == 0) continue;
      AuditRecord r;
      r.k = k;
      r.l = l;
      r.average = face_average(lattice, k, l);
      r.bound = nikulin_rhs(n, k, l);
      r.strict_ok = r.average < r.bound;
      out.records.push_back(std::move(r));
    }
  return out;
}

bool SmallReport::ok() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const Inequality& i) { return i.ok; });
}

SmallReport check_small(const FaceLattice& lattice) {
  SmallReport out;
  out.dimension = lattice.dimension();
  const BigInt c = lattice.cusp_count();
  auto add = [&](std::string name, BigInt lhs, long rhs) {
    const bool ok = lhs >= rhs;
    out.inequalities.push_back({std::move(name), std::move(lhs), BigInt(rhs), ok});
  };
  if (lattice.dimension() == 2) {
    const BigInt a1 = lattice.count(1);
    add("a1+c>=5", a1 + c, 5);
    if (c == 0) add("a1>=5 (compact)", a1, 5);
  } else if (lattice.dimension() == 3) {
    const BigInt a2 = lattice.count(2);
    add("a2>=6", a2, 6);
    add("a2+2c>=12", a2 + 2 * c, 12);
  } else {
    throw PreconditionError("check_small applies to dimension 2 or 3");
  }
  return out;
}

CompactExclusion compact_exclusion(int n) {
  if (n < 5) throw PreconditionError("compact exclusion is only claimed for n >= 5");
  CompactExclusion out;
  out.n = n;
  out.bound = nikulin_rhs(n, 2, 1);
  out.compact_floor = 5;
  out.excluded = out.bound <= out.compact_floor;
  return out;
}

}  // namespace orthocusp::nikulin
