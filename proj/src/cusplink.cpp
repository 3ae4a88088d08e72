#include "orthocusp/cusplink.hpp"

#include <bit>
#include <set>

#include "orthocusp/error.hpp"

namespace orthocusp::cusplink {

CuspLink::CuspLink(int n) : n_(n) {
  if (n < 2 || n > 16) throw PreconditionError("cusp link dimension must be in 2..16");
}

CuspFace::CuspFace(int n, std::initializer_list<int> hyperfaces) : n_(n) {
  const CuspLink link(n);
  for (int h : hyperfaces) {
    if (h < 1 || h > link.hyperface_count())
      throw PreconditionError("hyperface id " + std::to_string(h) + " out of range");
    mask_ |= 1u << h;
  }
}

int CuspFace::size() const { return std::popcount(mask_); }

bool CuspFace::is_valid() const {
  const CuspLink link(n_);
  for (int i = 1; i <= link.hyperface_count(); ++i)
    if (contains(i) && contains(link.parallel(i))) return false;
  return true;
}

std::vector<int> CuspFace::members() const {
  std::vector<int> out;
  for (int i = 1; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string CuspFace::to_string() const {
  std::string out = "{";
  for (int h : members()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(h);
  }
  return out + "}";
}

std::vector<CuspFace> enumerate_cusp_faces(int n, int k) {
  const CuspLink link(n);
  if (k < 1 || k > n - 1) throw PreconditionError("need 1 <= k <= n-1");
  std::vector<CuspFace> out;
  const int m = link.hyperface_count();
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    if (std::popcount(bits) != n - k) continue;
    const CuspFace f = CuspFace::from_mask(n, bits << 1);
    if (f.is_valid()) out.push_back(f);
  }
  return out;
}

long count_cusp_faces(int n, int k) {
  const auto enumerated = enumerate_cusp_faces(n, k);
  const BigInt formula = binomial(n - 1, n - k) * (BigInt(1) << (n - k));
  if (formula != enumerated.size())
    throw std::logic_error("cusp face count: formula and enumeration disagree");
  return static_cast<long>(enumerated.size());
}

long faces_through_edge(int n) {
  if (n < 4) throw PreconditionError("faces_through_edge needs n >= 4");
  // The edge is cut out by hyperfaces 1..n-1, none of them parallel.
  std::uint32_t edge_mask = 0;
  for (int i = 1; i <= n - 1; ++i) edge_mask |= 1u << i;
  const CuspFace edge = CuspFace::from_mask(n, edge_mask);
  long count = 0;
  for (const auto& f : enumerate_cusp_faces(n, 3))
    if (f.subset_of(edge)) ++count;
  if (binomial(n - 1, n - 3) != count)
    throw std::logic_error("faces through an edge: formula and enumeration disagree");
  return count;
}

bool is_adjacent(const CuspFace& f, const CuspFace& g) {
  if (f.size() != g.size() || f.link_dimension() != g.link_dimension())
    throw PreconditionError("adjacency needs faces of equal dimension");
  const int common = std::popcount(f.mask() & g.mask());
  if (common != f.size() - 1) return false;
  return CuspFace::from_mask(f.link_dimension(), f.mask() | g.mask()).is_valid();
}

std::string to_string(SecondCusp c) {
  switch (c) {
    case SecondCusp::face3: return "face3";
    case SecondCusp::face2: return "face2";
    case SecondCusp::edge: return "edge";
  }
  return "?";
}

CuspFace carrier(SecondCusp c) {
  switch (c) {
    case SecondCusp::face3: return CuspFace(6, {1, 2, 3});
    case SecondCusp::face2: return CuspFace(6, {1, 2, 3, 4});
    case SecondCusp::edge: return CuspFace(6, {1, 2, 3, 4, 5});
  }
  throw PreconditionError("unknown case");
}

std::vector<CuspFace> two_cusp_faces(SecondCusp c) {
  const CuspFace car = carrier(c);
  if (!car.is_valid()) throw PreconditionError("carrier contains a parallel pair");
  std::vector<CuspFace> out;
  for (const auto& f : enumerate_cusp_faces(6, 3))
    if (f.subset_of(car)) out.push_back(f);
  return out;
}

namespace {

TripleRow row(std::initializer_list<int> a, std::initializer_list<int> b, std::initializer_list<int> c) {
  return {CuspFace(6, a), CuspFace(6, b), CuspFace(6, c)};
}

}  // namespace

std::vector<TripleRow> table1() {
  return {
      row({1, 2, 6}, {1, 2, 7}, {1, 2, 8}),
      row({1, 3, 6}, {1, 3, 7}, {1, 3, 9}),
      row({1, 4, 6}, {1, 4, 8}, {1, 4, 9}),
      row({1, 5, 7}, {1, 5, 8}, {1, 5, 9}),
      row({2, 3, 6}, {2, 3, 7}, {2, 3, 10}),
      row({2, 4, 6}, {2, 4, 8}, {2, 4, 10}),
      row({2, 5, 7}, {2, 5, 8}, {2, 5, 10}),
      row({3, 4, 6}, {3, 4, 9}, {3, 4, 10}),
      row({3, 5, 7}, {3, 5, 9}, {3, 5, 10}),
      row({4, 5, 8}, {4, 5, 9}, {4, 5, 10}),
      row({2, 6, 10}, {2, 7, 10}, {2, 8, 10}),
      row({3, 6, 10}, {3, 7, 10}, {3, 9, 10}),
  };
}

std::vector<TripleRow> table2() {
  auto rows = table1();
  const std::vector<TripleRow> extra = {
      row({4, 6, 10}, {4, 8, 10}, {4, 9, 10}),
      row({5, 7, 10}, {5, 8, 10}, {5, 9, 10}),
      row({1, 6, 9}, {1, 7, 9}, {1, 8, 9}),
      row({6, 9, 10}, {7, 9, 10}, {8, 9, 10}),
      row({1, 7, 8}, {2, 7, 8}, {5, 7, 8}),
      row({6, 7, 8}, {7, 8, 9}, {7, 8, 10}),
      row({1, 6, 7}, {2, 6, 7}, {3, 6, 7}),
      row({2, 6, 8}, {4, 6, 8}, {6, 8, 10}),
  };
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

std::vector<TripleRow> case41_rows() {
  return {
      row({1, 2, 4}, {1, 2, 5}, {1, 2, 8}),
      row({1, 4, 5}, {2, 4, 5}, {4, 5, 8}),
      row({1, 4, 6}, {2, 4, 6}, {4, 6, 8}),
      row({1, 3, 9}, {1, 4, 9}, {1, 5, 9}),
  };
}

TableReport verify_table(SecondCusp c, const std::vector<TripleRow>& rows) {
  TableReport report;
  report.rows = static_cast<int>(rows.size());
  const CuspFace car = carrier(c);
  std::set<CuspFace> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& tr = rows[r];
    const std::string where = "row " + std::to_string(r + 1) + ": ";
    for (const auto& f : tr) {
      if (f.link_dimension() != 6 || f.size() != 3)
        report.problems.push_back(where + f.to_string() + " is not a 3-face of the n=6 link");
      else if (!f.is_valid())
        report.problems.push_back(where + f.to_string() + " contains a parallel pair");
      else if (f.subset_of(car))
        report.problems.push_back(where + f.to_string() + " passes through the second cusp");
      if (!seen.insert(f).second)
        report.problems.push_back(where + f.to_string() + " already appears in the table");
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (tr[i].size() == tr[j].size() && !is_adjacent(tr[i], tr[j]))
          report.problems.push_back(where + tr[i].to_string() + " and " + tr[j].to_string() +
                                    " are not adjacent");
  }
  report.distinct_faces = static_cast<int>(seen.size());
  return report;
}

AveragingVerdict averaging_contradiction(const Rational& total_bound,
                                         const std::vector<long>& deficits, long surplus_count) {
  if (surplus_count < 0) throw PreconditionError("negative surplus count");
  AveragingVerdict out;
  out.deficit = 0;
  for (long d : deficits) {
    if (d < 0) throw PreconditionError("negative deficit");
    if (Rational(d) > total_bound) throw PreconditionError("deficit exceeds the bound");
    out.deficit += d;
  }
  out.surplus = surplus_count;
  out.margin = out.surplus - out.deficit;
  out.contradiction = out.surplus >= out.deficit;
  return out;
}

}  // namespace orthocusp::cusplink
