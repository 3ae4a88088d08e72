#include "orthocusp/enum3.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orthocusp/andreev.hpp"
#include "orthocusp/error.hpp"

namespace orthocusp::enum3 {

using core::Polyhedron3;

namespace {

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// Every expansion of a triangulation: vertex v, window start, window length.
struct Expansion {
  int v;
  int start;
  int k;
};

std::vector<Expansion> expansions(const PlaneMap& t) {
  std::vector<Expansion> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int k = 2; k <= 4; ++k) {
      if (t.degree(v) < k) continue;
      for (int s = 0; s < t.degree(v); ++s) out.push_back({v, s, k});
    }
  return out;
}

PlaneMap apply(const PlaneMap& t, const Expansion& x) {
  PlaneMap child = t;
  child.expand(x.v, x.start, x.k);
  return child;
}

std::vector<std::pair<int, int>> edge_list(const PlaneMap& m) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < m.vertex_count(); ++v)
    for (int w : m.rot[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

// Deleting the chosen diagonals must leave exactly `quads` quadrilaterals and
// otherwise triangles.
bool near_triangulation(const PlaneMap& m, int quads) {
  int q = 0;
  for (const auto& f : m.faces()) {
    if (f.size() == 4) ++q;
    else if (f.size() != 3) return false;
  }
  return q == quads;
}

int min_degree(const PlaneMap& m) {
  int d = 1 << 30;
  for (int v = 0; v < m.vertex_count(); ++v) d = std::min(d, m.degree(v));
  return d;
}

// Calls fn(child) for every near-triangulation obtained from t by deleting
// `cusps` diagonals.
template <class Fn>
void for_each_deletion(const PlaneMap& t, int cusps, Fn&& fn) {
  if (cusps == 0) {
    fn(t);
    return;
  }
  const auto edges = edge_list(t);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    PlaneMap one = t;
    one.remove_edge(edges[i].first, edges[i].second);
    if (cusps == 1) {
      fn(one);
      continue;
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      PlaneMap two = one;
      two.remove_edge(edges[j].first, edges[j].second);
      if (near_triangulation(two, 2)) fn(two);
    }
  }
}

// The polyhedron dual to a near-triangulation; quadrilaterals become cusps.
Polyhedron3 primal_of(const PlaneMap& nt) {
  const Polyhedron3 dual_side = core::from_plane_map(nt);
  std::vector<int> ideal;
  for (int f = 0; f < dual_side.face_count(); ++f)
    if (dual_side.faces()[f].size() == 4) ideal.push_back(f);
  return core::with_ideal(core::dual(dual_side), std::move(ideal));
}

int faces_through_both_cusps(const Polyhedron3& p) {
  if (p.ideal_count() != 2) return 0;
  const int a = p.ideal_vertices()[0];
  const int b = p.ideal_vertices()[1];
  int t = 0;
  for (const auto& f : p.faces())
    if (std::find(f.begin(), f.end(), a) != f.end() && std::find(f.begin(), f.end(), b) != f.end())
      ++t;
  return t;
}

bool right_angled_ok(const Polyhedron3& p) {
  return andreev::check_right_angled(p).verdict == andreev::Verdict::pass;
}

// Outcome of classifying one near-triangulation.
struct Classified {
  enum Kind { skip, accepted, rejected, non_polyhedral, non_polyhedral_passing } kind = skip;
  TypeRecord record;
};

Classified classify(const PlaneMap& nt, const EnumSpec& spec) {
  Classified out;
  if (min_degree(nt) < 3) return out;
  if (!nt.is_three_connected()) {
    out.kind = Classified::non_polyhedral;
    try {
      if (right_angled_ok(primal_of(nt))) out.kind = Classified::non_polyhedral_passing;
    } catch (const PreconditionError&) {
    }
    return out;
  }
  const Polyhedron3 p = primal_of(nt);
  if (spec.filter == Filter::right_angled && !right_angled_ok(p)) {
    out.kind = Classified::rejected;
    return out;
  }
  out.kind = Classified::accepted;
  out.record.polyhedron = core::canonical_form(p);
  out.record.code = core::canonical_code(p);
  out.record.faces = p.face_count();
  out.record.both_cusp_faces = faces_through_both_cusps(p);
  return out;
}

void check_spec(const EnumSpec& spec) {
  if (spec.max_faces > spec.hard_cap)
    throw PreconditionError("face budget " + std::to_string(spec.max_faces) + " exceeds cap " +
                            std::to_string(spec.hard_cap));
  if (spec.num_cusps < 0 || spec.num_cusps > 2)
    throw PreconditionError("cusp count must be 0, 1 or 2");
}

void tally(EnumReport& report, int faces, const Classified& c) {
  switch (c.kind) {
    case Classified::accepted:
      ++report.accepted[faces];
      ++report.candidates[faces];
      report.types.push_back(c.record);
      break;
    case Classified::rejected: ++report.candidates[faces]; break;
    case Classified::non_polyhedral_passing:
      ++report.non_polyhedral_passing[faces];
      [[fallthrough]];
    case Classified::non_polyhedral: ++report.non_polyhedral[faces]; break;
    case Classified::skip: break;
  }
}

void finalize(EnumReport& report) {
  std::sort(report.types.begin(), report.types.end(),
            [](const TypeRecord& a, const TypeRecord& b) { return a.code < b.code; });
}

EnumReport empty_report(const EnumSpec& spec) {
  EnumReport report;
  report.spec = spec;
  for (int f = 4; f <= spec.max_faces; ++f) {
    report.accepted[f] = 0;
    report.candidates[f] = 0;
    report.non_polyhedral[f] = 0;
    report.non_polyhedral_passing[f] = 0;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serial reference

std::vector<PlaneMap> next_level_serial(const std::vector<PlaneMap>& parents) {
  std::map<std::string, PlaneMap> seen;
  for (const auto& t : parents)
    for (const auto& x : expansions(t)) {
      PlaneMap child = apply(t, x);
      seen.try_emplace(canonical_labelling(child).code, std::move(child));
    }
  std::vector<PlaneMap> out;
  for (auto& [code, map] : seen) out.push_back(std::move(map));
  return out;
}

// ---------------------------------------------------------------------------
// OpenMP kernels

std::vector<PlaneMap> next_level_parallel(const std::vector<PlaneMap>& parents, int workers) {
  std::unordered_map<std::string, PlaneMap> seen;
  const long count = static_cast<long>(parents.size());
#pragma omp parallel num_threads(thread_count(workers))
  {
    std::unordered_map<std::string, PlaneMap> local;
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i)
      for (const auto& x : expansions(parents[i])) {
        PlaneMap child = apply(parents[i], x);
        std::string code = canonical_labelling(child).code;
        if (local.find(code) == local.end()) local.emplace(std::move(code), std::move(child));
      }
#pragma omp critical(orthocusp_merge_level)
    for (auto& [code, map] : local) seen.try_emplace(code, std::move(map));
  }
  std::vector<std::pair<std::string, PlaneMap>> sorted(std::make_move_iterator(seen.begin()),
                                                       std::make_move_iterator(seen.end()));
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PlaneMap> out;
  out.reserve(sorted.size());
  for (auto& [code, map] : sorted) out.push_back(std::move(map));
  return out;
}

std::vector<PlaneMap> near_triangulations_parallel(const std::vector<PlaneMap>& tris, int cusps,
                                                   int workers) {
  std::unordered_map<std::string, PlaneMap> seen;
  const long count = static_cast<long>(tris.size());
#pragma omp parallel num_threads(thread_count(workers))
  {
    std::unordered_map<std::string, PlaneMap> local;
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i)
      for_each_deletion(tris[i], cusps, [&](const PlaneMap& nt) {
        std::string code = canonical_labelling(nt).code;
        if (local.find(code) == local.end()) local.emplace(std::move(code), nt);
      });
#pragma omp critical(orthocusp_merge_nt)
    for (auto& [code, map] : local) seen.try_emplace(code, std::move(map));
  }
  std::vector<std::pair<std::string, PlaneMap>> sorted(std::make_move_iterator(seen.begin()),
                                                       std::make_move_iterator(seen.end()));
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PlaneMap> out;
  for (auto& [code, map] : sorted) out.push_back(std::move(map));
  return out;
}

}  // namespace

long EnumReport::count(int faces) const {
  auto it = accepted.find(faces);
  return it == accepted.end() ? 0 : it->second;
}

long EnumReport::count_up_to(int faces) const {
  long total = 0;
  for (const auto& [f, c] : accepted)
    if (f <= faces) total += c;
  return total;
}

std::vector<PlaneMap> triangulations(int vertices, bool parallel, int workers) {
  if (vertices < 4) return {};
  std::vector<PlaneMap> level{tetrahedron_map()};
  for (int n = 4; n < vertices; ++n)
    level = parallel ? next_level_parallel(level, workers) : next_level_serial(level);
  return level;
}

EnumReport enumerate_serial(const EnumSpec& spec) {
  check_spec(spec);
  EnumReport report = empty_report(spec);
  std::vector<PlaneMap> level{tetrahedron_map()};
  for (int n = 4; n <= spec.max_faces; ++n) {
    if (n > 4) level = next_level_serial(level);
    std::map<std::string, PlaneMap> nts;
    for (const auto& t : level)
      for_each_deletion(t, spec.num_cusps, [&](const PlaneMap& nt) {
        nts.try_emplace(canonical_labelling(nt).code, nt);
      });
    for (const auto& [code, nt] : nts) tally(report, n, classify(nt, spec));
  }
  finalize(report);
  return report;
}

EnumReport enumerate(const EnumSpec& spec) {
  check_spec(spec);
  EnumReport report = empty_report(spec);
  std::vector<PlaneMap> level{tetrahedron_map()};
  for (int n = 4; n <= spec.max_faces; ++n) {
    if (n > 4) level = next_level_parallel(level, spec.workers);
    const auto nts = near_triangulations_parallel(level, spec.num_cusps, spec.workers);
    std::vector<Classified> results(nts.size());
    const long count = static_cast<long>(nts.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(spec.workers))
    for (long i = 0; i < count; ++i) results[i] = classify(nts[i], spec);
    for (const auto& c : results) tally(report, n, c);
  }
  finalize(report);
  return report;
}

// ---------------------------------------------------------------------------
// one-cusp uniqueness at twelve faces, two-cusp floors

long Lemma31Report::below_twelve() const {
  long total = 0;
  for (const auto& [f, c] : counts)
    if (f < 12) total += c;
  return total;
}

long Lemma31Report::at_twelve() const {
  auto it = counts.find(12);
  return it == counts.end() ? 0 : it->second;
}

bool Lemma31Report::ok() const {
  return below_twelve() == 0 && at_twelve() == 1 &&
         face_sizes == std::vector<int>{4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5} &&
         cusp_face_sizes == std::vector<int>{4, 5, 4, 5} && quads_non_adjacent &&
         matches_contracted_dodecahedron && passes_right_angled;
}

std::string Lemma31Report::summary() const {
  std::ostringstream out;
  out << below_twelve() << " types @ <=11; " << at_twelve() << " type" << (at_twelve() == 1 ? "" : "s")
      << " @ 12; cusp-face sizes (";
  for (std::size_t i = 0; i < cusp_face_sizes.size(); ++i)
    out << (i ? "," : "") << cusp_face_sizes[i];
  out << ")";
  return out.str();
}

Lemma31Report verify_lemma31(int workers) {
  EnumSpec spec;
  spec.max_faces = 12;
  spec.num_cusps = 1;
  spec.filter = Filter::right_angled;
  spec.workers = workers;
  const EnumReport report = enumerate(spec);

  Lemma31Report out;
  for (const auto& [f, c] : report.accepted) out.counts[f] = c;
  if (out.at_twelve() != 1) return out;

  const auto it = std::find_if(report.types.begin(), report.types.end(),
                               [](const TypeRecord& r) { return r.faces == 12; });
  const Polyhedron3& p = it->polyhedron;
  for (const auto& f : p.faces()) out.face_sizes.push_back(static_cast<int>(f.size()));
  std::sort(out.face_sizes.begin(), out.face_sizes.end());

  const core::Topology t = core::topology(p);
  const int cusp = p.ideal_vertices().front();
  std::vector<int> around = t.vertex_faces[cusp];
  const auto quad = std::find_if(around.begin(), around.end(),
                                 [&](int f) { return p.faces()[f].size() == 4; });
  if (quad != around.end()) std::rotate(around.begin(), quad, around.end());
  for (int f : around) out.cusp_face_sizes.push_back(static_cast<int>(p.faces()[f].size()));
  if (around.size() == 4) {
    const andreev::FaceAdjacency adj(p);
    out.quads_non_adjacent = !adj.adjacent(around[0], around[2]);
  }
  out.matches_contracted_dodecahedron =
      it->code == core::canonical_code(core::contracted_dodecahedron());
  out.passes_right_angled = right_angled_ok(p);
  return out;
}

std::optional<int> MinimaReport::smallest(int t) const {
  auto it = counts.find(t);
  if (it == counts.end()) return std::nullopt;
  for (const auto& [faces, c] : it->second)
    if (c > 0) return faces;
  return std::nullopt;
}

MinimaReport two_cusp_minima(int budget, int workers) {
  EnumSpec spec;
  spec.max_faces = budget;
  spec.num_cusps = 2;
  spec.filter = Filter::right_angled;
  spec.workers = workers;
  const EnumReport report = enumerate(spec);

  MinimaReport out;
  out.budget = budget;
  out.floor = {{0, 8}, {1, 9}, {2, 10}};
  for (const auto& r : report.types) {
    ++out.counts[r.both_cusp_faces][r.faces];
    auto fl = out.floor.find(r.both_cusp_faces);
    if (fl == out.floor.end()) {
      out.violations.push_back("type with t=" + std::to_string(r.both_cusp_faces) +
                               " faces through both cusps");
    } else if (r.faces < fl->second) {
      out.violations.push_back("t=" + std::to_string(r.both_cusp_faces) + " type with " +
                               std::to_string(r.faces) + " faces, below " +
                               std::to_string(fl->second));
    }
  }
  return out;
}

}  // namespace orthocusp::enum3
