#include <doctest.h>

#include <algorithm>
#include <set>

#include "orthocusp/andreev.hpp"
#include "orthocusp/error.hpp"
#include "orthocusp/polyhedron.hpp"

using namespace orthocusp;
using namespace orthocusp::core;
using andreev::Verdict;

namespace {

// Direct search over face tuples: shared edges found by scanning face cycles,
// circuits normalised as sorted face sets.
std::vector<std::pair<int, int>> shared(const Polyhedron3& p, int f, int g) {
  std::vector<std::pair<int, int>> out;
  auto edges_of = [&](int h) {
    std::set<std::pair<int, int>> s;
    const auto& c = p.faces()[h];
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      s.insert({std::min(a, b), std::max(a, b)});
    }
    return s;
  };
  const auto ef = edges_of(f), eg = edges_of(g);
  std::set_intersection(ef.begin(), ef.end(), eg.begin(), eg.end(), std::back_inserter(out));
  return out;
}

std::set<std::set<int>> brute_circuits(const Polyhedron3& p, int length) {
  std::set<std::set<int>> out;
  const int F = p.face_count();
  std::vector<int> t(length);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == length) {
      std::vector<std::pair<int, int>> crossed;
      for (int j = 0; j < length; ++j) {
        const auto s = shared(p, t[j], t[(j + 1) % length]);
        if (s.size() != 1) return;
        crossed.push_back(s[0]);
      }
      if (length == 3) {
        // every pair adjacent, no vertex common to all three
        for (const int v : p.faces()[t[0]])
          if (std::count(p.faces()[t[1]].begin(), p.faces()[t[1]].end(), v) &&
              std::count(p.faces()[t[2]].begin(), p.faces()[t[2]].end(), v))
            return;
      } else {
        std::set<int> ends;
        for (auto [a, b] : crossed) {
          ends.insert(a);
          ends.insert(b);
        }
        if (static_cast<int>(ends.size()) != 2 * length) return;
      }
      out.insert(std::set<int>(t.begin(), t.end()));
      return;
    }
    for (int f = 0; f < F; ++f) {
      if (std::find(t.begin(), t.begin() + i, f) != t.begin() + i) continue;
      t[i] = f;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::set<std::set<int>> as_sets(const std::vector<andreev::PrismaticCircuit>& cs) {
  std::set<std::set<int>> out;
  for (const auto& c : cs) out.insert(std::set<int>(c.faces.begin(), c.faces.end()));
  return out;
}

const std::vector<Polyhedron3>& corpus() {
  static const std::vector<Polyhedron3> all = {tetrahedron(), triangular_prism(), square_pyramid(),
                                               cube(), dodecahedron(), contracted_dodecahedron(),
                                               with_ideal(square_pyramid(), {4})};
  return all;
}

}  // namespace

TEST_CASE("adjacency") {
  const auto a = andreev::adjacency(cube());
  for (int f = 0; f < 6; ++f) {
    CHECK(a.neighbours(f).size() == 4);
    for (int g : a.neighbours(f)) CHECK(a.multiplicity(f, g) == 1);
  }
  const auto d = andreev::adjacency(dodecahedron());
  for (int f = 0; f < 12; ++f) CHECK(d.neighbours(f).size() == 5);
  for (int f = 0; f < 12; ++f)
    for (int g = 0; g < 12; ++g) CHECK(d.adjacent(f, g) == d.adjacent(g, f));

  const Polyhedron3 theta(4, {}, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  CHECK(andreev::adjacency(theta).multiplicity(0, 1) == 4);
}

TEST_CASE("prismatic circuits: examples") {
  CHECK(andreev::prismatic_circuits(triangular_prism(), 3).size() == 1);
  CHECK(andreev::prismatic_circuits(cube(), 3).empty());
  CHECK(andreev::prismatic_circuits(cube(), 4).size() == 3);
  CHECK(andreev::prismatic_circuits(dodecahedron(), 3).empty());
  CHECK(andreev::prismatic_circuits(dodecahedron(), 4).empty());

  const auto prism = andreev::prismatic_circuits(triangular_prism(), 3)[0].faces;
  for (int f : prism) CHECK(triangular_prism().faces()[f].size() == 4);
}

TEST_CASE("prismatic circuits agree with brute force") {
  for (const auto& p : corpus())
    for (int len : {3, 4}) CHECK(as_sets(andreev::prismatic_circuits(p, len)) == brute_circuits(p, len));
  // the four faces around a cusp meet there: never a circuit
  const auto c = contracted_dodecahedron();
  CHECK(andreev::prismatic_circuits(c, 4).empty());
}

TEST_CASE("check_andreev: examples") {
  auto right = [](const Polyhedron3& p) {
    return andreev::check_andreev(p, andreev::AngleAssignment::all_right(p));
  };
  CHECK(right(dodecahedron()).verdict == Verdict::pass);

  const auto cube_r = right(cube());
  CHECK(cube_r.verdict == Verdict::fail);
  CHECK(cube_r.condition("e").witnesses.size() == 3);
  CHECK(cube_r.condition("a").ok());

  CHECK(right(triangular_prism()).verdict == Verdict::outside_scope);
  CHECK(right(triangular_prism()).excluded_family);
  CHECK(right(tetrahedron()).verdict == Verdict::outside_scope);

  // prism with angles that break (c): still outside the theorem
  const auto prism = triangular_prism();
  auto acute = andreev::AngleAssignment::all_right(prism);
  for (const auto& e : prism.edges()) acute.set(e, make_rational(1, 3));
  CHECK(andreev::check_andreev(prism, acute).verdict == Verdict::outside_scope);

  CHECK(right(contracted_dodecahedron()).verdict == Verdict::pass);
}

TEST_CASE("check_andreev: cusp rules") {
  // square pyramid, apex at infinity: opposite side triangles meet only at the
  // cusp, and the base touches both -> (d) with right angles
  const auto pyr = with_ideal(square_pyramid(), {4});
  const auto r = andreev::check_andreev(pyr, andreev::AngleAssignment::all_right(pyr));
  CHECK(r.condition("b").ok());
  CHECK(r.condition("d").witnesses.size() == 2);
  CHECK(r.verdict == Verdict::fail);

  // a 4-valent cusp with a non-right angle breaks (b)
  auto skew = andreev::AngleAssignment::all_right(pyr);
  skew.set(Edge(0, 4), make_rational(1, 3));
  CHECK_FALSE(andreev::check_andreev(pyr, skew).condition("b").ok());

  // a 3-valent cusp needs the sum to be exactly pi
  const auto c = with_ideal(cube(), {0});
  auto angles = andreev::AngleAssignment::all_right(c);
  CHECK_FALSE(andreev::check_andreev(c, angles).condition("a").ok());
  for (const auto& e : c.edges())
    if (e.u == 0 || e.v == 0) angles.set(e, make_rational(1, 3));
  CHECK(andreev::check_andreev(c, angles).condition("a").ok());
  for (const auto& e : c.edges())
    if (e.u == 0 || e.v == 0) angles.set(e, make_rational(1, 4));
  CHECK_FALSE(andreev::check_andreev(c, angles).condition("a").ok());

  // finite vertex: sum below pi
  const auto dd = dodecahedron();
  auto low = andreev::AngleAssignment::all_right(dd);
  for (const auto& e : dd.edges())
    if (e.u == 0 || e.v == 0) low.set(e, make_rational(1, 4));
  const auto lr = andreev::check_andreev(dd, low);
  REQUIRE(lr.condition("a").witnesses.size() == 1);
  CHECK(lr.condition("a").witnesses[0].vertex == 0);
}

TEST_CASE("check_andreev: bad angle data") {
  const auto d = dodecahedron();
  andreev::AngleAssignment partial;
  partial.set(d.edges()[0], make_rational(1, 2));
  CHECK_THROWS_AS(andreev::check_andreev(d, partial), PreconditionError);

  auto wide = andreev::AngleAssignment::all_right(d);
  wide.set(d.edges()[0], make_rational(3, 4));
  CHECK_THROWS_AS(andreev::check_andreev(d, wide), PreconditionError);

  auto stray = andreev::AngleAssignment::all_right(d);
  stray.set(Edge(0, 19), make_rational(1, 2));
  if (std::find(d.edges().begin(), d.edges().end(), Edge(0, 19)) == d.edges().end())
    CHECK_THROWS_AS(andreev::check_andreev(d, stray), PreconditionError);

  CHECK_THROWS_AS(andreev::check_andreev(square_pyramid(), andreev::AngleAssignment::all_right(square_pyramid())),
                  PreconditionError);  // finite vertex of degree 4
}

TEST_CASE("parse_angles") {
  const auto a = andreev::parse_angles("# angles\nangle: 0 1 1 2\nangle: 2 1 1 3\n\n");
  REQUIRE(a.find(Edge(0, 1)));
  CHECK(*a.find(Edge(0, 1)) == make_rational(1, 2));
  CHECK(*a.find(Edge(1, 2)) == make_rational(1, 3));
  CHECK(a.find(Edge(0, 2)) == nullptr);
  CHECK_THROWS(andreev::parse_angles("angle: 0 1 1\n"));
  CHECK_THROWS(andreev::parse_angles("angel: 0 1 1 2\n"));
}

TEST_CASE("check_right_angled: examples") {
  CHECK(andreev::check_right_angled(dodecahedron()).verdict == Verdict::pass);
  CHECK(andreev::check_right_angled(contracted_dodecahedron()).verdict == Verdict::pass);

  const auto c = andreev::check_right_angled(cube());
  CHECK(c.verdict == Verdict::fail);
  CHECK(c.condition("1").witnesses.size() == 6);

  const auto pyr = andreev::check_right_angled(square_pyramid());
  CHECK_FALSE(pyr.condition("3").ok());

  const auto three_cusp = andreev::check_right_angled(with_ideal(cube(), {0}));
  CHECK_FALSE(three_cusp.condition("cusp-degree").ok());

  const Polyhedron3 theta(4, {}, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  CHECK_FALSE(andreev::check_right_angled(theta).condition("2").ok());
}

TEST_CASE("check_right_angled agrees with check_andreev at right angles (property)") {
  for (const auto& p : corpus()) {
    const auto r = andreev::check_right_angled(p);
    bool almost_simple = true;
    const auto deg = p.vertex_degrees();
    for (int v = 0; v < p.vertex_count(); ++v)
      if (p.is_ideal(v) ? deg[v] != 4 : deg[v] != 3) almost_simple = false;
    bool faces_ok = true;
    for (const auto& f : p.faces()) {
      long cusps = std::count_if(f.begin(), f.end(), [&](int v) { return p.is_ideal(v); });
      if (static_cast<long>(f.size()) + cusps < 5) faces_ok = false;
    }
    if (!almost_simple) {
      CHECK(r.verdict != Verdict::pass);
      continue;
    }
    const auto a = andreev::check_andreev(p, andreev::AngleAssignment::all_right(p));
    const bool andreev_pass = a.verdict == Verdict::pass;
    CHECK((r.verdict == Verdict::pass) == (andreev_pass && faces_ok));
    if (r.verdict == Verdict::pass) {
      CHECK(andreev::prismatic_circuits(p, 3).empty());
      CHECK(andreev::prismatic_circuits(p, 4).empty());
    }
  }
}
