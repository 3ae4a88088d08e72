#include <doctest.h>

#include <algorithm>
#include <set>

#include "naive.hpp"
#include "orthocusp/andreev.hpp"
#include "orthocusp/enum3.hpp"
#include "orthocusp/error.hpp"

using namespace orthocusp;
using namespace orthocusp::enum3;

namespace {

EnumSpec spec(int faces, int cusps, Filter f, int workers = 0) {
  EnumSpec s;
  s.max_faces = faces;
  s.num_cusps = cusps;
  s.filter = f;
  s.workers = workers;
  return s;
}

std::vector<std::string> codes(const EnumReport& r) {
  std::vector<std::string> out;
  for (const auto& t : r.types) out.push_back(t.code.bytes);
  return out;
}

}  // namespace

TEST_CASE("sphere triangulations by vertex count") {
  // 3-connected triangulations with 4..11 vertices
  const std::vector<std::size_t> known{1, 1, 2, 5, 14, 50, 233, 1249};
  for (int n = 4; n <= 11; ++n) {
    CHECK(triangulations(n, true).size() == known[n - 4]);
    if (n <= 10) CHECK(triangulations(n, false).size() == known[n - 4]);
  }
  for (const auto& t : triangulations(8)) {
    CHECK(t.edge_count() == 3 * 8 - 6);
    CHECK(t.is_three_connected());
  }
}

TEST_CASE("enumerate matches the naive oracle up to 8 faces") {
  for (int c = 0; c <= 2; ++c) {
    const auto oracle = naive::census(8, c);
    const auto r = enumerate(spec(8, c, Filter::all_almost_simple));
    for (int f = 4; f <= 8; ++f) {
      INFO("cusps " << c << ", faces " << f);
      CHECK(r.count(f) == oracle.types.at(f));
    }
  }
}

TEST_CASE("serial reference and OpenMP kernels agree") {
  for (const auto& s : {spec(10, 0, Filter::all_almost_simple), spec(10, 1, Filter::all_almost_simple),
                        spec(10, 2, Filter::right_angled), spec(9, 2, Filter::all_almost_simple)}) {
    const auto a = enumerate_serial(s);
    const auto b = enumerate(s);
    CHECK(codes(a) == codes(b));
    CHECK(a.accepted == b.accepted);
    CHECK(a.candidates == b.candidates);
    CHECK(a.non_polyhedral == b.non_polyhedral);
    CHECK(a.non_polyhedral_passing == b.non_polyhedral_passing);
  }
}

TEST_CASE("output independent of worker count") {
  const auto one = enumerate(spec(10, 1, Filter::all_almost_simple, 1));
  const auto three = enumerate(spec(10, 1, Filter::all_almost_simple, 3));
  CHECK(codes(one) == codes(three));
  for (std::size_t i = 0; i < one.types.size(); ++i)
    CHECK(one.types[i].polyhedron == three.types[i].polyhedron);
}

TEST_CASE("every emitted type satisfies the invariants (property)") {
  for (int c = 0; c <= 2; ++c) {
    const auto r = enumerate(spec(10, c, Filter::all_almost_simple));
    const auto cs = codes(r);
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    CHECK(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    long total = 0;
    for (const auto& [f, n] : r.accepted) total += n;
    CHECK(total == static_cast<long>(r.types.size()));
    for (const auto& t : r.types) {
      const auto& p = t.polyhedron;
      CHECK(core::validate(p, core::DegreeProfile::right_angled()).ok());
      CHECK(p.ideal_count() == c);
      CHECK(p.face_count() == t.faces);
      CHECK(p.vertex_count() - p.edge_count() + p.face_count() == 2);
      CHECK(2 * p.edge_count() == 3 * p.finite_vertex_count() + 4 * c);
      CHECK(core::canonical_code(p) == t.code);
      CHECK(to_plane_map(p).is_three_connected());
      if (c == 2) {
        int both = 0;
        for (const auto& f : p.faces())
          if (std::count(f.begin(), f.end(), p.ideal_vertices()[0]) &&
              std::count(f.begin(), f.end(), p.ideal_vertices()[1]))
            ++both;
        CHECK(t.both_cusp_faces == both);
        CHECK(both <= 2);
      }
    }
  }
}

TEST_CASE("right-angled filter agrees with both condition paths (property)") {
  for (int c = 0; c <= 2; ++c) {
    const auto all = enumerate(spec(10, c, Filter::all_almost_simple));
    const auto ra = enumerate(spec(10, c, Filter::right_angled));
    std::set<std::string> accepted;
    for (const auto& t : ra.types) accepted.insert(t.code.bytes);
    for (const auto& t : all.types) {
      const auto& p = t.polyhedron;
      const bool pass = andreev::check_right_angled(p).verdict == andreev::Verdict::pass;
      CHECK(pass == (accepted.count(t.code.bytes) == 1));
      bool faces_ok = true;
      for (const auto& f : p.faces()) {
        const long cusps = std::count_if(f.begin(), f.end(), [&](int v) { return p.is_ideal(v); });
        if (static_cast<long>(f.size()) + cusps < 5) faces_ok = false;
      }
      const bool via_andreev =
          andreev::check_andreev(p, andreev::AngleAssignment::all_right(p)).verdict == andreev::Verdict::pass;
      CHECK(pass == (via_andreev && faces_ok));
      if (pass) {
        CHECK(andreev::prismatic_circuits(p, 3).empty());
        CHECK(andreev::prismatic_circuits(p, 4).empty());
      }
    }
    CHECK(ra.candidates == all.accepted);
  }
}

TEST_CASE("accepted sets grow with the budget (property)") {
  for (int c = 0; c <= 2; ++c) {
    const auto small = codes(enumerate(spec(9, c, Filter::all_almost_simple)));
    const auto big = codes(enumerate(spec(10, c, Filter::all_almost_simple)));
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate(spec(14, 0, Filter::right_angled)), PreconditionError);
  CHECK_THROWS_AS(enumerate_serial(spec(14, 0, Filter::right_angled)), PreconditionError);
  CHECK_THROWS_AS(enumerate(spec(8, 3, Filter::right_angled)), PreconditionError);
  auto s = spec(6, 0, Filter::all_almost_simple);
  s.hard_cap = 5;
  CHECK_THROWS_AS(enumerate(s), PreconditionError);
  CHECK(enumerate(spec(3, 0, Filter::all_almost_simple)).types.empty());
}

TEST_CASE("non-3-connected complexes are counted, not emitted") {
  const auto r = enumerate(spec(9, 2, Filter::all_almost_simple));
  long np = 0;
  for (const auto& [f, n] : r.non_polyhedral) {
    np += n;
    CHECK(r.non_polyhedral_passing.at(f) <= n);
  }
  CHECK(np > 0);
  // compact near-triangulations are triangulations: always 3-connected
  const auto c0 = enumerate(spec(10, 0, Filter::all_almost_simple));
  for (const auto& [f, n] : c0.non_polyhedral) CHECK(n == 0);
}

TEST_CASE("compact right-angled types: only the dodecahedron up to 12 faces") {
  const auto r = enumerate(spec(12, 0, Filter::right_angled));
  CHECK(r.count_up_to(11) == 0);
  REQUIRE(r.types.size() == 1);
  CHECK(r.types[0].code == core::canonical_code(core::dodecahedron()));
  for (const auto& f : r.types[0].polyhedron.faces()) CHECK(f.size() >= 5);
}

TEST_CASE("two-cusp minima") {
  const auto m = two_cusp_minima(10);
  CHECK(m.ok());
  REQUIRE(m.smallest(0));
  REQUIRE(m.smallest(1));
  REQUIRE(m.smallest(2));
  CHECK(*m.smallest(0) >= 8);
  CHECK(*m.smallest(1) >= 9);
  CHECK(*m.smallest(2) >= 10);
  for (const auto& [t, by_faces] : m.counts) CHECK(m.floor.count(t) == 1);
}
