#include <doctest.h>

#include <set>

#include "orthocusp/cusplink.hpp"
#include "orthocusp/error.hpp"

using namespace orthocusp;
using namespace orthocusp::cusplink;

namespace {

// Subsets of {1..2(n-1)} of size n-k with no i, j such that i + j = 2n - 1.
long brute_count(int n, int k) {
  const int h = 2 * (n - 1);
  long count = 0;
  for (unsigned s = 0; s < (1u << h); ++s) {
    if (__builtin_popcount(s) != n - k) continue;
    bool ok = true;
    for (int i = 1; i <= h && ok; ++i)
      for (int j = i + 1; j <= h && ok; ++j)
        if ((s >> (i - 1) & 1) && (s >> (j - 1) & 1) && i + j == h + 1) ok = false;
    count += ok;
  }
  return count;
}

long brute_binom(int n, int k) {
  long c = 0;
  for (unsigned s = 0; s < (1u << n); ++s) c += __builtin_popcount(s) == static_cast<unsigned>(k);
  return c;
}

}  // namespace

TEST_CASE("cusp link pairing") {
  const CuspLink six(6);
  CHECK(six.hyperface_count() == 10);
  for (int i = 1; i <= 10; ++i) {
    CHECK(six.parallel(i) == 11 - i);
    CHECK(six.parallel(six.parallel(i)) == i);
    CHECK(six.parallel(i) != i);
  }
  CHECK(CuspLink(7).parallel(1) == 12);
  CHECK_THROWS_AS(CuspLink(1), PreconditionError);
}

TEST_CASE("count_cusp_faces: examples") {
  CHECK(count_cusp_faces(6, 3) == 80);
  CHECK(count_cusp_faces(7, 3) == 240);
  CHECK(count_cusp_faces(6, 5) == 10);
  CHECK(faces_through_edge(7) == 15);
  CHECK(faces_through_edge(6) == 10);
  CHECK(faces_through_edge(7) == brute_binom(6, 4));
  CHECK_THROWS_AS(count_cusp_faces(6, 0), PreconditionError);
  CHECK_THROWS_AS(count_cusp_faces(6, 6), PreconditionError);
}

TEST_CASE("count_cusp_faces equals enumeration and brute force (property)") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      const auto faces = enumerate_cusp_faces(n, k);
      CHECK(static_cast<long>(faces.size()) == count_cusp_faces(n, k));
      CHECK(static_cast<long>(faces.size()) == brute_count(n, k));
      for (const auto& f : faces) {
        CHECK(f.is_valid());
        CHECK(f.face_dimension() == k);
      }
      CHECK(std::set<CuspFace>(faces.begin(), faces.end()).size() == faces.size());
    }
}

TEST_CASE("CuspFace basics") {
  const CuspFace f(6, {1, 2, 6});
  CHECK(f.size() == 3);
  CHECK(f.face_dimension() == 3);
  CHECK(f.contains(6));
  CHECK_FALSE(f.contains(5));
  CHECK(f.to_string() == "{1,2,6}");
  CHECK(f.members() == std::vector<int>{1, 2, 6});
  CHECK(f.is_valid());
  CHECK_FALSE(CuspFace(6, {5, 6}).is_valid());
  CHECK(CuspFace(6, {1, 2}).subset_of(f));
  CHECK_THROWS_AS(CuspFace(6, {11}), PreconditionError);
}

TEST_CASE("is_adjacent: examples") {
  CHECK(is_adjacent(CuspFace(6, {1, 2, 6}), CuspFace(6, {1, 2, 7})));
  CHECK_FALSE(is_adjacent(CuspFace(6, {1, 2, 6}), CuspFace(6, {1, 2, 5})));
  CHECK_FALSE(is_adjacent(CuspFace(6, {1, 2, 6}), CuspFace(6, {3, 4, 9})));
  CHECK_THROWS_AS(is_adjacent(CuspFace(6, {1, 2, 6}), CuspFace(6, {1, 2})), PreconditionError);
}

TEST_CASE("is_adjacent: symmetric and irreflexive (property)") {
  const auto faces = enumerate_cusp_faces(6, 3);
  for (const auto& f : faces) {
    CHECK_FALSE(is_adjacent(f, f));
    for (const auto& g : faces) {
      CHECK(is_adjacent(f, g) == is_adjacent(g, f));
      // meet in a 2-face: two common hyperfaces, union free of parallel pairs
      const std::uint32_t u = f.mask() | g.mask();
      const bool expect = __builtin_popcount(f.mask() & g.mask()) == 2 &&
                          CuspFace::from_mask(6, u).is_valid();
      CHECK(is_adjacent(f, g) == expect);
    }
  }
}

TEST_CASE("carriers and two-cusp faces") {
  CHECK(carrier(SecondCusp::face3) == CuspFace(6, {1, 2, 3}));
  CHECK(carrier(SecondCusp::face2) == CuspFace(6, {1, 2, 3, 4}));
  CHECK(carrier(SecondCusp::edge) == CuspFace(6, {1, 2, 3, 4, 5}));
  CHECK(two_cusp_faces(SecondCusp::face3).size() == 1);
  CHECK(two_cusp_faces(SecondCusp::face2).size() == 4);
  CHECK(two_cusp_faces(SecondCusp::edge).size() == 10);
  for (auto c : {SecondCusp::face3, SecondCusp::face2, SecondCusp::edge})
    for (const auto& f : two_cusp_faces(c)) {
      CHECK(f.size() == 3);
      CHECK(f.subset_of(carrier(c)));
    }
}

TEST_CASE("tables verify") {
  const auto t1 = verify_table(SecondCusp::face2, table1());
  CHECK(t1.ok());
  CHECK(t1.rows == 12);
  CHECK(t1.distinct_faces == 36);

  const auto t2 = verify_table(SecondCusp::edge, table2());
  CHECK(t2.ok());
  CHECK(t2.rows == 20);
  CHECK(t2.distinct_faces == 60);

  const auto c41 = verify_table(SecondCusp::face3, case41_rows());
  CHECK(c41.ok());
  CHECK(c41.rows == 4);
  CHECK(c41.distinct_faces == 12);
}

TEST_CASE("table rows satisfy the hypotheses literally (property)") {
  struct Item {
    SecondCusp c;
    std::vector<TripleRow> rows;
  };
  for (const auto& it : {Item{SecondCusp::face2, table1()}, Item{SecondCusp::edge, table2()},
                         Item{SecondCusp::face3, case41_rows()}}) {
    std::set<CuspFace> seen;
    for (const auto& r : it.rows) {
      for (int i = 0; i < 3; ++i) {
        CHECK(r[i].is_valid());
        CHECK_FALSE(r[i].subset_of(carrier(it.c)));
        CHECK(seen.insert(r[i]).second);
        for (int j = i + 1; j < 3; ++j) CHECK(is_adjacent(r[i], r[j]));
      }
    }
  }
}

TEST_CASE("tables catch transcription errors") {
  auto rows = table1();
  rows[0][2] = CuspFace(6, {1, 2, 9});  // 2 and 9 are parallel
  CHECK_FALSE(verify_table(SecondCusp::face2, rows).ok());

  rows = table1();
  rows[1] = rows[0];  // repeated faces
  CHECK_FALSE(verify_table(SecondCusp::face2, rows).ok());

  rows = table1();
  rows[0][0] = CuspFace(6, {1, 2, 3});  // through the second cusp
  CHECK_FALSE(verify_table(SecondCusp::face2, rows).ok());

  rows = table1();
  rows[0][2] = CuspFace(6, {3, 4, 9});  // not adjacent to the others
  CHECK_FALSE(verify_table(SecondCusp::face2, rows).ok());
}

TEST_CASE("averaging_contradiction: examples") {
  const Rational twelve = 12;
  const auto a = averaging_contradiction(twelve, {4}, 4);
  CHECK(a.contradiction);
  CHECK(a.deficit == 4);
  CHECK(a.surplus == 4);
  CHECK(a.margin == 0);
  CHECK(averaging_contradiction(twelve, {3, 3, 3, 3}, 12).contradiction);
  CHECK(averaging_contradiction(twelve, std::vector<long>(10, 2), 20).contradiction);
  CHECK_FALSE(averaging_contradiction(twelve, std::vector<long>(10, 2), 19).contradiction);
  CHECK(averaging_contradiction(twelve, {}, 0).contradiction);
  CHECK_THROWS_AS(averaging_contradiction(twelve, {-1}, 3), PreconditionError);
}

TEST_CASE("averaging_contradiction is monotone (property)") {
  const Rational twelve = 12;
  for (long d = 0; d <= 12; ++d)
    for (long s = 0; s <= 15; ++s) {
      if (!averaging_contradiction(twelve, {d}, s).contradiction) continue;
      CHECK(averaging_contradiction(twelve, {d}, s + 1).contradiction);
      if (d > 0) CHECK(averaging_contradiction(twelve, {d - 1}, s).contradiction);
    }
}
