#include <doctest.h>

#include <algorithm>

#include "cubehom/errors.hpp"
#include "cubehom/precubical.hpp"
#include "support/fixtures.hpp"

using namespace cubehom;
using namespace cubehom::testing;

namespace {

std::vector<std::size_t> grading(const PrecubicalSet& k) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= k.max_dim(); ++d) out.push_back(k.grade(d).size());
  return out;
}

}  // namespace

TEST_CASE("builder rejects structural defects") {
  PcsBuilder ok;
  ok.add_cube("v", 0, {});
  CHECK_THROWS_AS(ok.add_cube("v", 0, {}), InputError);  // duplicate id
  PcsBuilder dangling;
  dangling.add_cube("v", 0, {});
  dangling.add_cube("e", 1, {{{"v", "w"}}});
  CHECK_THROWS_AS(std::move(dangling).build(), InputError);
  PcsBuilder wrong_dim;
  wrong_dim.add_cube("v", 0, {});
  wrong_dim.add_cube("e", 1, {{{"v", "v"}}});
  wrong_dim.add_cube("s", 2, {{{"v", "v"}, {"e", "e"}}});  // dim-0 face of a 2-cube
  CHECK_THROWS_AS(std::move(wrong_dim).build(), InputError);
  PcsBuilder too_deep;
  CHECK_THROWS_AS(too_deep.add_cube("c", kMaxDim + 1, {}), InputError);
}

TEST_CASE("validation") {
  SUBCASE("single vertex has nothing to check") {
    PcsBuilder b;
    b.add_cube("v", 0, {});
    const PrecubicalSet k = std::move(b).build();
    CHECK(validate_precubical(k).ok);
  }
  SUBCASE("solid square validates") {
    CHECK(validate_precubical(make_square().complex).ok);
  }
  SUBCASE("swapping two faces of the square breaks a relation") {
    const PrecubicalSet& good = make_square().complex;
    PcsBuilder b;
    for (int d = 0; d <= good.max_dim(); ++d) {
      for (CubeIdx c : good.grade(d)) {
        std::vector<std::array<std::string, 2>> faces;
        for (int dir = 1; dir <= d; ++dir)
          faces.push_back({good.name(good.face(c, dir, 0)), good.name(good.face(c, dir, 1))});
        if (d == 2) std::swap(faces[0][0], faces[1][0]);  // d^0_1 <-> d^0_2
        b.add_cube(good.name(c), d, std::move(faces));
      }
    }
    const PrecubicalSet bad = std::move(b).build();
    const ValidationReport report = validate_precubical(bad);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.size() >= 1);
    CHECK(report.violations.front().cube == "c0,0|1,2");
  }
}

TEST_CASE("apply_face on the square") {
  const GridComplex sq = make_square();
  const PrecubicalSet& k = sq.complex;
  const CubeIdx square = *k.find("c0,0|1,2");
  SUBCASE("all stars is the identity") {
    CHECK(apply_face(k, square, FaceLabel::constant(2, FaceDir::Star)) == square);
  }
  SUBCASE("both zeros reaches the bottom-left vertex") {
    CHECK(apply_face(k, square, FaceLabel::constant(2, FaceDir::Zero)) == *k.find("c0,0"));
  }
  SUBCASE("(*,1) is the top edge") {
    CHECK(apply_face(k, square, FaceLabel(std::vector<FaceDir>{FaceDir::Star, FaceDir::One})) ==
          *k.find("c0,1|1"));
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(apply_face(k, square, FaceLabel::constant(3, FaceDir::Star)), InputError);
  }
}

TEST_CASE("extreme vertices") {
  const GridComplex sq = make_square();
  const PrecubicalSet& k = sq.complex;
  const CubeIdx v = *k.find("c0,0");
  CHECK(extreme_vertices(k, v) == std::make_pair(v, v));
  CHECK(extreme_vertices(k, *k.find("c0,0|1,2")) ==
        std::make_pair(*k.find("c0,0"), *k.find("c1,1")));
  CHECK(extreme_vertices(k, *k.find("c0,0|1")) ==
        std::make_pair(*k.find("c0,0"), *k.find("c1,0")));
}

TEST_CASE("properness") {
  SUBCASE("square is proper") { CHECK(is_proper(make_square().complex).proper); }
  SUBCASE("single vertex is proper") {
    PcsBuilder b;
    b.add_cube("v", 0, {});
    CHECK(is_proper(std::move(b).build()).proper);
  }
  SUBCASE("parallel edges are not") {
    PcsBuilder b;
    b.add_cube("p", 0, {});
    b.add_cube("q", 0, {});
    b.add_cube("e1", 1, {{{"p", "q"}}});
    b.add_cube("e2", 1, {{{"p", "q"}}});
    const PrecubicalSet k = std::move(b).build();
    const PropernessResult r = is_proper(k);
    CHECK_FALSE(r.proper);
    REQUIRE(r.offending.has_value());
    CHECK(k.name(r.offending->first) == "e1");
    CHECK(k.name(r.offending->second) == "e2");
  }
}

TEST_CASE("loop detection") {
  SUBCASE("square is acyclic") { CHECK(has_no_loops(make_square().complex).acyclic); }
  SUBCASE("single edge is acyclic") {
    PcsBuilder b;
    b.add_cube("p", 0, {});
    b.add_cube("q", 0, {});
    b.add_cube("e", 1, {{{"p", "q"}}});
    CHECK(has_no_loops(std::move(b).build()).acyclic);
  }
  SUBCASE("directed circle yields a witness") {
    const PrecubicalSet k = make_directed_circle();
    const LoopCheckResult r = has_no_loops(k);
    CHECK_FALSE(r.acyclic);
    REQUIRE(r.witness_cycle.size() == 3);
    CHECK(r.witness_cycle.front() == r.witness_cycle.back());
    CHECK(k.name(r.witness_cycle[0]) == "u");
    CHECK(k.name(r.witness_cycle[1]) == "v");
  }
}

TEST_CASE("covering truncation") {
  const PrecubicalSet circle = make_directed_circle();
  SUBCASE("n = 0 keeps only level-zero vertices") {
    const CoveringTruncation t = covering_truncation(circle, 0);
    CHECK(grading(t.complex) == std::vector<std::size_t>{2});
  }
  SUBCASE("circle unrolls") {
    const CoveringTruncation t = covering_truncation(circle, 2);
    // |K~_n[d]| = |K[d]| * (n - d + 1)
    CHECK(grading(t.complex) == std::vector<std::size_t>{6, 4});
    CHECK(validate_precubical(t.complex).ok);
    CHECK(has_no_loops(t.complex).acyclic);
    // The part between (u,0) and (u,2) is the directed interval
    // (u,0) -> (v,1) -> (u,2).
    const CubeIdx a0 = *t.complex.find("a@0");
    const CubeIdx b1 = *t.complex.find("b@1");
    CHECK(extreme_vertices(t.complex, a0) ==
          std::make_pair(*t.complex.find("u@0"), *t.complex.find("v@1")));
    CHECK(extreme_vertices(t.complex, b1) ==
          std::make_pair(*t.complex.find("v@1"), *t.complex.find("u@2")));
  }
  SUBCASE("square truncation grading follows the formula") {
    const CoveringTruncation t = covering_truncation(make_square().complex, 2);
    CHECK(grading(t.complex) == std::vector<std::size_t>{12, 8, 1});
    CHECK(validate_precubical(t.complex).ok);
    CHECK(has_no_loops(t.complex).acyclic);
  }
  SUBCASE("grading formula on all fixtures") {
    const GridComplex sq = make_square();
    const GridComplex hc = make_hollow_cube();
    for (const PrecubicalSet* k : {&circle, &sq.complex, &hc.complex}) {
      for (int n = 0; n <= 4; ++n) {
        const CoveringTruncation t = covering_truncation(*k, n);
        for (int d = 0; d <= std::max(k->max_dim(), t.complex.max_dim()); ++d) {
          const std::size_t expected =
              k->grade(d).size() * static_cast<std::size_t>(std::max(0, n - d + 1));
          CHECK(t.complex.grade(d).size() == expected);
        }
      }
    }
  }
}

TEST_CASE("covering properness") {
  SUBCASE("directed circle is covering proper but not proper") {
    const PrecubicalSet circle = make_directed_circle();
    CHECK(is_covering_proper(circle).proper);
    CHECK_FALSE(is_proper(circle).proper);  // both edges span {u, v}
  }
  SUBCASE("duplicated loop edge is not covering proper") {
    PcsBuilder b;
    b.add_cube("v", 0, {});
    b.add_cube("e1", 1, {{{"v", "v"}}});
    b.add_cube("e2", 1, {{{"v", "v"}}});
    CHECK_FALSE(is_covering_proper(std::move(b).build()).proper);
  }
  SUBCASE("square is covering proper") {
    CHECK(is_covering_proper(make_square().complex).proper);
  }
  SUBCASE("equivalent to properness of every truncation") {
    PcsBuilder dup;
    dup.add_cube("p", 0, {});
    dup.add_cube("q", 0, {});
    dup.add_cube("e1", 1, {{{"p", "q"}}});
    dup.add_cube("e2", 1, {{{"p", "q"}}});
    const PrecubicalSet parallel = std::move(dup).build();
    const PrecubicalSet circle = make_directed_circle();
    const GridComplex sq = make_square();
    const GridComplex hc = make_hollow_cube();
    for (const PrecubicalSet* k : {&circle, &sq.complex, &hc.complex, &parallel}) {
      const bool expected = is_covering_proper(*k).proper;
      // Truncations below the offending dimension are trivially proper, so
      // the equivalence is witnessed from max_dim upward.
      for (int n = k->max_dim(); n <= 6; ++n)
        CHECK(is_proper(covering_truncation(*k, n).complex).proper == expected);
    }
  }
}
