#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cubehom/errors.hpp"
#include "cubehom/grid.hpp"
#include "cubehom/pcs_io.hpp"
#include "support/fixtures.hpp"

using namespace cubehom;
using namespace cubehom::testing;

namespace {

std::vector<std::size_t> grading(const PrecubicalSet& k) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= k.max_dim(); ++d) out.push_back(k.grade(d).size());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("parsing") {
  SUBCASE("single vertex") {
    const PcsDocument doc = parse_pcs(R"({"dims": 0, "cubes": [{"id": "v", "dim": 0}]})");
    CHECK(doc.complex.size() == 1);
    CHECK(doc.complex.grade(0).size() == 1);
    CHECK_FALSE(doc.source.has_value());
  }
  SUBCASE("shipped square fixture") {
    const PcsDocument doc = parse_pcs(read_file(std::string(CUBEHOM_REPO_DIR) + "/fixtures/sq.pcs.json"));
    CHECK(grading(doc.complex) == std::vector<std::size_t>{4, 4, 1});
    REQUIRE(doc.source.has_value());
    REQUIRE(doc.target.has_value());
    CHECK(doc.complex.name(*doc.source) == "c0,0");
    CHECK(doc.complex.name(*doc.target) == "c1,1");
    CHECK(validate_precubical(doc.complex).ok);
  }
  SUBCASE("dangling face reference") {
    CHECK_THROWS_WITH_AS(
        parse_pcs(R"({"cubes": [{"id": "v", "dim": 0},
                                {"id": "e", "dim": 1, "faces": [["v", "w"]]}]})"),
        doctest::Contains("missing cube 'w'"), InputError);
  }
  SUBCASE("syntax error carries the position") {
    CHECK_THROWS_WITH_AS(parse_pcs("{\n  \"cubes\": [,]\n}"), doctest::Contains("line 2"),
                         InputError);
  }
  SUBCASE("face of the wrong dimension") {
    CHECK_THROWS_AS(parse_pcs(R"({"cubes": [
        {"id": "v", "dim": 0},
        {"id": "e", "dim": 1, "faces": [["v", "v"]]},
        {"id": "s", "dim": 2, "faces": [["v", "v"], ["e", "e"]]}]})"),
                    InputError);
  }
}

TEST_CASE("serialization round trips") {
  SUBCASE("square") {
    const GridComplex sq = make_square();
    const std::string text = serialize_pcs(sq.complex, sq.source, sq.target);
    const PcsDocument doc = parse_pcs(text);
    CHECK(grading(doc.complex) == grading(sq.complex));
    for (int d = 0; d <= sq.complex.max_dim(); ++d) {
      for (CubeIdx c : sq.complex.grade(d)) {
        auto found = doc.complex.find(sq.complex.name(c));
        REQUIRE(found.has_value());
        CHECK(doc.complex.dim(*found) == d);
        for (int dir = 1; dir <= d; ++dir)
          for (int eps = 0; eps < 2; ++eps)
            CHECK(doc.complex.name(doc.complex.face(*found, dir, eps)) ==
                  sq.complex.name(sq.complex.face(c, dir, eps)));
      }
    }
    // Serialization is deterministic.
    CHECK(serialize_pcs(doc.complex, doc.source, doc.target) == text);
  }
  SUBCASE("covering truncation of the circle") {
    const CoveringTruncation t = covering_truncation(make_directed_circle(), 2);
    const PcsDocument doc = parse_pcs(serialize_pcs(t.complex));
    CHECK(grading(doc.complex) == std::vector<std::size_t>{6, 4});
    CHECK(validate_precubical(doc.complex).ok);
  }
  SUBCASE("empty complex") {
    const PcsDocument doc = parse_pcs(serialize_pcs(PcsBuilder().build()));
    CHECK(doc.complex.size() == 0);
  }
}

TEST_CASE("grid generation") {
  SUBCASE("unit square") {
    const GridComplex g = make_square();
    CHECK(grading(g.complex) == std::vector<std::size_t>{4, 4, 1});
    CHECK(g.complex.name(g.source) == "c0,0");
    CHECK(g.complex.name(g.target) == "c1,1");
  }
  SUBCASE("hollow cube") {
    const GridComplex g = make_hollow_cube();
    CHECK(grading(g.complex) == std::vector<std::size_t>{8, 12, 6});
    CHECK(g.complex.grade(3).empty());  // the single box is forbidden
  }
  SUBCASE("square annulus") {
    CHECK(grading(make_annulus().complex) == std::vector<std::size_t>{16, 24, 8});
  }
  SUBCASE("forbidden cell out of range") {
    CHECK_THROWS_AS(generate_grid_complex(GridSpec{{2, 2}, {{2, 0}}}), InputError);
  }
  SUBCASE("generated complexes satisfy the structural invariants") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
      const GridComplex g = generate_grid_complex(random_grid_spec(rng, 3, 4));
      CHECK(validate_precubical(g.complex).ok);
      CHECK(is_proper(g.complex).proper);
      CHECK(has_no_loops(g.complex).acyclic);
    }
  }
  SUBCASE("full grids have the expected counts") {
    const GridComplex g = generate_grid_complex(GridSpec{{2, 3}, {}});
    CHECK(g.complex.grade(0).size() == 12);  // (2+1)(3+1)
    CHECK(g.complex.grade(2).size() == 6);   // 2*3
    CHECK(validate_precubical(g.complex).ok);
  }
}

TEST_CASE("grid spec documents") {
  const GridSpec spec = parse_grid_spec(R"({"extents": [3, 3], "forbidden": [[1, 1]]})");
  CHECK(spec.extents == std::vector<int>{3, 3});
  REQUIRE(spec.forbidden.size() == 1);
  CHECK(spec.forbidden[0] == std::vector<int>{1, 1});
  CHECK_THROWS_AS(parse_grid_spec(R"({"extents": []})"), InputError);
  CHECK_THROWS_AS(parse_grid_spec(R"({"extents": [2], "forbidden": [[5]]})"), InputError);
}
