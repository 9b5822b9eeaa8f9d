#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cubehom/complex.hpp"
#include "cubehom/errors.hpp"
#include "support/fixtures.hpp"

using namespace cubehom;
using namespace cubehom::testing;

namespace {

ChainPoset poset_of(const GridComplex& g) {
  return build_poset(g.complex, enumerate_chains(g.complex, g.source, g.target));
}

/// Closed-formula boundary re-expressed as a simplicial chain through the
/// cell cycles of the children; the oracle comparison target.
SignedChain boundary_via_cycles(const PrecubicalSet& k, const ChainPoset& poset, int cell) {
  SignedChain out;
  for (const IncidenceTerm& term : cellular_boundary(k, poset.element(cell))) {
    const int child = *poset.index_of(term.child);
    for (const auto& [key, coefficient] : cell_cycle(k, poset, child))
      chain_add(out, key, term.coefficient * coefficient);
  }
  return out;
}

}  // namespace

TEST_CASE("index isomorphism on a single cube") {
  const GridComplex sq = make_square();
  const PrecubicalSet& k = sq.complex;
  const CubeIdx square = *k.find("c0,0|1,2");
  SUBCASE("constant partition gives the cube itself") {
    const CubeChain c = index_iso(k, square, OrderedPartition({1, 1}));
    CHECK(c == CubeChain{{square}});
  }
  SUBCASE("(1,2) runs axis one first") {
    CHECK(chain_to_string(k, index_iso(k, square, OrderedPartition({1, 2}))) ==
          "c0,0|1 c1,0|2");  // bottom edge then right edge
  }
  SUBCASE("(2,1) runs axis two first") {
    CHECK(chain_to_string(k, index_iso(k, square, OrderedPartition({2, 1}))) ==
          "c0,0|2 c0,1|1");  // left edge then top edge
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(index_iso(k, square, OrderedPartition({1, 2, 3})), InputError);
  }
  SUBCASE("inverse recovers the partition") {
    const PartitionPoset partitions = enumerate_ordered_partitions(CompositionSeq({2}));
    for (int i = 0; i < static_cast<int>(partitions.size()); ++i) {
      const OrderedPartition& f = partitions.element(i);
      CHECK(index_iso_inverse(k, square, index_iso(k, square, f)) == f);
    }
  }
  SUBCASE("inverse rejects chains outside the downset") {
    const CubeChain inside{{*k.find("c0,0|2"), *k.find("c0,1|1")}};
    CHECK_NOTHROW(index_iso_inverse(k, square, inside));
    const CubeChain wrong{{*k.find("c0,0|1"), *k.find("c0,1|1")}};  // bottom then top
    CHECK_THROWS_AS(index_iso_inverse(k, square, wrong), InputError);
  }
}

TEST_CASE("index isomorphism on chains") {
  const GridComplex hc = make_hollow_cube();
  const PrecubicalSet& k = hc.complex;
  const ChainPoset poset = poset_of(hc);

  SUBCASE("top partition reproduces the chain") {
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      const CubeChain& c = poset.element(i);
      const CompositionSeq shape(chain_type(k, c));
      CHECK(index_iso_chain(k, c, OrderedPartition::of_composition(shape)) == c);
    }
  }
  SUBCASE("downsets are order-isomorphic to the partition poset") {
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      const CubeChain& c = poset.element(i);
      const CompositionSeq shape(chain_type(k, c));
      const PartitionPoset partitions = enumerate_ordered_partitions(shape);

      std::set<int> downset;
      for (int x = 0; x < static_cast<int>(poset.size()); ++x)
        if (poset.leq(x, i)) downset.insert(x);
      std::vector<int> image;
      for (int f = 0; f < static_cast<int>(partitions.size()); ++f) {
        const CubeChain b = index_iso_chain(k, c, partitions.element(f));
        auto idx = poset.index_of(b);
        REQUIRE(idx.has_value());
        image.push_back(*idx);
      }
      const std::set<int> image_set(image.begin(), image.end());
      CHECK(image_set.size() == partitions.size());
      CHECK(image_set == downset);

      for (int f = 0; f < static_cast<int>(partitions.size()); ++f)
        for (int g = 0; g < static_cast<int>(partitions.size()); ++g)
          CHECK(partitions.leq(f, g) ==
                poset.leq(image[static_cast<std::size_t>(f)], image[static_cast<std::size_t>(g)]));
    }
  }
  SUBCASE("downset of a (2,1)-chain has three elements") {
    int seen = 0;
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      if (chain_type(k, poset.element(i)) != std::vector<int>{2, 1}) continue;
      ++seen;
      int count = 0;
      for (int x = 0; x < static_cast<int>(poset.size()); ++x)
        if (poset.leq(x, i)) ++count;
      CHECK(count == 3);  // |O_(2,1)| = 3 * 1
    }
    CHECK(seen == 3);
  }
}

TEST_CASE("order through the index isomorphism equals the cover order") {
  const GridComplex fixtures[] = {make_square(), make_hollow_square(), make_hollow_cube(),
                                  make_annulus()};
  for (const GridComplex& g : fixtures) {
    const ChainPoset poset = poset_of(g);
    for (int i = 0; i < static_cast<int>(poset.size()); ++i)
      for (int j = 0; j < static_cast<int>(poset.size()); ++j)
        CHECK(poset.leq(i, j) ==
              chain_leq_via_index(g.complex, poset.element(i), poset.element(j)));
  }
}

TEST_CASE("cell cycles") {
  SUBCASE("zero-dimensional cells give a single positive point") {
    const GridComplex g = make_hollow_square();
    const ChainPoset poset = poset_of(g);
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      const SignedChain cycle = cell_cycle(g.complex, poset, i);
      REQUIRE(cycle.size() == 1);
      CHECK(cycle.begin()->first == SimplexKey{i});
      CHECK(cycle.begin()->second == 1);
    }
  }
  SUBCASE("the square cell pushes the interval cycle onto its two flags") {
    const GridComplex g = make_square();
    const ChainPoset poset = poset_of(g);
    const int top = *poset.index_of(CubeChain{{*g.complex.find("c0,0|1,2")}});
    const SignedChain cycle = cell_cycle(g.complex, poset, top);
    REQUIRE(cycle.size() == 2);
    const int lower = *poset.index_of(
        CubeChain{{*g.complex.find("c0,0|1"), *g.complex.find("c1,0|2")}});
    const int upper = *poset.index_of(
        CubeChain{{*g.complex.find("c0,0|2"), *g.complex.find("c0,1|1")}});
    CHECK(cycle.at(SimplexKey{lower, top}) == 1);
    CHECK(cycle.at(SimplexKey{upper, top}) == -1);
  }
  SUBCASE("a (2,1)-chain cycle is two opposite one-simplices") {
    const GridComplex g = make_hollow_cube();
    const ChainPoset poset = poset_of(g);
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      if (chain_type(g.complex, poset.element(i)) != std::vector<int>{2, 1}) continue;
      const SignedChain cycle = cell_cycle(g.complex, poset, i);
      REQUIRE(cycle.size() == 2);
      long long sum = 0;
      for (const auto& [key, coefficient] : cycle) {
        CHECK(key.size() == 2);
        sum += coefficient;
      }
      CHECK(sum == 0);  // opposite signs
    }
  }
  SUBCASE("every cycle has unit coefficients supported on the downset") {
    const GridComplex g = make_hollow_cube();
    const ChainPoset poset = poset_of(g);
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      for (const auto& [key, coefficient] : cell_cycle(g.complex, poset, i)) {
        CHECK((coefficient == 1 || coefficient == -1));
        for (int v : key) CHECK(poset.leq(v, i));
        CHECK(key.back() == i);
      }
    }
  }
}

TEST_CASE("cellular boundary formula") {
  SUBCASE("square") {
    const GridComplex g = make_square();
    const PrecubicalSet& k = g.complex;
    const CubeChain top{{*k.find("c0,0|1,2")}};
    const auto terms = cellular_boundary(k, top);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].child == chain_face(k, top, 1, {1}));
    CHECK(terms[0].coefficient == -1);
    CHECK(terms[1].child == chain_face(k, top, 1, {2}));
    CHECK(terms[1].coefficient == 1);
  }
  SUBCASE("vertex-type chains have empty boundary") {
    const GridComplex g = make_hollow_square();
    for (const CubeChain& c : enumerate_chains(g.complex, g.source, g.target))
      CHECK(cellular_boundary(g.complex, c).empty());
  }
  SUBCASE("second-block splits pick up the length prefix in the sign") {
    const GridComplex g = make_hollow_cube();
    const PrecubicalSet& k = g.complex;
    int seen = 0;
    for (const CubeChain& c : enumerate_chains(k, g.source, g.target)) {
      if (chain_type(k, c) != std::vector<int>{1, 2}) continue;
      ++seen;
      const auto terms = cellular_boundary(k, c);
      REQUIRE(terms.size() == 2);
      // k = 2, prefix n_1 = 1, exponent 1 + 2 + 1 + 1: minus the subset sign.
      CHECK(terms[0].child == chain_face(k, c, 2, {1}));
      CHECK(terms[0].coefficient == -1);
      CHECK(terms[1].child == chain_face(k, c, 2, {2}));
      CHECK(terms[1].coefficient == 1);
    }
    CHECK(seen == 3);
  }
  SUBCASE("children are distinct codimension-one faces with unit coefficients") {
    const GridComplex fixtures[] = {make_square(), make_hollow_cube(), make_annulus()};
    for (const GridComplex& g : fixtures) {
      const ChainPoset poset = poset_of(g);
      for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
        const auto terms = cellular_boundary(g.complex, poset.element(i));
        std::set<CubeChain> children;
        for (const IncidenceTerm& t : terms) {
          CHECK((t.coefficient == 1 || t.coefficient == -1));
          CHECK(chain_dim(g.complex, t.child) == poset.dim(i) - 1);
          CHECK(children.insert(t.child).second);  // each face exactly once
        }
        // The children are exactly the covered elements.
        std::set<CubeChain> covered;
        for (const auto& [child, parent] : poset.covers())
          if (parent == i) covered.insert(poset.element(child));
        CHECK(children == covered);
      }
    }
  }
}

TEST_CASE("closed formula equals the simplicial boundary of the cell cycle") {
  // The central identity: for every cell, the simplicial boundary of its
  // pushed-forward cycle decomposes exactly into the cycles of its children
  // with the closed-formula coefficients.
  const GridComplex fixtures[] = {make_square(), make_hollow_square(), make_hollow_cube(),
                                  make_annulus()};
  for (const GridComplex& g : fixtures) {
    const ChainPoset poset = poset_of(g);
    for (int cell = 0; cell < static_cast<int>(poset.size()); ++cell) {
      SignedChain difference = simplicial_boundary(cell_cycle(g.complex, poset, cell));
      for (const auto& [key, coefficient] : boundary_via_cycles(g.complex, poset, cell))
        chain_add(difference, key, -coefficient);
      CHECK(difference.empty());
    }
  }
}

TEST_CASE("assembled complexes") {
  SUBCASE("hollow square: two cells in degree zero, empty matrices") {
    const GridComplex g = make_hollow_square();
    const ChainPoset poset = poset_of(g);
    const CellularComplexRep complex = assemble_complex(g.complex, poset);
    CHECK(complex.cell_counts() == std::vector<int>{2});
    for (const auto& level : complex.boundary) CHECK(level.empty());
  }
  SUBCASE("square: cells (2, 1) and a single signed column") {
    const GridComplex g = make_square();
    const ChainPoset poset = poset_of(g);
    const CellularComplexRep complex = assemble_complex(g.complex, poset);
    CHECK(complex.cell_counts() == std::vector<int>{2, 1});
    REQUIRE(complex.boundary[1].size() == 2);
    std::multiset<long long> values;
    for (const SparseTriplet& t : complex.boundary[1]) {
      CHECK(t.col == 0);
      values.insert(t.value);
    }
    CHECK(values == std::multiset<long long>{-1, 1});
  }
  SUBCASE("hollow cube: cells (6, 6)") {
    const GridComplex g = make_hollow_cube();
    const ChainPoset poset = poset_of(g);
    const CellularComplexRep complex = assemble_complex(g.complex, poset);
    CHECK(complex.cell_counts() == std::vector<int>{6, 6});
    CHECK(complex.boundary[1].size() == 12);
  }
  SUBCASE("boundary composes to zero on fixtures and random grids") {
    std::mt19937 rng(20240901);
    std::vector<GridComplex> instances{make_square(), make_hollow_square(), make_hollow_cube(),
                                       make_annulus()};
    for (int trial = 0; trial < 6; ++trial)
      instances.push_back(generate_grid_complex(random_grid_spec(rng, 3, 4)));
    // A couple of three-dimensional instances as well.
    instances.push_back(generate_grid_complex(GridSpec{{2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}}));
    instances.push_back(generate_grid_complex(GridSpec{{2, 1, 2}, {{1, 0, 0}}}));
    for (const GridComplex& g : instances) {
      const ChainPoset poset = poset_of(g);
      const CellularComplexRep complex = assemble_complex(g.complex, poset);
      // homology_from_boundaries checks composability and d o d = 0.
      CHECK_NOTHROW(homology_from_boundaries(complex.cell_counts(), complex.boundary));
    }
  }
  SUBCASE("strata are block diagonal and reindex cleanly") {
    const PrecubicalSet circle = make_directed_circle();
    EnumerationOptions bounded;
    bounded.max_length = 5;
    const auto chains =
        enumerate_chains(circle, *circle.find("u"), *circle.find("v"), bounded);
    const ChainPoset poset = build_poset(circle, chains);
    const CellularComplexRep complex = assemble_complex(circle, poset);
    const auto strata = split_by_stratum(poset, complex);
    REQUIRE(strata.size() == 3);
    for (const StratumComplex& s : strata) CHECK(s.cell_counts == std::vector<int>{1});
  }
}
