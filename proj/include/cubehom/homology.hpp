#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubehom {

using BigInt = boost::multiprecision::cpp_int;

struct SparseTriplet {
  int row = 0;
  int col = 0;
  long long value = 0;
};

/// Rows of arbitrary-precision integers. Entries can grow during
/// elimination, so machine words are not an option here.
using DenseMatrix = std::vector<std::vector<BigInt>>;

DenseMatrix dense_from_triplets(int rows, int cols, const std::vector<SparseTriplet>& triplets);

struct SmithNormalForm {
  std::vector<BigInt> factors;  // d_1 | d_2 | ... | d_r, all positive
  int rank() const { return static_cast<int>(factors.size()); }
};

/// Diagonalization by unimodular row/column operations with a minimal
/// absolute value pivot; the transforms themselves are not kept.
SmithNormalForm smith_normal_form(DenseMatrix m);

struct HomologyGroup {
  long long betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& other) const = default;
  std::string to_string() const;  // "Z^2", "Z (+) Z/3", "0"
};

struct HomologyReport {
  std::vector<HomologyGroup> groups;  // index = degree

  const HomologyGroup& degree(int d) const;
  int top_degree() const;
  bool operator==(const HomologyReport& other) const;
};

/// H_d = ker boundary_d / im boundary_{d+1} over the integers.
/// cell_counts[d] is the rank of the chain group in degree d; boundaries[d]
/// (for d >= 1) maps degree d to degree d-1. Requires boundary_d o
/// boundary_{d+1} = 0, which is checked.
HomologyReport homology_from_boundaries(const std::vector<int>& cell_counts,
                                        const std::vector<std::vector<SparseTriplet>>& boundaries);

/// The order complex: vertices are poset elements, simplices the totally
/// ordered subsets. Tuples are listed in a fixed linear extension of the
/// order, which also fixes the orientation convention for boundaries.
struct SimplicialComplexRep {
  /// simplices[d][i] = vertex tuple, ascending in the linear extension.
  std::vector<std::vector<std::vector<int>>> simplices;

  std::vector<int> cell_counts() const;
  std::vector<std::vector<SparseTriplet>> boundary_matrices() const;
  long long euler_characteristic() const;
};

/// Order complexes grow factorially in the poset height; enumeration stops
/// with a BudgetError beyond max_simplices.
SimplicialComplexRep nerve_of_poset(int element_count,
                                    const std::function<bool(int, int)>& leq,
                                    std::size_t max_simplices = 500'000);

HomologyReport homology_of_nerve(const SimplicialComplexRep& nerve);

struct ReportComparison {
  bool match = true;
  std::vector<std::string> differences;  // one line per disagreeing degree
};

ReportComparison compare_reports(const HomologyReport& a, const HomologyReport& b);

}  // namespace cubehom
