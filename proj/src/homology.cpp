#include "cubehom/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubehom/errors.hpp"

namespace cubehom {

DenseMatrix dense_from_triplets(int rows, int cols, const std::vector<SparseTriplet>& triplets) {
  // The normal form below is dense; refuse matrices it cannot handle rather
  // than thrashing. Complexes stay far below this after stratification.
  constexpr long long kMaxEntries = 4'000'000;
  if (static_cast<long long>(rows) * cols > kMaxEntries)
    throw BudgetError("a " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " integer matrix is beyond the dense normal-form budget");
  DenseMatrix m(static_cast<std::size_t>(rows),
                std::vector<BigInt>(static_cast<std::size_t>(cols), 0));
  for (const SparseTriplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::logic_error("matrix triplet out of range");
    m[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] += t.value;
  }
  return m;
}

SmithNormalForm smith_normal_form(DenseMatrix m) {
  SmithNormalForm out;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;

  auto row_sub = [&](int target, int source, const BigInt& q) {
    for (int j = 0; j < cols; ++j)
      m[static_cast<std::size_t>(target)][static_cast<std::size_t>(j)] -=
          q * m[static_cast<std::size_t>(source)][static_cast<std::size_t>(j)];
  };
  auto col_sub = [&](int target, int source, const BigInt& q) {
    for (int i = 0; i < rows; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(target)] -=
          q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(source)];
  };
  auto swap_rows = [&](int a, int b) {
    if (a != b) std::swap(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]);
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i)
      std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]);
  };
  auto at = [&](int i, int j) -> BigInt& {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Minimal absolute value pivot in the remaining submatrix keeps the
    // intermediate entries small.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (at(i, j) != 0 &&
            (pi < 0 || boost::multiprecision::abs(at(i, j)) < boost::multiprecision::abs(at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    while (true) {
      bool restart = false;
      for (int i = t + 1; i < rows && !restart; ++i) {
        if (at(i, t) == 0) continue;
        const BigInt q = at(i, t) / at(t, t);
        if (q != 0) row_sub(i, t, q);
        if (at(i, t) != 0) {
          swap_rows(t, i);  // strictly smaller remainder becomes the pivot
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < cols && !restart; ++j) {
        if (at(t, j) == 0) continue;
        const BigInt q = at(t, j) / at(t, t);
        if (q != 0) col_sub(j, t, q);
        if (at(t, j) != 0) {
          swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;

      // Enforce the divisibility chain: fold any non-divisible entry into
      // row t and reduce again.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (at(i, j) % at(t, t) != 0) {
            row_sub(t, i, -1);  // add row i to row t
            fixed = true;
          }
      if (!fixed) break;
    }
    out.factors.push_back(boost::multiprecision::abs(at(t, t)));
  }
  return out;
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (betti == 1) out = "Z";
  else if (betti > 1) out = "Z^" + std::to_string(betti);
  for (long long t : torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

const HomologyGroup& HomologyReport::degree(int d) const {
  static const HomologyGroup trivial_group;
  if (d < 0 || d >= static_cast<int>(groups.size())) return trivial_group;
  return groups[static_cast<std::size_t>(d)];
}

int HomologyReport::top_degree() const {
  for (int d = static_cast<int>(groups.size()) - 1; d >= 0; --d)
    if (!groups[static_cast<std::size_t>(d)].trivial()) return d;
  return -1;
}

bool HomologyReport::operator==(const HomologyReport& other) const {
  const int top = std::max(static_cast<int>(groups.size()), static_cast<int>(other.groups.size()));
  for (int d = 0; d < top; ++d)
    if (!(degree(d) == other.degree(d))) return false;
  return true;
}

namespace {

long long checked_small(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max())
    throw std::overflow_error("invariant factor does not fit a machine word");
  return v.convert_to<long long>();
}

void check_composable(const std::vector<int>& cell_counts,
                      const std::vector<std::vector<SparseTriplet>>& boundaries) {
  const int top = static_cast<int>(cell_counts.size()) - 1;
  for (int d = 1; d <= top; ++d) {
    if (d >= static_cast<int>(boundaries.size())) continue;
    for (const SparseTriplet& t : boundaries[static_cast<std::size_t>(d)]) {
      if (t.row < 0 || t.row >= cell_counts[static_cast<std::size_t>(d - 1)] || t.col < 0 ||
          t.col >= cell_counts[static_cast<std::size_t>(d)])
        throw InputError("boundary matrix in degree " + std::to_string(d) +
                         " does not match the cell counts");
    }
  }
  // boundary_d o boundary_{d+1} = 0
  for (int d = 1; d + 1 <= top; ++d) {
    if (d + 1 >= static_cast<int>(boundaries.size())) continue;
    std::map<std::pair<int, int>, long long> lower;
    for (const SparseTriplet& t : boundaries[static_cast<std::size_t>(d)])
      lower[{t.row, t.col}] += t.value;
    std::map<int, std::vector<std::pair<int, long long>>> lower_by_col;
    for (const auto& [rc, v] : lower)
      if (v != 0) lower_by_col[rc.second].emplace_back(rc.first, v);
    std::map<std::pair<int, int>, long long> product;
    for (const SparseTriplet& t : boundaries[static_cast<std::size_t>(d + 1)])
      for (const auto& [row, v] : lower_by_col[t.row]) product[{row, t.col}] += v * t.value;
    for (const auto& [rc, v] : product)
      if (v != 0)
        throw InputError("boundaries do not compose to zero between degrees " +
                         std::to_string(d + 1) + " and " + std::to_string(d - 1));
  }
}

}  // namespace

HomologyReport homology_from_boundaries(const std::vector<int>& cell_counts,
                                        const std::vector<std::vector<SparseTriplet>>& boundaries) {
  check_composable(cell_counts, boundaries);
  const int top = static_cast<int>(cell_counts.size()) - 1;
  std::vector<SmithNormalForm> snf(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    const std::vector<SparseTriplet> empty;
    const auto& triplets =
        d < static_cast<int>(boundaries.size()) ? boundaries[static_cast<std::size_t>(d)] : empty;
    snf[static_cast<std::size_t>(d)] = smith_normal_form(dense_from_triplets(
        cell_counts[static_cast<std::size_t>(d - 1)], cell_counts[static_cast<std::size_t>(d)],
        triplets));
  }

  HomologyReport report;
  report.groups.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    HomologyGroup& g = report.groups[static_cast<std::size_t>(d)];
    const int rank_d = d >= 1 ? snf[static_cast<std::size_t>(d)].rank() : 0;
    const int rank_up = d + 1 <= top ? snf[static_cast<std::size_t>(d + 1)].rank() : 0;
    g.betti = cell_counts[static_cast<std::size_t>(d)] - rank_d - rank_up;
    if (g.betti < 0) throw std::logic_error("negative betti number");
    if (d + 1 <= top)
      for (const BigInt& f : snf[static_cast<std::size_t>(d + 1)].factors)
        if (f > 1) g.torsion.push_back(checked_small(f));
  }
  return report;
}

std::vector<int> SimplicialComplexRep::cell_counts() const {
  std::vector<int> out;
  out.reserve(simplices.size());
  for (const auto& level : simplices) out.push_back(static_cast<int>(level.size()));
  return out;
}

std::vector<std::vector<SparseTriplet>> SimplicialComplexRep::boundary_matrices() const {
  std::vector<std::vector<SparseTriplet>> out(simplices.size());
  for (std::size_t d = 1; d < simplices.size(); ++d) {
    std::map<std::vector<int>, int> lower_index;
    for (std::size_t i = 0; i < simplices[d - 1].size(); ++i)
      lower_index.emplace(simplices[d - 1][i], static_cast<int>(i));
    for (std::size_t i = 0; i < simplices[d].size(); ++i) {
      const std::vector<int>& s = simplices[d][i];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<int> face;
        face.reserve(s.size() - 1);
        for (std::size_t x = 0; x < s.size(); ++x)
          if (x != j) face.push_back(s[x]);
        auto it = lower_index.find(face);
        if (it == lower_index.end())
          throw std::logic_error("simplicial complex is not closed under faces");
        out[d].push_back(SparseTriplet{it->second, static_cast<int>(i), j % 2 == 0 ? 1 : -1});
      }
    }
  }
  return out;
}

long long SimplicialComplexRep::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < simplices.size(); ++d) {
    const long long count = static_cast<long long>(simplices[d].size());
    chi += d % 2 == 0 ? count : -count;
  }
  return chi;
}

SimplicialComplexRep nerve_of_poset(int element_count,
                                    const std::function<bool(int, int)>& leq,
                                    std::size_t max_simplices) {
  // Fix a linear extension (Kahn with smallest-index tie break) so every
  // totally ordered subset is listed ascending and orientations are stable.
  std::vector<std::vector<int>> ups(static_cast<std::size_t>(element_count));
  std::vector<int> indegree(static_cast<std::size_t>(element_count), 0);
  for (int a = 0; a < element_count; ++a)
    for (int b = 0; b < element_count; ++b)
      if (a != b && leq(a, b)) {
        ups[static_cast<std::size_t>(a)].push_back(b);
        ++indegree[static_cast<std::size_t>(b)];
      }
  std::vector<int> rank(static_cast<std::size_t>(element_count), -1);
  {
    std::vector<int> ready;
    std::vector<int> deg = indegree;
    for (int i = 0; i < element_count; ++i)
      if (deg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    int next_rank = 0;
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end(), std::greater<>());
      const int x = ready.back();
      ready.pop_back();
      rank[static_cast<std::size_t>(x)] = next_rank++;
      for (int y : ups[static_cast<std::size_t>(x)])
        if (--deg[static_cast<std::size_t>(y)] == 0) ready.push_back(y);
    }
    if (next_rank != element_count)
      throw std::logic_error("nerve_of_poset: the relation is not a partial order");
  }

  for (auto& list : ups)
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });

  SimplicialComplexRep out;
  if (element_count == 0) return out;
  out.simplices.resize(1);
  // Depth-first extension of ascending chains.
  std::size_t total = 0;
  std::vector<int> chain;
  std::vector<std::size_t> cursor;
  for (int v = 0; v < element_count; ++v) {
    chain.assign(1, v);
    cursor.assign(1, 0);
    out.simplices[0].push_back(chain);
    ++total;
    while (!chain.empty()) {
      const int last = chain.back();
      const auto& extensions = ups[static_cast<std::size_t>(last)];
      if (cursor.back() < extensions.size()) {
        const int next = extensions[cursor.back()++];
        chain.push_back(next);
        cursor.push_back(0);
        if (out.simplices.size() < chain.size()) out.simplices.resize(chain.size());
        out.simplices[chain.size() - 1].push_back(chain);
        if (++total > max_simplices)
          throw BudgetError("the order complex exceeds " + std::to_string(max_simplices) +
                            " simplices; the cellular route stays available");
      } else {
        chain.pop_back();
        cursor.pop_back();
      }
    }
  }
  // The DFS emits tuples in rank-lexicographic order already; keep sorted
  // order explicit for reproducibility.
  for (auto& level : out.simplices)
    std::sort(level.begin(), level.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(), [&](int x, int y) {
            return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)];
          });
    });
  return out;
}

HomologyReport homology_of_nerve(const SimplicialComplexRep& nerve) {
  if (nerve.simplices.empty())
    return HomologyReport{{HomologyGroup{}}};
  return homology_from_boundaries(nerve.cell_counts(), nerve.boundary_matrices());
}

ReportComparison compare_reports(const HomologyReport& a, const HomologyReport& b) {
  ReportComparison out;
  const int top =
      std::max(static_cast<int>(a.groups.size()), static_cast<int>(b.groups.size()));
  for (int d = 0; d < top; ++d) {
    if (a.degree(d) == b.degree(d)) continue;
    out.match = false;
    out.differences.push_back("degree " + std::to_string(d) + ": " + a.degree(d).to_string() +
                              " vs " + b.degree(d).to_string());
  }
  return out;
}

}  // namespace cubehom
