#include "cubehom/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubehom/errors.hpp"

namespace cubehom {

CubeChain index_iso(const PrecubicalSet& k, CubeIdx c, const OrderedPartition& f) {
  const int n = k.dim(c);
  if (f.arity() != n)
    throw InputError("index_iso: partition arity " + std::to_string(f.arity()) +
                     " does not match cube dimension " + std::to_string(n));
  CubeChain out;
  out.cubes.reserve(static_cast<std::size_t>(f.blocks()));
  for (int s = 1; s <= f.blocks(); ++s) {
    std::vector<FaceDir> label(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      if (f.value(i) > s) label[static_cast<std::size_t>(i - 1)] = FaceDir::Zero;
      else if (f.value(i) < s) label[static_cast<std::size_t>(i - 1)] = FaceDir::One;
      else label[static_cast<std::size_t>(i - 1)] = FaceDir::Star;
    }
    out.cubes.push_back(apply_face(k, c, FaceLabel(std::move(label))));
  }
  return out;
}

namespace {

/// Enumerates size-r subsets of the given pool (ascending); calls visit with
/// each subset until it returns true, then stops.
template <typename Visit>
void for_each_subset(const std::vector<int>& pool, int r, Visit visit) {
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (r == 0) {
    std::vector<int> empty;
    visit(empty);
    return;
  }
  if (r > static_cast<int>(pool.size())) return;
  while (true) {
    for (int i = 0; i < r; ++i)
      pick[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    visit(pick);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - (r - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

OrderedPartition index_iso_inverse(const PrecubicalSet& k, CubeIdx c, const CubeChain& b) {
  const int n = k.dim(c);
  if (b.cubes.empty()) throw InputError("index_iso_inverse: empty chain");
  // Walk the chain reconstructing, block by block, the set of directions
  // freed in that block. The already-completed directions accumulate; the
  // level bookkeeping makes the presentation unique on proper input.
  std::vector<int> done;  // directions already set to 1, ascending
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  for (std::size_t block = 0; block < b.cubes.size(); ++block) {
    const CubeIdx target = b.cubes[block];
    const int m = k.dim(target);
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i)
      if (std::find(done.begin(), done.end(), i) == done.end()) pool.push_back(i);
    std::vector<std::vector<int>> matches;
    for_each_subset(pool, m, [&](const std::vector<int>& free) {
      std::vector<FaceDir> label(static_cast<std::size_t>(n), FaceDir::Zero);
      for (int i : done) label[static_cast<std::size_t>(i - 1)] = FaceDir::One;
      for (int i : free) label[static_cast<std::size_t>(i - 1)] = FaceDir::Star;
      if (apply_face(k, c, FaceLabel(std::move(label))) == target) matches.push_back(free);
    });
    if (matches.empty())
      throw InputError("index_iso_inverse: '" + k.name(target) +
                       "' is not a face of '" + k.name(c) + "' at the required level");
    if (matches.size() > 1)
      throw InputError("index_iso_inverse: ambiguous presentation of '" + k.name(target) +
                       "' in '" + k.name(c) + "' (the complex is not proper)");
    for (int i : matches.front()) {
      values[static_cast<std::size_t>(i - 1)] = static_cast<int>(block) + 1;
      done.push_back(i);
    }
    std::sort(done.begin(), done.end());
  }
  if (static_cast<int>(done.size()) != n)
    throw InputError("index_iso_inverse: the chain does not exhaust the cube");
  return OrderedPartition(std::move(values));
}

CubeChain index_iso_chain(const PrecubicalSet& k, const CubeChain& c, const OrderedPartition& f) {
  const CompositionSeq shape(chain_type(k, c));
  const std::vector<OrderedPartition> components = factor_components(f, shape);
  CubeChain out;
  for (std::size_t block = 0; block < c.cubes.size(); ++block) {
    const CubeChain part = index_iso(k, c.cubes[block], components[block]);
    out.cubes.insert(out.cubes.end(), part.cubes.begin(), part.cubes.end());
  }
  return out;
}

bool chain_leq_via_index(const PrecubicalSet& k, const CubeChain& b, const CubeChain& c) {
  if (b == c) return true;
  if (chain_length(k, b) != chain_length(k, c)) return false;
  const std::vector<int> breaks = chain_breaks(k, c);
  // b must split at every breakpoint of c.
  std::vector<std::size_t> cut(breaks.size(), 0);
  {
    int acc = 0;
    std::size_t next = 1;
    for (std::size_t i = 0; i < b.cubes.size(); ++i) {
      acc += k.dim(b.cubes[i]);
      if (next >= breaks.size() || acc > breaks[next]) return false;  // overshot a breakpoint
      if (acc == breaks[next]) cut[next++] = i + 1;
    }
    if (next != breaks.size()) return false;
  }
  for (std::size_t block = 1; block < breaks.size(); ++block) {
    CubeChain segment;
    segment.cubes.assign(b.cubes.begin() + static_cast<std::ptrdiff_t>(cut[block - 1]),
                         b.cubes.begin() + static_cast<std::ptrdiff_t>(cut[block]));
    try {
      index_iso_inverse(k, c.cubes[block - 1], segment);
    } catch (const InputError&) {
      return false;
    }
  }
  return true;
}

SignedChain cell_cycle(const PrecubicalSet& k, const ChainPoset& poset, int cell,
                       const PermBudget& budget) {
  const CubeChain& c = poset.element(cell);
  const CompositionSeq shape(chain_type(k, c));
  const PartitionPoset partitions = enumerate_ordered_partitions(shape, budget);
  const SignedChain cycle = fundamental_cycle(shape, partitions, budget);

  // Map partition indices to chain-poset indices once.
  std::vector<int> image(partitions.size(), -1);
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const CubeChain chain = index_iso_chain(k, c, partitions.element(static_cast<int>(i)));
    auto idx = poset.index_of(chain);
    if (!idx)
      throw std::logic_error("cell_cycle: image chain " + chain_to_string(k, chain) +
                             " missing from the poset");
    image[i] = *idx;
  }

  SignedChain out;
  for (const auto& [key, coefficient] : cycle) {
    SimplexKey pushed;
    pushed.reserve(key.size());
    for (int v : key) pushed.push_back(image[static_cast<std::size_t>(v)]);
    chain_add(out, pushed, coefficient);
  }
  return out;
}

std::vector<IncidenceTerm> cellular_boundary(const PrecubicalSet& k, const CubeChain& c) {
  std::vector<IncidenceTerm> out;
  const std::vector<int> type = chain_type(k, c);
  const CompositionSeq shape(type);
  int prefix = 0;  // n_1 + ... + n_{k-1}
  for (int block = 1; block <= shape.block_count(); ++block) {
    const int nk = shape.part(block);
    for (int r = 1; r <= nk - 1; ++r) {
      std::vector<int> local_pool(static_cast<std::size_t>(nk));
      for (int i = 0; i < nk; ++i) local_pool[static_cast<std::size_t>(i)] = i + 1;
      for_each_subset(local_pool, r, [&](const std::vector<int>& a) {
        const int exponent = prefix + block + r + 1;
        int coefficient = (exponent % 2 == 0 ? 1 : -1) * subset_sign(a, 0);
        // Same sign through the breakpoint-shifted form, by construction:
        // the exponent differs by the even quantity 0 and the subset shifts
        // by b_{k-1} on both sides.
        std::vector<int> shifted;
        shifted.reserve(a.size());
        for (int x : a) shifted.push_back(x + shape.breakpoint(block - 1));
        const int alt = ((shape.breakpoint(block - 1) + block + r + 1) % 2 == 0 ? 1 : -1) *
                        subset_sign(shifted, shape.breakpoint(block - 1));
        if (alt != coefficient)
          throw std::logic_error("cellular_boundary: the two sign conventions disagree");
        out.push_back(IncidenceTerm{chain_face(k, c, block, a), coefficient});
      });
    }
    prefix += nk;
  }
  return out;
}

std::vector<int> CellularComplexRep::cell_counts() const {
  std::vector<int> out;
  out.reserve(cells.size());
  for (const auto& level : cells) out.push_back(static_cast<int>(level.size()));
  return out;
}

CellularComplexRep assemble_complex(const PrecubicalSet& k, const ChainPoset& poset,
                                    const PermBudget& budget) {
  for (const CubeChain& c : poset.elements()) check_composition_budget(CompositionSeq(chain_type(k, c)), budget);

  CellularComplexRep out;
  const int top = poset.max_dim();
  if (top < 0) return out;
  out.cells.resize(static_cast<std::size_t>(top) + 1);
  out.boundary.resize(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i < static_cast<int>(poset.size()); ++i)
    out.cells[static_cast<std::size_t>(poset.dim(i))].push_back(i);

  // Canonical cell order: length, then type, then the id sequence. Elements
  // arrive sorted by id sequence, so a stable sort on the first two keys
  // finishes the job and keeps strata contiguous.
  const auto type_of = [&](int i) { return chain_type(k, poset.element(i)); };
  for (auto& level : out.cells)
    std::stable_sort(level.begin(), level.end(), [&](int a, int b) {
      if (poset.length(a) != poset.length(b)) return poset.length(a) < poset.length(b);
      return type_of(a) < type_of(b);
    });

  std::vector<int> position(poset.size(), -1);
  for (const auto& level : out.cells)
    for (std::size_t p = 0; p < level.size(); ++p)
      position[static_cast<std::size_t>(level[p])] = static_cast<int>(p);

  for (int d = 1; d <= top; ++d) {
    for (std::size_t col = 0; col < out.cells[static_cast<std::size_t>(d)].size(); ++col) {
      const int cell = out.cells[static_cast<std::size_t>(d)][col];
      for (const IncidenceTerm& term : cellular_boundary(k, poset.element(cell))) {
        auto child = poset.index_of(term.child);
        if (!child)
          throw std::logic_error("assemble_complex: boundary child missing from the poset");
        if (poset.length(*child) != poset.length(cell))
          throw std::logic_error("assemble_complex: a boundary crosses length strata");
        out.boundary[static_cast<std::size_t>(d)].push_back(
            SparseTriplet{position[static_cast<std::size_t>(*child)], static_cast<int>(col),
                          term.coefficient});
      }
    }
  }
  return out;
}

std::vector<StratumComplex> split_by_stratum(const ChainPoset& poset,
                                             const CellularComplexRep& complex) {
  std::vector<int> lengths;
  for (std::size_t i = 0; i < poset.size(); ++i) lengths.push_back(poset.length(static_cast<int>(i)));
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::vector<StratumComplex> out;
  for (int length : lengths) {
    StratumComplex stratum;
    stratum.length = length;
    stratum.cells.resize(complex.cells.size());
    stratum.cell_counts.assign(complex.cells.size(), 0);
    stratum.boundaries.resize(complex.cells.size());
    // Dense reindexing of this stratum's cells per dimension.
    std::vector<std::map<int, int>> reindex(complex.cells.size());
    for (std::size_t d = 0; d < complex.cells.size(); ++d) {
      for (std::size_t p = 0; p < complex.cells[d].size(); ++p) {
        const int cell = complex.cells[d][p];
        if (poset.length(cell) != length) continue;
        reindex[d].emplace(static_cast<int>(p), stratum.cell_counts[d]++);
        stratum.cells[d].push_back(cell);
      }
    }
    for (std::size_t d = 1; d < complex.boundary.size(); ++d) {
      for (const SparseTriplet& t : complex.boundary[d]) {
        auto col = reindex[d].find(t.col);
        if (col == reindex[d].end()) continue;
        auto row = reindex[d - 1].find(t.row);
        if (row == reindex[d - 1].end())
          throw std::logic_error("split_by_stratum: a boundary crosses length strata");
        stratum.boundaries[d].push_back(SparseTriplet{row->second, col->second, t.value});
      }
    }
    // Trim trailing empty dimensions.
    while (!stratum.cell_counts.empty() && stratum.cell_counts.back() == 0) {
      stratum.cell_counts.pop_back();
      stratum.cells.pop_back();
      stratum.boundaries.pop_back();
    }
    out.push_back(std::move(stratum));
  }
  return out;
}

}  // namespace cubehom
