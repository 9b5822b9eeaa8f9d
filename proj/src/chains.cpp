#include "cubehom/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubehom/errors.hpp"

namespace cubehom {

std::vector<int> chain_type(const PrecubicalSet& k, const CubeChain& c) {
  std::vector<int> type;
  type.reserve(c.cubes.size());
  for (CubeIdx cube : c.cubes) type.push_back(k.dim(cube));
  return type;
}

int chain_length(const PrecubicalSet& k, const CubeChain& c) {
  int n = 0;
  for (CubeIdx cube : c.cubes) n += k.dim(cube);
  return n;
}

int chain_dim(const PrecubicalSet& k, const CubeChain& c) {
  return chain_length(k, c) - static_cast<int>(c.cubes.size());
}

std::vector<int> chain_breaks(const PrecubicalSet& k, const CubeChain& c) {
  std::vector<int> breaks{0};
  for (CubeIdx cube : c.cubes) breaks.push_back(breaks.back() + k.dim(cube));
  return breaks;
}

std::vector<CubeIdx> chain_vertices(const PrecubicalSet& k, const CubeChain& c) {
  std::vector<CubeIdx> vertices;
  if (c.cubes.empty()) return vertices;
  vertices.push_back(extreme_vertices(k, c.cubes.front()).first);
  for (CubeIdx cube : c.cubes) vertices.push_back(extreme_vertices(k, cube).second);
  return vertices;
}

bool is_valid_chain(const PrecubicalSet& k, const CubeChain& c, CubeIdx v, CubeIdx w) {
  if (c.cubes.empty()) return false;
  for (CubeIdx cube : c.cubes)
    if (k.dim(cube) < 1) return false;
  if (extreme_vertices(k, c.cubes.front()).first != v) return false;
  if (extreme_vertices(k, c.cubes.back()).second != w) return false;
  for (std::size_t i = 0; i + 1 < c.cubes.size(); ++i)
    if (extreme_vertices(k, c.cubes[i]).second != extreme_vertices(k, c.cubes[i + 1]).first)
      return false;
  return true;
}

std::string chain_to_string(const PrecubicalSet& k, const CubeChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.cubes.size(); ++i) {
    if (i) out += ' ';
    out += k.name(c.cubes[i]);
  }
  return out;
}

CubeChain chain_face(const PrecubicalSet& k, const CubeChain& c, int block,
                     const std::vector<int>& a) {
  if (block < 1 || block > static_cast<int>(c.cubes.size()))
    throw InputError("chain_face: block index out of range");
  const CubeIdx cube = c.cubes[static_cast<std::size_t>(block - 1)];
  const int n = k.dim(cube);
  if (a.empty() || static_cast<int>(a.size()) >= n)
    throw InputError("chain_face: the split set must be a nonempty proper subset of the block");
  for (int p : a)
    if (p < 1 || p > n) throw InputError("chain_face: split position out of range");

  std::vector<int> complement;
  for (int p = 1; p <= n; ++p)
    if (std::find(a.begin(), a.end(), p) == a.end()) complement.push_back(p);

  CubeChain out;
  out.cubes.reserve(c.cubes.size() + 1);
  out.cubes.insert(out.cubes.end(), c.cubes.begin(), c.cubes.begin() + (block - 1));
  out.cubes.push_back(apply_face(k, cube, FaceLabel::lower_on(n, complement)));
  out.cubes.push_back(apply_face(k, cube, FaceLabel::upper_on(n, a)));
  out.cubes.insert(out.cubes.end(), c.cubes.begin() + block, c.cubes.end());
  return out;
}

std::vector<CubeChain> enumerate_chains(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                                        const EnumerationOptions& options) {
  if (k.dim(v) != 0 || k.dim(w) != 0)
    throw InputError("enumerate_chains: endpoints must be vertices");
  if (!options.max_length) {
    LoopCheckResult loops = has_no_loops(k);
    if (!loops.acyclic)
      throw InputError(
          "enumerate_chains: the complex has directed loops; a max_length bound is required");
  }

  // Index cubes of dimension >= 1 by their bottom vertex, sorted by name so
  // that extension order (and hence everything downstream) is reproducible.
  std::unordered_map<CubeIdx, std::vector<CubeIdx>> by_source;
  for (int d = 1; d <= k.max_dim(); ++d)
    for (CubeIdx c : k.grade(d)) by_source[extreme_vertices(k, c).first].push_back(c);
  for (auto& [src, list] : by_source)
    std::sort(list.begin(), list.end(),
              [&](CubeIdx a, CubeIdx b) { return k.name(a) < k.name(b); });

  std::vector<CubeChain> found;
  std::vector<CubeIdx> path;
  int path_length = 0;

  struct Frame {
    CubeIdx at;
    std::size_t cursor = 0;
  };
  std::vector<Frame> stack{Frame{v}};
  const std::vector<CubeIdx> kEmpty;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    auto it = by_source.find(frame.at);
    const std::vector<CubeIdx>& options_here = it == by_source.end() ? kEmpty : it->second;
    bool descended = false;
    while (frame.cursor < options_here.size()) {
      const CubeIdx c = options_here[frame.cursor++];
      const int d = k.dim(c);
      if (options.max_length && path_length + d > *options.max_length) continue;
      path.push_back(c);
      path_length += d;
      const CubeIdx end = extreme_vertices(k, c).second;
      if (end == w) {
        if (found.size() >= options.max_chains)
          throw BudgetError("enumerate_chains: more than " + std::to_string(options.max_chains) +
                            " chains; raise the budget or bound the length");
        found.push_back(CubeChain{path});
      }
      stack.push_back(Frame{end});
      descended = true;
      break;
    }
    if (!descended) {
      stack.pop_back();
      if (!path.empty()) {
        path_length -= k.dim(path.back());
        path.pop_back();
      }
    }
  }

  std::sort(found.begin(), found.end(), [&](const CubeChain& a, const CubeChain& b) {
    const std::size_t m = std::min(a.cubes.size(), b.cubes.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a.cubes[i] == b.cubes[i]) continue;
      return k.name(a.cubes[i]) < k.name(b.cubes[i]);
    }
    return a.cubes.size() < b.cubes.size();
  });
  return found;
}

ChainPoset::ChainPoset(const PrecubicalSet& k, std::vector<CubeChain> elements)
    : elements_(std::move(elements)) {
  dims_.reserve(elements_.size());
  lengths_.reserve(elements_.size());
  for (const CubeChain& c : elements_) {
    dims_.push_back(chain_dim(k, c));
    lengths_.push_back(chain_length(k, c));
  }
  children_.resize(elements_.size());

  std::map<CubeChain, int> index;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index.emplace(elements_[i], static_cast<int>(i));

  for (std::size_t parent = 0; parent < elements_.size(); ++parent) {
    const CubeChain& c = elements_[parent];
    for (int block = 1; block <= static_cast<int>(c.cubes.size()); ++block) {
      const int n = k.dim(c.cubes[static_cast<std::size_t>(block - 1)]);
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> a;
        for (int p = 1; p <= n; ++p)
          if (mask & (1u << (p - 1))) a.push_back(p);
        const CubeChain child = chain_face(k, c, block, a);
        auto it = index.find(child);
        if (it == index.end())
          throw std::logic_error("ChainPoset: face " + chain_to_string(k, child) +
                                 " of an element is missing; the enumeration is incomplete");
        covers_.emplace_back(it->second, static_cast<int>(parent));
        children_[parent].push_back(it->second);
      }
    }
  }
  for (auto& list : children_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  words_ = (elements_.size() + 63) / 64;
  downsets_.resize(elements_.size());
}

std::optional<int> ChainPoset::index_of(const CubeChain& c) const {
  auto it = std::find(elements_.begin(), elements_.end(), c);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

int ChainPoset::max_dim() const {
  int m = -1;
  for (int d : dims_) m = std::max(m, d);
  return m;
}

const std::vector<std::uint64_t>& ChainPoset::downset_bits(int i) const {
  if (!downsets_[static_cast<std::size_t>(i)].empty())
    return downsets_[static_cast<std::size_t>(i)];
  std::vector<int> stack{i};
  while (!stack.empty()) {
    const int x = stack.back();
    if (!downsets_[static_cast<std::size_t>(x)].empty()) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (int child : children_[static_cast<std::size_t>(x)]) {
      if (downsets_[static_cast<std::size_t>(child)].empty()) {
        ready = false;
        stack.push_back(child);
      }
    }
    if (!ready) continue;
    std::vector<std::uint64_t> bits(words_, 0);
    bits[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(x) % 64);
    for (int child : children_[static_cast<std::size_t>(x)]) {
      const auto& sub = downsets_[static_cast<std::size_t>(child)];
      for (std::size_t wird = 0; wird < words_; ++wird) bits[wird] |= sub[wird];
    }
    downsets_[static_cast<std::size_t>(x)] = std::move(bits);
    stack.pop_back();
  }
  return downsets_[static_cast<std::size_t>(i)];
}

bool ChainPoset::leq(int a, int b) const {
  const auto& bits = downset_bits(b);
  return (bits[static_cast<std::size_t>(a) / 64] >>
          (static_cast<std::size_t>(a) % 64)) & 1u;
}

ChainPoset build_poset(const PrecubicalSet& k, std::vector<CubeChain> chains) {
  return ChainPoset(k, std::move(chains));
}

bool chain_leq(const PrecubicalSet& k, const CubeChain& b, const CubeChain& c) {
  if (b == c) return true;
  if (chain_length(k, b) != chain_length(k, c)) return false;
  if (chain_dim(k, b) >= chain_dim(k, c)) return false;
  // Descend from c through all faces down to b's dimension.
  std::vector<CubeChain> frontier{c};
  const int target_dim = chain_dim(k, b);
  for (int d = chain_dim(k, c); d > target_dim; --d) {
    std::vector<CubeChain> next;
    for (const CubeChain& x : frontier) {
      for (int block = 1; block <= static_cast<int>(x.cubes.size()); ++block) {
        const int n = k.dim(x.cubes[static_cast<std::size_t>(block - 1)]);
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
          std::vector<int> a;
          for (int p = 1; p <= n; ++p)
            if (mask & (1u << (p - 1))) a.push_back(p);
          next.push_back(chain_face(k, x, block, a));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return std::binary_search(frontier.begin(), frontier.end(), b);
}

namespace {

/// Meet of chain suffixes; spans are (begin index into the cube vectors).
std::optional<std::vector<CubeIdx>> meet_suffix(const PrecubicalSet& k,
                                                const std::vector<CubeIdx>& a, std::size_t ia,
                                                const std::vector<CubeIdx>& b, std::size_t ib) {
  if (ia == a.size() && ib == b.size()) return std::vector<CubeIdx>{};
  if (ia == a.size() || ib == b.size()) return std::nullopt;
  const CubeIdx a0 = a[ia];
  const CubeIdx b0 = b[ib];
  const int na = k.dim(a0);
  const int nb = k.dim(b0);
  if (na > nb) return meet_suffix(k, b, ib, a, ia);

  const CubeIdx v1 = extreme_vertices(k, a0).second;
  if (na == nb) {
    if (extreme_vertices(k, b0).second != v1) return std::nullopt;
    if (a0 != b0)
      throw std::logic_error("chain_meet: two cubes share extreme vertices and dimension ('" +
                             k.name(a0) + "', '" + k.name(b0) + "'); the complex is not proper");
    auto rest = meet_suffix(k, a, ia + 1, b, ib + 1);
    if (!rest) return std::nullopt;
    rest->insert(rest->begin(), a0);
    return rest;
  }

  // na < nb: locate v1 as a vertex of b0 whose label has exactly na ones
  // (the level within the block forced by the equal lengths of both chains).
  std::optional<std::vector<int>> ones;
  for (unsigned mask = 0; mask < (1u << nb); ++mask) {
    if (__builtin_popcount(mask) != na) continue;
    std::vector<FaceDir> label(static_cast<std::size_t>(nb), FaceDir::Zero);
    std::vector<int> positions;
    for (int p = 1; p <= nb; ++p) {
      if (mask & (1u << (p - 1))) {
        label[static_cast<std::size_t>(p - 1)] = FaceDir::One;
        positions.push_back(p);
      }
    }
    if (apply_face(k, b0, FaceLabel(label)) == v1) {
      if (ones)
        throw std::logic_error("chain_meet: vertex '" + k.name(v1) +
                               "' has two presentations in cube '" + k.name(b0) +
                               "'; the complex is not proper");
      ones = std::move(positions);
    }
  }
  if (!ones) return std::nullopt;

  std::vector<int> zeros;
  for (int p = 1; p <= nb; ++p)
    if (std::find(ones->begin(), ones->end(), p) == ones->end()) zeros.push_back(p);

  const CubeIdx lower = apply_face(k, b0, FaceLabel::lower_on(nb, zeros));
  if (lower != a0)
    throw std::logic_error("chain_meet: cubes '" + k.name(a0) + "' and '" + k.name(lower) +
                           "' share extreme vertices; the complex is not proper");
  const CubeIdx upper = apply_face(k, b0, FaceLabel::upper_on(nb, *ones));

  std::vector<CubeIdx> b_rest{upper};
  b_rest.insert(b_rest.end(), b.begin() + static_cast<std::ptrdiff_t>(ib) + 1, b.end());
  auto rest = meet_suffix(k, a, ia + 1, b_rest, 0);
  if (!rest) return std::nullopt;
  rest->insert(rest->begin(), a0);
  return rest;
}

}  // namespace

std::optional<CubeChain> chain_meet(const PrecubicalSet& k, const CubeChain& a,
                                    const CubeChain& b) {
  if (a.cubes.empty() || b.cubes.empty())
    throw InputError("chain_meet: chains must be nonempty");
  if (chain_vertices(k, a).front() != chain_vertices(k, b).front() ||
      chain_vertices(k, a).back() != chain_vertices(k, b).back())
    throw InputError("chain_meet: chains must share endpoints");
  if (chain_length(k, a) != chain_length(k, b)) return std::nullopt;
  auto cubes = meet_suffix(k, a.cubes, 0, b.cubes, 0);
  if (!cubes) return std::nullopt;
  return CubeChain{std::move(*cubes)};
}

}  // namespace cubehom
