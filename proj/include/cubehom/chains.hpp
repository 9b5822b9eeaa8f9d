#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubehom/precubical.hpp"

namespace cubehom {

/// A sequence of cubes linked extreme vertex to extreme vertex; one cell of
/// the directed-path model. Invariants (for a chain from v to w): every cube
/// has dimension >= 1, d^0 of the first cube is v, d^1 of the last is w, and
/// consecutive cubes share d^1 = d^0.
struct CubeChain {
  std::vector<CubeIdx> cubes;

  bool operator==(const CubeChain& other) const { return cubes == other.cubes; }
  bool operator<(const CubeChain& other) const { return cubes < other.cubes; }
};

std::vector<int> chain_type(const PrecubicalSet& k, const CubeChain& c);
int chain_length(const PrecubicalSet& k, const CubeChain& c);  // sum of dims
int chain_dim(const PrecubicalSet& k, const CubeChain& c);     // length - block count
/// Partial sums b_0 = 0, b_1 = n_1, ..., b_l = length.
std::vector<int> chain_breaks(const PrecubicalSet& k, const CubeChain& c);
/// v_0, v_1, ..., v_l along the chain.
std::vector<CubeIdx> chain_vertices(const PrecubicalSet& k, const CubeChain& c);
bool is_valid_chain(const PrecubicalSet& k, const CubeChain& c, CubeIdx v, CubeIdx w);
std::string chain_to_string(const PrecubicalSet& k, const CubeChain& c);

/// The face operator: splits block k (1-based) into the lower face on the
/// complement of A and the upper face on A. A is given in 1-based local
/// coordinates of the block and must be a nonempty proper subset.
CubeChain chain_face(const PrecubicalSet& k, const CubeChain& c, int block,
                     const std::vector<int>& a);

struct EnumerationOptions {
  std::optional<int> max_length;
  std::size_t max_chains = 1u << 20;
};

/// All cube chains from v to w, lexicographically sorted by cube id
/// sequences. On complexes with loops a max_length is required.
std::vector<CubeChain> enumerate_chains(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                                        const EnumerationOptions& options = {});

/// The face poset of the chain model: elements with the cover relation
/// child = chain_face(parent, ...). The full order is the reflexive
/// transitive closure of covers, computed on demand and memoized.
class ChainPoset {
 public:
  ChainPoset(const PrecubicalSet& k, std::vector<CubeChain> elements);

  std::size_t size() const { return elements_.size(); }
  const CubeChain& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  const std::vector<CubeChain>& elements() const { return elements_; }
  std::optional<int> index_of(const CubeChain& c) const;

  int dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
  int length(int i) const { return lengths_.at(static_cast<std::size_t>(i)); }
  int max_dim() const;

  /// Cover pairs (child, parent).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& children_of(int i) const {
    return children_.at(static_cast<std::size_t>(i));
  }

  bool leq(int a, int b) const;

 private:
  const std::vector<std::uint64_t>& downset_bits(int i) const;

  std::vector<CubeChain> elements_;
  std::vector<int> dims_, lengths_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> children_;
  std::size_t words_ = 0;
  mutable std::vector<std::vector<std::uint64_t>> downsets_;  // memoized, keyed by element
};

/// Enumerates and closes under chain_face; throws std::logic_error if a face
/// of an enumerated chain is missing from the element set.
ChainPoset build_poset(const PrecubicalSet& k, std::vector<CubeChain> chains);

/// Order via repeated chain_face descent from c (cover closure). The
/// equivalent route through the block-wise index isomorphism lives in
/// complex.hpp; the two are asserted equal in tests.
bool chain_leq(const PrecubicalSet& k, const CubeChain& b, const CubeChain& c);

/// Greatest lower bound of two chains with the same endpoints, or nullopt if
/// they admit no common refinement. Recursion on the first block; properness
/// violations surface as std::logic_error.
std::optional<CubeChain> chain_meet(const PrecubicalSet& k, const CubeChain& a,
                                    const CubeChain& b);

}  // namespace cubehom
