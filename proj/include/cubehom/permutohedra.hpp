#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cubehom {

/// One-line permutation of {1..n}: perm[i-1] = image of i.
using Perm = std::vector<int>;

int perm_sign(const Perm& p);
/// (sigma . phi)(i) = sigma(phi(i)).
Perm perm_compose(const Perm& sigma, const Perm& phi);
Perm perm_identity(int n);

/// A sequence of positive integers with sum n; the type of a cube chain and
/// the shape of a product of permutohedra.
class CompositionSeq {
 public:
  explicit CompositionSeq(std::vector<int> parts);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(parts_.size()); }
  int part(int k) const { return parts_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& parts() const { return parts_; }
  /// b_k = n_1 + ... + n_k for k = 0..block_count.
  int breakpoint(int k) const { return breaks_.at(static_cast<std::size_t>(k)); }
  int cell_dim() const { return n_ - block_count(); }

  /// Splits block k into (r, n_k - r).
  CompositionSeq refine(int k, int r) const;

  bool operator==(const CompositionSeq& other) const { return parts_ == other.parts_; }
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  std::vector<int> breaks_;
  int n_ = 0;
};

/// A surjection {1..n} -> {1..k}, the characteristic function of a weak
/// strict ordering; an element of the face poset of the permutohedron.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::vector<int> values);

  /// The canonical non-decreasing surjection of a composition: value k on
  /// block k.
  static OrderedPartition of_composition(const CompositionSeq& shape);

  int arity() const { return static_cast<int>(values_.size()); }
  int blocks() const { return blocks_; }
  int value(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }

  /// f <= g iff g = h . f for a non-decreasing h (g coarsens f).
  bool leq(const OrderedPartition& g) const;
  /// f . sigma.
  OrderedPartition precompose(const Perm& sigma) const;

  bool operator==(const OrderedPartition& other) const { return values_ == other.values_; }
  bool operator<(const OrderedPartition& other) const { return values_ < other.values_; }
  std::string to_string() const;

 private:
  std::vector<int> values_;
  int blocks_ = 0;
};

/// Resource guard for the factorially growing enumerations below.
struct PermBudget {
  int max_block = 6;
  long long max_terms = 4'000'000;
};

void check_composition_budget(const CompositionSeq& shape, const PermBudget& budget = {});

/// The poset O_shape of all partitions below the canonical one, with its
/// greatest element. Elements are sorted by value sequence.
class PartitionPoset {
 public:
  PartitionPoset(const CompositionSeq& shape, std::vector<OrderedPartition> elements);

  std::size_t size() const { return elements_.size(); }
  const OrderedPartition& element(int i) const {
    return elements_.at(static_cast<std::size_t>(i));
  }
  const CompositionSeq& shape() const { return shape_; }
  int top() const { return top_; }
  std::optional<int> index_of(const OrderedPartition& f) const;
  bool leq(int a, int b) const {
    return element(a).leq(element(b));
  }

 private:
  CompositionSeq shape_;
  std::vector<OrderedPartition> elements_;
  std::map<std::vector<int>, int> index_;
  int top_ = -1;
};

PartitionPoset enumerate_ordered_partitions(const CompositionSeq& shape,
                                            const PermBudget& budget = {});

/// Product decomposition of f <= f_shape into per-block partitions, and its
/// inverse. factor_components . reassemble = identity.
std::vector<OrderedPartition> factor_components(const OrderedPartition& f,
                                                const CompositionSeq& shape);
OrderedPartition reassemble_components(const std::vector<OrderedPartition>& components);

/// tau: {1..n-1} -> {0..d+1} with every value in (0, d] attained; encodes a
/// d-simplex of the nerve together with a permutation.
class TauFunction {
 public:
  TauFunction(int simplex_dim, std::vector<int> values);

  int simplex_dim() const { return dim_; }
  int arity() const { return static_cast<int>(values_.size()) + 1; }  // the n of {1..n-1}
  int value(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }

  /// Merge values j and j+1 (the simplicial face operator on taus).
  TauFunction collapse(int j) const;

  bool operator==(const TauFunction& other) const {
    return dim_ == other.dim_ && values_ == other.values_;
  }

 private:
  int dim_;
  std::vector<int> values_;
};

/// The d+1 vertices of the simplex a[sigma, tau]: thresholding tau at
/// j = 0..d and precomposing with sigma. Vertices strictly increase.
std::vector<OrderedPartition> simplex_vertices(const Perm& sigma, const TauFunction& tau);

/// Canonical representative of a[sigma, tau]: a[sigma, tau] = a[phi, tau]
/// iff sigma . phi^-1 stabilizes the finest vertex, so the lexicographically
/// least member of that coset identifies the simplex.
struct PermSimplex {
  Perm sigma;
  TauFunction tau;

  static PermSimplex canonical(const Perm& sigma, const TauFunction& tau);
  bool operator==(const PermSimplex& other) const {
    return sigma == other.sigma && tau == other.tau;
  }
};

/// Permutations preserving the blocks of the composition (the group
/// Sigma_shape), enumerated block-wise.
std::vector<Perm> enumerate_block_permutations(const CompositionSeq& shape);

/// Top-dimensional taus for the composition: value d+1 at every breakpoint
/// and a bijection onto {1..d} elsewhere, d = n - block_count.
std::vector<TauFunction> enumerate_top_taus(const CompositionSeq& shape);

/// Sign of a top-dimensional tau: the sign of tau restricted to non-break
/// positions, read through the increasing bijection from {1..d}.
int tau_sign(const CompositionSeq& shape, const TauFunction& tau);

/// +1 iff sum over A of (a - offset) is congruent to 1 + 2 + ... + |A| mod 2.
int subset_sign(const std::vector<int>& a, int offset);

/// The block-k shuffle sending A (global positions within block k) to the
/// leading r slots of the block and the complement to the trailing slots,
/// both order-preserving; identity outside the block.
Perm xi_permutation(const CompositionSeq& shape, int k, const std::vector<int>& a_global);

/// An integer combination of nerve simplices; keys are strictly increasing
/// vertex index sequences into some indexed poset. Zero coefficients are
/// never stored.
using SimplexKey = std::vector<int>;
using SignedChain = std::map<SimplexKey, long long>;

void chain_add(SignedChain& chain, const SimplexKey& key, long long coefficient);
SignedChain simplicial_boundary(const SignedChain& chain);

/// The fundamental cycle g of the composition: the signed sum over block
/// permutations and top taus of the simplices a[sigma, tau], indexed into
/// the given poset (which must be the poset of the same composition).
SignedChain fundamental_cycle(const CompositionSeq& shape, const PartitionPoset& poset,
                              const PermBudget& budget = {});

struct PermBoundaryTerm {
  int k = 0;                      // block split
  int r = 0;                      // lower part size
  std::vector<int> subset_global;  // A as global positions in block k
  int coefficient = 0;            // (-1)^(k+r+b_{k-1}+1) * subset sign
  SignedChain embedded;           // the refined cycle pushed into O_shape
};

/// The decomposition of the simplicial boundary of the fundamental cycle
/// into embedded fundamental cycles of the refined compositions. The sum of
/// coefficient * embedded over all terms equals simplicial_boundary of
/// fundamental_cycle exactly.
std::vector<PermBoundaryTerm> permutohedral_boundary(const CompositionSeq& shape,
                                                     const PartitionPoset& poset,
                                                     const PermBudget& budget = {});

}  // namespace cubehom
