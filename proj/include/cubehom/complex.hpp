#pragma once

#include <vector>

#include "cubehom/chains.hpp"
#include "cubehom/homology.hpp"
#include "cubehom/permutohedra.hpp"

namespace cubehom {

/// The order isomorphism from partitions of arity dim(c) onto the chains
/// below the one-cube chain (c): block s of the image frees the directions
/// with value s, sets smaller values to 1 and larger ones to 0.
CubeChain index_iso(const PrecubicalSet& k, CubeIdx c, const OrderedPartition& f);

/// Inverse of index_iso: reconstructs the unique presentation of every cube
/// of b as a face of c. Throws InputError when b is not below (c) or when
/// the presentation is ambiguous (non-proper input).
OrderedPartition index_iso_inverse(const PrecubicalSet& k, CubeIdx c, const CubeChain& b);

/// The block-wise extension: factor f over the type of c and concatenate the
/// per-block images. A poset isomorphism onto the downset of c.
CubeChain index_iso_chain(const PrecubicalSet& k, const CubeChain& c, const OrderedPartition& f);

/// Order test through the index isomorphism: b <= c iff b splits at the
/// breakpoints of c with every segment a face chain of the matching block.
bool chain_leq_via_index(const PrecubicalSet& k, const CubeChain& b, const CubeChain& c);

/// The cycle of the cell c: the fundamental cycle of its type pushed forward
/// vertex-wise along index_iso_chain, keyed by poset element indices.
SignedChain cell_cycle(const PrecubicalSet& k, const ChainPoset& poset, int cell,
                       const PermBudget& budget = {});

struct IncidenceTerm {
  CubeChain child;
  int coefficient = 0;  // always +1 or -1
};

/// The closed-form cellular boundary: over blocks k, split sizes r and
/// subsets A of size r, the child chain_face(c, k, A) enters with
/// coefficient (-1)^(n_1+...+n_{k-1}+k+r+1) * sgn(A). Children are listed in
/// deterministic order and each codimension-one face appears exactly once.
std::vector<IncidenceTerm> cellular_boundary(const PrecubicalSet& k, const CubeChain& c);

/// Free chain complex on the cube chains with the incidence coefficients
/// above. Cells of each dimension are ordered by (length, type, id
/// sequence); matrices are block diagonal across length strata.
struct CellularComplexRep {
  std::vector<std::vector<int>> cells;  // per dimension: poset element indices
  std::vector<std::vector<SparseTriplet>> boundary;  // boundary[d] : C_d -> C_{d-1}

  std::vector<int> cell_counts() const;
};

CellularComplexRep assemble_complex(const PrecubicalSet& k, const ChainPoset& poset,
                                    const PermBudget& budget = {});

/// One length stratum of the assembled complex, reindexed densely.
struct StratumComplex {
  int length = 0;
  std::vector<int> cell_counts;
  std::vector<std::vector<SparseTriplet>> boundaries;
  std::vector<std::vector<int>> cells;  // poset element indices per dimension
};

std::vector<StratumComplex> split_by_stratum(const ChainPoset& poset,
                                             const CellularComplexRep& complex);

}  // namespace cubehom
