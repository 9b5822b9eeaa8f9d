#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubehom/chains.hpp"
#include "cubehom/complex.hpp"
#include "cubehom/homology.hpp"

namespace cubehom {

struct PipelineOptions {
  std::optional<int> max_length;
  std::size_t max_chains = 1u << 20;
  PermBudget budget;
};

struct StratumReport {
  int length = 0;
  HomologyReport homology;
};

/// Enumeration, poset, cellular complex and integer homology per length
/// stratum plus the total.
struct PipelineResult {
  ChainPoset poset;
  CellularComplexRep complex;
  std::vector<StratumReport> strata;
  HomologyReport total;
};

PipelineResult run_cellular_pipeline(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                                     const PipelineOptions& options = {});

/// Homology of the order complex of the chain poset (the independent
/// verification route), again per stratum and total.
struct NerveResult {
  std::vector<StratumReport> strata;
  HomologyReport total;
};

NerveResult run_nerve_pipeline(const ChainPoset& poset);

struct OracleOutcome {
  bool match = true;
  std::vector<std::string> differences;
};

/// Runs both routes and compares every stratum and the total.
OracleOutcome run_oracle(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                         const PipelineOptions& options = {});

/// JSON dump of the assembled complex: per-dimension cell id sequences and
/// sparse boundary triplets.
std::string dump_complex_json(const PrecubicalSet& k, const ChainPoset& poset,
                              const CellularComplexRep& complex);

}  // namespace cubehom
