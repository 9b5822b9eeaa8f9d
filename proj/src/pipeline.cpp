#include "cubehom/pipeline.hpp"

#include <algorithm>

#include <json.hpp>

namespace cubehom {

PipelineResult run_cellular_pipeline(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                                     const PipelineOptions& options) {
  EnumerationOptions enum_options;
  enum_options.max_length = options.max_length;
  enum_options.max_chains = options.max_chains;
  std::vector<CubeChain> chains = enumerate_chains(k, v, w, enum_options);

  PipelineResult out{build_poset(k, std::move(chains)), {}, {}, {}};
  out.complex = assemble_complex(k, out.poset, options.budget);

  for (const StratumComplex& stratum : split_by_stratum(out.poset, out.complex)) {
    StratumReport report;
    report.length = stratum.length;
    report.homology = homology_from_boundaries(stratum.cell_counts, stratum.boundaries);
    out.strata.push_back(std::move(report));
  }
  if (!out.complex.cells.empty())
    out.total = homology_from_boundaries(out.complex.cell_counts(), out.complex.boundary);
  return out;
}

NerveResult run_nerve_pipeline(const ChainPoset& poset) {
  NerveResult out;
  const int n = static_cast<int>(poset.size());
  const auto leq = [&](int a, int b) { return poset.leq(a, b); };
  if (n > 0) out.total = homology_of_nerve(nerve_of_poset(n, leq));

  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) lengths.push_back(poset.length(i));
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  for (int length : lengths) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (poset.length(i) == length) members.push_back(i);
    const auto sub_leq = [&](int a, int b) {
      return poset.leq(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]);
    };
    StratumReport report;
    report.length = length;
    report.homology = homology_of_nerve(nerve_of_poset(static_cast<int>(members.size()), sub_leq));
    out.strata.push_back(std::move(report));
  }
  return out;
}

OracleOutcome run_oracle(const PrecubicalSet& k, CubeIdx v, CubeIdx w,
                         const PipelineOptions& options) {
  const PipelineResult cellular = run_cellular_pipeline(k, v, w, options);
  const NerveResult nerve = run_nerve_pipeline(cellular.poset);

  OracleOutcome out;
  const ReportComparison total = compare_reports(cellular.total, nerve.total);
  if (!total.match) {
    out.match = false;
    for (const std::string& d : total.differences) out.differences.push_back("total: " + d);
  }
  if (cellular.strata.size() != nerve.strata.size()) {
    out.match = false;
    out.differences.push_back("stratum counts disagree");
    return out;
  }
  for (std::size_t i = 0; i < cellular.strata.size(); ++i) {
    if (cellular.strata[i].length != nerve.strata[i].length) {
      out.match = false;
      out.differences.push_back("stratum lengths disagree");
      continue;
    }
    const ReportComparison cmp =
        compare_reports(cellular.strata[i].homology, nerve.strata[i].homology);
    if (!cmp.match) {
      out.match = false;
      for (const std::string& d : cmp.differences)
        out.differences.push_back("length " + std::to_string(cellular.strata[i].length) + ": " + d);
    }
  }
  return out;
}

std::string dump_complex_json(const PrecubicalSet& k, const ChainPoset& poset,
                              const CellularComplexRep& complex) {
  nlohmann::ordered_json doc;
  doc["cells"] = nlohmann::ordered_json::object();
  for (std::size_t d = 0; d < complex.cells.size(); ++d) {
    nlohmann::ordered_json level = nlohmann::ordered_json::array();
    for (int cell : complex.cells[d]) {
      nlohmann::ordered_json ids = nlohmann::ordered_json::array();
      for (CubeIdx c : poset.element(cell).cubes) ids.push_back(k.name(c));
      level.push_back(std::move(ids));
    }
    doc["cells"][std::to_string(d)] = std::move(level);
  }
  doc["boundary"] = nlohmann::ordered_json::object();
  for (std::size_t d = 1; d < complex.boundary.size(); ++d) {
    nlohmann::ordered_json triplets = nlohmann::ordered_json::array();
    for (const SparseTriplet& t : complex.boundary[d])
      triplets.push_back({t.row, t.col, t.value});
    doc["boundary"][std::to_string(d)] = std::move(triplets);
  }
  return doc.dump(2) + "\n";
}

}  // namespace cubehom
