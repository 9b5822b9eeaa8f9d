// Command-line front end: validation, generation, chain listings, homology
// and the two-pipeline cross-check, over .pcs.json documents or grid specs.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubehom/errors.hpp"
#include "cubehom/grid.hpp"
#include "cubehom/pcs_io.hpp"
#include "cubehom/pipeline.hpp"

namespace {

using namespace cubehom;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
  std::string input_path;
  std::string grid_path;
  std::string from;
  std::string to;
  std::optional<int> max_length;
  bool json = false;
  std::string dump_complex_path;
  unsigned seed = 20240901;
  std::size_t max_cells = 1u << 20;
  int max_block = 6;
};

struct LoadedInput {
  PrecubicalSet complex;
  std::optional<CubeIdx> source;
  std::optional<CubeIdx> target;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_grid_argument(const std::string& arg) {
  // Inline JSON or a path to a spec document.
  if (!arg.empty() && arg.front() == '{') return arg;
  return read_file(arg);
}

LoadedInput load_input(const RunConfig& config) {
  if (config.input_path.empty() == config.grid_path.empty())
    throw InputError("exactly one of --input or --grid is required");
  LoadedInput out;
  if (!config.input_path.empty()) {
    PcsDocument doc = parse_pcs(read_file(config.input_path));
    out.complex = std::move(doc.complex);
    out.source = doc.source;
    out.target = doc.target;
  } else {
    GridComplex grid = generate_grid_complex(parse_grid_spec(read_grid_argument(config.grid_path)));
    out.complex = std::move(grid.complex);
    out.source = grid.source;
    out.target = grid.target;
  }
  if (!config.from.empty()) {
    auto v = out.complex.find(config.from);
    if (!v || out.complex.dim(*v) != 0)
      throw InputError("--from '" + config.from + "' is not a vertex of the complex");
    out.source = *v;
  }
  if (!config.to.empty()) {
    auto w = out.complex.find(config.to);
    if (!w || out.complex.dim(*w) != 0)
      throw InputError("--to '" + config.to + "' is not a vertex of the complex");
    out.target = *w;
  }
  return out;
}

std::pair<CubeIdx, CubeIdx> require_endpoints(const LoadedInput& input) {
  if (!input.source || !input.target)
    throw InputError("no source/target vertices; pass --from and --to");
  return {*input.source, *input.target};
}

PipelineOptions pipeline_options(const RunConfig& config) {
  PipelineOptions options;
  options.max_length = config.max_length;
  options.max_chains = config.max_cells;
  options.budget.max_block = config.max_block;
  return options;
}

int run_validate(const RunConfig& config) {
  const LoadedInput input = load_input(config);
  const ValidationReport relations = validate_precubical(input.complex);
  const PropernessResult proper = is_proper(input.complex);
  const LoopCheckResult loops = has_no_loops(input.complex);
  const PropernessResult covering = is_covering_proper(input.complex);

  if (config.json) {
    nlohmann::ordered_json doc;
    doc["relations_ok"] = relations.ok;
    doc["violations"] = nlohmann::ordered_json::array();
    for (const ValidationViolation& v : relations.violations)
      doc["violations"].push_back({{"cube", v.cube}, {"relation", v.relation}, {"message", v.message}});
    doc["proper"] = proper.proper;
    doc["no_loops"] = loops.acyclic;
    doc["covering_proper"] = covering.proper;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "pre-cubical relations: " << (relations.ok ? "ok" : "violated") << "\n";
    for (const ValidationViolation& v : relations.violations)
      std::cout << "  " << v.cube << ": " << v.relation << " (" << v.message << ")\n";
    std::cout << "proper: " << (proper.proper ? "yes" : "no") << "\n";
    if (!proper.proper)
      std::cout << "  cubes '" << input.complex.name(proper.offending->first) << "' and '"
                << input.complex.name(proper.offending->second)
                << "' share their extreme vertices\n";
    std::cout << "no loops: " << (loops.acyclic ? "yes" : "no") << "\n";
    if (!loops.acyclic) {
      std::cout << "  cycle:";
      for (CubeIdx v : loops.witness_cycle) std::cout << " " << input.complex.name(v);
      std::cout << "\n";
    }
    std::cout << "covering proper: " << (covering.proper ? "yes" : "no") << "\n";
  }
  const bool ok = relations.ok && loops.acyclic && covering.proper;
  return ok ? kExitOk : kExitInvalidInput;
}

int run_generate(const RunConfig& config) {
  if (config.grid_path.empty()) throw InputError("generate requires --grid");
  const GridComplex grid =
      generate_grid_complex(parse_grid_spec(read_grid_argument(config.grid_path)));
  std::cout << serialize_pcs(grid.complex, grid.source, grid.target);
  return kExitOk;
}

int run_chains(const RunConfig& config) {
  const LoadedInput input = load_input(config);
  const auto [v, w] = require_endpoints(input);
  EnumerationOptions options;
  options.max_length = config.max_length;
  options.max_chains = config.max_cells;
  const std::vector<CubeChain> chains = enumerate_chains(input.complex, v, w, options);

  // Group by length, then type.
  std::map<int, std::map<std::vector<int>, std::vector<const CubeChain*>>> grouped;
  for (const CubeChain& c : chains)
    grouped[chain_length(input.complex, c)][chain_type(input.complex, c)].push_back(&c);

  if (config.json) {
    nlohmann::ordered_json doc;
    doc["count"] = chains.size();
    doc["strata"] = nlohmann::ordered_json::array();
    for (const auto& [length, by_type] : grouped) {
      nlohmann::ordered_json stratum;
      stratum["length"] = length;
      stratum["types"] = nlohmann::ordered_json::array();
      for (const auto& [type, list] : by_type) {
        nlohmann::ordered_json entry;
        entry["type"] = type;
        entry["chains"] = nlohmann::ordered_json::array();
        for (const CubeChain* c : list) {
          nlohmann::ordered_json ids = nlohmann::ordered_json::array();
          for (CubeIdx cube : c->cubes) ids.push_back(input.complex.name(cube));
          entry["chains"].push_back(std::move(ids));
        }
        stratum["types"].push_back(std::move(entry));
      }
      doc["strata"].push_back(std::move(stratum));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << chains.size() << " chains from " << input.complex.name(v) << " to "
              << input.complex.name(w) << "\n";
    for (const auto& [length, by_type] : grouped) {
      std::cout << "length " << length << ":\n";
      for (const auto& [type, list] : by_type) {
        std::cout << "  type (";
        for (std::size_t i = 0; i < type.size(); ++i)
          std::cout << (i ? "," : "") << type[i];
        std::cout << "): " << list.size() << "\n";
        for (const CubeChain* c : list)
          std::cout << "    " << chain_to_string(input.complex, *c) << "\n";
      }
    }
  }
  return kExitOk;
}

nlohmann::ordered_json homology_json(const HomologyReport& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < report.groups.size(); ++d) {
    nlohmann::ordered_json entry;
    entry["degree"] = d;
    entry["betti"] = report.groups[d].betti;
    entry["torsion"] = report.groups[d].torsion;
    out.push_back(std::move(entry));
  }
  return out;
}

void print_homology_text(const HomologyReport& report, const std::string& indent) {
  if (report.groups.empty()) {
    std::cout << indent << "no cells\n";
    return;
  }
  for (std::size_t d = 0; d < report.groups.size(); ++d)
    std::cout << indent << "H_" << d << " = " << report.groups[d].to_string() << "\n";
}

int run_homology(const RunConfig& config) {
  const LoadedInput input = load_input(config);
  const auto [v, w] = require_endpoints(input);
  const PipelineResult result = run_cellular_pipeline(input.complex, v, w, pipeline_options(config));

  if (!config.dump_complex_path.empty()) {
    std::ofstream out(config.dump_complex_path);
    if (!out.good()) throw InputError("cannot write '" + config.dump_complex_path + "'");
    out << dump_complex_json(input.complex, result.poset, result.complex);
  }

  if (config.json) {
    nlohmann::ordered_json doc;
    doc["cells"] = result.complex.cell_counts();
    doc["strata"] = nlohmann::ordered_json::array();
    for (const StratumReport& s : result.strata) {
      nlohmann::ordered_json stratum;
      stratum["length"] = s.length;
      stratum["homology"] = homology_json(s.homology);
      doc["strata"].push_back(std::move(stratum));
    }
    doc["total"] = homology_json(result.total);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const StratumReport& s : result.strata) {
      std::cout << "stratum length " << s.length << ":\n";
      print_homology_text(s.homology, "  ");
    }
    std::cout << "total:\n";
    print_homology_text(result.total, "  ");
  }
  return kExitOk;
}

int oracle_single(const PrecubicalSet& k, CubeIdx v, CubeIdx w, const PipelineOptions& options,
                  const std::string& label) {
  const OracleOutcome outcome = run_oracle(k, v, w, options);
  if (outcome.match) {
    std::cout << label << ": match\n";
    return kExitOk;
  }
  std::cout << label << ": MISMATCH between the cellular and nerve pipelines\n";
  for (const std::string& d : outcome.differences) std::cout << "  " << d << "\n";
  return kExitMismatch;
}

int run_oracle_command(const RunConfig& config) {
  if (!config.input_path.empty() || !config.grid_path.empty()) {
    const LoadedInput input = load_input(config);
    const auto [v, w] = require_endpoints(input);
    return oracle_single(input.complex, v, w, pipeline_options(config), "input");
  }

  // Built-in suite: the shipped shapes plus seeded random grids.
  int failures = 0;
  const std::pair<std::string, GridSpec> shapes[] = {
      {"square", GridSpec{{1, 1}, {}}},
      {"hollow-square", GridSpec{{1, 1}, {{0, 0}}}},
      {"hollow-cube", GridSpec{{1, 1, 1}, {{0, 0, 0}}}},
      {"annulus", GridSpec{{3, 3}, {{1, 1}}}},
  };
  for (const auto& [name, spec] : shapes) {
    const GridComplex g = generate_grid_complex(spec);
    failures +=
        oracle_single(g.complex, g.source, g.target, pipeline_options(config), name) ? 1 : 0;
  }
  std::mt19937 rng(config.seed);
  std::uniform_int_distribution<int> extent(1, 3);
  std::uniform_int_distribution<int> forb_count(0, 4);
  for (int trial = 0; trial < 10; ++trial) {
    GridSpec spec;
    spec.extents = {extent(rng), extent(rng)};
    std::vector<std::vector<int>> cells;
    for (int x = 0; x < spec.extents[0]; ++x)
      for (int y = 0; y < spec.extents[1]; ++y) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    const int n = std::min<int>(forb_count(rng), static_cast<int>(cells.size()));
    spec.forbidden.assign(cells.begin(), cells.begin() + n);
    const GridComplex g = generate_grid_complex(spec);
    failures += oracle_single(g.complex, g.source, g.target, pipeline_options(config),
                              "random-" + std::to_string(trial)) ? 1 : 0;
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube-chain models and integer homology of directed path spaces on cubical complexes"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) {
      cmd->add_option("--input", config.input_path, "a .pcs.json document");
      cmd->add_option("--grid", config.grid_path, "a grid spec document (path or inline JSON)");
    }
    cmd->add_option("--from", config.from, "source vertex id");
    cmd->add_option("--to", config.to, "target vertex id");
    cmd->add_option("--max-length", config.max_length, "bound on chain length");
    cmd->add_flag("--json", config.json, "machine-readable output");
    cmd->add_option("--seed", config.seed, "seed for the randomized suite");
    cmd->add_option("--max-cells", config.max_cells, "chain enumeration budget");
    cmd->add_option("--max-block", config.max_block, "largest admissible cube dimension in a chain");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the structural properties");
  add_common(validate, true);
  CLI::App* generate = app.add_subcommand("generate", "emit the complex of a grid spec");
  generate->add_option("--grid", config.grid_path, "a grid spec document (path or inline JSON)");
  CLI::App* chains = app.add_subcommand("chains", "list cube chains grouped by length and type");
  add_common(chains, true);
  CLI::App* homology = app.add_subcommand("homology", "integer homology per length stratum");
  add_common(homology, true);
  homology->add_option("--dump-complex", config.dump_complex_path,
                       "write the assembled complex as JSON");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "compare the cellular and nerve pipelines (built-in suite without --input)");
  add_common(oracle, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(config);
    if (generate->parsed()) return run_generate(config);
    if (chains->parsed()) return run_chains(config);
    if (homology->parsed()) return run_homology(config);
    if (oracle->parsed()) return run_oracle_command(config);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated (this is a bug): " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
