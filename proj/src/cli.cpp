#include "uor/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "uor/harness.hpp"
#include "uor/io.hpp"
#include "uor/subgraph_search.hpp"

namespace uor::cli {

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("UOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return std::uint64_t{1} << 22;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw std::runtime_error("cannot open " + path);
  return input;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream output(path);
  if (!output) throw std::runtime_error("cannot write " + path);
  return output;
}

std::string support_line(const BimatrixGame& game, const SupportPair& pair) {
  std::ostringstream out;
  out << "support:";
  for (std::size_t i : pair.row_support) out << " " << game.row_strategies[i];
  out << " |";
  for (std::size_t j : pair.col_support) out << " " << game.col_strategies[j];
  return out.str();
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 500;
  std::vector<std::string> cnf_paths;
  std::uint64_t budget = default_budget();
  std::string out_path;
  std::string format = "text";
};

int cmd_reduce(const std::string& cnf_path, const std::string& out_path,
               const std::string& roles_path, const std::string& planar_path,
               const std::string& registry_path, const std::string& report_path,
               std::ostream& out) {
  std::ifstream input = open_input(cnf_path);
  CnfFormula parsed = parse_dimacs(input);
  auto [normalized, report] = normalize(parsed);
  ReductionGraph rg = build_reduction_graph(normalized);

  {
    std::ofstream graph_out = open_output(out_path);
    write_graph(rg.graph, graph_out);
  }
  {
    std::string path = roles_path.empty() ? out_path + ".roles" : roles_path;
    std::ofstream roles_out = open_output(path);
    write_roles(rg, roles_out);
  }
  if (!report_path.empty()) {
    std::ofstream report_out = open_output(report_path);
    report_out << report.to_text();
  }
  out << "reduced: n=" << rg.num_vars << " m=" << rg.num_clauses << " |V|="
      << rg.graph.vertex_count() << " |E|=" << rg.graph.arc_count() << " edits="
      << report.edits.size() << "\n";

  if (!planar_path.empty()) {
    PlanarizedReduction pl = planarize(rg);
    {
      std::ofstream planar_out = open_output(planar_path);
      write_graph(pl.graph, planar_out);
    }
    std::string path = registry_path.empty() ? planar_path + ".gadgets" : registry_path;
    std::ofstream registry_out = open_output(path);
    write_registry(pl, registry_out);
    out << "planarized: gadgets=" << pl.gadgets.size() << " |V|=" << pl.graph.vertex_count()
        << " |E|=" << pl.graph.arc_count() << "\n";
  }
  return kExitFound;
}

int cmd_solve(const std::string& instance_path, std::uint64_t budget,
              const std::string& witness_path, bool all, std::ostream& out) {
  std::ifstream input = open_input(instance_path);
  if (sniff_kind(input) == InstanceKind::Graph) {
    WeightedBipartiteDigraph graph = read_graph(input);
    FindResult result = find_undominated_out_regular(graph, budget);
    if (result.status == FindStatus::BudgetExhausted) {
      out << "budget-exhausted after " << result.nodes_expanded << " nodes\n";
      return kExitUndecided;
    }
    if (result.status == FindStatus::None) {
      out << "none\n";
      return kExitNegative;
    }
    const OutRegularWitness& witness = *result.witness;
    out << "witness (alpha,beta)=(" << witness.alpha << "," << witness.beta << "):";
    for (VertexId v : witness.members) out << " " << graph.name(v);
    out << "\n";
    if (!witness_path.empty()) {
      std::ofstream witness_out = open_output(witness_path);
      write_witness(graph, witness.members, witness_out);
    }
    return kExitFound;
  }

  BimatrixGame game = read_game(input);
  UniformEquilibria result = enumerate_uniform_equilibria(game, budget);
  if (result.pairs.empty()) {
    if (!result.complete) {
      out << "budget-exhausted after " << result.pairs_examined << " support pairs\n";
      return kExitUndecided;
    }
    out << "none\n";
    return kExitNegative;
  }
  std::size_t shown = all ? result.pairs.size() : 1;
  for (std::size_t i = 0; i < shown; ++i) out << support_line(game, result.pairs[i]) << "\n";
  if (!result.complete) out << "(enumeration stopped at the budget)\n";
  if (!witness_path.empty()) {
    std::ofstream witness_out = open_output(witness_path);
    const SupportPair& pair = result.pairs.front();
    for (std::size_t i : pair.row_support) witness_out << game.row_strategies[i] << "\n";
    for (std::size_t j : pair.col_support) witness_out << game.col_strategies[j] << "\n";
  }
  return kExitFound;
}

int cmd_check(const std::string& instance_path, const std::string& witness_path,
              std::ostream& out) {
  std::ifstream witness_input = open_input(witness_path);
  std::vector<std::string> names = read_witness(witness_input);
  if (names.empty()) throw std::runtime_error("empty witness file: " + witness_path);

  std::ifstream input = open_input(instance_path);
  if (sniff_kind(input) == InstanceKind::Graph) {
    WeightedBipartiteDigraph graph = read_graph(input);
    std::vector<VertexId> subset = resolve_witness(graph, names);
    WitnessCheck verdict = check_witness(graph, subset);
    out << verdict.describe(graph) << "\n";
    return verdict.ok ? kExitFound : kExitNegative;
  }

  BimatrixGame game = read_game(input);
  SupportPair pair;
  for (const std::string& name : names) {
    bool known = false;
    for (std::size_t i = 0; i < game.rows(); ++i) {
      if (game.row_strategies[i] == name) {
        pair.row_support.push_back(i);
        known = true;
      }
    }
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (game.col_strategies[j] == name) {
        pair.col_support.push_back(j);
        known = true;
      }
    }
    if (!known) throw std::runtime_error("unknown strategy: " + name);
  }
  bool ok = check_uniform_equilibrium(game, pair);
  out << (ok ? "uniform equilibrium" : "not a uniform equilibrium") << "\n";
  return ok ? kExitFound : kExitNegative;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  std::vector<VerificationReport> reports;
  PipelineBudget budget;
  budget.finder_nodes = options.budget;

  const bool wants_equivalence = options.suite == "equivalence" || options.suite == "all";
  const bool wants_theorem3 = options.suite == "theorem3" || options.suite == "all";
  const bool wants_lemma4 = options.suite == "lemma4" || options.suite == "all";
  const bool wants_e2e = options.suite == "all";

  if (wants_equivalence) {
    if (!options.seed_set) {
      throw std::runtime_error("--seed is mandatory for the randomized equivalence suite");
    }
    RandomGameSpec spec;
    spec.seed = options.seed;
    spec.density = 0.6;
    const int half = std::max(1, options.trials / 2);
    spec.row_classes = {Rational(1)};
    spec.col_classes = {Rational(1)};
    VerificationReport win_lose = crosscheck_equivalence(spec, half);
    win_lose.instance += " [classes {1},{1}]";
    reports.push_back(std::move(win_lose));

    spec.seed = options.seed + 1000003;
    spec.row_classes = {Rational(1), Rational(2)};
    spec.col_classes = {Rational(1), Rational(2)};
    VerificationReport two_class = crosscheck_equivalence(spec, options.trials - half);
    two_class.instance += " [classes {1,2},{1,2}]";
    reports.push_back(std::move(two_class));
  }

  if (wants_theorem3 || wants_lemma4 || wants_e2e) {
    if (options.cnf_paths.empty()) {
      throw std::runtime_error("suite '" + options.suite + "' needs at least one --cnf file");
    }
    for (const std::string& path : options.cnf_paths) {
      std::ifstream input = open_input(path);
      CnfFormula formula = parse_dimacs(input);
      if (wants_e2e) {
        VerificationReport report = end_to_end(formula, budget);
        report.instance = path + " (end-to-end)";
        reports.push_back(std::move(report));
      }
      if (wants_theorem3) {
        VerificationReport report = theorem3_forward_report(formula, budget);
        report.instance = path + " (forward witness map)";
        reports.push_back(std::move(report));
      }
      if (wants_lemma4) {
        VerificationReport report = lemma4_report(formula, budget);
        report.instance = path + " (planarization round trip)";
        reports.push_back(std::move(report));
      }
    }
  }

  std::ostringstream rendered;
  bool all_passed = true;
  for (const VerificationReport& report : reports) {
    if (options.format == "kv") {
      write_report_kv(report, rendered);
    } else {
      write_report_text(report, rendered);
    }
    rendered << "\n";
    all_passed = all_passed && report.passed();
  }
  out << rendered.str();
  if (!options.out_path.empty()) {
    std::ofstream file = open_output(options.out_path);
    file << rendered.str();
  }
  return all_passed ? kExitFound : kExitNegative;
}

int cmd_export(const std::string& instance_path, const std::string& dot_path,
               const std::string& registry_path, std::ostream& out) {
  std::ifstream input = open_input(instance_path);
  WeightedBipartiteDigraph graph = sniff_kind(input) == InstanceKind::Graph
                                       ? read_graph(input)
                                       : game_to_graph(read_game(input));
  std::optional<RegistryData> registry;
  if (!registry_path.empty()) {
    std::ifstream registry_input = open_input(registry_path);
    registry = read_registry(registry_input);
  }
  std::ofstream dot_out = open_output(dot_path);
  write_dot(graph, dot_out, registry ? &*registry : nullptr);
  out << "wrote " << dot_path << "\n";
  return kExitFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"uniform-equilibrium toolkit: games, digraphs, and 3-SAT reductions"};
  app.require_subcommand(1);

  std::string cnf_path, out_path, roles_path, planar_path, registry_path, report_path;
  auto* reduce = app.add_subcommand("reduce", "compile a 3-CNF formula into a digraph");
  reduce->add_option("cnf", cnf_path, "DIMACS CNF input")->required();
  reduce->add_option("-o,--out", out_path, "output graph file")->required();
  reduce->add_option("--roles", roles_path, "role map output (default: <out>.roles)");
  reduce->add_option("--planar", planar_path, "also write the planarized graph here");
  reduce->add_option("--registry", registry_path,
                     "gadget registry output (default: <planar>.gadgets)");
  reduce->add_option("--report", report_path, "write the normalization report here");

  std::string instance_path, witness_path;
  std::uint64_t budget = default_budget();
  bool all_solutions = false;
  auto* solve = app.add_subcommand("solve", "search an instance for a witness");
  solve->add_option("instance", instance_path, "graph or game file")->required();
  solve->add_option("--budget", budget, "search budget (node expansions / support pairs)");
  solve->add_option("-o,--out", witness_path, "write the witness here");
  solve->add_flag("--all", all_solutions, "games: print every equilibrium support pair");

  std::string check_instance, check_witness_path;
  auto* check = app.add_subcommand("check", "verify a witness against an instance");
  check->add_option("instance", check_instance, "graph or game file")->required();
  check->add_option("witness", check_witness_path, "witness file")->required();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_options.suite, "equivalence | theorem3 | lemma4 | all")
      ->required()
      ->check(CLI::IsMember({"equivalence", "theorem3", "lemma4", "all"}));
  auto* seed_opt = verify->add_option("--seed", verify_options.seed, "RNG seed");
  verify->add_option("--trials", verify_options.trials, "random trials");
  verify->add_option("--cnf", verify_options.cnf_paths, "CNF instances");
  verify->add_option("--budget", verify_options.budget, "finder node budget");
  verify->add_option("--out", verify_options.out_path, "also write the report here");
  verify->add_option("--format", verify_options.format, "text | kv")
      ->check(CLI::IsMember({"text", "kv"}));

  std::string export_instance, dot_path, export_registry;
  auto* exporter = app.add_subcommand("export", "write a DOT rendering");
  exporter->add_option("instance", export_instance, "graph or game file")->required();
  exporter->add_option("dot", dot_path, "DOT output path")->required();
  exporter->add_option("--registry", export_registry, "gadget registry for clusters");

  std::vector<const char*> argv;
  argv.push_back("uor");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return kExitFound;
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\n";
    return kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      return cmd_reduce(cnf_path, out_path, roles_path, planar_path, registry_path, report_path,
                        out);
    }
    if (solve->parsed()) {
      return cmd_solve(instance_path, budget, witness_path, all_solutions, out);
    }
    if (check->parsed()) return cmd_check(check_instance, check_witness_path, out);
    if (verify->parsed()) {
      verify_options.seed_set = seed_opt->count() > 0;
      return cmd_verify(verify_options, out);
    }
    if (exporter->parsed()) return cmd_export(export_instance, dot_path, export_registry, out);
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace uor::cli
