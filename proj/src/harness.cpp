#include "uor/harness.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "uor/io.hpp"
#include "uor/subgraph_search.hpp"

namespace uor {

namespace {

const char* status_name(StageStatus status) {
  switch (status) {
    case StageStatus::Pass: return "PASS";
    case StageStatus::Fail: return "FAIL";
    case StageStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

// Support pairs as (row ids, col ids offset to 0) for set comparison.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness_supports(
    const std::vector<OutRegularWitness>& witnesses, int row_count) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> supports;
  for (const OutRegularWitness& witness : witnesses) {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (VertexId v : witness.members) {
      if (v < row_count) {
        rows.push_back(static_cast<std::size_t>(v));
      } else {
        cols.push_back(static_cast<std::size_t>(v - row_count));
      }
    }
    supports.emplace_back(std::move(rows), std::move(cols));
  }
  std::sort(supports.begin(), supports.end());
  return supports;
}

std::string serialize_game(const BimatrixGame& game) {
  std::ostringstream out;
  write_game(game, out);
  return out.str();
}

bool check_supports_equilibrium(const BimatrixGame& game, const std::vector<VertexId>& subset,
                                int row_count) {
  SupportPair pair;
  for (VertexId v : subset) {
    if (v < row_count) {
      pair.row_support.push_back(static_cast<std::size_t>(v));
    } else {
      pair.col_support.push_back(static_cast<std::size_t>(v - row_count));
    }
  }
  return check_uniform_equilibrium(game, pair);
}

}  // namespace

BimatrixGame generate_random_game(const RandomGameSpec& spec) {
  if (spec.max_rows < 1 || spec.max_cols < 1) {
    throw std::invalid_argument("size bounds must be positive");
  }
  if (spec.row_classes.empty() || spec.col_classes.empty()) {
    throw std::invalid_argument("weight classes must be non-empty");
  }
  if (!(spec.density > 0.0) || spec.density > 1.0) {
    throw std::invalid_argument("density must be in (0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  auto pick = [&rng](std::uint64_t bound) { return rng() % bound; };
  // 53-bit threshold comparison keeps the draw exact and platform-stable.
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(spec.density * 9007199254740992.0);
  auto hit = [&]() { return (rng() >> 11) < threshold; };

  const std::size_t rows = 1 + pick(static_cast<std::uint64_t>(spec.max_rows));
  const std::size_t cols = 1 + pick(static_cast<std::uint64_t>(spec.max_cols));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RationalMatrix row_payoff(rows, cols);
    RationalMatrix col_payoff(rows, cols);
    bool row_positive = false;
    bool col_positive = false;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (hit()) {
          row_payoff(i, j) = spec.row_classes[pick(spec.row_classes.size())];
          row_positive = true;
        }
        if (hit()) {
          col_payoff(i, j) = spec.col_classes[pick(spec.col_classes.size())];
          col_positive = true;
        }
      }
    }
    if (row_positive && col_positive) {
      return make_game(std::move(row_payoff), std::move(col_payoff));
    }
  }
  throw std::logic_error("random game regeneration did not converge");
}

bool VerificationReport::passed() const {
  return std::none_of(stages.begin(), stages.end(), [](const StageOutcome& stage) {
    return stage.status == StageStatus::Fail;
  });
}

StageOutcome& VerificationReport::add(std::string name) {
  stages.push_back(StageOutcome{std::move(name), StageStatus::Pass, ""});
  return stages.back();
}

void write_report_text(const VerificationReport& report, std::ostream& output) {
  output << "instance: " << report.instance << "\n";
  for (const StageOutcome& stage : report.stages) {
    output << "stage " << stage.name << ": " << status_name(stage.status);
    if (!stage.detail.empty()) output << "  " << stage.detail;
    output << "\n";
  }
  if (!report.counterexample.empty()) {
    output << "counterexample:\n" << report.counterexample;
    if (report.counterexample.back() != '\n') output << "\n";
  }
  output << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
}

void write_report_kv(const VerificationReport& report, std::ostream& output) {
  output << "instance=" << one_line(report.instance) << "\n";
  for (const StageOutcome& stage : report.stages) {
    output << "stage." << stage.name << "=" << status_name(stage.status) << "\n";
    if (!stage.detail.empty()) {
      output << "stage." << stage.name << ".detail=" << one_line(stage.detail) << "\n";
    }
  }
  if (!report.counterexample.empty()) {
    output << "counterexample=" << one_line(report.counterexample) << "\n";
  }
  output << "result=" << (report.passed() ? "pass" : "fail") << "\n";
}

VerificationReport crosscheck_equivalence(const RandomGameSpec& spec, int trials) {
  if (spec.max_rows > 5 || spec.max_cols > 5) {
    throw std::invalid_argument("crosscheck requires size bounds of at most 5");
  }
  VerificationReport report;
  std::ostringstream name;
  name << "equivalence crosscheck, " << trials << " trials, seed " << spec.seed;
  report.instance = name.str();

  StageOutcome& stage = report.add("equivalence");
  int agreements = 0;
  for (int trial = 0; trial < trials; ++trial) {
    RandomGameSpec trial_spec = spec;
    trial_spec.seed = spec.seed + static_cast<std::uint64_t>(trial);
    BimatrixGame game = generate_random_game(trial_spec);

    UniformEquilibria from_game =
        enumerate_uniform_equilibria(game, std::uint64_t{1} << 62);
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> game_side;
    for (const SupportPair& pair : from_game.pairs) {
      game_side.emplace_back(pair.row_support, pair.col_support);
    }
    std::sort(game_side.begin(), game_side.end());

    WeightedBipartiteDigraph graph = game_to_graph(game);
    auto graph_side =
        witness_supports(enumerate_witnesses_naive(graph), graph.row_count());

    if (game_side != graph_side) {
      stage.status = StageStatus::Fail;
      std::ostringstream detail;
      detail << "trial " << trial << " (seed " << trial_spec.seed << ") disagrees: "
             << game_side.size() << " equilibria vs " << graph_side.size() << " witnesses";
      stage.detail = detail.str();
      report.counterexample = serialize_game(game);
      return report;
    }
    ++agreements;
  }
  stage.detail = std::to_string(agreements) + "/" + std::to_string(trials) + " trials agree";
  return report;
}

namespace {

struct CompiledInstance {
  CnfFormula normalized;
  NormalizationReport edits;
  ReductionGraph rg;
};

CompiledInstance compile_stage(const CnfFormula& formula, VerificationReport& report) {
  CompiledInstance instance;
  auto [normalized, edits] = normalize(formula);
  instance.normalized = std::move(normalized);
  instance.edits = std::move(edits);
  {
    StageOutcome& stage = report.add("normalize");
    std::ostringstream detail;
    detail << "n=" << instance.normalized.num_vars << " m=" << instance.normalized.clauses.size()
           << " edits=" << instance.edits.edits.size();
    stage.detail = detail.str();
  }

  instance.rg = build_reduction_graph(instance.normalized);
  const ReductionGraph& rg = instance.rg;
  StageOutcome& stage = report.add("compile");
  const int n = rg.num_vars;
  const int m = rg.num_clauses;
  const int expected_vertices = 6 * n + 7 * m + 1;
  const std::size_t expected_arcs = static_cast<std::size_t>(8 * n + 10 * m);
  WeightClassProfile profile = weight_class_profile(graph_to_game(rg.graph));
  bool counts_ok = rg.graph.vertex_count() == expected_vertices &&
                   rg.graph.arc_count() == expected_arcs;
  bool classes_ok = profile.rho_row == 1 && profile.class_row.contains(Rational(1)) &&
                    profile.rho_col == 2 && profile.class_col.contains(Rational(1)) &&
                    profile.class_col.contains(rg.heavy_weight());
  bool connected_ok = is_strongly_connected(rg.graph);
  std::ostringstream detail;
  detail << "|V|=" << rg.graph.vertex_count() << " |E|=" << rg.graph.arc_count() << " heavy="
         << rg.heavy_weight() << " classes=(" << profile.rho_row << "," << profile.rho_col
         << ") strongly-connected=" << (connected_ok ? "yes" : "no");
  stage.detail = detail.str();
  if (!counts_ok || !classes_ok || !connected_ok) stage.status = StageStatus::Fail;
  return instance;
}

}  // namespace

VerificationReport end_to_end(const CnfFormula& formula, const PipelineBudget& budget) {
  VerificationReport report;
  report.instance = "end-to-end pipeline";

  CompiledInstance instance = compile_stage(formula, report);
  const ReductionGraph& rg = instance.rg;
  const int n = rg.num_vars;
  const int m = rg.num_clauses;

  SatResult sat = brute_force_sat(instance.normalized, budget.sat_max_vars);
  {
    StageOutcome& stage = report.add("sat-oracle");
    if (sat.status == SatStatus::BudgetExhausted) {
      stage.status = StageStatus::Skipped;
      stage.detail = "too many variables for the exhaustive oracle";
    } else {
      stage.detail = sat.status == SatStatus::Satisfiable ? "satisfiable" : "unsatisfiable";
    }
  }
  if (sat.status == SatStatus::BudgetExhausted) return report;

  if (sat.status == SatStatus::Unsatisfiable) {
    StageOutcome& stage = report.add("finder-source");
    FindResult found = find_undominated_out_regular(rg.graph, budget.finder_nodes);
    if (found.status == FindStatus::BudgetExhausted) {
      stage.status = StageStatus::Skipped;
      stage.detail = "finder budget exhausted after " + std::to_string(found.nodes_expanded) +
                     " nodes";
    } else if (found.status == FindStatus::Found) {
      stage.status = StageStatus::Fail;
      stage.detail = "witness found on an unsatisfiable instance";
      std::ostringstream out;
      write_witness(rg.graph, found.witness->members, out);
      report.counterexample = out.str();
    } else {
      stage.detail = "no witness, " + std::to_string(found.nodes_expanded) + " nodes";
    }
    return report;
  }

  const Assignment& assignment = *sat.assignment;
  std::vector<VertexId> witness = assignment_to_witness(rg, assignment);
  {
    StageOutcome& stage = report.add("witness-build");
    const std::size_t expected = static_cast<std::size_t>(1 + 3 * m + 4 * n);
    stage.detail = "|S|=" + std::to_string(witness.size());
    if (witness.size() != expected) stage.status = StageStatus::Fail;
  }
  {
    StageOutcome& stage = report.add("witness-check-source");
    WitnessCheck verdict = check_witness(rg.graph, witness);
    bool ok = verdict.ok && verdict.regular->first == Rational(1) &&
              verdict.regular->second == rg.heavy_weight();
    stage.detail = verdict.describe(rg.graph);
    if (!ok) stage.status = StageStatus::Fail;
  }
  {
    StageOutcome& stage = report.add("equilibrium-source");
    BimatrixGame game = graph_to_game(rg.graph);
    bool ok = check_supports_equilibrium(game, witness, rg.graph.row_count());
    stage.detail = ok ? "uniform supports are a Nash equilibrium" : "not an equilibrium";
    if (!ok) stage.status = StageStatus::Fail;
  }

  GridEmbedding embedding = route_arcs(rg);
  {
    StageOutcome& stage = report.add("route");
    stage.detail = std::to_string(embedding.routed.size()) + " routed arcs";
    if (embedding.routed.size() != static_cast<std::size_t>(3 * m)) {
      stage.status = StageStatus::Fail;
    }
  }
  std::vector<Crossing> crossings = detect_crossings(embedding);
  {
    StageOutcome& stage = report.add("crossings");
    std::size_t oracle = count_crossings_bruteforce(embedding);
    std::ostringstream detail;
    detail << crossings.size() << " crossings, oracle " << oracle;
    stage.detail = detail.str();
    if (crossings.size() != oracle) stage.status = StageStatus::Fail;
  }

  PlanarizedReduction pl = insert_gadgets(rg, embedding);
  {
    StageOutcome& stage = report.add("planarize");
    const long long gadget_size = 4LL * (m + n) + 7;
    const long long expected =
        rg.graph.vertex_count() + gadget_size * static_cast<long long>(crossings.size());
    bool ok = pl.graph.vertex_count() == expected && is_planar(pl.graph);
    std::ostringstream detail;
    detail << "|V(H)|=" << pl.graph.vertex_count() << " planar="
           << (is_planar(pl.graph) ? "yes" : "no");
    stage.detail = detail.str();
    if (!ok) stage.status = StageStatus::Fail;
  }

  std::vector<VertexId> lifted;
  {
    StageOutcome& stage = report.add("lift");
    try {
      lifted = lift_witness(rg, pl, witness);
      WitnessCheck verdict = check_witness(pl.graph, lifted);
      bool ok = verdict.ok && verdict.regular->first == Rational(1) &&
                verdict.regular->second == rg.heavy_weight();
      stage.detail = "|T|=" + std::to_string(lifted.size()) + " " + verdict.describe(pl.graph);
      if (!ok) stage.status = StageStatus::Fail;
    } catch (const std::exception& error) {
      stage.status = StageStatus::Fail;
      stage.detail = error.what();
      return report;
    }
  }
  {
    StageOutcome& stage = report.add("equilibrium-planar");
    BimatrixGame game = graph_to_game(pl.graph);
    bool ok = check_supports_equilibrium(game, lifted, pl.graph.row_count());
    stage.detail = ok ? "uniform supports are a Nash equilibrium" : "not an equilibrium";
    if (!ok) stage.status = StageStatus::Fail;
  }
  {
    StageOutcome& stage = report.add("project");
    try {
      std::vector<VertexId> projected = project_witness(rg, pl, lifted);
      bool ok = projected == witness;
      stage.detail = ok ? "project(lift(S)) = S" : "projection differs from the source witness";
      if (!ok) stage.status = StageStatus::Fail;
      StageOutcome& roundtrip = report.add("assignment-roundtrip");
      Assignment recovered = witness_to_assignment(rg, projected);
      bool same = recovered == assignment && eval_formula(instance.normalized, recovered);
      roundtrip.detail = same ? "assignment recovered exactly" : "assignment mismatch";
      if (!same) roundtrip.status = StageStatus::Fail;
    } catch (const std::exception& error) {
      stage.status = StageStatus::Fail;
      stage.detail = error.what();
    }
  }
  return report;
}

VerificationReport theorem3_forward_report(const CnfFormula& formula,
                                           const PipelineBudget& budget) {
  VerificationReport report;
  report.instance = "forward witness map over all satisfying assignments";
  CompiledInstance instance = compile_stage(formula, report);
  const ReductionGraph& rg = instance.rg;

  StageOutcome& stage = report.add("assignments");
  if ((std::uint64_t{1} << instance.normalized.num_vars) >
      static_cast<std::uint64_t>(budget.max_assignments)) {
    stage.status = StageStatus::Skipped;
    stage.detail = "assignment space exceeds budget";
    return report;
  }
  std::vector<Assignment> satisfying = all_satisfying_assignments(instance.normalized);
  BimatrixGame game = graph_to_game(rg.graph);
  int checked = 0;
  for (const Assignment& assignment : satisfying) {
    std::vector<VertexId> witness = assignment_to_witness(rg, assignment);
    WitnessCheck verdict = check_witness(rg.graph, witness);
    bool ok = verdict.ok && verdict.regular->first == Rational(1) &&
              verdict.regular->second == rg.heavy_weight() &&
              witness.size() == static_cast<std::size_t>(1 + 3 * rg.num_clauses + 4 * rg.num_vars) &&
              check_supports_equilibrium(game, witness, rg.graph.row_count());
    if (!ok) {
      stage.status = StageStatus::Fail;
      stage.detail = "assignment " + std::to_string(checked) + " failed: " +
                     verdict.describe(rg.graph);
      return report;
    }
    ++checked;
  }
  stage.detail = std::to_string(checked) + " satisfying assignments verified (alpha,beta)=(1," +
                 to_string(rg.heavy_weight()) + ")";
  if (satisfying.empty()) {
    stage.detail = "no satisfying assignments";
    StageOutcome& converse = report.add("finder-source");
    FindResult found = find_undominated_out_regular(rg.graph, budget.finder_nodes);
    if (found.status == FindStatus::BudgetExhausted) {
      converse.status = StageStatus::Skipped;
      converse.detail =
          "finder budget exhausted after " + std::to_string(found.nodes_expanded) + " nodes";
    } else if (found.status == FindStatus::Found) {
      converse.status = StageStatus::Fail;
      converse.detail = "witness found on an unsatisfiable instance";
    } else {
      converse.detail = "no witness, " + std::to_string(found.nodes_expanded) + " nodes";
    }
  }
  return report;
}

VerificationReport lemma4_report(const CnfFormula& formula, const PipelineBudget& budget) {
  VerificationReport report;
  report.instance = "planarization equivalence over all satisfying assignments";
  CompiledInstance instance = compile_stage(formula, report);
  const ReductionGraph& rg = instance.rg;
  const int n = rg.num_vars;
  const int m = rg.num_clauses;

  GridEmbedding embedding = route_arcs(rg);
  std::vector<Crossing> crossings = detect_crossings(embedding);
  {
    StageOutcome& stage = report.add("crossings");
    std::size_t oracle = count_crossings_bruteforce(embedding);
    stage.detail = std::to_string(crossings.size()) + " crossings, oracle " +
                   std::to_string(oracle);
    if (crossings.size() != oracle) stage.status = StageStatus::Fail;
  }
  PlanarizedReduction pl = insert_gadgets(rg, embedding);
  {
    StageOutcome& stage = report.add("planarize");
    const long long gadget_size = 4LL * (m + n) + 7;
    bool accounting = pl.graph.vertex_count() ==
                      rg.graph.vertex_count() + gadget_size * static_cast<long long>(crossings.size());
    bool planar = is_planar(pl.graph);
    stage.detail = "|V(H)|=" + std::to_string(pl.graph.vertex_count()) +
                   " planar=" + (planar ? "yes" : "no");
    if (!accounting || !planar) stage.status = StageStatus::Fail;
  }

  StageOutcome& stage = report.add("lift-project");
  if ((std::uint64_t{1} << instance.normalized.num_vars) >
      static_cast<std::uint64_t>(budget.max_assignments)) {
    stage.status = StageStatus::Skipped;
    stage.detail = "assignment space exceeds budget";
    return report;
  }
  std::vector<Assignment> satisfying = all_satisfying_assignments(instance.normalized);
  BimatrixGame planar_game = graph_to_game(pl.graph);
  int checked = 0;
  for (const Assignment& assignment : satisfying) {
    std::vector<VertexId> witness = assignment_to_witness(rg, assignment);
    try {
      std::vector<VertexId> lifted = lift_witness(rg, pl, witness);
      bool ok = is_undominated_out_regular(pl.graph, lifted) &&
                project_witness(rg, pl, lifted) == witness &&
                eval_formula(instance.normalized, witness_to_assignment(rg, witness)) &&
                check_supports_equilibrium(planar_game, lifted, pl.graph.row_count());
      if (!ok) {
        stage.status = StageStatus::Fail;
        stage.detail = "round trip failed for assignment " + std::to_string(checked);
        return report;
      }
    } catch (const std::exception& error) {
      stage.status = StageStatus::Fail;
      stage.detail = error.what();
      return report;
    }
    ++checked;
  }
  stage.detail = std::to_string(checked) + " satisfying assignments round-tripped";
  if (satisfying.empty()) stage.detail = "no satisfying assignments (vacuous)";
  return report;
}

}  // namespace uor
