#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uor/cnf.hpp"
#include "uor/game.hpp"
#include "uor/planarize.hpp"

namespace uor {

/// Seeded generator spec; entries are drawn from {0} ∪ class with the given
/// density, per side, and regenerated until both matrices have a positive
/// entry.
struct RandomGameSpec {
  int max_rows = 4;
  int max_cols = 4;
  std::vector<Rational> row_classes{Rational(1)};
  std::vector<Rational> col_classes{Rational(1)};
  double density = 0.6;
  std::uint64_t seed = 0;
};

BimatrixGame generate_random_game(const RandomGameSpec& spec);

enum class StageStatus { Pass, Fail, Skipped };

struct StageOutcome {
  std::string name;
  StageStatus status = StageStatus::Pass;
  std::string detail;
};

/// Aggregated verdicts of one verification pipeline. A report passes iff no
/// executed stage failed; skipped stages (budget exhaustion) never fail.
struct VerificationReport {
  std::string instance;
  std::vector<StageOutcome> stages;
  std::string counterexample;

  bool passed() const;
  StageOutcome& add(std::string name);
};

void write_report_text(const VerificationReport& report, std::ostream& output);
void write_report_kv(const VerificationReport& report, std::ostream& output);

/// For `trials` seeded games: the uniform-equilibrium support pairs found by
/// exhaustive game-side enumeration must equal the undominated out-regular
/// subsets found by exhaustive graph-side checking. The first disagreement
/// is serialized into the report.
VerificationReport crosscheck_equivalence(const RandomGameSpec& spec, int trials);

struct PipelineBudget {
  std::uint64_t finder_nodes = 1u << 22;
  int sat_max_vars = 25;
  int max_assignments = 4096;  // exhaustive-assignment suites
};

/// Full pipeline on one formula: normalize, compile, SAT oracle, then either
/// the satisfiable path (witness build/check, equilibrium checks on both
/// compiled games, planarization, lift/project round trip) or the
/// unsatisfiable path (budgeted finder must report none). Budget exhaustion
/// marks stages skipped, never failed.
VerificationReport end_to_end(const CnfFormula& formula, const PipelineBudget& budget = {});

/// Forward direction over every satisfying assignment: each derived witness
/// must pass the checker with (alpha, beta) = (1, m+n) and its supports must
/// be a uniform Nash equilibrium of the compiled game.
VerificationReport theorem3_forward_report(const CnfFormula& formula,
                                           const PipelineBudget& budget = {});

/// Planarization equivalence over every satisfying assignment: lifted
/// witnesses pass on H, projection is the exact inverse, projected witnesses
/// yield satisfying assignments; plus planarity and gadget accounting.
VerificationReport lemma4_report(const CnfFormula& formula, const PipelineBudget& budget = {});

}  // namespace uor
