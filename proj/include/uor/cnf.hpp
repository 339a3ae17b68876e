#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uor/rational.hpp"

namespace uor {

/// 0-based variable index plus polarity.
struct Literal {
  int var = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

/// CNF formula as parsed; clause arity is only pinned to exactly three (and
/// full literal coverage) after normalize().
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

struct Assignment {
  std::vector<bool> bits;

  bool operator==(const Assignment&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

/// DIMACS CNF: 'c' comments, one 'p cnf <vars> <clauses>' header,
/// whitespace-separated literals with 0 terminators. Clause count must match
/// the header. No normalization is applied.
CnfFormula parse_dimacs(std::istream& input);
CnfFormula parse_dimacs(const std::string& text);

bool eval_clause(const Clause& clause, const Assignment& assignment);
bool eval_formula(const CnfFormula& formula, const Assignment& assignment);

/// True when every clause has exactly three literals and each of the 2n
/// literals occurs in at least one clause.
bool is_normalized(const CnfFormula& formula);

struct NormalizationEdit {
  enum class Kind { PadClause, CoverVariable };
  Kind kind;
  int clause = -1;        // PadClause: clause index (0-based) that was padded
  int variable = -1;      // CoverVariable: variable with a missing literal
  int fresh_var = -1;     // CoverVariable: the variable introduced
  int first_new_clause = -1;
};

struct NormalizationReport {
  std::vector<NormalizationEdit> edits;

  std::string to_text() const;
};

/// Produces an equisatisfiable formula meeting is_normalized():
///  - clauses shorter than three literals are padded by repeating their
///    first literal;
///  - for each variable with a literal absent from every clause, a fresh
///    variable t is added along with the tautological clauses
///    (x ∨ x̄ ∨ t) and (x ∨ x̄ ∨ t̄).
/// Clauses with more than three literals are rejected, as is an empty
/// clause list.
std::pair<CnfFormula, NormalizationReport> normalize(const CnfFormula& formula);

enum class SatStatus { Satisfiable, Unsatisfiable, BudgetExhausted };

struct SatResult {
  SatStatus status = SatStatus::Unsatisfiable;
  std::optional<Assignment> assignment;  // least satisfying assignment
};

/// Exhaustive oracle. Assignments are scanned with variable 1 as the least
/// significant bit, so the reported assignment is the least in that binary
/// order. Formulas with more than max_vars variables yield BudgetExhausted.
SatResult brute_force_sat(const CnfFormula& formula, int max_vars = 25);

/// All satisfying assignments in scan order; same variable cap as above.
std::vector<Assignment> all_satisfying_assignments(const CnfFormula& formula, int max_vars = 25);

}  // namespace uor
