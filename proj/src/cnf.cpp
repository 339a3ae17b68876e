#include "uor/cnf.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace uor {

namespace {

bool parse_int(const std::string& token, long& value) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  try {
    value = std::stol(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& input) {
  CnfFormula formula;
  bool header_seen = false;
  long declared_clauses = 0;
  Clause current;
  bool in_clause = false;
  int line_number = 0;
  int last_content_line = 0;

  std::string line;
  while (std::getline(input, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line
    if (first == "c" || first.starts_with("c")) continue;
    if (first == "p") {
      if (header_seen) throw ParseError(line_number, "duplicate header");
      std::string kind;
      long vars = 0;
      long clauses = 0;
      if (!(tokens >> kind >> vars >> clauses) || kind != "cnf" || vars < 1 || clauses < 1) {
        throw ParseError(line_number, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) throw ParseError(line_number, "trailing tokens after header");
      formula.num_vars = static_cast<int>(vars);
      declared_clauses = clauses;
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError(line_number, "clause before 'p cnf' header");
    last_content_line = line_number;
    std::string token = first;
    do {
      long value = 0;
      if (!parse_int(token, value)) {
        throw ParseError(line_number, "not an integer: '" + token + "'");
      }
      if (value == 0) {
        if (!in_clause) throw ParseError(line_number, "empty clause");
        formula.clauses.push_back(current);
        current.clear();
        in_clause = false;
      } else {
        long var = value < 0 ? -value : value;
        if (var > formula.num_vars) {
          throw ParseError(line_number, "variable index out of range: " + token);
        }
        current.push_back(Literal{static_cast<int>(var - 1), value > 0});
        in_clause = true;
      }
    } while (tokens >> token);
  }

  if (!header_seen) throw ParseError(line_number, "missing 'p cnf' header");
  if (in_clause) throw ParseError(last_content_line, "clause not terminated by 0");
  if (static_cast<long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError(last_content_line == 0 ? line_number : last_content_line,
                     "clause count does not match header");
  }
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream stream(text);
  return parse_dimacs(stream);
}

bool eval_clause(const Clause& clause, const Assignment& assignment) {
  for (const Literal& lit : clause) {
    if (assignment.bits.at(lit.var) == lit.positive) return true;
  }
  return false;
}

bool eval_formula(const CnfFormula& formula, const Assignment& assignment) {
  if (static_cast<int>(assignment.bits.size()) != formula.num_vars) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  for (const Clause& clause : formula.clauses) {
    if (!eval_clause(clause, assignment)) return false;
  }
  return true;
}

bool is_normalized(const CnfFormula& formula) {
  if (formula.num_vars < 1 || formula.clauses.empty()) return false;
  std::vector<char> seen_pos(formula.num_vars, 0);
  std::vector<char> seen_neg(formula.num_vars, 0);
  for (const Clause& clause : formula.clauses) {
    if (clause.size() != 3) return false;
    for (const Literal& lit : clause) {
      (lit.positive ? seen_pos : seen_neg)[lit.var] = 1;
    }
  }
  for (int i = 0; i < formula.num_vars; ++i) {
    if (!seen_pos[i] || !seen_neg[i]) return false;
  }
  return true;
}

std::string NormalizationReport::to_text() const {
  std::ostringstream out;
  out << "normalize: " << edits.size() << (edits.size() == 1 ? " edit\n" : " edits\n");
  for (const NormalizationEdit& edit : edits) {
    if (edit.kind == NormalizationEdit::Kind::PadClause) {
      out << "pad clause " << edit.clause + 1 << " to three literals\n";
    } else {
      out << "cover variable " << edit.variable + 1 << " via fresh variable "
          << edit.fresh_var + 1 << " (clauses " << edit.first_new_clause + 1 << ","
          << edit.first_new_clause + 2 << ")\n";
    }
  }
  return out.str();
}

std::pair<CnfFormula, NormalizationReport> normalize(const CnfFormula& formula) {
  if (formula.clauses.empty()) {
    throw std::invalid_argument("cannot normalize a formula with zero clauses");
  }
  if (formula.num_vars < 1) throw std::invalid_argument("formula must have variables");
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      if (lit.var < 0 || lit.var >= formula.num_vars) {
        throw std::invalid_argument("literal references a variable outside the declared range");
      }
    }
    if (clause.size() > 3) {
      throw std::invalid_argument("clause has more than three literals; input must be 3-CNF");
    }
    if (clause.empty()) throw std::invalid_argument("empty clause");
  }

  CnfFormula result = formula;
  NormalizationReport report;

  for (std::size_t j = 0; j < result.clauses.size(); ++j) {
    Clause& clause = result.clauses[j];
    if (clause.size() < 3) {
      Literal first = clause.front();
      while (clause.size() < 3) clause.insert(clause.begin(), first);
      report.edits.push_back(NormalizationEdit{NormalizationEdit::Kind::PadClause,
                                               static_cast<int>(j), -1, -1, -1});
    }
  }

  const int original_vars = result.num_vars;
  std::vector<char> seen_pos(original_vars, 0);
  std::vector<char> seen_neg(original_vars, 0);
  for (const Clause& clause : result.clauses) {
    for (const Literal& lit : clause) {
      (lit.positive ? seen_pos : seen_neg)[lit.var] = 1;
    }
  }
  for (int i = 0; i < original_vars; ++i) {
    if (seen_pos[i] && seen_neg[i]) continue;
    int fresh = result.num_vars++;
    int first_new_clause = static_cast<int>(result.clauses.size());
    result.clauses.push_back(Clause{{i, true}, {i, false}, {fresh, true}});
    result.clauses.push_back(Clause{{i, true}, {i, false}, {fresh, false}});
    report.edits.push_back(NormalizationEdit{NormalizationEdit::Kind::CoverVariable, -1, i,
                                             fresh, first_new_clause});
  }

  return {std::move(result), std::move(report)};
}

SatResult brute_force_sat(const CnfFormula& formula, int max_vars) {
  if (formula.num_vars > max_vars) {
    return SatResult{SatStatus::BudgetExhausted, std::nullopt};
  }
  const std::uint64_t limit = std::uint64_t{1} << formula.num_vars;
  Assignment assignment;
  assignment.bits.resize(formula.num_vars);
  for (std::uint64_t word = 0; word < limit; ++word) {
    for (int i = 0; i < formula.num_vars; ++i) {
      assignment.bits[i] = (word >> i) & 1;
    }
    if (eval_formula(formula, assignment)) {
      return SatResult{SatStatus::Satisfiable, assignment};
    }
  }
  return SatResult{SatStatus::Unsatisfiable, std::nullopt};
}

std::vector<Assignment> all_satisfying_assignments(const CnfFormula& formula, int max_vars) {
  if (formula.num_vars > max_vars) {
    throw std::invalid_argument("too many variables for exhaustive assignment scan");
  }
  std::vector<Assignment> found;
  const std::uint64_t limit = std::uint64_t{1} << formula.num_vars;
  Assignment assignment;
  assignment.bits.resize(formula.num_vars);
  for (std::uint64_t word = 0; word < limit; ++word) {
    for (int i = 0; i < formula.num_vars; ++i) {
      assignment.bits[i] = (word >> i) & 1;
    }
    if (eval_formula(formula, assignment)) found.push_back(assignment);
  }
  return found;
}

}  // namespace uor
