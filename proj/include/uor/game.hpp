#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uor/rational.hpp"

namespace uor {

enum class Side { Row, Col };

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> cells_;
};

/// Two-player strategic-form game with non-negative exact-rational payoffs.
/// Strategy identifiers are kept so games converted from labeled digraphs
/// round-trip exactly.
struct BimatrixGame {
  std::vector<std::string> row_strategies;
  std::vector<std::string> col_strategies;
  RationalMatrix payoff_row;  // indexed (row strategy, col strategy)
  RationalMatrix payoff_col;

  std::size_t rows() const { return row_strategies.size(); }
  std::size_t cols() const { return col_strategies.size(); }

  bool operator==(const BimatrixGame&) const = default;
};

/// Validates dimensions, non-negativity, and duplicate-free strategy names.
/// Throws std::invalid_argument with a description of the violation.
void validate_game(const BimatrixGame& game);

/// Convenience constructor with implicit names r1..rN / c1..cM.
BimatrixGame make_game(RationalMatrix payoff_row, RationalMatrix payoff_col);

/// Probability distribution over one side's pure strategies, by position.
struct MixedStrategy {
  Side owner = Side::Row;
  std::vector<Rational> weights;

  std::vector<std::size_t> support() const;
};

/// Throws if weights are negative, do not sum to 1, or the support is empty.
void validate_strategy(const MixedStrategy& strategy);

/// Non-empty supports, stored as sorted strategy positions.
struct SupportPair {
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> col_support;

  bool operator==(const SupportPair&) const = default;
};

/// Sets of distinct nonzero payoff values per side; rho_* are their sizes.
/// A side with an all-zero matrix reports rho = 0 with an empty class, which
/// marks the game as degenerate for the digraph correspondence.
struct WeightClassProfile {
  std::size_t rho_row = 0;
  std::size_t rho_col = 0;
  std::set<Rational> class_row;
  std::set<Rational> class_col;

  bool degenerate() const { return rho_row == 0 || rho_col == 0; }
};

/// Weight 1/|support| on every support member, 0 elsewhere.
MixedStrategy uniform_strategy(Side side, const std::vector<std::size_t>& support,
                               std::size_t side_size);

/// (x_R^T M_R x_C, x_R^T M_C x_C), exact.
std::pair<Rational, Rational> expected_payoffs(const BimatrixGame& game,
                                               const MixedStrategy& row_strategy,
                                               const MixedStrategy& col_strategy);

/// Nash test via pure deviations only; sufficient because the expected payoff
/// is linear in each player's own strategy, so the best deviation is pure
/// (see docs/theory.md).
bool is_nash_equilibrium(const BimatrixGame& game, const MixedStrategy& row_strategy,
                         const MixedStrategy& col_strategy);

/// Builds the two uniform strategies over the supports and tests them.
bool check_uniform_equilibrium(const BimatrixGame& game, const SupportPair& supports);

/// Enumeration over all (2^|R|-1)(2^|C|-1) support pairs in ascending
/// (row mask, col mask) order, bit k = strategy k. `complete` is false when
/// the budget ran out before the scan finished; `pairs` then holds what was
/// found so far, which is distinguishable from a completed empty result.
struct UniformEquilibria {
  std::vector<SupportPair> pairs;
  bool complete = true;
  std::uint64_t pairs_examined = 0;
};

UniformEquilibria enumerate_uniform_equilibria(const BimatrixGame& game,
                                               std::uint64_t pair_budget);

WeightClassProfile weight_class_profile(const BimatrixGame& game);

}  // namespace uor
