#include "uor/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace uor {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_supports(const BimatrixGame& game, const SupportPair& supports) {
  require(!supports.row_support.empty(), "row support must be non-empty");
  require(!supports.col_support.empty(), "col support must be non-empty");
  for (std::size_t i : supports.row_support) require(i < game.rows(), "row support out of range");
  for (std::size_t j : supports.col_support) require(j < game.cols(), "col support out of range");
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1) out.push_back(k);
  }
  return out;
}

}  // namespace

void validate_game(const BimatrixGame& game) {
  require(!game.row_strategies.empty(), "game needs at least one row strategy");
  require(!game.col_strategies.empty(), "game needs at least one col strategy");
  require(game.payoff_row.rows() == game.rows() && game.payoff_row.cols() == game.cols(),
          "row payoff matrix dimensions do not match strategy sets");
  require(game.payoff_col.rows() == game.rows() && game.payoff_col.cols() == game.cols(),
          "col payoff matrix dimensions do not match strategy sets");
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      require(game.payoff_row(i, j) >= 0 && game.payoff_col(i, j) >= 0,
              "payoffs must be non-negative");
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : game.row_strategies) {
    require(seen.insert(name).second, "duplicate row strategy identifier");
  }
  for (const auto& name : game.col_strategies) {
    require(seen.insert(name).second, "duplicate or row-colliding col strategy identifier");
  }
}

BimatrixGame make_game(RationalMatrix payoff_row, RationalMatrix payoff_col) {
  BimatrixGame game;
  for (std::size_t i = 0; i < payoff_row.rows(); ++i) {
    game.row_strategies.push_back("r" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < payoff_row.cols(); ++j) {
    game.col_strategies.push_back("c" + std::to_string(j + 1));
  }
  game.payoff_row = std::move(payoff_row);
  game.payoff_col = std::move(payoff_col);
  validate_game(game);
  return game;
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0) out.push_back(i);
  }
  return out;
}

void validate_strategy(const MixedStrategy& strategy) {
  Rational total = 0;
  bool any_positive = false;
  for (const Rational& w : strategy.weights) {
    require(w >= 0, "strategy weights must be non-negative");
    if (w > 0) any_positive = true;
    total += w;
  }
  require(total == 1, "strategy weights must sum to exactly 1");
  require(any_positive, "strategy support must be non-empty");
}

MixedStrategy uniform_strategy(Side side, const std::vector<std::size_t>& support,
                               std::size_t side_size) {
  require(!support.empty(), "uniform strategy needs a non-empty support");
  MixedStrategy strategy;
  strategy.owner = side;
  strategy.weights.assign(side_size, Rational(0));
  Rational share(1, static_cast<unsigned>(support.size()));
  for (std::size_t i : support) {
    require(i < side_size, "support member out of range");
    strategy.weights[i] = share;
  }
  return strategy;
}

std::pair<Rational, Rational> expected_payoffs(const BimatrixGame& game,
                                               const MixedStrategy& row_strategy,
                                               const MixedStrategy& col_strategy) {
  require(row_strategy.weights.size() == game.rows(), "row strategy size mismatch");
  require(col_strategy.weights.size() == game.cols(), "col strategy size mismatch");
  Rational row_value = 0;
  Rational col_value = 0;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    if (row_strategy.weights[i] == 0) continue;
    Rational row_line = 0;
    Rational col_line = 0;
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (col_strategy.weights[j] == 0) continue;
      row_line += game.payoff_row(i, j) * col_strategy.weights[j];
      col_line += game.payoff_col(i, j) * col_strategy.weights[j];
    }
    row_value += row_strategy.weights[i] * row_line;
    col_value += row_strategy.weights[i] * col_line;
  }
  return {row_value, col_value};
}

bool is_nash_equilibrium(const BimatrixGame& game, const MixedStrategy& row_strategy,
                         const MixedStrategy& col_strategy) {
  require(row_strategy.weights.size() == game.rows(), "row strategy size mismatch");
  require(col_strategy.weights.size() == game.cols(), "col strategy size mismatch");
  auto [row_value, col_value] = expected_payoffs(game, row_strategy, col_strategy);
  for (std::size_t i = 0; i < game.rows(); ++i) {
    Rational deviation = 0;
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (col_strategy.weights[j] == 0) continue;
      deviation += game.payoff_row(i, j) * col_strategy.weights[j];
    }
    if (deviation > row_value) return false;
  }
  for (std::size_t j = 0; j < game.cols(); ++j) {
    Rational deviation = 0;
    for (std::size_t i = 0; i < game.rows(); ++i) {
      if (row_strategy.weights[i] == 0) continue;
      deviation += game.payoff_col(i, j) * row_strategy.weights[i];
    }
    if (deviation > col_value) return false;
  }
  return true;
}

bool check_uniform_equilibrium(const BimatrixGame& game, const SupportPair& supports) {
  check_supports(game, supports);
  MixedStrategy row = uniform_strategy(Side::Row, supports.row_support, game.rows());
  MixedStrategy col = uniform_strategy(Side::Col, supports.col_support, game.cols());
  return is_nash_equilibrium(game, row, col);
}

UniformEquilibria enumerate_uniform_equilibria(const BimatrixGame& game,
                                               std::uint64_t pair_budget) {
  validate_game(game);
  require(game.rows() < 63 && game.cols() < 63, "strategy sets too large to enumerate");
  UniformEquilibria result;
  const std::uint64_t row_masks = (std::uint64_t{1} << game.rows()) - 1;
  const std::uint64_t col_masks = (std::uint64_t{1} << game.cols()) - 1;
  for (std::uint64_t rm = 1; rm <= row_masks; ++rm) {
    for (std::uint64_t cm = 1; cm <= col_masks; ++cm) {
      if (result.pairs_examined >= pair_budget) {
        result.complete = false;
        return result;
      }
      ++result.pairs_examined;
      SupportPair pair{mask_to_indices(rm), mask_to_indices(cm)};
      if (check_uniform_equilibrium(game, pair)) {
        result.pairs.push_back(std::move(pair));
      }
    }
  }
  return result;
}

WeightClassProfile weight_class_profile(const BimatrixGame& game) {
  validate_game(game);
  WeightClassProfile profile;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (game.payoff_row(i, j) != 0) profile.class_row.insert(game.payoff_row(i, j));
      if (game.payoff_col(i, j) != 0) profile.class_col.insert(game.payoff_col(i, j));
    }
  }
  profile.rho_row = profile.class_row.size();
  profile.rho_col = profile.class_col.size();
  return profile;
}

}  // namespace uor
