#include <doctest.h>

#include <algorithm>
#include <random>

#include "uor/game.hpp"

using namespace uor;

namespace {

RationalMatrix matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const Rational& value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

// Identity vs anti-identity payoffs; the only uniform equilibrium is the
// full-support pair.
BimatrixGame matching_game() {
  return make_game(matrix({{1, 0}, {0, 1}}), matrix({{0, 1}, {1, 0}}));
}

// Same column payoffs but row payoffs 1 and 2; no uniform equilibrium at all.
BimatrixGame skewed_game() {
  return make_game(matrix({{1, 0}, {0, 2}}), matrix({{0, 1}, {1, 0}}));
}

BimatrixGame random_game(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix a(rows, cols);
  RationalMatrix b(rows, cols);
  auto entry = [&rng]() { return Rational(rng() % 4, 1 + rng() % 3); };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a(i, j) = entry();
      b(i, j) = entry();
    }
  }
  return make_game(std::move(a), std::move(b));
}

MixedStrategy random_strategy(std::mt19937& rng, Side side, std::size_t size) {
  std::vector<Rational> weights(size);
  Rational total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = Rational(rng() % 5);
      total += w;
    }
  }
  for (auto& w : weights) w /= total;
  return MixedStrategy{side, std::move(weights)};
}

}  // namespace

TEST_CASE("uniform strategies put exactly 1/|support| on each member") {
  MixedStrategy single = uniform_strategy(Side::Row, {0}, 3);
  CHECK(single.weights[0] == 1);
  CHECK(single.weights[1] == 0);

  MixedStrategy pair = uniform_strategy(Side::Row, {0, 2}, 3);
  CHECK(pair.weights[0] == Rational(1, 2));
  CHECK(pair.weights[1] == 0);
  CHECK(pair.weights[2] == Rational(1, 2));

  MixedStrategy triple = uniform_strategy(Side::Col, {0, 1, 2}, 3);
  for (int j = 0; j < 3; ++j) CHECK(triple.weights[j] == Rational(1, 3));

  CHECK_THROWS_AS(uniform_strategy(Side::Row, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(uniform_strategy(Side::Row, {5}, 2), std::invalid_argument);
}

TEST_CASE("expected payoffs are exact bilinear forms") {
  BimatrixGame trivial = make_game(matrix({{1}}), matrix({{1}}));
  auto [r0, c0] = expected_payoffs(trivial, uniform_strategy(Side::Row, {0}, 1),
                                   uniform_strategy(Side::Col, {0}, 1));
  CHECK(r0 == 1);
  CHECK(c0 == 1);

  BimatrixGame game = matching_game();
  auto [r, c] = expected_payoffs(game, uniform_strategy(Side::Row, {0, 1}, 2),
                                 uniform_strategy(Side::Col, {0, 1}, 2));
  CHECK(r == Rational(1, 2));
  CHECK(c == Rational(1, 2));

  MixedStrategy bad{Side::Row, {Rational(1)}};
  CHECK_THROWS_AS(expected_payoffs(game, bad, uniform_strategy(Side::Col, {0, 1}, 2)),
                  std::invalid_argument);
}

TEST_CASE("column-concentrated payoff equals the direct column average") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    BimatrixGame game = random_game(rng, 1 + rng() % 4, 1 + rng() % 4);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < game.rows(); ++i) {
      if (rng() % 2 || (support.empty() && i + 1 == game.rows())) support.push_back(i);
    }
    std::size_t j = rng() % game.cols();
    auto [row_value, col_value] =
        expected_payoffs(game, uniform_strategy(Side::Row, support, game.rows()),
                         uniform_strategy(Side::Col, {j}, game.cols()));
    (void)col_value;
    Rational direct = 0;  // independent summation over the support
    for (std::size_t i : support) direct += game.payoff_row(i, j);
    direct /= Rational(static_cast<unsigned>(support.size()));
    CHECK(row_value == direct);
  }
}

TEST_CASE("expected payoffs do not depend on summation order") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    BimatrixGame game = random_game(rng, 3, 3);
    MixedStrategy row = random_strategy(rng, Side::Row, 3);
    MixedStrategy col = random_strategy(rng, Side::Col, 3);
    auto [r, c] = expected_payoffs(game, row, col);
    Rational r_rev = 0;
    Rational c_rev = 0;
    for (std::size_t i = game.rows(); i-- > 0;) {
      for (std::size_t j = game.cols(); j-- > 0;) {
        r_rev += row.weights[i] * game.payoff_row(i, j) * col.weights[j];
        c_rev += row.weights[i] * game.payoff_col(i, j) * col.weights[j];
      }
    }
    CHECK(r == r_rev);
    CHECK(c == c_rev);
  }
}

TEST_CASE("nash equilibrium via pure deviations") {
  BimatrixGame trivial = make_game(matrix({{1}}), matrix({{1}}));
  CHECK(is_nash_equilibrium(trivial, uniform_strategy(Side::Row, {0}, 1),
                            uniform_strategy(Side::Col, {0}, 1)));

  BimatrixGame game = matching_game();
  CHECK(is_nash_equilibrium(game, uniform_strategy(Side::Row, {0, 1}, 2),
                            uniform_strategy(Side::Col, {0, 1}, 2)));
  // Pure (r1, c1): the column player deviates to c2 and gains 1 > 0.
  CHECK_FALSE(is_nash_equilibrium(game, uniform_strategy(Side::Row, {0}, 2),
                                  uniform_strategy(Side::Col, {0}, 2)));
}

TEST_CASE("mixed deviations never beat the best pure deviation") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    BimatrixGame game = random_game(rng, 3, 4);
    MixedStrategy col = random_strategy(rng, Side::Col, 4);
    Rational best_pure = 0;
    for (std::size_t i = 0; i < game.rows(); ++i) {
      Rational payoff = 0;
      for (std::size_t j = 0; j < game.cols(); ++j) {
        payoff += game.payoff_row(i, j) * col.weights[j];
      }
      if (payoff > best_pure) best_pure = payoff;
    }
    for (int sample = 0; sample < 100; ++sample) {
      MixedStrategy deviation = random_strategy(rng, Side::Row, 3);
      auto [payoff, ignored] = expected_payoffs(game, deviation, col);
      (void)ignored;
      CHECK(payoff <= best_pure);
    }
  }
}

TEST_CASE("check_uniform_equilibrium matches the definition-level examples") {
  BimatrixGame trivial = make_game(matrix({{1}}), matrix({{1}}));
  CHECK(check_uniform_equilibrium(trivial, SupportPair{{0}, {0}}));

  BimatrixGame game = matching_game();
  CHECK(check_uniform_equilibrium(game, SupportPair{{0, 1}, {0, 1}}));
  CHECK_FALSE(check_uniform_equilibrium(game, SupportPair{{0}, {0}}));
  CHECK_THROWS_AS(check_uniform_equilibrium(game, SupportPair{{}, {0}}), std::invalid_argument);
}

TEST_CASE("enumeration returns exactly the equilibrium support pairs in mask order") {
  BimatrixGame trivial = make_game(matrix({{1}}), matrix({{1}}));
  UniformEquilibria only = enumerate_uniform_equilibria(trivial, 1000);
  REQUIRE(only.pairs.size() == 1);
  CHECK(only.pairs[0] == SupportPair{{0}, {0}});
  CHECK(only.complete);

  UniformEquilibria full = enumerate_uniform_equilibria(matching_game(), 1000);
  REQUIRE(full.pairs.size() == 1);
  CHECK(full.pairs[0] == SupportPair{{0, 1}, {0, 1}});

  UniformEquilibria none = enumerate_uniform_equilibria(skewed_game(), 1000);
  CHECK(none.pairs.empty());
  CHECK(none.complete);

  UniformEquilibria cut = enumerate_uniform_equilibria(matching_game(), 3);
  CHECK_FALSE(cut.complete);
  CHECK(cut.pairs_examined == 3);
}

TEST_CASE("enumeration agrees with the per-pair check") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 15; ++trial) {
    BimatrixGame game = random_game(rng, 1 + rng() % 3, 1 + rng() % 3);
    UniformEquilibria found = enumerate_uniform_equilibria(game, std::uint64_t{1} << 20);
    REQUIRE(found.complete);
    std::size_t hits = 0;
    for (std::uint64_t rm = 1; rm < (std::uint64_t{1} << game.rows()); ++rm) {
      for (std::uint64_t cm = 1; cm < (std::uint64_t{1} << game.cols()); ++cm) {
        SupportPair pair;
        for (std::size_t k = 0; k < game.rows(); ++k) {
          if (rm & (std::uint64_t{1} << k)) pair.row_support.push_back(k);
        }
        for (std::size_t k = 0; k < game.cols(); ++k) {
          if (cm & (std::uint64_t{1} << k)) pair.col_support.push_back(k);
        }
        bool is_equilibrium = check_uniform_equilibrium(game, pair);
        bool listed =
            std::find(found.pairs.begin(), found.pairs.end(), pair) != found.pairs.end();
        CHECK(is_equilibrium == listed);
        hits += is_equilibrium;
      }
    }
    CHECK(hits == found.pairs.size());
  }
}

TEST_CASE("scaling both payoff matrices leaves equilibria unchanged") {
  std::mt19937 rng(9);
  const Rational lambda(3, 7);
  for (int trial = 0; trial < 10; ++trial) {
    BimatrixGame game = random_game(rng, 2 + rng() % 2, 2 + rng() % 2);
    BimatrixGame scaled = game;
    for (std::size_t i = 0; i < game.rows(); ++i) {
      for (std::size_t j = 0; j < game.cols(); ++j) {
        scaled.payoff_row(i, j) *= lambda;
        scaled.payoff_col(i, j) *= lambda;
      }
    }
    CHECK(enumerate_uniform_equilibria(game, std::uint64_t{1} << 20).pairs ==
          enumerate_uniform_equilibria(scaled, std::uint64_t{1} << 20).pairs);
    MixedStrategy row = random_strategy(rng, Side::Row, game.rows());
    MixedStrategy col = random_strategy(rng, Side::Col, game.cols());
    CHECK(is_nash_equilibrium(game, row, col) == is_nash_equilibrium(scaled, row, col));
  }
}

TEST_CASE("weight class profiles") {
  WeightClassProfile win_lose = weight_class_profile(matching_game());
  CHECK(win_lose.rho_row == 1);
  CHECK(win_lose.rho_col == 1);
  CHECK(win_lose.class_row == std::set<Rational>{Rational(1)});
  CHECK_FALSE(win_lose.degenerate());

  BimatrixGame mixed =
      make_game(matrix({{0, Rational(1, 2)}, {3, 0}}), matrix({{0, 2}, {2, 0}}));
  WeightClassProfile profile = weight_class_profile(mixed);
  CHECK(profile.rho_row == 2);
  CHECK(profile.rho_col == 1);
  CHECK(profile.class_row == std::set<Rational>{Rational(1, 2), Rational(3)});

  BimatrixGame zero = make_game(matrix({{0}}), matrix({{1}}));
  WeightClassProfile degenerate = weight_class_profile(zero);
  CHECK(degenerate.rho_row == 0);
  CHECK(degenerate.class_row.empty());
  CHECK(degenerate.degenerate());
}

TEST_CASE("game validation rejects malformed inputs") {
  RationalMatrix bad(1, 1);
  bad(0, 0) = Rational(-1);
  CHECK_THROWS_AS(make_game(bad, matrix({{1}})), std::invalid_argument);

  BimatrixGame dup;
  dup.row_strategies = {"s", "s"};
  dup.col_strategies = {"c"};
  dup.payoff_row = RationalMatrix(2, 1);
  dup.payoff_col = RationalMatrix(2, 1);
  CHECK_THROWS_AS(validate_game(dup), std::invalid_argument);
}
