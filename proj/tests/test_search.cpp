#include <doctest.h>

#include <random>

#include "uor/subgraph_search.hpp"

using namespace uor;

namespace {

WeightedBipartiteDigraph four_cycle() {
  WeightedBipartiteDigraph g({"r1", "r2"}, {"c1", "c2"});
  g.add_arc("r1", "c1", 1);
  g.add_arc("c1", "r2", 1);
  g.add_arc("r2", "c2", 1);
  g.add_arc("c2", "r1", 1);
  return g;
}

// Random bipartite digraph with weights drawn from a small rational pool.
WeightedBipartiteDigraph random_graph(std::mt19937& rng, int rows, int cols) {
  std::vector<std::string> row_names, col_names;
  for (int i = 1; i <= rows; ++i) row_names.push_back("r" + std::to_string(i));
  for (int j = 1; j <= cols; ++j) col_names.push_back("c" + std::to_string(j));
  WeightedBipartiteDigraph g(std::move(row_names), std::move(col_names));
  const Rational pool[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3)};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (rng() % 3 == 0) g.add_arc(i, rows + j, pool[rng() % 4]);
      if (rng() % 3 == 0) g.add_arc(rows + j, i, pool[rng() % 4]);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("finder returns the full cycle witness on small cycles") {
  WeightedBipartiteDigraph two({"r1"}, {"c1"});
  two.add_arc("r1", "c1", 1);
  two.add_arc("c1", "r1", 1);
  FindResult r2 = find_undominated_out_regular(two, 1u << 16);
  REQUIRE(r2.status == FindStatus::Found);
  CHECK(r2.witness->members == std::vector<VertexId>{0, 1});
  CHECK(r2.witness->alpha == 1);
  CHECK(r2.witness->beta == 1);

  FindResult r4 = find_undominated_out_regular(four_cycle(), 1u << 16);
  REQUIRE(r4.status == FindStatus::Found);
  CHECK(r4.witness->members == std::vector<VertexId>{0, 1, 2, 3});

  // No proper subset works; the naive scan of all 9 part-respecting subsets
  // agrees that the full vertex set is the only witness.
  std::vector<OutRegularWitness> all = enumerate_witnesses_naive(four_cycle());
  REQUIRE(all.size() == 1);
  CHECK(all[0].members == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("finder reports none when no witness exists") {
  // Digraph of the game M_R=[[1,0],[0,2]], M_C=[[0,1],[1,0]].
  WeightedBipartiteDigraph g({"r1", "r2"}, {"c1", "c2"});
  g.add_arc("r1", "c1", 1);
  g.add_arc("r2", "c2", 2);
  g.add_arc("c1", "r2", 1);
  g.add_arc("c2", "r1", 1);
  FindResult result = find_undominated_out_regular(g, 1u << 16);
  CHECK(result.status == FindStatus::None);
  CHECK(enumerate_witnesses_naive(g).empty());
}

TEST_CASE("budget exhaustion is distinct from none") {
  FindResult result = find_undominated_out_regular(four_cycle(), 2);
  CHECK(result.status == FindStatus::BudgetExhausted);
  CHECK(result.nodes_expanded == 2);
  CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("finder agrees with the naive oracle on random graphs") {
  std::mt19937 rng(2024);
  int found = 0;
  int none = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    WeightedBipartiteDigraph g = random_graph(rng, rows, cols);
    std::vector<OutRegularWitness> oracle = enumerate_witnesses_naive(g);
    FindResult result = find_undominated_out_regular(g, std::uint64_t{1} << 40);
    REQUIRE(result.status != FindStatus::BudgetExhausted);
    if (oracle.empty()) {
      CHECK(result.status == FindStatus::None);
      ++none;
    } else {
      REQUIRE(result.status == FindStatus::Found);
      CHECK(result.witness->members == oracle.front().members);
      CHECK(result.witness->alpha == oracle.front().alpha);
      CHECK(result.witness->beta == oracle.front().beta);
      CHECK(is_undominated_out_regular(g, result.witness->members));
      ++found;
    }
  }
  // The pool must exercise both outcomes for the agreement to mean anything.
  CHECK(found > 20);
  CHECK(none > 20);
}

TEST_CASE("witnesses on strongly connected graphs have positive member out-weights") {
  std::mt19937 rng(515);
  int strongly_connected_hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    WeightedBipartiteDigraph g =
        random_graph(rng, 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5));
    if (!is_strongly_connected(g)) continue;
    for (const OutRegularWitness& witness : enumerate_witnesses_naive(g)) {
      ++strongly_connected_hits;
      for (VertexId v : witness.members) {
        CHECK(out_weight_into(g, v, witness.members) > 0);
      }
    }
  }
  CHECK(strongly_connected_hits > 10);
}

TEST_CASE("fractional weights use the exact scaled search") {
  WeightedBipartiteDigraph g({"r1"}, {"c1"});
  g.add_arc("r1", "c1", Rational(2, 3));
  g.add_arc("c1", "r1", Rational(5, 7));
  FindResult result = find_undominated_out_regular(g, 1u << 10);
  REQUIRE(result.status == FindStatus::Found);
  CHECK(result.witness->alpha == Rational(2, 3));
  CHECK(result.witness->beta == Rational(5, 7));
}
