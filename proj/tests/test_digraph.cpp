#include <doctest.h>

#include "uor/digraph.hpp"
#include "uor/harness.hpp"

using namespace uor;

namespace {

// r1 -> c1 -> r2 -> c2 -> r1, all weights 1 (the matching game's digraph).
WeightedBipartiteDigraph four_cycle() {
  WeightedBipartiteDigraph g({"r1", "r2"}, {"c1", "c2"});
  g.add_arc("r1", "c1", 1);
  g.add_arc("c1", "r2", 1);
  g.add_arc("r2", "c2", 1);
  g.add_arc("c2", "r1", 1);
  return g;
}

WeightedBipartiteDigraph two_cycle() {
  WeightedBipartiteDigraph g({"r1"}, {"c1"});
  g.add_arc("r1", "c1", 1);
  g.add_arc("c1", "r1", 1);
  return g;
}

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

}  // namespace

TEST_CASE("digraph construction enforces the bipartite invariants") {
  WeightedBipartiteDigraph g({"r1", "r2"}, {"c1"});
  g.add_arc("r1", "c1", Rational(3, 2));
  CHECK(*g.arc_weight(g.id("r1"), g.id("c1")) == Rational(3, 2));
  CHECK_THROWS_AS(g.add_arc("r1", "c1", 1), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(g.add_arc("r1", "r2", 1), std::invalid_argument);   // same part
  CHECK_THROWS_AS(g.add_arc("r1", "c1", 0), std::invalid_argument);   // weight
  CHECK_THROWS_AS(g.id("nope"), std::invalid_argument);
  CHECK_THROWS_AS(WeightedBipartiteDigraph({"v", "v"}, {"c"}), std::invalid_argument);
}

TEST_CASE("game_to_graph lays one arc per positive payoff") {
  BimatrixGame trivial = make_game(matrix({{1}}), matrix({{1}}));
  WeightedBipartiteDigraph cycle = game_to_graph(trivial);
  CHECK(cycle.vertex_count() == 2);
  CHECK(cycle.arc_count() == 2);
  CHECK(cycle == two_cycle());

  BimatrixGame game = make_game(matrix({{1, 0}, {0, 1}}), matrix({{0, 1}, {1, 0}}));
  CHECK(game_to_graph(game) == four_cycle());

  BimatrixGame fractional = make_game(matrix({{0, Rational(3, 2)}, {1, 0}}),
                                      matrix({{1, 0}, {0, 1}}));
  WeightedBipartiteDigraph g = game_to_graph(fractional);
  CHECK(*g.arc_weight(g.id("r1"), g.id("c2")) == Rational(3, 2));

  BimatrixGame degenerate = make_game(matrix({{0}}), matrix({{1}}));
  CHECK_THROWS_AS(game_to_graph(degenerate), std::invalid_argument);
}

TEST_CASE("graph_to_game inverts game_to_graph") {
  CHECK(graph_to_game(two_cycle()) == make_game(matrix({{1}}), matrix({{1}})));

  std::mt19937_64 seeds(404);
  for (int trial = 0; trial < 25; ++trial) {
    RandomGameSpec spec;
    spec.seed = seeds();
    spec.max_rows = 4;
    spec.max_cols = 4;
    spec.row_classes = {Rational(1), Rational(1, 2), Rational(3)};
    spec.col_classes = {Rational(2), Rational(5, 3)};
    BimatrixGame game = generate_random_game(spec);
    WeightedBipartiteDigraph graph = game_to_graph(game);
    CHECK(graph_to_game(graph) == game);
    CHECK(game_to_graph(graph_to_game(graph)) == graph);
  }
}

TEST_CASE("out_weight_into sums arcs landing inside the subset") {
  WeightedBipartiteDigraph g = four_cycle();
  VertexId r1 = g.id("r1"), r2 = g.id("r2"), c1 = g.id("c1"), c2 = g.id("c2");
  CHECK(out_weight_into(g, r1, {c1}) == 1);
  CHECK(out_weight_into(g, c2, {c1, r2}) == 0);  // c2's only out-neighbor r1 is outside
  CHECK(out_weight_into(g, r1, {c2}) == 0);

  WeightedBipartiteDigraph isolated({"r1"}, {"c1"});
  isolated.add_arc("c1", "r1", 1);
  CHECK(out_weight_into(isolated, isolated.id("r1"), {isolated.id("c1")}) == 0);
  CHECK_THROWS_AS(out_weight_into(g, 99, {c1}), std::invalid_argument);
}

TEST_CASE("check_out_regular returns the common out-weights") {
  WeightedBipartiteDigraph two = two_cycle();
  auto full2 = check_out_regular(two, {0, 1});
  REQUIRE(full2.has_value());
  CHECK(full2->first == 1);
  CHECK(full2->second == 1);

  WeightedBipartiteDigraph four = four_cycle();
  VertexId r1 = four.id("r1"), r2 = four.id("r2"), c1 = four.id("c1"), c2 = four.id("c2");
  auto full4 = check_out_regular(four, {r1, r2, c1, c2});
  REQUIRE(full4.has_value());
  CHECK(*full4 == std::make_pair(Rational(1), Rational(1)));

  auto corner = check_out_regular(four, {r1, c1});
  REQUIRE(corner.has_value());
  CHECK(*corner == std::make_pair(Rational(1), Rational(0)));

  CHECK_THROWS_AS(check_out_regular(four, {r1, r2}), std::invalid_argument);
}

TEST_CASE("find_dominators lists outside vertices beating the bound") {
  WeightedBipartiteDigraph four = four_cycle();
  VertexId r1 = four.id("r1"), c1 = four.id("c1"), c2 = four.id("c2");

  OutRegularWitness everyone{{0, 1, 2, 3}, 1, 1};
  CHECK(find_dominators(four, everyone).empty());

  OutRegularWitness corner{{r1, c1}, 1, 0};
  CHECK(find_dominators(four, corner) == std::vector<VertexId>{c2});

  CHECK(is_undominated_out_regular(four, {0, 1, 2, 3}));
  CHECK_FALSE(is_undominated_out_regular(four, {r1, c1}));
}

TEST_CASE("check_witness reports the violated condition") {
  WeightedBipartiteDigraph four = four_cycle();
  WitnessCheck ok = check_witness(four, {0, 1, 2, 3});
  CHECK(ok.ok);
  CHECK(ok.describe(four) == "(alpha,beta)=(1,1)");

  WitnessCheck dominated = check_witness(four, {four.id("r1"), four.id("c1")});
  CHECK_FALSE(dominated.ok);
  CHECK(dominated.dominators == std::vector<VertexId>{four.id("c2")});
  CHECK(dominated.describe(four).find("c2") != std::string::npos);

  WeightedBipartiteDigraph uneven({"r1", "r2"}, {"c1"});
  uneven.add_arc("r1", "c1", 1);
  uneven.add_arc("r2", "c1", 2);
  uneven.add_arc("c1", "r1", 1);
  WitnessCheck irregular = check_witness(uneven, {0, 1, 2});
  CHECK_FALSE(irregular.ok);
  CHECK(irregular.irregular_vertex.has_value());
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(two_cycle()));
  CHECK(is_strongly_connected(four_cycle()));

  WeightedBipartiteDigraph one_way({"r1"}, {"c1"});
  one_way.add_arc("r1", "c1", 1);
  CHECK_FALSE(is_strongly_connected(one_way));
}

TEST_CASE("planarity is decided on the underlying undirected graph") {
  CHECK(is_planar(two_cycle()));   // opposite arcs collapse to one edge
  CHECK(is_planar(four_cycle()));  // any graph on <= 4 vertices is planar

  WeightedBipartiteDigraph k33({"r1", "r2", "r3"}, {"c1", "c2", "c3"});
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      k33.add_arc("r" + std::to_string(i), "c" + std::to_string(j), 1);
    }
  }
  CHECK_FALSE(is_planar(k33));

  WeightedBipartiteDigraph k23({"r1", "r2"}, {"c1", "c2", "c3"});
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 3; ++j) {
      k23.add_arc("r" + std::to_string(i), "c" + std::to_string(j), 1);
    }
  }
  CHECK(is_planar(k23));
}
