#include "uor/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uor {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<char> subset_mask(const WeightedBipartiteDigraph& graph,
                              const std::vector<VertexId>& subset) {
  std::vector<char> mask(graph.vertex_count(), 0);
  for (VertexId v : subset) {
    require(v >= 0 && v < graph.vertex_count(), "subset member is not a vertex of the graph");
    mask[v] = 1;
  }
  return mask;
}

Rational out_weight_masked(const WeightedBipartiteDigraph& graph, VertexId v,
                           const std::vector<char>& mask) {
  Rational total = 0;
  for (const auto& [target, weight] : graph.out(v)) {
    if (mask[target]) total += weight;
  }
  return total;
}

}  // namespace

WeightedBipartiteDigraph::WeightedBipartiteDigraph(std::vector<std::string> row_names,
                                                   std::vector<std::string> col_names)
    : names_(std::move(row_names)), num_rows_(static_cast<int>(names_.size())) {
  names_.insert(names_.end(), col_names.begin(), col_names.end());
  out_.resize(names_.size());
  for (int v = 0; v < vertex_count(); ++v) {
    require(!names_[v].empty(), "vertex names must be non-empty");
    require(index_.emplace(names_[v], v).second, "duplicate vertex name: " + names_[v]);
  }
}

void WeightedBipartiteDigraph::add_arc(VertexId src, VertexId dst, Rational weight) {
  require(src >= 0 && src < vertex_count() && dst >= 0 && dst < vertex_count(),
          "arc endpoint is not a vertex");
  require(side(src) != side(dst), "arcs must connect distinct parts");
  require(weight > 0, "arc weights must be strictly positive");
  for (const auto& [target, _] : out_[src]) {
    require(target != dst, "duplicate arc " + names_[src] + " -> " + names_[dst]);
  }
  out_[src].emplace_back(dst, std::move(weight));
  ++arc_count_;
}

void WeightedBipartiteDigraph::add_arc(const std::string& src, const std::string& dst,
                                       Rational weight) {
  add_arc(id(src), id(dst), std::move(weight));
}

std::optional<VertexId> WeightedBipartiteDigraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId WeightedBipartiteDigraph::id(const std::string& name) const {
  auto v = find(name);
  require(v.has_value(), "unknown vertex: " + name);
  return *v;
}

std::optional<Rational> WeightedBipartiteDigraph::arc_weight(VertexId src, VertexId dst) const {
  for (const auto& [target, weight] : out_.at(src)) {
    if (target == dst) return weight;
  }
  return std::nullopt;
}

std::vector<std::tuple<VertexId, VertexId, Rational>> WeightedBipartiteDigraph::sorted_arcs()
    const {
  std::vector<std::tuple<VertexId, VertexId, Rational>> arcs;
  arcs.reserve(arc_count_);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (const auto& [target, weight] : out_[v]) arcs.emplace_back(v, target, weight);
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return std::make_pair(std::get<0>(a), std::get<1>(a)) <
           std::make_pair(std::get<0>(b), std::get<1>(b));
  });
  return arcs;
}

bool WeightedBipartiteDigraph::operator==(const WeightedBipartiteDigraph& other) const {
  return names_ == other.names_ && num_rows_ == other.num_rows_ &&
         sorted_arcs() == other.sorted_arcs();
}

WeightedBipartiteDigraph game_to_graph(const BimatrixGame& game) {
  validate_game(game);
  WeightClassProfile profile = weight_class_profile(game);
  require(!profile.degenerate(),
          "degenerate game: a payoff matrix with no positive entry has no corresponding digraph");
  WeightedBipartiteDigraph graph(game.row_strategies, game.col_strategies);
  const int rows = static_cast<int>(game.rows());
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (game.payoff_row(i, j) > 0) {
        graph.add_arc(static_cast<VertexId>(i), rows + static_cast<VertexId>(j),
                      game.payoff_row(i, j));
      }
      if (game.payoff_col(i, j) > 0) {
        graph.add_arc(rows + static_cast<VertexId>(j), static_cast<VertexId>(i),
                      game.payoff_col(i, j));
      }
    }
  }
  return graph;
}

BimatrixGame graph_to_game(const WeightedBipartiteDigraph& graph) {
  require(graph.row_count() > 0 && graph.col_count() > 0,
          "both parts must be non-empty to form a game");
  BimatrixGame game;
  for (VertexId v = 0; v < graph.row_count(); ++v) game.row_strategies.push_back(graph.name(v));
  for (VertexId v = graph.row_count(); v < graph.vertex_count(); ++v) {
    game.col_strategies.push_back(graph.name(v));
  }
  game.payoff_row = RationalMatrix(game.rows(), game.cols());
  game.payoff_col = RationalMatrix(game.rows(), game.cols());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& [target, weight] : graph.out(v)) {
      if (graph.side(v) == Side::Row) {
        game.payoff_row(v, target - graph.row_count()) = weight;
      } else {
        game.payoff_col(target, v - graph.row_count()) = weight;
      }
    }
  }
  return game;
}

Rational out_weight_into(const WeightedBipartiteDigraph& graph, VertexId v,
                         const std::vector<VertexId>& subset) {
  require(v >= 0 && v < graph.vertex_count(), "unknown vertex");
  return out_weight_masked(graph, v, subset_mask(graph, subset));
}

std::optional<std::pair<Rational, Rational>> check_out_regular(
    const WeightedBipartiteDigraph& graph, const std::vector<VertexId>& subset) {
  const auto mask = subset_mask(graph, subset);
  bool has_row = false;
  bool has_col = false;
  for (VertexId v : subset) {
    (graph.side(v) == Side::Row ? has_row : has_col) = true;
  }
  require(has_row && has_col, "subset must contain at least one vertex from each part");

  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  for (VertexId v : subset) {
    Rational total = out_weight_masked(graph, v, mask);
    auto& common = graph.side(v) == Side::Row ? alpha : beta;
    if (!common) {
      common = std::move(total);
    } else if (*common != total) {
      return std::nullopt;
    }
  }
  return std::make_pair(*alpha, *beta);
}

std::vector<VertexId> find_dominators(const WeightedBipartiteDigraph& graph,
                                      const OutRegularWitness& witness) {
  const auto mask = subset_mask(graph, witness.members);
  std::vector<VertexId> dominators;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (mask[v]) continue;
    const Rational& bound = graph.side(v) == Side::Row ? witness.alpha : witness.beta;
    if (out_weight_masked(graph, v, mask) > bound) dominators.push_back(v);
  }
  return dominators;
}

WitnessCheck check_witness(const WeightedBipartiteDigraph& graph,
                           const std::vector<VertexId>& subset) {
  WitnessCheck result;
  const auto mask = subset_mask(graph, subset);
  bool has_row = false;
  bool has_col = false;
  for (VertexId v : subset) {
    (graph.side(v) == Side::Row ? has_row : has_col) = true;
  }
  require(has_row && has_col, "subset must contain at least one vertex from each part");

  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  for (VertexId v : subset) {
    Rational total = out_weight_masked(graph, v, mask);
    auto& common = graph.side(v) == Side::Row ? alpha : beta;
    if (!common) {
      common = std::move(total);
    } else if (*common != total) {
      result.irregular_vertex = v;
      return result;
    }
  }
  result.regular = std::make_pair(*alpha, *beta);
  OutRegularWitness witness{subset, *alpha, *beta};
  std::sort(witness.members.begin(), witness.members.end());
  result.dominators = find_dominators(graph, witness);
  result.ok = result.dominators.empty();
  return result;
}

std::string WitnessCheck::describe(const WeightedBipartiteDigraph& graph) const {
  std::ostringstream out;
  if (ok) {
    out << "(alpha,beta)=(" << regular->first << "," << regular->second << ")";
  } else if (irregular_vertex) {
    out << "not out-regular: vertex " << graph.name(*irregular_vertex)
        << " has a different out-weight into S than its part";
  } else {
    out << "dominated:";
    for (VertexId v : dominators) out << " " << graph.name(v);
  }
  return out.str();
}

bool is_undominated_out_regular(const WeightedBipartiteDigraph& graph,
                                const std::vector<VertexId>& subset) {
  return check_witness(graph, subset).ok;
}

bool is_strongly_connected(const WeightedBipartiteDigraph& graph) {
  const int n = graph.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<VertexId>> reverse(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& [target, _] : graph.out(v)) reverse[target].push_back(v);
  }
  auto reaches_all = [n](auto&& neighbors) {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == n;
  };
  auto forward = [&graph](VertexId v) {
    std::vector<VertexId> out;
    for (const auto& [target, _] : graph.out(v)) out.push_back(target);
    return out;
  };
  auto backward = [&reverse](VertexId v) { return reverse[v]; };
  return reaches_all(forward) && reaches_all(backward);
}

}  // namespace uor
