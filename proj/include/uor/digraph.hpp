#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uor/game.hpp"
#include "uor/rational.hpp"

namespace uor {

using VertexId = int;

/// Directed bipartite graph with strictly positive rational arc weights.
/// Vertices are addressed by global id: row part first (0..|R|-1), then the
/// column part. Arcs always cross parts; parallel duplicates are rejected.
class WeightedBipartiteDigraph {
 public:
  WeightedBipartiteDigraph() = default;
  WeightedBipartiteDigraph(std::vector<std::string> row_names,
                           std::vector<std::string> col_names);

  void add_arc(VertexId src, VertexId dst, Rational weight);
  void add_arc(const std::string& src, const std::string& dst, Rational weight);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int row_count() const { return num_rows_; }
  int col_count() const { return vertex_count() - num_rows_; }
  Side side(VertexId v) const { return v < num_rows_ ? Side::Row : Side::Col; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(const std::string& name) const;
  VertexId id(const std::string& name) const;  // throws on unknown name

  const std::vector<std::pair<VertexId, Rational>>& out(VertexId v) const {
    return out_.at(v);
  }
  std::optional<Rational> arc_weight(VertexId src, VertexId dst) const;
  std::size_t arc_count() const { return arc_count_; }

  /// All arcs sorted by (src, dst); canonical order for files and equality.
  std::vector<std::tuple<VertexId, VertexId, Rational>> sorted_arcs() const;

  bool operator==(const WeightedBipartiteDigraph& other) const;

 private:
  std::vector<std::string> names_;
  int num_rows_ = 0;
  std::vector<std::vector<std::pair<VertexId, Rational>>> out_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t arc_count_ = 0;
};

/// Vertex subset S = S_R ⊔ S_C together with the common out-weights into S.
struct OutRegularWitness {
  std::vector<VertexId> members;  // sorted
  Rational alpha;
  Rational beta;

  bool operator==(const OutRegularWitness&) const = default;
};

/// One arc (r,c) per positive row payoff, one arc (c,r) per positive column
/// payoff. Throws invalid_argument when either matrix is entirely zero.
WeightedBipartiteDigraph game_to_graph(const BimatrixGame& game);

/// Inverse of game_to_graph on its image: absent arcs become zero payoffs.
BimatrixGame graph_to_game(const WeightedBipartiteDigraph& graph);

/// Σ weight of arcs from v into S. Zero when no out-neighbor lies in S.
Rational out_weight_into(const WeightedBipartiteDigraph& graph, VertexId v,
                         const std::vector<VertexId>& subset);

/// (alpha, beta) when every row-side member of S shares out-weight-into-S
/// alpha and every column-side member shares beta; nullopt otherwise.
/// S must contain at least one vertex from each part.
std::optional<std::pair<Rational, Rational>> check_out_regular(
    const WeightedBipartiteDigraph& graph, const std::vector<VertexId>& subset);

/// Vertices outside S whose out-weight into S strictly exceeds their side's
/// regularity parameter, ascending by vertex id.
std::vector<VertexId> find_dominators(const WeightedBipartiteDigraph& graph,
                                      const OutRegularWitness& witness);

/// Detailed verdict for certificate checking; `ok` iff S is an undominated
/// out-regular subgraph.
struct WitnessCheck {
  bool ok = false;
  std::optional<std::pair<Rational, Rational>> regular;  // set when out-regular
  std::optional<VertexId> irregular_vertex;              // witness of non-regularity
  std::vector<VertexId> dominators;

  std::string describe(const WeightedBipartiteDigraph& graph) const;
};

WitnessCheck check_witness(const WeightedBipartiteDigraph& graph,
                           const std::vector<VertexId>& subset);

/// Polynomial-time witness checker: out-regular and no dominating vertex.
bool is_undominated_out_regular(const WeightedBipartiteDigraph& graph,
                                const std::vector<VertexId>& subset);

bool is_strongly_connected(const WeightedBipartiteDigraph& graph);

/// Planarity of the underlying undirected simple graph (direction and
/// weights ignored; opposite arcs collapse to one edge).
bool is_planar(const WeightedBipartiteDigraph& graph);

}  // namespace uor
