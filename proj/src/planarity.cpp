#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <set>
#include <utility>

#include "uor/digraph.hpp"

namespace uor {

bool is_planar(const WeightedBipartiteDigraph& graph) {
  using Undirected = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Undirected underlying(graph.vertex_count());
  std::set<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& [target, _] : graph.out(v)) {
      edges.insert(std::minmax(v, target));
    }
  }
  for (const auto& [a, b] : edges) boost::add_edge(a, b, underlying);
  return boost::boyer_myrvold_planarity_test(underlying);
}

}  // namespace uor
