#pragma once

#include <map>
#include <string>
#include <vector>

#include "uor/reduction.hpp"

namespace uor {

/// One orthogonal route: a horizontal segment from the source's position
/// (0, row) to (col, row), then a vertical segment down to the target's
/// connection point (col, 0).
///
/// Rows are the paper's grid rows (u vertex for clause j, branch k sits at
/// row 3j+k+1, 0-based j/k). Columns are in quarter-cell units: connection
/// point j of variable box b owns the slot [4(b*m+j)+1, 4(b*m+j)+3] and
/// branch k descends at sub-column 4(b*m+j)+k+1, so up to three arcs of one
/// clause can target the same literal without sharing a segment.
struct RoutedArc {
  int index = 0;           // position in GridEmbedding::routed
  VertexId src = -1;       // clause coordinating vertex u
  VertexId dst = -1;       // literal vertex
  int connection = 0;      // clause index j (the label of the point used)
  long long col = 0;
  long long row = 0;
};

struct GridEmbedding {
  long long grid_rows = 0;  // 3m
  long long grid_cols = 0;  // 2mn (logical cells; columns below are x4)
  std::vector<RoutedArc> routed;
  std::map<VertexId, std::pair<long long, long long>> placements;
  std::map<VertexId, std::vector<long long>> connection_cols;  // per variable vertex, m slots
};

/// Deterministic placement: u vertices stacked bottom-to-top in (j,k) order
/// on the left, variable boxes x1, nx1, .., xn, nxn left-to-right on the
/// bottom with m connection points each, one route per (u, literal) arc.
GridEmbedding route_arcs(const ReductionGraph& rg);

/// A transversal intersection of one arc's vertical segment with another
/// arc's horizontal segment.
struct Crossing {
  int vert_arc = -1;
  int horiz_arc = -1;
  long long col = 0;  // the vertical arc's column
  long long row = 0;  // the horizontal arc's row

  bool operator==(const Crossing&) const = default;
};

/// All crossings, grouped by vertical arc in route order and ordered
/// top-to-bottom along each vertical segment. Throws if two routes share a
/// row or column (cannot happen for route_arcs output).
std::vector<Crossing> detect_crossings(const GridEmbedding& embedding);

/// Independent O(k^2) oracle: raw segment-pair intersection count over all
/// routed segments, with overlap detection. Used to confirm detect_crossings.
std::size_t count_crossings_bruteforce(const GridEmbedding& embedding);

/// Ids of one spliced-in crossing gadget inside the planar graph. The fans
/// have width h = m+n; pass-through chains are alpha2->..->gamma3 for the
/// vertical party and beta2->..->delta3 for the horizontal one.
struct GadgetVertices {
  VertexId eps = -1;
  VertexId a1 = -1, a2 = -1;
  VertexId b1 = -1, b2 = -1;
  VertexId g3 = -1, d3 = -1;
  std::vector<VertexId> g1, g2, d1, d2;
};

struct GadgetRecord {
  int index = -1;
  Crossing crossing;
  std::string vert_src, vert_dst;    // names of the vertical party's arc endpoints
  std::string horiz_src, horiz_dst;  // names of the horizontal party's arc endpoints
  GadgetVertices vertices;
};

/// The planarized graph together with its gadget registry.
struct PlanarizedReduction {
  WeightedBipartiteDigraph graph;  // H
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<GadgetRecord> gadgets;  // in crossing order
};

/// Replaces every crossing by a gadget, chaining gadgets along each arc in
/// travel order (horizontal-segment crossings left-to-right, then
/// vertical-segment crossings top-to-bottom). Zero crossings yields a graph
/// equal to the input's.
PlanarizedReduction insert_gadgets(const ReductionGraph& rg, const GridEmbedding& embedding);

/// route + insert in one step.
PlanarizedReduction planarize(const ReductionGraph& rg);

/// Algorithm: start from S, add the pass-through chain of every gadget each
/// selected arc traverses, then top every gadget hub's fan up to out-weight
/// m+n. S must be a witness on the source graph; the result is verified on
/// the planar graph.
std::vector<VertexId> lift_witness(const ReductionGraph& rg, const PlanarizedReduction& pl,
                                   const std::vector<VertexId>& subset);

/// Algorithm: rebuild the source-graph witness from hub, clause, and z
/// vertices plus the variable and clause pairs selected by T. T must be a
/// witness on the planar graph; the result is verified on the source graph.
std::vector<VertexId> project_witness(const ReductionGraph& rg, const PlanarizedReduction& pl,
                                      const std::vector<VertexId>& subset);

}  // namespace uor
