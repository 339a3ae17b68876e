#pragma once

#include <array>
#include <string>
#include <vector>

#include "uor/cnf.hpp"
#include "uor/digraph.hpp"

namespace uor {

/// Role of a vertex in a compiled formula graph, for the roles sidecar file.
struct VertexRole {
  enum class Kind { X, NotX, Y, NotY, Z1, Z2, Clause, V, U, Hub };
  Kind kind;
  int variable = -1;  // 1-based, X/NotX/Y/NotY/Z1/Z2
  int clause = -1;    // 1-based, Clause/V/U
  int branch = -1;    // 1..3, V/U

  std::string token() const;
};

/// The digraph compiled from a normalized 3-CNF formula, with vertex-id
/// tables for every role. Row part: y_i, ny_i, z_i_1, then Cl_j, u_j_1..3;
/// column part: x_i, nx_i, z_i_2, then v_j_1..3, then the hub vertex a.
/// Arc weights are 1 on the row side and 1 or m+n on the column side.
struct ReductionGraph {
  WeightedBipartiteDigraph graph;
  CnfFormula formula;  // the normalized source
  int num_vars = 0;
  int num_clauses = 0;

  std::vector<VertexId> x, not_x, y, not_y, z1, z2;  // per variable
  std::vector<VertexId> clause;                      // per clause
  std::vector<std::array<VertexId, 3>> v, u;         // per clause, branch 1..3
  VertexId hub = -1;                                 // the additional vertex a

  Rational heavy_weight() const { return Rational(num_vars + num_clauses); }
  VertexId literal_vertex(const Literal& lit) const {
    return lit.positive ? x.at(lit.var) : not_x.at(lit.var);
  }
  std::vector<std::pair<std::string, VertexRole>> roles() const;
};

/// Throws std::invalid_argument unless is_normalized(formula).
ReductionGraph build_reduction_graph(const CnfFormula& formula);

/// Witness for a satisfying assignment: the hub, every clause vertex, every
/// z pair, the (x,y) or (x̄,ȳ) pair per the assignment, and per clause the
/// (v,u) pair of the least-indexed true literal. |S| = 1 + 3m + 4n.
/// Throws std::invalid_argument naming the first unsatisfied clause.
std::vector<VertexId> assignment_to_witness(const ReductionGraph& rg,
                                            const Assignment& assignment);

/// xi_i = 1 iff x_i ∈ S. S must pass the witness checker; the produced
/// assignment is verified to satisfy the formula.
Assignment witness_to_assignment(const ReductionGraph& rg, const std::vector<VertexId>& subset);

}  // namespace uor
