#include "uor/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace uor {

std::string VertexRole::token() const {
  switch (kind) {
    case Kind::X: return "x " + std::to_string(variable);
    case Kind::NotX: return "nx " + std::to_string(variable);
    case Kind::Y: return "y " + std::to_string(variable);
    case Kind::NotY: return "ny " + std::to_string(variable);
    case Kind::Z1: return "z1 " + std::to_string(variable);
    case Kind::Z2: return "z2 " + std::to_string(variable);
    case Kind::Clause: return "C " + std::to_string(clause);
    case Kind::V: return "v " + std::to_string(clause) + " " + std::to_string(branch);
    case Kind::U: return "u " + std::to_string(clause) + " " + std::to_string(branch);
    case Kind::Hub: return "a";
  }
  return {};
}

std::vector<std::pair<std::string, VertexRole>> ReductionGraph::roles() const {
  std::vector<std::pair<std::string, VertexRole>> out;
  using K = VertexRole::Kind;
  for (int i = 0; i < num_vars; ++i) {
    out.emplace_back(graph.name(x[i]), VertexRole{K::X, i + 1, -1, -1});
    out.emplace_back(graph.name(not_x[i]), VertexRole{K::NotX, i + 1, -1, -1});
    out.emplace_back(graph.name(y[i]), VertexRole{K::Y, i + 1, -1, -1});
    out.emplace_back(graph.name(not_y[i]), VertexRole{K::NotY, i + 1, -1, -1});
    out.emplace_back(graph.name(z1[i]), VertexRole{K::Z1, i + 1, -1, -1});
    out.emplace_back(graph.name(z2[i]), VertexRole{K::Z2, i + 1, -1, -1});
  }
  for (int j = 0; j < num_clauses; ++j) {
    out.emplace_back(graph.name(clause[j]), VertexRole{K::Clause, -1, j + 1, -1});
    for (int k = 0; k < 3; ++k) {
      out.emplace_back(graph.name(v[j][k]), VertexRole{K::V, -1, j + 1, k + 1});
      out.emplace_back(graph.name(u[j][k]), VertexRole{K::U, -1, j + 1, k + 1});
    }
  }
  out.emplace_back(graph.name(hub), VertexRole{K::Hub, -1, -1, -1});
  return out;
}

ReductionGraph build_reduction_graph(const CnfFormula& formula) {
  if (!is_normalized(formula)) {
    throw std::invalid_argument(
        "formula is not normalized (three literals per clause, every literal covered)");
  }
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());

  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  for (int i = 1; i <= n; ++i) {
    row_names.push_back("y" + std::to_string(i));
    row_names.push_back("ny" + std::to_string(i));
    row_names.push_back("z" + std::to_string(i) + "_1");
  }
  for (int j = 1; j <= m; ++j) {
    row_names.push_back("Cl" + std::to_string(j));
    for (int k = 1; k <= 3; ++k) row_names.push_back("u" + std::to_string(j) + "_" + std::to_string(k));
  }
  for (int i = 1; i <= n; ++i) {
    col_names.push_back("x" + std::to_string(i));
    col_names.push_back("nx" + std::to_string(i));
    col_names.push_back("z" + std::to_string(i) + "_2");
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 3; ++k) col_names.push_back("v" + std::to_string(j) + "_" + std::to_string(k));
  }
  col_names.push_back("a");

  ReductionGraph rg;
  rg.graph = WeightedBipartiteDigraph(std::move(row_names), std::move(col_names));
  rg.formula = formula;
  rg.num_vars = n;
  rg.num_clauses = m;

  auto id = [&rg](const std::string& name) { return rg.graph.id(name); };
  for (int i = 1; i <= n; ++i) {
    rg.y.push_back(id("y" + std::to_string(i)));
    rg.not_y.push_back(id("ny" + std::to_string(i)));
    rg.z1.push_back(id("z" + std::to_string(i) + "_1"));
    rg.x.push_back(id("x" + std::to_string(i)));
    rg.not_x.push_back(id("nx" + std::to_string(i)));
    rg.z2.push_back(id("z" + std::to_string(i) + "_2"));
  }
  for (int j = 1; j <= m; ++j) {
    rg.clause.push_back(id("Cl" + std::to_string(j)));
    std::array<VertexId, 3> vj{};
    std::array<VertexId, 3> uj{};
    for (int k = 1; k <= 3; ++k) {
      vj[k - 1] = id("v" + std::to_string(j) + "_" + std::to_string(k));
      uj[k - 1] = id("u" + std::to_string(j) + "_" + std::to_string(k));
    }
    rg.v.push_back(vj);
    rg.u.push_back(uj);
  }
  rg.hub = id("a");

  const Rational heavy = rg.heavy_weight();
  for (int j = 0; j < m; ++j) {
    const Clause& cl = formula.clauses[j];
    for (int k = 0; k < 3; ++k) {
      rg.graph.add_arc(rg.clause[j], rg.v[j][k], 1);
      rg.graph.add_arc(rg.v[j][k], rg.u[j][k], heavy);
      rg.graph.add_arc(rg.u[j][k], rg.literal_vertex(cl[k]), 1);
    }
    rg.graph.add_arc(rg.hub, rg.clause[j], 1);
  }
  for (int i = 0; i < n; ++i) {
    rg.graph.add_arc(rg.x[i], rg.y[i], heavy);
    rg.graph.add_arc(rg.y[i], rg.hub, 1);
    rg.graph.add_arc(rg.not_x[i], rg.not_y[i], heavy);
    rg.graph.add_arc(rg.not_y[i], rg.hub, 1);
    rg.graph.add_arc(rg.hub, rg.z1[i], 1);
    rg.graph.add_arc(rg.z1[i], rg.z2[i], 1);
    rg.graph.add_arc(rg.z2[i], rg.y[i], heavy);
    rg.graph.add_arc(rg.z2[i], rg.not_y[i], heavy);
  }
  return rg;
}

std::vector<VertexId> assignment_to_witness(const ReductionGraph& rg,
                                            const Assignment& assignment) {
  if (static_cast<int>(assignment.bits.size()) != rg.num_vars) {
    throw std::invalid_argument("assignment length does not match the formula");
  }
  std::vector<VertexId> subset;
  subset.push_back(rg.hub);
  for (int i = 0; i < rg.num_vars; ++i) {
    subset.push_back(rg.z1[i]);
    subset.push_back(rg.z2[i]);
    if (assignment.bits[i]) {
      subset.push_back(rg.x[i]);
      subset.push_back(rg.y[i]);
    } else {
      subset.push_back(rg.not_x[i]);
      subset.push_back(rg.not_y[i]);
    }
  }
  for (int j = 0; j < rg.num_clauses; ++j) {
    subset.push_back(rg.clause[j]);
    const Clause& cl = rg.formula.clauses[j];
    int selected = -1;
    for (int k = 0; k < 3; ++k) {
      if (assignment.bits[cl[k].var] == cl[k].positive) {
        selected = k;
        break;
      }
    }
    if (selected < 0) {
      throw std::invalid_argument("assignment does not satisfy clause " + std::to_string(j + 1));
    }
    subset.push_back(rg.v[j][selected]);
    subset.push_back(rg.u[j][selected]);
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

Assignment witness_to_assignment(const ReductionGraph& rg, const std::vector<VertexId>& subset) {
  if (!is_undominated_out_regular(rg.graph, subset)) {
    throw std::invalid_argument("subset is not an undominated out-regular witness");
  }
  std::vector<char> mask(rg.graph.vertex_count(), 0);
  for (VertexId v : subset) mask[v] = 1;
  Assignment assignment;
  assignment.bits.resize(rg.num_vars);
  for (int i = 0; i < rg.num_vars; ++i) assignment.bits[i] = mask[rg.x[i]];
  if (!eval_formula(rg.formula, assignment)) {
    throw std::logic_error(
        "internal inconsistency: a checked witness produced a non-satisfying assignment");
  }
  return assignment;
}

}  // namespace uor
