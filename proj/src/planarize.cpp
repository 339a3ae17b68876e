#include "uor/planarize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uor {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Travel-ordered gadget chain of one routed arc: crossings on its horizontal
// segment left-to-right (where the arc is the horizontal party), then
// crossings on its vertical segment top-to-bottom (where it is vertical).
struct ChainLink {
  int gadget = -1;
  bool vertical = false;
};

std::vector<ChainLink> arc_chain(const std::string& src_name,
                                 const std::vector<GadgetRecord>& gadgets) {
  std::vector<std::pair<long long, int>> horizontal;  // (col asc, gadget)
  std::vector<std::pair<long long, int>> vertical;    // (row desc, gadget)
  for (const GadgetRecord& record : gadgets) {
    if (record.horiz_src == src_name) horizontal.emplace_back(record.crossing.col, record.index);
    if (record.vert_src == src_name) vertical.emplace_back(-record.crossing.row, record.index);
  }
  std::sort(horizontal.begin(), horizontal.end());
  std::sort(vertical.begin(), vertical.end());
  std::vector<ChainLink> chain;
  for (const auto& [_, g] : horizontal) chain.push_back({g, false});
  for (const auto& [_, g] : vertical) chain.push_back({g, true});
  return chain;
}

}  // namespace

GridEmbedding route_arcs(const ReductionGraph& rg) {
  const int n = rg.num_vars;
  const int m = rg.num_clauses;
  GridEmbedding embedding;
  embedding.grid_rows = 3LL * m;
  embedding.grid_cols = 2LL * m * n;

  for (int i = 0; i < n; ++i) {
    for (int box = 0; box < 2; ++box) {
      VertexId vertex = box == 0 ? rg.x[i] : rg.not_x[i];
      long long b = 2LL * i + box;
      embedding.placements[vertex] = {4 * (b * m) + 1, 0};
      std::vector<long long>& points = embedding.connection_cols[vertex];
      for (int j = 0; j < m; ++j) points.push_back(4 * (b * m + j) + 2);
    }
  }

  for (int j = 0; j < m; ++j) {
    const Clause& clause = rg.formula.clauses[j];
    for (int k = 0; k < 3; ++k) {
      long long row = 3LL * j + k + 1;
      embedding.placements[rg.u[j][k]] = {0, row};
      const Literal& lit = clause[k];
      long long b = 2LL * lit.var + (lit.positive ? 0 : 1);
      RoutedArc arc;
      arc.index = static_cast<int>(embedding.routed.size());
      arc.src = rg.u[j][k];
      arc.dst = rg.literal_vertex(lit);
      arc.connection = j;
      arc.col = 4 * (b * m + j) + k + 1;
      arc.row = row;
      embedding.routed.push_back(arc);
    }
  }
  return embedding;
}

std::vector<Crossing> detect_crossings(const GridEmbedding& embedding) {
  std::set<long long> rows;
  std::set<long long> cols;
  for (const RoutedArc& arc : embedding.routed) {
    if (!rows.insert(arc.row).second || !cols.insert(arc.col).second) {
      throw std::runtime_error("embedding invariant violated: routed arcs share a segment line");
    }
  }
  std::vector<Crossing> crossings;
  for (const RoutedArc& vert : embedding.routed) {
    std::vector<Crossing> along_arc;
    for (const RoutedArc& horiz : embedding.routed) {
      if (vert.index == horiz.index) continue;
      // vert's vertical spans rows (0, vert.row]; horiz's horizontal spans
      // cols [0, horiz.col]. Transversal crossing needs strict interior.
      if (vert.col < horiz.col && horiz.row < vert.row && horiz.row > 0 && vert.col > 0) {
        along_arc.push_back(Crossing{vert.index, horiz.index, vert.col, horiz.row});
      }
    }
    std::sort(along_arc.begin(), along_arc.end(),
              [](const Crossing& a, const Crossing& b) { return a.row > b.row; });
    crossings.insert(crossings.end(), along_arc.begin(), along_arc.end());
  }
  return crossings;
}

std::size_t count_crossings_bruteforce(const GridEmbedding& embedding) {
  struct Segment {
    long long x1, y1, x2, y2;
    int arc;
  };
  std::vector<Segment> segments;
  for (const RoutedArc& arc : embedding.routed) {
    segments.push_back({0, arc.row, arc.col, arc.row, arc.index});   // horizontal
    segments.push_back({arc.col, arc.row, arc.col, 0, arc.index});   // vertical
  }
  auto is_horizontal = [](const Segment& s) { return s.y1 == s.y2; };
  std::size_t count = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const Segment& a = segments[i];
      const Segment& b = segments[j];
      if (a.arc == b.arc) continue;
      if (is_horizontal(a) == is_horizontal(b)) {
        // Parallel segments of distinct arcs: overlap would violate the
        // embedding invariants.
        if (is_horizontal(a) && a.y1 == b.y1) {
          throw std::runtime_error("embedding invariant violated: collinear horizontal segments");
        }
        if (!is_horizontal(a) && a.x1 == b.x1) {
          throw std::runtime_error("embedding invariant violated: collinear vertical segments");
        }
        continue;
      }
      const Segment& h = is_horizontal(a) ? a : b;
      const Segment& v = is_horizontal(a) ? b : a;
      long long hx_lo = std::min(h.x1, h.x2);
      long long hx_hi = std::max(h.x1, h.x2);
      long long vy_lo = std::min(v.y1, v.y2);
      long long vy_hi = std::max(v.y1, v.y2);
      if (hx_lo < v.x1 && v.x1 < hx_hi && vy_lo < h.y1 && h.y1 < vy_hi) ++count;
    }
  }
  return count;
}

PlanarizedReduction insert_gadgets(const ReductionGraph& rg, const GridEmbedding& embedding) {
  const std::vector<Crossing> crossings = detect_crossings(embedding);
  const int fan = rg.num_vars + rg.num_clauses;
  const Rational heavy = rg.heavy_weight();

  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  for (VertexId v = 0; v < rg.graph.row_count(); ++v) row_names.push_back(rg.graph.name(v));
  for (VertexId v = rg.graph.row_count(); v < rg.graph.vertex_count(); ++v) {
    col_names.push_back(rg.graph.name(v));
  }
  for (std::size_t g = 0; g < crossings.size(); ++g) {
    std::string p = "g" + std::to_string(g) + "_";
    row_names.push_back(p + "a1");
    row_names.push_back(p + "b1");
    row_names.push_back(p + "g3");
    row_names.push_back(p + "d3");
    for (int t = 1; t <= fan; ++t) {
      row_names.push_back(p + "g1_" + std::to_string(t));
      row_names.push_back(p + "d1_" + std::to_string(t));
    }
    col_names.push_back(p + "eps");
    col_names.push_back(p + "a2");
    col_names.push_back(p + "b2");
    for (int t = 1; t <= fan; ++t) {
      col_names.push_back(p + "g2_" + std::to_string(t));
      col_names.push_back(p + "d2_" + std::to_string(t));
    }
  }

  PlanarizedReduction pl;
  pl.graph = WeightedBipartiteDigraph(std::move(row_names), std::move(col_names));
  pl.num_vars = rg.num_vars;
  pl.num_clauses = rg.num_clauses;

  auto id = [&pl](const std::string& name) { return pl.graph.id(name); };
  for (std::size_t g = 0; g < crossings.size(); ++g) {
    const Crossing& crossing = crossings[g];
    GadgetRecord record;
    record.index = static_cast<int>(g);
    record.crossing = crossing;
    const RoutedArc& vert = embedding.routed.at(crossing.vert_arc);
    const RoutedArc& horiz = embedding.routed.at(crossing.horiz_arc);
    record.vert_src = rg.graph.name(vert.src);
    record.vert_dst = rg.graph.name(vert.dst);
    record.horiz_src = rg.graph.name(horiz.src);
    record.horiz_dst = rg.graph.name(horiz.dst);
    std::string p = "g" + std::to_string(g) + "_";
    record.vertices.eps = id(p + "eps");
    record.vertices.a1 = id(p + "a1");
    record.vertices.a2 = id(p + "a2");
    record.vertices.b1 = id(p + "b1");
    record.vertices.b2 = id(p + "b2");
    record.vertices.g3 = id(p + "g3");
    record.vertices.d3 = id(p + "d3");
    for (int t = 1; t <= fan; ++t) {
      record.vertices.g1.push_back(id(p + "g1_" + std::to_string(t)));
      record.vertices.g2.push_back(id(p + "g2_" + std::to_string(t)));
      record.vertices.d1.push_back(id(p + "d1_" + std::to_string(t)));
      record.vertices.d2.push_back(id(p + "d2_" + std::to_string(t)));
    }
    pl.gadgets.push_back(std::move(record));
  }

  // Arcs that cross are replaced by their gadget chains below.
  std::set<VertexId> rerouted;
  for (const Crossing& crossing : crossings) {
    rerouted.insert(embedding.routed.at(crossing.vert_arc).src);
    rerouted.insert(embedding.routed.at(crossing.horiz_arc).src);
  }
  for (const auto& [src, dst, weight] : rg.graph.sorted_arcs()) {
    if (rerouted.contains(src)) continue;  // u vertices have a single out-arc
    pl.graph.add_arc(pl.graph.id(rg.graph.name(src)), pl.graph.id(rg.graph.name(dst)), weight);
  }

  for (const GadgetRecord& record : pl.gadgets) {
    const GadgetVertices& gv = record.vertices;
    pl.graph.add_arc(gv.a2, gv.a1, heavy);
    pl.graph.add_arc(gv.a1, gv.eps, 1);
    pl.graph.add_arc(gv.b2, gv.b1, heavy);
    pl.graph.add_arc(gv.b1, gv.eps, 1);
    for (int t = 0; t < fan; ++t) {
      pl.graph.add_arc(gv.eps, gv.g1[t], 1);
      pl.graph.add_arc(gv.g1[t], gv.g2[t], 1);
      pl.graph.add_arc(gv.g2[t], gv.g3, heavy);
      pl.graph.add_arc(gv.eps, gv.d1[t], 1);
      pl.graph.add_arc(gv.d1[t], gv.d2[t], 1);
      pl.graph.add_arc(gv.d2[t], gv.d3, heavy);
    }
    pl.graph.add_arc(gv.b2, gv.g1[0], 1);
    pl.graph.add_arc(gv.a2, gv.d1[0], 1);
  }

  for (VertexId u : rerouted) {
    const std::string src_name = rg.graph.name(u);
    std::vector<ChainLink> chain = arc_chain(src_name, pl.gadgets);
    VertexId literal = -1;
    for (const RoutedArc& arc : embedding.routed) {
      if (arc.src == u) literal = arc.dst;
    }
    VertexId current = pl.graph.id(src_name);
    for (const ChainLink& link : chain) {
      const GadgetVertices& gv = pl.gadgets.at(link.gadget).vertices;
      pl.graph.add_arc(current, link.vertical ? gv.a2 : gv.b2, 1);
      current = link.vertical ? gv.g3 : gv.d3;
    }
    pl.graph.add_arc(current, pl.graph.id(rg.graph.name(literal)), 1);
  }

  return pl;
}

PlanarizedReduction planarize(const ReductionGraph& rg) {
  return insert_gadgets(rg, route_arcs(rg));
}

std::vector<VertexId> lift_witness(const ReductionGraph& rg, const PlanarizedReduction& pl,
                                   const std::vector<VertexId>& subset) {
  require(is_undominated_out_regular(rg.graph, subset),
          "subset is not an undominated out-regular witness on the source graph");

  std::vector<char> in_g(rg.graph.vertex_count(), 0);
  for (VertexId v : subset) in_g[v] = 1;
  std::vector<char> in_h(pl.graph.vertex_count(), 0);
  for (VertexId v : subset) in_h[pl.graph.id(rg.graph.name(v))] = 1;

  const int fan = rg.num_vars + rg.num_clauses;
  std::vector<char> hub_active(pl.gadgets.size(), 0);

  for (int j = 0; j < rg.num_clauses; ++j) {
    for (int k = 0; k < 3; ++k) {
      VertexId u = rg.u[j][k];
      if (!in_g[u]) continue;
      for (const ChainLink& link : arc_chain(rg.graph.name(u), pl.gadgets)) {
        const GadgetVertices& gv = pl.gadgets.at(link.gadget).vertices;
        hub_active[link.gadget] = 1;
        in_h[gv.eps] = 1;
        if (link.vertical) {
          in_h[gv.a2] = 1;
          in_h[gv.a1] = 1;
          in_h[gv.g1[fan - 1]] = 1;
          in_h[gv.g2[fan - 1]] = 1;
          in_h[gv.g3] = 1;
        } else {
          in_h[gv.b2] = 1;
          in_h[gv.b1] = 1;
          in_h[gv.d1[fan - 1]] = 1;
          in_h[gv.d2[fan - 1]] = 1;
          in_h[gv.d3] = 1;
        }
      }
    }
  }

  for (std::size_t g = 0; g < pl.gadgets.size(); ++g) {
    if (!hub_active[g]) continue;
    const GadgetVertices& gv = pl.gadgets[g].vertices;
    auto hub_out_weight = [&]() {
      Rational total = 0;
      for (const auto& [target, weight] : pl.graph.out(gv.eps)) {
        if (in_h[target]) total += weight;
      }
      return total;
    };
    int kappa = 1;
    while (hub_out_weight() < fan && kappa < fan) {
      bool grew = false;
      if (in_h[gv.b1]) {
        in_h[gv.d1[fan - kappa - 1]] = 1;
        in_h[gv.d2[fan - kappa - 1]] = 1;
        grew = true;
      }
      if (in_h[gv.a1] && hub_out_weight() < fan) {
        in_h[gv.g1[fan - kappa - 1]] = 1;
        in_h[gv.g2[fan - kappa - 1]] = 1;
        grew = true;
      }
      if (!grew) break;  // malformed input; the final check below decides
      ++kappa;
    }
  }

  std::vector<VertexId> lifted;
  for (VertexId v = 0; v < pl.graph.vertex_count(); ++v) {
    if (in_h[v]) lifted.push_back(v);
  }
  if (!is_undominated_out_regular(pl.graph, lifted)) {
    throw std::logic_error("internal error: lifted subset fails the checker on the planar graph");
  }
  return lifted;
}

std::vector<VertexId> project_witness(const ReductionGraph& rg, const PlanarizedReduction& pl,
                                      const std::vector<VertexId>& subset) {
  require(is_undominated_out_regular(pl.graph, subset),
          "subset is not an undominated out-regular witness on the planar graph");

  std::vector<char> in_h(pl.graph.vertex_count(), 0);
  for (VertexId v : subset) in_h[v] = 1;
  auto contains = [&](VertexId g_vertex) {
    return in_h[pl.graph.id(rg.graph.name(g_vertex))] != 0;
  };

  std::vector<VertexId> projected;
  projected.push_back(rg.hub);
  for (int j = 0; j < rg.num_clauses; ++j) projected.push_back(rg.clause[j]);
  for (int i = 0; i < rg.num_vars; ++i) {
    projected.push_back(rg.z1[i]);
    projected.push_back(rg.z2[i]);
    if (contains(rg.x[i]) || (!contains(rg.not_x[i]) && contains(rg.y[i]))) {
      projected.push_back(rg.x[i]);
      projected.push_back(rg.y[i]);
    } else {
      projected.push_back(rg.not_x[i]);
      projected.push_back(rg.not_y[i]);
    }
  }
  for (int j = 0; j < rg.num_clauses; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (contains(rg.v[j][k]) && contains(rg.u[j][k])) {
        projected.push_back(rg.v[j][k]);
        projected.push_back(rg.u[j][k]);
      }
    }
  }
  std::sort(projected.begin(), projected.end());
  if (!is_undominated_out_regular(rg.graph, projected)) {
    throw std::logic_error(
        "internal error: projected subset fails the checker on the source graph");
  }
  return projected;
}

}  // namespace uor
