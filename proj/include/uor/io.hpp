#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "uor/game.hpp"
#include "uor/planarize.hpp"

namespace uor {

/// Plain-text game format:
///   game <|R|> <|C|>
///   |R| rows of the row player's payoffs, then |R| rows of the column
///   player's, entries as integers or p/q. Strategy names are implicit
///   r1..r|R| / c1..c|C|. Readers skip blank and '#' lines.
BimatrixGame read_game(std::istream& input);
void write_game(const BimatrixGame& game, std::ostream& output);

/// Plain-text graph format:
///   graph <|R|> <|C|>
///   rows <|R| names>
///   cols <|C| names>
///   one line per arc: <src> <dst> <weight>, sorted by (src, dst).
WeightedBipartiteDigraph read_graph(std::istream& input);
void write_graph(const WeightedBipartiteDigraph& graph, std::ostream& output);

/// Witness format: one vertex name per line; '#' comments allowed.
std::vector<std::string> read_witness(std::istream& input);
void write_witness(const WeightedBipartiteDigraph& graph, const std::vector<VertexId>& subset,
                   std::ostream& output);
std::vector<VertexId> resolve_witness(const WeightedBipartiteDigraph& graph,
                                      const std::vector<std::string>& names);

/// Gadget registry sidecar emitted next to a planarized graph; enough to
/// reconstruct every gadget chain (entries carry the crossing geometry).
struct RegistryEntry {
  int index = -1;
  std::string vert_src, vert_dst;
  std::string horiz_src, horiz_dst;
  long long col = 0;
  long long row = 0;
};

struct RegistryData {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<RegistryEntry> entries;
};

RegistryData read_registry(std::istream& input);
void write_registry(const PlanarizedReduction& pl, std::ostream& output);
void write_registry(const RegistryData& data, std::ostream& output);

/// Rebinds a loaded registry to its planarized graph (gadget vertices are
/// resolved by the g<index>_ naming scheme).
PlanarizedReduction attach_registry(const WeightedBipartiteDigraph& planar_graph,
                                    const RegistryData& data);

/// Role map sidecar: one "<vertex> <role...>" line per vertex.
void write_roles(const ReductionGraph& rg, std::ostream& output);
std::vector<std::pair<std::string, std::string>> read_roles(std::istream& input);
void write_roles(const std::vector<std::pair<std::string, std::string>>& roles,
                 std::ostream& output);

/// DOT export; row part as boxes, column part as ellipses, weight labels.
/// With a registry, gadget vertices are grouped into clusters.
void write_dot(const WeightedBipartiteDigraph& graph, std::ostream& output,
               const RegistryData* clusters = nullptr);

enum class InstanceKind { Game, Graph };

/// Reads the leading keyword ("game" or "graph") without consuming input.
InstanceKind sniff_kind(std::istream& input);

}  // namespace uor
