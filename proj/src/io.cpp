#include "uor/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace uor {

namespace {

// Line-oriented reader that skips blanks and '#' comments and tracks line
// numbers for errors.
class LineReader {
 public:
  explicit LineReader(std::istream& input) : input_(input) {}

  bool next(std::string& line) {
    while (std::getline(input_, line)) {
      ++line_number_;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      return true;
    }
    return false;
  }

  int line_number() const { return line_number_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_number_, message);
  }

 private:
  std::istream& input_;
  int line_number_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

Rational parse_weight(const LineReader& reader, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& error) {
    reader.fail(error.what());
  }
}

long long parse_count(const LineReader& reader, const std::string& token,
                      const std::string& what) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    reader.fail("malformed " + what + ": '" + token + "'");
  }
}

}  // namespace

BimatrixGame read_game(std::istream& input) {
  LineReader reader(input);
  std::string line;
  if (!reader.next(line)) reader.fail("empty game file");
  auto header = tokens_of(line);
  if (header.size() != 3 || header[0] != "game") {
    reader.fail("expected header 'game <|R|> <|C|>'");
  }
  long long rows = parse_count(reader, header[1], "row count");
  long long cols = parse_count(reader, header[2], "col count");
  if (rows < 1 || cols < 1) reader.fail("strategy counts must be positive");

  RationalMatrix row_payoff(rows, cols);
  RationalMatrix col_payoff(rows, cols);
  for (RationalMatrix* matrix : {&row_payoff, &col_payoff}) {
    for (long long i = 0; i < rows; ++i) {
      if (!reader.next(line)) reader.fail("unexpected end of file inside payoff matrix");
      auto entries = tokens_of(line);
      if (static_cast<long long>(entries.size()) != cols) {
        reader.fail("expected " + std::to_string(cols) + " entries in matrix row");
      }
      for (long long j = 0; j < cols; ++j) {
        Rational value = parse_weight(reader, entries[j]);
        if (value < 0) reader.fail("payoffs must be non-negative");
        (*matrix)(i, j) = std::move(value);
      }
    }
  }
  if (reader.next(line)) reader.fail("trailing content after payoff matrices");
  return make_game(std::move(row_payoff), std::move(col_payoff));
}

void write_game(const BimatrixGame& game, std::ostream& output) {
  output << "game " << game.rows() << " " << game.cols() << "\n";
  for (const RationalMatrix* matrix : {&game.payoff_row, &game.payoff_col}) {
    for (std::size_t i = 0; i < game.rows(); ++i) {
      for (std::size_t j = 0; j < game.cols(); ++j) {
        if (j) output << " ";
        output << (*matrix)(i, j);
      }
      output << "\n";
    }
  }
}

WeightedBipartiteDigraph read_graph(std::istream& input) {
  LineReader reader(input);
  std::string line;
  if (!reader.next(line)) reader.fail("empty graph file");
  auto header = tokens_of(line);
  if (header.size() != 3 || header[0] != "graph") {
    reader.fail("expected header 'graph <|R|> <|C|>'");
  }
  long long rows = parse_count(reader, header[1], "row count");
  long long cols = parse_count(reader, header[2], "col count");
  if (rows < 1 || cols < 1) reader.fail("part sizes must be positive");

  if (!reader.next(line)) reader.fail("missing 'rows' line");
  auto row_tokens = tokens_of(line);
  if (row_tokens.empty() || row_tokens[0] != "rows" ||
      static_cast<long long>(row_tokens.size()) != rows + 1) {
    reader.fail("expected 'rows' followed by " + std::to_string(rows) + " names");
  }
  if (!reader.next(line)) reader.fail("missing 'cols' line");
  auto col_tokens = tokens_of(line);
  if (col_tokens.empty() || col_tokens[0] != "cols" ||
      static_cast<long long>(col_tokens.size()) != cols + 1) {
    reader.fail("expected 'cols' followed by " + std::to_string(cols) + " names");
  }

  WeightedBipartiteDigraph graph(
      std::vector<std::string>(row_tokens.begin() + 1, row_tokens.end()),
      std::vector<std::string>(col_tokens.begin() + 1, col_tokens.end()));
  while (reader.next(line)) {
    auto arc = tokens_of(line);
    if (arc.size() != 3) reader.fail("expected arc '<src> <dst> <weight>'");
    auto src = graph.find(arc[0]);
    auto dst = graph.find(arc[1]);
    if (!src) reader.fail("unknown vertex: " + arc[0]);
    if (!dst) reader.fail("unknown vertex: " + arc[1]);
    Rational weight = parse_weight(reader, arc[2]);
    try {
      graph.add_arc(*src, *dst, std::move(weight));
    } catch (const std::invalid_argument& error) {
      reader.fail(error.what());
    }
  }
  return graph;
}

void write_graph(const WeightedBipartiteDigraph& graph, std::ostream& output) {
  output << "graph " << graph.row_count() << " " << graph.col_count() << "\n";
  output << "rows";
  for (VertexId v = 0; v < graph.row_count(); ++v) output << " " << graph.name(v);
  output << "\ncols";
  for (VertexId v = graph.row_count(); v < graph.vertex_count(); ++v) {
    output << " " << graph.name(v);
  }
  output << "\n";
  for (const auto& [src, dst, weight] : graph.sorted_arcs()) {
    output << graph.name(src) << " " << graph.name(dst) << " " << weight << "\n";
  }
}

std::vector<std::string> read_witness(std::istream& input) {
  LineReader reader(input);
  std::vector<std::string> names;
  std::string line;
  while (reader.next(line)) {
    auto tokens = tokens_of(line);
    if (tokens.size() != 1) reader.fail("expected one vertex name per line");
    names.push_back(tokens[0]);
  }
  return names;
}

void write_witness(const WeightedBipartiteDigraph& graph, const std::vector<VertexId>& subset,
                   std::ostream& output) {
  std::vector<VertexId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (VertexId v : sorted) output << graph.name(v) << "\n";
}

std::vector<VertexId> resolve_witness(const WeightedBipartiteDigraph& graph,
                                      const std::vector<std::string>& names) {
  std::vector<VertexId> subset;
  for (const std::string& name : names) subset.push_back(graph.id(name));
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

RegistryData read_registry(std::istream& input) {
  LineReader reader(input);
  std::string line;
  if (!reader.next(line)) reader.fail("empty registry file");
  auto header = tokens_of(line);
  if (header.size() != 6 || header[0] != "registry" || header[2] != "vars" ||
      header[4] != "clauses") {
    reader.fail("expected header 'registry <count> vars <n> clauses <m>'");
  }
  RegistryData data;
  long long count = parse_count(reader, header[1], "gadget count");
  data.num_vars = static_cast<int>(parse_count(reader, header[3], "variable count"));
  data.num_clauses = static_cast<int>(parse_count(reader, header[5], "clause count"));
  while (reader.next(line)) {
    auto tokens = tokens_of(line);
    if (tokens.size() != 10 || tokens[0] != "gadget" || tokens[2] != "vert" ||
        tokens[5] != "horiz") {
      reader.fail("expected 'gadget <i> vert <src> <dst> horiz <src> <dst> <col> <row>'");
    }
    RegistryEntry entry;
    entry.index = static_cast<int>(parse_count(reader, tokens[1], "gadget index"));
    entry.vert_src = tokens[3];
    entry.vert_dst = tokens[4];
    entry.horiz_src = tokens[6];
    entry.horiz_dst = tokens[7];
    entry.col = parse_count(reader, tokens[8], "column");
    entry.row = parse_count(reader, tokens[9], "row");
    data.entries.push_back(std::move(entry));
  }
  if (static_cast<long long>(data.entries.size()) != count) {
    reader.fail("gadget count does not match header");
  }
  return data;
}

void write_registry(const RegistryData& data, std::ostream& output) {
  output << "registry " << data.entries.size() << " vars " << data.num_vars << " clauses "
         << data.num_clauses << "\n";
  for (const RegistryEntry& entry : data.entries) {
    output << "gadget " << entry.index << " vert " << entry.vert_src << " " << entry.vert_dst
           << " horiz " << entry.horiz_src << " " << entry.horiz_dst << " " << entry.col << " "
           << entry.row << "\n";
  }
}

void write_registry(const PlanarizedReduction& pl, std::ostream& output) {
  RegistryData data;
  data.num_vars = pl.num_vars;
  data.num_clauses = pl.num_clauses;
  for (const GadgetRecord& record : pl.gadgets) {
    data.entries.push_back(RegistryEntry{record.index, record.vert_src, record.vert_dst,
                                         record.horiz_src, record.horiz_dst,
                                         record.crossing.col, record.crossing.row});
  }
  write_registry(data, output);
}

PlanarizedReduction attach_registry(const WeightedBipartiteDigraph& planar_graph,
                                    const RegistryData& data) {
  PlanarizedReduction pl;
  pl.graph = planar_graph;
  pl.num_vars = data.num_vars;
  pl.num_clauses = data.num_clauses;
  const int fan = data.num_vars + data.num_clauses;
  for (const RegistryEntry& entry : data.entries) {
    GadgetRecord record;
    record.index = entry.index;
    record.crossing =
        Crossing{-1, -1, entry.col, entry.row};  // arc indices live only in memory
    record.vert_src = entry.vert_src;
    record.vert_dst = entry.vert_dst;
    record.horiz_src = entry.horiz_src;
    record.horiz_dst = entry.horiz_dst;
    std::string p = "g" + std::to_string(entry.index) + "_";
    record.vertices.eps = planar_graph.id(p + "eps");
    record.vertices.a1 = planar_graph.id(p + "a1");
    record.vertices.a2 = planar_graph.id(p + "a2");
    record.vertices.b1 = planar_graph.id(p + "b1");
    record.vertices.b2 = planar_graph.id(p + "b2");
    record.vertices.g3 = planar_graph.id(p + "g3");
    record.vertices.d3 = planar_graph.id(p + "d3");
    for (int t = 1; t <= fan; ++t) {
      record.vertices.g1.push_back(planar_graph.id(p + "g1_" + std::to_string(t)));
      record.vertices.g2.push_back(planar_graph.id(p + "g2_" + std::to_string(t)));
      record.vertices.d1.push_back(planar_graph.id(p + "d1_" + std::to_string(t)));
      record.vertices.d2.push_back(planar_graph.id(p + "d2_" + std::to_string(t)));
    }
    pl.gadgets.push_back(std::move(record));
  }
  return pl;
}

void write_roles(const ReductionGraph& rg, std::ostream& output) {
  auto roles = rg.roles();
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& [name, role] : roles) lines.emplace_back(name, role.token());
  std::sort(lines.begin(), lines.end());
  write_roles(lines, output);
}

std::vector<std::pair<std::string, std::string>> read_roles(std::istream& input) {
  LineReader reader(input);
  std::vector<std::pair<std::string, std::string>> roles;
  std::string line;
  while (reader.next(line)) {
    auto tokens = tokens_of(line);
    if (tokens.size() < 2) reader.fail("expected '<vertex> <role...>'");
    std::string role = tokens[1];
    for (std::size_t i = 2; i < tokens.size(); ++i) role += " " + tokens[i];
    roles.emplace_back(tokens[0], role);
  }
  return roles;
}

void write_roles(const std::vector<std::pair<std::string, std::string>>& roles,
                 std::ostream& output) {
  for (const auto& [name, role] : roles) output << name << " " << role << "\n";
}

void write_dot(const WeightedBipartiteDigraph& graph, std::ostream& output,
               const RegistryData* clusters) {
  output << "digraph bipartite {\n";
  std::vector<char> clustered(graph.vertex_count(), 0);
  if (clusters) {
    for (const RegistryEntry& entry : clusters->entries) {
      std::string prefix = "g" + std::to_string(entry.index) + "_";
      output << "  subgraph cluster_g" << entry.index << " {\n";
      output << "    label=\"gadget " << entry.index << "\";\n";
      for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (graph.name(v).starts_with(prefix)) {
          output << "    \"" << graph.name(v) << "\";\n";
          clustered[v] = 1;
        }
      }
      output << "  }\n";
    }
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    output << "  \"" << graph.name(v) << "\" [shape="
           << (graph.side(v) == Side::Row ? "box" : "ellipse") << "];\n";
  }
  for (const auto& [src, dst, weight] : graph.sorted_arcs()) {
    output << "  \"" << graph.name(src) << "\" -> \"" << graph.name(dst) << "\" [label=\""
           << weight << "\"];\n";
  }
  output << "}\n";
}

InstanceKind sniff_kind(std::istream& input) {
  LineReader reader(input);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty instance file");
  auto tokens = tokens_of(line);
  input.clear();
  input.seekg(0);
  if (!tokens.empty() && tokens[0] == "game") return InstanceKind::Game;
  if (!tokens.empty() && tokens[0] == "graph") return InstanceKind::Graph;
  throw ParseError(reader.line_number(), "unrecognized instance header: expected 'game' or 'graph'");
}

}  // namespace uor
