#include "uor/subgraph_search.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace uor {

namespace {

enum class Mark : char { Undecided, Out, In };

template <typename W>
struct ScaledGraph {
  int n = 0;
  int num_rows = 0;
  std::vector<std::vector<std::pair<int, W>>> out;
  std::vector<std::vector<std::pair<int, W>>> in;
  BigInt denominator_lcm = 1;
};

template <typename W>
ScaledGraph<W> scale_graph(const WeightedBipartiteDigraph& graph, const BigInt& lcm) {
  ScaledGraph<W> scaled;
  scaled.n = graph.vertex_count();
  scaled.num_rows = graph.row_count();
  scaled.out.resize(scaled.n);
  scaled.in.resize(scaled.n);
  scaled.denominator_lcm = lcm;
  for (VertexId v = 0; v < scaled.n; ++v) {
    for (const auto& [target, weight] : graph.out(v)) {
      BigInt value = numerator(weight) * (lcm / denominator(weight));
      W w = static_cast<W>(value);
      scaled.out[v].emplace_back(target, w);
      scaled.in[target].emplace_back(v, w);
    }
  }
  return scaled;
}

template <typename W>
class SearchEngine {
 public:
  SearchEngine(ScaledGraph<W> graph, bool strongly_connected, std::uint64_t budget)
      : g_(std::move(graph)),
        strongly_connected_(strongly_connected),
        budget_(budget),
        status_(g_.n, Mark::Undecided),
        committed_(g_.n, W(0)),
        pending_(g_.n, W(0)) {
    for (int v = 0; v < g_.n; ++v) {
      W total = 0;
      for (const auto& [_, w] : g_.out[v]) total += w;
      pending_[v] = total;
      ++undecided_[side_of(v)];
    }
  }

  FindResult run() {
    FindResult result;
    if (dfs()) {
      OutRegularWitness witness;
      for (int v = 0; v < g_.n; ++v) {
        if (status_[v] == Mark::In) witness.members.push_back(v);
      }
      witness.alpha = Rational(BigInt(side_value(0)), g_.denominator_lcm);
      witness.beta = Rational(BigInt(side_value(1)), g_.denominator_lcm);
      result.status = FindStatus::Found;
      result.witness = std::move(witness);
    } else {
      result.status = budget_hit_ ? FindStatus::BudgetExhausted : FindStatus::None;
    }
    result.nodes_expanded = nodes_;
    return result;
  }

 private:
  int side_of(int v) const { return v < g_.num_rows ? 0 : 1; }

  W side_value(int side) const {
    for (int v = 0; v < g_.n; ++v) {
      if (side_of(v) == side && status_[v] == Mark::In) return committed_[v];
    }
    return W(0);
  }

  void apply(int v, Mark mark) {
    status_[v] = mark;
    trail_.push_back(v);
    --undecided_[side_of(v)];
    if (mark == Mark::In) ++in_count_[side_of(v)];
    for (const auto& [src, w] : g_.in[v]) {
      pending_[src] -= w;
      if (mark == Mark::In) committed_[src] += w;
    }
  }

  void undo_to(std::size_t trail_mark) {
    while (trail_.size() > trail_mark) {
      int v = trail_.back();
      trail_.pop_back();
      Mark mark = status_[v];
      for (const auto& [src, w] : g_.in[v]) {
        pending_[src] += w;
        if (mark == Mark::In) committed_[src] -= w;
      }
      if (mark == Mark::In) --in_count_[side_of(v)];
      ++undecided_[side_of(v)];
      status_[v] = Mark::Undecided;
    }
  }

  // Fixpoint of conflict checks and forced decisions. Returns false on
  // conflict; applied forcings stay on the trail for the caller to undo.
  bool propagate() {
    while (true) {
      std::array<std::optional<W>, 2> lo;
      std::array<std::optional<W>, 2> hi;
      for (int v = 0; v < g_.n; ++v) {
        if (status_[v] != Mark::In) continue;
        int s = side_of(v);
        W ceiling = committed_[v] + pending_[v];
        if (!lo[s] || committed_[v] > *lo[s]) lo[s] = committed_[v];
        if (!hi[s] || ceiling < *hi[s]) hi[s] = ceiling;
      }
      for (int s = 0; s < 2; ++s) {
        if (lo[s] && *lo[s] > *hi[s]) return false;
        if (in_count_[s] == 0 && undecided_[s] == 0) return false;
      }

      std::vector<std::pair<int, Mark>> forced;
      auto force = [&forced, this](int v, Mark mark) {
        if (status_[v] != Mark::Undecided) return;
        for (const auto& [seen, m] : forced) {
          if (seen == v) {
            return;  // conflicting double-force surfaces on the next pass
          }
        }
        forced.emplace_back(v, mark);
      };

      for (int v = 0; v < g_.n; ++v) {
        int s = side_of(v);
        W ceiling = committed_[v] + pending_[v];
        if (status_[v] == Mark::In) {
          if (strongly_connected_ && ceiling == 0) return false;
        } else {
          if (hi[s] && committed_[v] > *hi[s]) return false;
          if (status_[v] == Mark::Undecided) {
            if (lo[s] && ceiling < *lo[s]) {
              force(v, Mark::Out);
            } else if (strongly_connected_ && ceiling == 0) {
              force(v, Mark::Out);
            }
          }
        }
      }

      // With a side's value pinned, members at (or needing all of) their
      // remaining arcs force their undecided out-neighbors.
      for (int s = 0; s < 2; ++s) {
        if (!lo[s] || *lo[s] != *hi[s]) continue;
        const W value = *lo[s];
        for (int v = 0; v < g_.n; ++v) {
          if (side_of(v) != s || status_[v] != Mark::In || pending_[v] == 0) continue;
          if (committed_[v] == value) {
            for (const auto& [target, _] : g_.out[v]) {
              if (status_[target] == Mark::Undecided) force(target, Mark::Out);
            }
          } else if (committed_[v] + pending_[v] == value) {
            for (const auto& [target, _] : g_.out[v]) {
              if (status_[target] == Mark::Undecided) force(target, Mark::In);
            }
          }
        }
      }

      for (int s = 0; s < 2; ++s) {
        if (in_count_[s] == 0 && undecided_[s] == 1) {
          for (int v = 0; v < g_.n; ++v) {
            if (side_of(v) == s && status_[v] == Mark::Undecided) force(v, Mark::In);
          }
        }
      }

      if (forced.empty()) return true;
      for (const auto& [v, mark] : forced) {
        if (status_[v] != Mark::Undecided) {
          if (status_[v] != mark) return false;
          continue;
        }
        apply(v, mark);
      }
    }
  }

  bool dfs() {
    int v = -1;
    for (int candidate = g_.n - 1; candidate >= 0; --candidate) {
      if (status_[candidate] == Mark::Undecided) {
        v = candidate;
        break;
      }
    }
    if (v < 0) return in_count_[0] > 0 && in_count_[1] > 0;

    for (Mark mark : {Mark::Out, Mark::In}) {
      if (nodes_ >= budget_) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      std::size_t trail_mark = trail_.size();
      apply(v, mark);
      if (propagate() && dfs()) return true;
      undo_to(trail_mark);
      if (budget_hit_) return false;
    }
    return false;
  }

  ScaledGraph<W> g_;
  bool strongly_connected_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<Mark> status_;
  std::vector<W> committed_;
  std::vector<W> pending_;
  std::array<int, 2> in_count_{0, 0};
  std::array<int, 2> undecided_{0, 0};
  std::vector<int> trail_;
};

}  // namespace

FindResult find_undominated_out_regular(const WeightedBipartiteDigraph& graph,
                                        std::uint64_t node_budget) {
  if (graph.row_count() == 0 || graph.col_count() == 0) {
    throw std::invalid_argument("graph must have both parts non-empty");
  }

  BigInt lcm = 1;
  BigInt total = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& [_, weight] : graph.out(v)) {
      lcm = boost::multiprecision::lcm(lcm, denominator(weight));
    }
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& [_, weight] : graph.out(v)) {
      total += numerator(weight) * (lcm / denominator(weight));
    }
  }

  const bool strongly_connected = is_strongly_connected(graph);
  FindResult result;
  if (total <= std::numeric_limits<long long>::max() / 4) {
    SearchEngine<long long> engine(scale_graph<long long>(graph, lcm), strongly_connected,
                                   node_budget);
    result = engine.run();
  } else {
    SearchEngine<BigInt> engine(scale_graph<BigInt>(graph, lcm), strongly_connected, node_budget);
    result = engine.run();
  }

  // The checker is the arbiter; a found witness must pass it.
  if (result.status == FindStatus::Found) {
    auto verdict = check_witness(graph, result.witness->members);
    if (!verdict.ok || verdict.regular->first != result.witness->alpha ||
        verdict.regular->second != result.witness->beta) {
      throw std::logic_error("internal error: search produced a subset the checker rejects");
    }
  }
  return result;
}

std::vector<OutRegularWitness> enumerate_witnesses_naive(const WeightedBipartiteDigraph& graph) {
  const int n = graph.vertex_count();
  if (n > 25) throw std::invalid_argument("naive witness enumeration limited to 25 vertices");
  std::vector<OutRegularWitness> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> subset;
    bool has_row = false;
    bool has_col = false;
    for (int v = 0; v < n; ++v) {
      if (mask & (std::uint64_t{1} << v)) {
        subset.push_back(v);
        (graph.side(v) == Side::Row ? has_row : has_col) = true;
      }
    }
    if (!has_row || !has_col) continue;
    WitnessCheck verdict = check_witness(graph, subset);
    if (verdict.ok) {
      found.push_back(OutRegularWitness{std::move(subset), verdict.regular->first,
                                        verdict.regular->second});
    }
  }
  return found;
}

}  // namespace uor
