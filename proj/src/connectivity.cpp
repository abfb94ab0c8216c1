#include "gg/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gg {

namespace {

// Shortest-augmenting-path max flow with unit capacities, run directly on the
// packed adjacency rows. Flow state lives in bit matrices:
//   edge mode:   arc(u, v) set  <=> one unit flows u -> v along edge {u, v}
//   vertex mode: arc(u, v) set  <=> one unit flows out(u) -> in(v),
//                through[v]     <=> one unit flows in(v) -> out(v)
// Paths s-t and s-u-t are seeded greedily before any BFS.
class UnitFlowSolver {
 public:
  explicit UnitFlowSolver(const SimpleGraph& graph)
      : graph_(graph),
        n_(graph.order()),
        stride_(graph.stride()),
        arc_(graph.order()),
        arc_t_(graph.order()),
        row_dirty_(graph.order(), 0),
        through_(graph.order(), 0),
        parent_in_(graph.order()),
        parent_out_(graph.order()),
        visited_in_(graph.stride()),
        visited_out_(graph.stride()) {}

  std::size_t solve(Vertex s, Vertex t, FlowMode mode, std::size_t limit) {
    if (s >= n_ || t >= n_) throw std::invalid_argument("flow endpoint out of range");
    if (s == t) throw std::invalid_argument("flow endpoints must differ");
    if (mode == FlowMode::kVertexDisjoint && graph_.adjacent(s, t)) {
      throw std::invalid_argument("vertex-disjoint flow needs non-adjacent endpoints");
    }
    reset();
    std::size_t flow = seed(s, t, mode, limit);
    if (mode == FlowMode::kEdgeDisjoint) {
      while (flow < limit && augment_edge_mode(s, t)) ++flow;
    } else {
      while (flow < limit && augment_vertex_mode(s, t)) ++flow;
    }
    return flow;
  }

 private:
  static constexpr Vertex kOwnSide = static_cast<Vertex>(-1);

  void set_arc(Vertex u, Vertex v) {
    arc_.set(u, v);
    arc_t_.set(v, u);
    mark(u);
    mark(v);
  }
  void clear_arc(Vertex u, Vertex v) {
    arc_.reset(u, v);
    arc_t_.reset(v, u);
  }
  void mark(Vertex r) {
    if (!row_dirty_[r]) {
      row_dirty_[r] = 1;
      dirty_.push_back(r);
    }
  }

  void reset() {
    for (Vertex r : dirty_) {
      std::fill(arc_.row(r).begin(), arc_.row(r).end(), 0);
      std::fill(arc_t_.row(r).begin(), arc_t_.row(r).end(), 0);
      row_dirty_[r] = 0;
      through_[r] = 0;
    }
    dirty_.clear();
  }

  std::size_t seed(Vertex s, Vertex t, FlowMode mode, std::size_t limit) {
    std::size_t flow = 0;
    if (flow < limit && mode == FlowMode::kEdgeDisjoint && graph_.adjacent(s, t)) {
      set_arc(s, t);
      ++flow;
    }
    const auto rs = graph_.row(s);
    const auto rt = graph_.row(t);
    for (std::size_t w = 0; w < stride_ && flow < limit; ++w) {
      for (std::uint64_t bits = rs[w] & rt[w]; bits != 0 && flow < limit; bits &= bits - 1) {
        const auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        set_arc(s, u);
        set_arc(u, t);
        if (mode == FlowMode::kVertexDisjoint) through_[u] = 1;
        ++flow;
      }
    }
    return flow;
  }

  static bool test(const std::vector<std::uint64_t>& bits, Vertex v) {
    return (bits[v / 64] >> (v % 64)) & 1U;
  }
  static void set(std::vector<std::uint64_t>& bits, Vertex v) {
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  bool augment_edge_mode(Vertex s, Vertex t) {
    std::fill(visited_in_.begin(), visited_in_.end(), 0);
    set(visited_in_, s);
    queue_.clear();
    queue_.push_back(s);
    for (std::size_t head = 0; head < queue_.size() && !test(visited_in_, t); ++head) {
      const Vertex u = queue_[head];
      const auto adj = graph_.row(u);
      const auto used = arc_.row(u);
      for (std::size_t w = 0; w < stride_; ++w) {
        std::uint64_t cand = adj[w] & ~used[w] & ~visited_in_[w];
        visited_in_[w] |= cand;
        for (; cand != 0; cand &= cand - 1) {
          const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(cand)));
          parent_in_[v] = u;
          queue_.push_back(v);
        }
      }
    }
    if (!test(visited_in_, t)) return false;
    for (Vertex v = t; v != s;) {
      const Vertex u = parent_in_[v];
      if (arc_.test(v, u)) {
        clear_arc(v, u);  // cancel opposite unit
      } else {
        set_arc(u, v);
      }
      v = u;
    }
    return true;
  }

  // Residual BFS on the split graph. Queue entries encode (vertex << 1 | side)
  // with side 0 = in, 1 = out.
  bool augment_vertex_mode(Vertex s, Vertex t) {
    std::fill(visited_in_.begin(), visited_in_.end(), 0);
    std::fill(visited_out_.begin(), visited_out_.end(), 0);
    set(visited_out_, s);
    set(visited_in_, s);
    queue_.clear();
    queue_.push_back(s << 1 | 1U);
    bool found = false;
    for (std::size_t head = 0; head < queue_.size() && !found; ++head) {
      const Vertex node = queue_[head];
      const Vertex v = node >> 1;
      if (node & 1U) {
        // out(v) -> in(w) along unused arcs.
        const auto adj = graph_.row(v);
        const auto used = arc_.row(v);
        for (std::size_t w = 0; w < stride_; ++w) {
          std::uint64_t cand = adj[w] & ~used[w] & ~visited_in_[w];
          visited_in_[w] |= cand;
          for (; cand != 0; cand &= cand - 1) {
            const auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(cand)));
            parent_in_[x] = v;
            queue_.push_back(x << 1);
          }
        }
        // out(v) -> in(v) undoes a used internal arc.
        if (through_[v] && !test(visited_in_, v)) {
          set(visited_in_, v);
          parent_in_[v] = kOwnSide;
          queue_.push_back(v << 1);
        }
        found = test(visited_in_, t);
      } else {
        if (v == t) {
          found = true;
          break;
        }
        // in(v) -> out(v) through a free internal arc.
        if (!through_[v] && !test(visited_out_, v)) {
          set(visited_out_, v);
          parent_out_[v] = kOwnSide;
          queue_.push_back(v << 1 | 1U);
        }
        // in(v) -> out(u) undoes flow on arc out(u) -> in(v).
        const auto incoming = arc_t_.row(v);
        for (std::size_t w = 0; w < stride_; ++w) {
          std::uint64_t cand = incoming[w] & ~visited_out_[w];
          visited_out_[w] |= cand;
          for (; cand != 0; cand &= cand - 1) {
            const auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(cand)));
            parent_out_[u] = v;
            queue_.push_back(u << 1 | 1U);
          }
        }
      }
    }
    if (!found) return false;

    Vertex v = t;
    bool at_out = false;
    while (!(at_out && v == s)) {
      if (!at_out) {
        const Vertex p = parent_in_[v];
        if (p == kOwnSide) {
          through_[v] = 0;
        } else {
          set_arc(p, v);
          v = p;
        }
        at_out = true;
      } else {
        const Vertex p = parent_out_[v];
        if (p == kOwnSide) {
          through_[v] = 1;
          mark(v);
        } else {
          clear_arc(v, p);
          v = p;
        }
        at_out = false;
      }
    }
    return true;
  }

  const SimpleGraph& graph_;
  std::size_t n_;
  std::size_t stride_;
  BitMatrix arc_;
  BitMatrix arc_t_;
  std::vector<char> row_dirty_;
  std::vector<Vertex> dirty_;
  std::vector<char> through_;
  std::vector<Vertex> parent_in_;
  std::vector<Vertex> parent_out_;
  std::vector<std::uint64_t> visited_in_;
  std::vector<std::uint64_t> visited_out_;
  std::vector<Vertex> queue_;
};

void require_connected_with_edge(const SimpleGraph& graph) {
  if (graph.size() == 0 || !is_connected(graph)) {
    throw std::invalid_argument("minimality checks need a connected graph with at least one edge");
  }
}

template <typename Connectivity>
MinimalityResult brute_force_minimality(const SimpleGraph& graph, Connectivity connectivity) {
  require_connected_with_edge(graph);
  MinimalityResult result;
  result.connectivity = connectivity(graph);
  result.holds = true;
  for (const Edge& e : graph.edges()) {
    const std::size_t after = connectivity(puncture(graph, std::span(&e, 1), {}).graph);
    if (after + 1 != result.connectivity) {
      result.holds = false;
      result.witness = e;
      result.witness_connectivity = after;
      break;
    }
  }
  return result;
}

}  // namespace

std::size_t max_flow_unit(const SimpleGraph& graph, Vertex s, Vertex t, bool node_capacities) {
  return max_flow_unit(graph, s, t,
                       node_capacities ? FlowMode::kVertexDisjoint : FlowMode::kEdgeDisjoint,
                       kUnbounded);
}

std::size_t max_flow_unit(const SimpleGraph& graph, Vertex s, Vertex t, FlowMode mode,
                          std::size_t limit) {
  UnitFlowSolver solver(graph);
  return solver.solve(s, t, mode, limit);
}

std::size_t edge_connectivity(const SimpleGraph& graph) {
  const std::size_t n = graph.order();
  if (n <= 1 || !is_connected(graph)) return 0;
  // A minimum cut separates vertex 0 from some t; kappa' <= delta caps every flow.
  std::size_t best = degree_profile(graph).min_degree;
  UnitFlowSolver solver(graph);
  for (Vertex t = 1; t < n && best > 0; ++t) {
    best = std::min(best, solver.solve(0, t, FlowMode::kEdgeDisjoint, best));
  }
  return best;
}

std::size_t vertex_connectivity(const SimpleGraph& graph) {
  const std::size_t n = graph.order();
  if (n <= 1) return 0;
  if (is_complete(graph)) return n - 1;
  if (!is_connected(graph)) return 0;
  // Some vertex among the first kappa + 1 lies outside a minimum separator,
  // and is separated by it from one of its non-neighbours.
  std::size_t best = degree_profile(graph).min_degree;
  UnitFlowSolver solver(graph);
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex w = 0; w < n && best > 0; ++w) {
      if (w == i || graph.adjacent(i, w) || w < i) continue;
      best = std::min(best, solver.solve(i, w, FlowMode::kVertexDisjoint, best));
    }
  }
  return best;
}

MinimalityResult is_minimally_edge_connected(const SimpleGraph& graph) {
  return brute_force_minimality(graph, [](const SimpleGraph& g) { return edge_connectivity(g); });
}

MinimalityResult is_minimally_connected(const SimpleGraph& graph) {
  return brute_force_minimality(graph, [](const SimpleGraph& g) { return vertex_connectivity(g); });
}

bool minimally_edge_connected_fast(const SimpleGraph& graph) {
  if (is_complete(graph)) throw std::invalid_argument("fast decider needs a non-complete graph");
  const std::vector<Vertex> dominating = dominating_vertices(graph);
  if (dominating.empty()) throw std::invalid_argument("fast decider needs a dominating vertex");
  if (dominating.size() != 1) return false;
  return degree_profile(puncture(graph, {}, dominating).graph).regular;
}

ConnectivityReport connectivity_report(const SimpleGraph& graph, bool with_minimality) {
  ConnectivityReport r;
  r.order = graph.order();
  r.size = graph.size();
  r.min_degree = degree_profile(graph).min_degree;
  r.vertex_connectivity = vertex_connectivity(graph);
  r.edge_connectivity = edge_connectivity(graph);
  r.diameter = diameter(graph);
  r.dominating = dominating_vertices(graph).size();
  if (with_minimality && graph.size() > 0 && r.diameter.has_value()) {
    r.minimally_edge_connected = is_minimally_edge_connected(graph);
    r.minimally_connected = is_minimally_connected(graph);
  }
  return r;
}

bool whitney_chain_holds(const ConnectivityReport& report) {
  return report.vertex_connectivity <= report.edge_connectivity &&
         report.edge_connectivity <= report.min_degree;
}

bool diameter_law_holds(const ConnectivityReport& report) {
  if (!report.diameter || *report.diameter > 2) return true;
  return report.edge_connectivity == report.min_degree;
}

}  // namespace gg
