#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "gg/graph.hpp"

namespace gg {

enum class FlowMode {
  kEdgeDisjoint,    // each undirected edge carries one unit
  kVertexDisjoint,  // each internal vertex carries one unit (node splitting)
};

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Maximum number of edge-disjoint (node_capacities = false) or internally
// vertex-disjoint (node_capacities = true) s-t paths. Requires s != t, and
// s not adjacent to t in vertex mode; throws std::invalid_argument otherwise.
std::size_t max_flow_unit(const SimpleGraph& graph, Vertex s, Vertex t, bool node_capacities);

// Same, but stops augmenting once `limit` paths are found, so the result is
// min(max flow, limit). Exact whenever the true value is below the limit.
std::size_t max_flow_unit(const SimpleGraph& graph, Vertex s, Vertex t, FlowMode mode,
                          std::size_t limit);

// kappa'(G): 0 when disconnected or n <= 1.
std::size_t edge_connectivity(const SimpleGraph& graph);

// kappa(G): n - 1 on complete graphs (K_1 gives 0), 0 when disconnected.
std::size_t vertex_connectivity(const SimpleGraph& graph);

struct MinimalityResult {
  bool holds = false;
  std::size_t connectivity = 0;  // kappa or kappa' of the input
  // First edge (lexicographic) whose deletion does not drop connectivity by
  // exactly one, with the connectivity measured after deleting it.
  std::optional<Edge> witness;
  std::size_t witness_connectivity = 0;
};

// Brute force: recomputes kappa'(G - e) from scratch for every edge e.
// Requires a connected graph with at least one edge.
MinimalityResult is_minimally_edge_connected(const SimpleGraph& graph);

// Decides minimal edge connectivity for a non-complete graph with at least one
// dominating vertex: true iff the dominating vertex x is unique and G - x is
// regular. Throws std::invalid_argument outside that class.
bool minimally_edge_connected_fast(const SimpleGraph& graph);

// Brute force on kappa; same preconditions as is_minimally_edge_connected.
MinimalityResult is_minimally_connected(const SimpleGraph& graph);

struct ConnectivityReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t vertex_connectivity = 0;
  std::size_t edge_connectivity = 0;
  std::optional<std::size_t> diameter;  // nullopt when disconnected
  std::size_t dominating = 0;
  // Only computed for connected graphs with at least one edge.
  std::optional<MinimalityResult> minimally_edge_connected;
  std::optional<MinimalityResult> minimally_connected;
};

ConnectivityReport connectivity_report(const SimpleGraph& graph, bool with_minimality = true);

// kappa <= kappa' <= delta.
bool whitney_chain_holds(const ConnectivityReport& report);
// diameter <= 2 implies kappa' = delta.
bool diameter_law_holds(const ConnectivityReport& report);

}  // namespace gg
