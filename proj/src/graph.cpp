#include "gg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gg {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n));
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SimpleGraph::Builder& SimpleGraph::Builder::add_edge(Vertex u, Vertex v) {
  check_vertex(adj_.size(), u);
  check_vertex(adj_.size(), v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  adj_.set(u, v);
  adj_.set(v, u);
  return *this;
}

SimpleGraph::Builder& SimpleGraph::Builder::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] != vertices[j]) add_edge(vertices[i], vertices[j]);
  return *this;
}

SimpleGraph SimpleGraph::Builder::build() && { return SimpleGraph(std::move(adj_)); }

SimpleGraph::SimpleGraph(BitMatrix adj) : adj_(std::move(adj)), degrees_(adj_.size(), 0) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    std::size_t d = 0;
    for (std::uint64_t w : adj_.row(v)) d += static_cast<std::size_t>(std::popcount(w));
    degrees_[v] = d;
    total += d;
  }
  edge_count_ = total / 2;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degrees_[v]);
  for_each_bit(row(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

SimpleGraph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph::Builder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

DegreeProfile degree_profile(const SimpleGraph& graph) {
  DegreeProfile p;
  const std::size_t n = graph.order();
  p.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) p.degrees[v] = graph.degree(v);
  if (n == 0) return p;
  const auto it = std::min_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *it;
  p.min_vertex = static_cast<Vertex>(it - p.degrees.begin());
  p.regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                          [&](std::size_t d) { return d == p.min_degree; });
  return p;
}

namespace {

// Level-synchronous BFS over bit rows; returns eccentricity of `source`, or
// nullopt if some vertex is unreachable.
std::optional<std::size_t> eccentricity(const SimpleGraph& graph, Vertex source) {
  const std::size_t stride = graph.stride();
  const std::size_t n = graph.order();
  std::vector<std::uint64_t> visited(stride, 0), frontier(stride, 0), next(stride, 0);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier = visited;
  std::size_t reached = 1;
  std::size_t level = 0;
  while (reached < n) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier, [&](Vertex u) {
      const auto r = graph.row(u);
      for (std::size_t w = 0; w < stride; ++w) next[w] |= r[w];
    });
    std::size_t added = 0;
    for (std::size_t w = 0; w < stride; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      added += static_cast<std::size_t>(std::popcount(next[w]));
    }
    if (added == 0) return std::nullopt;
    reached += added;
    ++level;
    frontier.swap(next);
  }
  return level;
}

}  // namespace

bool is_connected(const SimpleGraph& graph) {
  return graph.order() <= 1 || eccentricity(graph, 0).has_value();
}

std::optional<std::size_t> diameter(const SimpleGraph& graph) {
  std::size_t best = 0;
  for (Vertex v = 0; v < graph.order(); ++v) {
    const auto e = eccentricity(graph, v);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

std::vector<Vertex> dominating_vertices(const SimpleGraph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (graph.degree(v) + 1 == graph.order()) out.push_back(v);
  }
  return out;
}

bool is_complete(const SimpleGraph& graph) {
  const std::size_t n = graph.order();
  return graph.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

PuncturedGraph puncture(const SimpleGraph& graph, std::span<const Edge> drop_edges,
                        std::span<const Vertex> drop_vertices) {
  const std::size_t n = graph.order();
  std::vector<bool> dropped(n, false);
  for (Vertex v : drop_vertices) {
    check_vertex(n, v);
    dropped[v] = true;
  }
  std::vector<Edge> removed;
  for (const Edge& e : drop_edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v || !graph.adjacent(e.u, e.v)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") is not in the graph");
    }
    removed.push_back(Edge::of(e.u, e.v));
  }

  PuncturedGraph out;
  std::vector<Vertex> renumber(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (dropped[v]) continue;
    renumber[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }

  std::sort(removed.begin(), removed.end());
  SimpleGraph::Builder b(out.original.size());
  for (Vertex u = 0; u < n; ++u) {
    if (dropped[u]) continue;
    for_each_bit(graph.row(u), [&](Vertex v) {
      if (u >= v || dropped[v]) return;
      if (!removed.empty() && std::binary_search(removed.begin(), removed.end(), Edge{u, v})) return;
      b.add_edge(renumber[u], renumber[v]);
    });
  }
  out.graph = std::move(b).build();
  return out;
}

SimpleGraph relabel(const SimpleGraph& graph, std::span<const Vertex> perm) {
  if (perm.size() != graph.order()) throw std::invalid_argument("permutation size mismatch");
  SimpleGraph::Builder b(graph.order());
  for (const Edge& e : graph.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

void write_edge_list(const SimpleGraph& graph, std::ostream& out) {
  out << graph.order() << ' ' << graph.size() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const SimpleGraph& graph) {
  std::ostringstream os;
  write_edge_list(graph, os);
  return os.str();
}

SimpleGraph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list: expected header \"n m\"");
  }
  SimpleGraph::Builder b(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge list: endpoint out of range on edge " + std::to_string(i));
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw std::invalid_argument("edge list: trailing data after edges");
  return std::move(b).build();
}

void write_dot(const SimpleGraph& graph, std::span<const std::string> labels,
               const std::string& name, std::ostream& out) {
  out << "graph " << quote(name) << " {\n";
  for (Vertex v = 0; v < graph.order(); ++v) {
    out << "  " << v;
    if (v < labels.size()) out << " [label=" << quote(labels[v]) << "]";
    out << ";\n";
  }
  for (const Edge& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace gg
