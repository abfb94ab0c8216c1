#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gg {

using Vertex = std::uint32_t;

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Calls f(i) for every set bit i of a packed word sequence.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
}

// n x n bit matrix, one packed row per vertex.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), words_(n * ((n + 63) / 64), 0) {}

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] |= bit(c); }
  void reset(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] &= ~bit(c); }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }

  bool operator==(const BitMatrix&) const = default;

 private:
  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << (c % 64); }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph (no loops, no multi-edges). Immutable once built.
class SimpleGraph {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t n) : adj_(n) {}

    // Duplicate edges are ignored. Throws on loops or out-of-range endpoints.
    Builder& add_edge(Vertex u, Vertex v);
    Builder& add_clique(std::span<const Vertex> vertices);
    SimpleGraph build() &&;

   private:
    BitMatrix adj_;
  };

  SimpleGraph() = default;

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_.test(u, v); }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::span<const std::uint64_t> row(Vertex v) const { return adj_.row(v); }
  std::size_t stride() const { return adj_.stride(); }

  std::vector<Vertex> neighbors(Vertex v) const;
  // All edges in lexicographic (u, v) order with u < v.
  std::vector<Edge> edges() const;

  bool operator==(const SimpleGraph& other) const { return adj_ == other.adj_; }

 private:
  explicit SimpleGraph(BitMatrix adj);

  BitMatrix adj_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
};

SimpleGraph graph_from_edges(std::size_t n, std::span<const Edge> edges);

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  Vertex min_vertex = 0;  // smallest index attaining min_degree
  bool regular = true;
};

// Single-vertex and empty graphs have min_degree 0 and count as regular.
DegreeProfile degree_profile(const SimpleGraph& graph);

bool is_connected(const SimpleGraph& graph);

// Largest eccentricity; std::nullopt when the graph is disconnected.
// A single vertex has diameter 0.
std::optional<std::size_t> diameter(const SimpleGraph& graph);

std::vector<Vertex> dominating_vertices(const SimpleGraph& graph);

bool is_complete(const SimpleGraph& graph);

struct PuncturedGraph {
  SimpleGraph graph;
  std::vector<Vertex> original;  // new index -> index in the source graph
};

// Deletes the given edges and vertices (with their incident edges) and
// relabels survivors contiguously, preserving their relative order.
PuncturedGraph puncture(const SimpleGraph& graph, std::span<const Edge> drop_edges,
                        std::span<const Vertex> drop_vertices);

// Relabels vertex v as perm[v].
SimpleGraph relabel(const SimpleGraph& graph, std::span<const Vertex> perm);

// Edge-list text: "n m" then one "u v" line per edge, u < v, sorted.
void write_edge_list(const SimpleGraph& graph, std::ostream& out);
std::string to_edge_list(const SimpleGraph& graph);
SimpleGraph read_edge_list(std::istream& in);

// Undirected DOT; `labels` may be empty (vertex indices are used).
void write_dot(const SimpleGraph& graph, std::span<const std::string> labels,
               const std::string& name, std::ostream& out);

}  // namespace gg
