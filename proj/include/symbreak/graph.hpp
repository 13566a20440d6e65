#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "symbreak/vertex_set.hpp"

namespace symbreak {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 (n <= 64). Adjacency is kept as
/// one bitmask row per vertex; rows are symmetric and the diagonal is clear.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws UnsupportedSize for n outside 0..64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  /// Throws ArgumentError for loops and IndexError for out-of-range ids.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// N(v). Throws IndexError when v is out of range.
  VertexSet neighbors(int v) const;
  /// Unchecked variant for hot loops.
  VertexSet row(int v) const { return VertexSet(rows_[v]); }
  int degree(int v) const { return row(v).size(); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// old vertex id -> new id, or -1 when the vertex is not in the subset.
  std::vector<int> index_map;
  /// new vertex id -> old vertex id.
  std::vector<int> vertices;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// The graph obtained by renaming vertex v to image[v].
Graph permute_vertices(const Graph& g, std::span<const std::uint8_t> image);

/// Disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace symbreak
