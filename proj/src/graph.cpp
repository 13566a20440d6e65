#include "symbreak/graph.hpp"

#include <string>

#include "symbreak/errors.hpp"

namespace symbreak {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw UnsupportedSize("graph order " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxVertices));
  }
  n_ = n;
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw IndexError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return row(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : row(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  const VertexSet all = g.vertices();
  for (int v = 0; v < n; ++v) {
    for (int u : all - g.row(v)) {
      if (u > v) out.add_edge(v, u);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph result;
  result.index_map.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : s & g.vertices()) {
    result.index_map[v] = static_cast<int>(result.vertices.size());
    result.vertices.push_back(v);
  }
  result.graph = Graph(static_cast<int>(result.vertices.size()));
  for (std::size_t i = 0; i < result.vertices.size(); ++i) {
    for (int u : g.row(result.vertices[i]) & s) {
      const int j = result.index_map[u];
      if (j > static_cast<int>(i)) result.graph.add_edge(static_cast<int>(i), j);
    }
  }
  return result;
}

Graph permute_vertices(const Graph& g, std::span<const std::uint8_t> image) {
  if (static_cast<int>(image.size()) != g.order()) {
    throw DegreeError("permutation degree does not match graph order");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(image[u], image[v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

}  // namespace symbreak
