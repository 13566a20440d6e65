#pragma once

#include <cstddef>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

struct AutomorphismOptions {
  int max_vertices = 40;
  std::size_t max_elements = 1'000'000;
};

/// Aut(G) as an explicit element list.
///
/// Backtracks vertex by vertex (descending degree, then index), restricting
/// each image to vertices with the same degree and neighbour-degree multiset
/// and forward-checking adjacency against every vertex mapped so far.
/// Throws UnsupportedSize above `max_vertices` and GroupTooLarge once more than
/// `max_elements` automorphisms are found.
PermGroup automorphism_group(const Graph& g, const AutomorphismOptions& options = {});

/// Orbits of the group on 0..n-1, ordered by least element.
std::vector<VertexSet> orbits(const PermGroup& group);

/// Elements fixing every vertex of s.
PermGroup pointwise_stabilizer(const PermGroup& group, VertexSet s);
/// Elements mapping s onto itself.
PermGroup setwise_stabilizer(const PermGroup& group, VertexSet s);

/// True when p maps edges to edges and non-edges to non-edges.
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace symbreak
