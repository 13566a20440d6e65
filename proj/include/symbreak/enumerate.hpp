#pragma once

#include <cstdint>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

inline constexpr int kMaxEnumerationOrder = 6;

/// Upper-triangle adjacency bits in graph6 slot order, first slot most
/// significant. Lexicographic order on bit strings is numeric order on codes.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Least adjacency_code over all vertex permutations. Brute force over n!
/// relabelings, so n is limited to 8 (UnsupportedSize otherwise).
std::uint64_t canonical_code(const Graph& g);

/// One graph per isomorphism class on n vertices (1 <= n <= 6), each given by
/// its canonical form, in increasing canonical-code order.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace symbreak
