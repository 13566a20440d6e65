#pragma once

#include <optional>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak {

enum class FamilyKind { path, cycle, complete, hypercube, clique_with_tails };

struct FamilySpec {
  FamilyKind kind;
  int parameter;
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Builds P_n, C_n, K_n, Q_n, or the clique-with-tails graph.
///
/// clique_with_tails(n) is K_{2^n} where every clique vertex heads a private
/// path of n-1 further edges, n * 2^n vertices in total. Clique vertex i keeps
/// id i; the tail vertex at distance d from it has id d * 2^n + i (see
/// tail_vertex). Throws SpecError for parameters below the family minimum or
/// graphs above kMaxVertices.
Graph generate_family(const FamilySpec& spec);

/// Id of the vertex at distance `depth` (0 = the clique vertex itself) along
/// the tail of clique vertex `clique_vertex` in clique_with_tails(n).
inline int tail_vertex(int n, int clique_vertex, int depth) {
  return depth * (1 << n) + clique_vertex;
}

}  // namespace symbreak
