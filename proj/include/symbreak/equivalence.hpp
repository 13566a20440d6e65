#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "symbreak/automorphisms.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

struct EquivalenceOptions {
  std::uint64_t budget = 10'000'000;
  AutomorphismOptions automorphisms;
};

/// Same degree and identical element sets.
bool representations_equal(const PermGroup& a, const PermGroup& b);

enum class EquivalenceVerdict {
  equivalent,
  degree_mismatch,
  order_mismatch,
  cycle_type_mismatch,
  no_bijection,
};

std::string_view to_string(EquivalenceVerdict verdict);

struct GroupComparison {
  EquivalenceVerdict verdict = EquivalenceVerdict::no_bijection;
  /// sigma with sigma * a * sigma^-1 = b, present iff verdict == equivalent.
  std::optional<Permutation> bijection;
};

/// Searches for a point bijection conjugating `a` onto `b`.
///
/// Cheap invariants go first (degree, order, multiset of cycle types). The
/// backtracking search then maps points one at a time; a point may only go to
/// a point with the same multiset of cycle lengths through it, and every pair
/// (u, v) must keep the count of elements sending u to v. Full candidates are
/// verified element by element. Throws BudgetExceeded after `budget` nodes.
GroupComparison compare_groups(const PermGroup& a, const PermGroup& b,
                               const EquivalenceOptions& options = {});

/// A bijection V(g1) -> V(g2) conjugating Aut(g1) onto Aut(g2), if any.
std::optional<Permutation> distinguishably_equivalent(const Graph& g1, const Graph& g2,
                                                      const EquivalenceOptions& options = {});

/// An isomorphism g1 -> g2 (images[v] is the image of v), if any.
std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2);

struct EquivalenceClasses {
  /// Corpus indices per class; classes ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// Pairs whose test ran out of budget. They are kept in separate classes.
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;
};

/// Partition of a corpus under distinguishable equivalence. Graphs are bucketed
/// by cheap invariants; inside a bucket each graph is only tested against one
/// representative per existing class. Buckets run in parallel on `jobs`
/// threads; the result does not depend on `jobs`.
EquivalenceClasses equivalence_classes(std::span<const Graph> corpus,
                                       const EquivalenceOptions& options = {}, int jobs = 1);
EquivalenceClasses equivalence_classes(std::span<const PermGroup> groups,
                                       const EquivalenceOptions& options = {}, int jobs = 1);

}  // namespace symbreak
