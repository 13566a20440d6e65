#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/metrics.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

/// Structural facts about graphs with a determining pair {x, y}, each checked
/// as a for-all statement over the explicit automorphism list.
enum class Claim {
  /// No non-identity automorphism fixes both x and y.
  pair_stabilizer_trivial,
  /// Elements containing (x y), (x v)(y) or (y v)(x) are involutions.
  swap_extensions_involutive,
  /// At most one automorphism contains the cycle (x y).
  unique_swap_extension,
  /// Given (x y)(d1 d2)... and (x d1)(y)..., no element has the 3-cycle
  /// (x y d1) or (x d1 y).
  no_three_cycle_through_pair,
  /// Given (x y)(d1 d2)... and (x d1)(y)..., no element contains (y d1)(x).
  no_opposite_transposition,
  /// Given (x y)(d1 d2)(d3 d4)... and (x di)(y)..., no element contains
  /// (x di dj)(y), (x dj di)(y), (y di dj)(x) or (y dj di)(x).
  no_three_cycle_on_flipped_points,
  /// Given (x y)(d1 d2)...: (x d1)(y)... exists iff (y d2)(x)... exists.
  transposition_correspondence,
  /// Given (x d1)(y)... and (x d2)(y)..., no element contains (x d1)(y)(d2)
  /// or (x d2)(y)(d1).
  no_fixed_partner_transposition,
  /// With D = 2 and Det = 2 the bare transposition (x y) is not an automorphism.
  bare_swap_absent,
  /// With D = 2 and Det = 2 every extension of (x y) also flips a
  /// neighbour-non-neighbour pair of {x, y}.
  swap_flips_nn_pair,
};

inline constexpr std::array<Claim, 10> kAllClaims = {
    Claim::pair_stabilizer_trivial,      Claim::swap_extensions_involutive,
    Claim::unique_swap_extension,        Claim::no_three_cycle_through_pair,
    Claim::no_opposite_transposition,    Claim::no_three_cycle_on_flipped_points,
    Claim::transposition_correspondence, Claim::no_fixed_partner_transposition,
    Claim::bare_swap_absent,             Claim::swap_flips_nn_pair,
};

std::string_view to_string(Claim claim);

struct ClaimOutcome {
  Claim claim = Claim::pair_stabilizer_trivial;
  /// The hypothesis was met at least once (or the claim has none).
  bool applicable = false;
  /// Number of hypothesis instances examined.
  std::size_t instances = 0;
  bool passed = true;
  /// On failure: the automorphisms that realise the hypothesis and the
  /// forbidden conclusion, in that order.
  std::vector<Permutation> witnesses;
  std::string detail;
};

struct PropReport {
  std::string graph6;
  int x = 0;
  int y = 0;
  std::vector<ClaimOutcome> outcomes;

  bool passed() const;
  const ClaimOutcome& outcome(Claim claim) const;
};

/// Runs every claim for the pair (x, y). `distinguishing` and `determining`
/// gate the claims that need D = 2 and Det = 2; when absent those claims are
/// reported as not applicable. Throws NotDeterminingPair unless {x, y} is a
/// determining set of two distinct vertices.
PropReport check_prop_suite(const Graph& g, const PermGroup& group, int x, int y,
                            std::optional<int> distinguishing = std::nullopt,
                            std::optional<int> determining = std::nullopt);
/// Computes Aut(g), D and Det first.
PropReport check_prop_suite(const Graph& g, int x, int y, const AnalyzeOptions& options = {});

struct RestrictionOptions {
  int max_colors = 3;
  /// Colourings with k^n at most this many are enumerated exhaustively.
  std::uint64_t exhaustive_limit = 1U << 16;
  int samples = 2000;
  std::uint64_t seed = 1;
  AnalyzeOptions analyze;
};

/// For a vertex set h whose members share the same neighbourhood outside h:
/// every distinguishing colouring of g (the D-witness plus enumerated or
/// sampled colourings with up to max_colors colours) restricts to a
/// distinguishing colouring of the induced subgraph on h. Returns false on the
/// first counterexample. Throws NotApplicable when the neighbourhood
/// hypothesis fails.
bool check_restriction_lemma(const Graph& g, VertexSet h, const RestrictionOptions& options = {});

/// For distinguishably equivalent g1, g2: D(g1) == D(g2), and the D-witness of
/// g1 carried over by the conjugating bijection distinguishes g2. Throws
/// PreconditionError when the graphs are not equivalent.
bool check_equivalence_preserves_distinguishing(const Graph& g1, const Graph& g2,
                                                const AnalyzeOptions& options = {});

struct FamilyCheckOptions {
  /// Run the exact minimality search for rho at n = 3 (long-running).
  bool exact_minimality = false;
  int random_subsets = 10;
  std::uint64_t seed = 1;
  SearchOptions search;
};

/// Checks on the clique-with-tails graph for one n in 1..3.
struct FamilyBoundRecord {
  int n = 0;
  int vertices = 0;
  std::uint64_t aut_order = 0;
  int det_formula = 0;  // 2^n - 1
  int rho_formula = 0;  // n * 2^(n-1)
  std::optional<int> det_exact;
  VertexSet clique_minus_one;
  bool clique_minus_one_determining = false;
  int random_subsets_tested = 0;
  bool random_subsets_not_determining = true;
  /// Red vertices of the colouring that spells the binary name of every clique
  /// vertex along its tail.
  VertexSet string_class;
  bool string_class_distinguishing = false;
  std::optional<int> rho_exact;
  /// n = 1: K2 without tails.
  bool degenerate = false;

  bool passed() const;
};

/// Throws ArgumentError for n outside 1..3 and BudgetExceeded when the exact
/// n = 3 search runs out of budget.
FamilyBoundRecord family_lower_bound_check(int n, const FamilyCheckOptions& options = {});

/// The string colouring class of clique_with_tails(n).
VertexSet string_coloring_class(int n);

}  // namespace symbreak
