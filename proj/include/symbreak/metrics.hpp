#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/automorphisms.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

/// Node cap shared by one exhaustive search call. Exceeding it throws
/// BudgetExceeded; a search never returns a number it has not proven.
struct SearchOptions {
  std::uint64_t budget = 100'000'000;
};

/// Total vertex colouring with colour ids in 0..k-1.
class Coloring {
 public:
  /// Throws ArgumentError when some colour id is outside 0..k-1.
  Coloring(std::vector<int> colors, int k);
  /// Vertices of `red` get colour 1, every other vertex colour 0.
  static Coloring two_coloring(int degree, VertexSet red);

  int degree() const { return static_cast<int>(colors_.size()); }
  int k() const { return k_; }
  int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const int> colors() const { return colors_; }
  VertexSet color_class(int c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int k_ = 1;
};

/// True when some cycle of p of length >= 2 carries two different colours.
/// Throws DegreeError on mismatched degrees.
bool is_broken(const Permutation& p, const Coloring& c);

/// True when c(p(v)) == c(v) for every v.
bool preserves(const Permutation& p, const Coloring& c);

/// Every non-identity element is broken by c.
bool is_distinguishing(const PermGroup& group, const Coloring& c);

struct DistinguishingResult {
  int number = 1;
  Coloring witness{{}, 1};
};

/// A distinguishing colouring with at most k colours, if one exists.
///
/// Depth-first over colour assignments. Every not-yet-broken element tracks how
/// many of its moved points are still uncoloured; a branch dies as soon as one
/// element has all its moved points coloured without being broken. The next
/// vertex comes from the live element closest to that state, and colours follow
/// restricted growth (a vertex may open at most one new colour).
std::optional<Coloring> find_distinguishing_coloring(const PermGroup& group, int k,
                                                     const SearchOptions& options = {});

DistinguishingResult distinguishing_number(const PermGroup& group,
                                           const SearchOptions& options = {});
DistinguishingResult distinguishing_number(const Graph& g, const SearchOptions& options = {},
                                           const AutomorphismOptions& aut = {});

/// The pointwise stabiliser of s is trivial.
bool is_determining_set(const PermGroup& group, VertexSet s);

struct DeterminingResult {
  int number = 0;
  VertexSet witness;
};

/// Minimum determining set by iterative deepening. Each step only branches on
/// one representative per orbit of the current pointwise stabiliser, skipping
/// points that stabiliser already fixes.
DeterminingResult determining_number(const PermGroup& group, const SearchOptions& options = {});
DeterminingResult determining_number(const Graph& g, const SearchOptions& options = {},
                                     const AutomorphismOptions& aut = {});

/// s is determining and every automorphism fixing s setwise fixes it pointwise.
bool is_distinguishing_class(const PermGroup& group, VertexSet s);

struct CostResult {
  int rho = 0;
  VertexSet witness;
  /// Trivial group: rho is reported as 0 with the empty class.
  bool degenerate = false;
};

/// Facts already known about the group, used to skip work.
struct CostHints {
  std::optional<bool> two_distinguishable;
  std::optional<int> determining_number;
};

/// Smallest distinguishing class, or nullopt when the group admits no
/// distinguishing 2-colouring. Candidate sets of each size are generated one
/// per orbit of the stabiliser chain, starting from the determining number.
std::optional<CostResult> cost_number(const PermGroup& group, const SearchOptions& options = {},
                                      const CostHints& hints = {});
std::optional<CostResult> cost_number(const Graph& g, const SearchOptions& options = {},
                                      const AutomorphismOptions& aut = {});

/// Ordered pairs (n1, n2) of distinct vertices outside {v1, v2} with
/// n1 ~ v1, n2 ~ v2, n1 !~ v2, n2 !~ v1, sorted. Throws ArgumentError when
/// v1 == v2 and IndexError when either is out of range.
std::vector<std::pair<int, int>> nn_pairs(const Graph& g, int v1, int v2);

struct AnalyzeOptions {
  AutomorphismOptions automorphisms;
  SearchOptions search;
};

/// Per-graph summary. A metric left empty means its search ran out of budget.
struct SymmetryReport {
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  std::uint64_t aut_order = 1;
  std::optional<DistinguishingResult> distinguishing;
  std::optional<DeterminingResult> determining;
  bool cost_known = false;
  /// Meaningful when cost_known; empty means not 2-distinguishable.
  std::optional<CostResult> cost;

  bool det2_d2_case() const {
    return distinguishing && determining && distinguishing->number == 2 &&
           determining->number == 2;
  }
  /// Set only for the D = 2, Det = 2 case with a known cost.
  std::optional<bool> rho_in_2_4() const {
    if (!det2_d2_case() || !cost_known || !cost) return std::nullopt;
    return cost->rho >= 2 && cost->rho <= 4;
  }
};

SymmetryReport analyze(const Graph& g, const AnalyzeOptions& options = {});
/// Same, reusing an already computed automorphism group.
SymmetryReport analyze(const Graph& g, const PermGroup& group, const AnalyzeOptions& options = {});

}  // namespace symbreak
