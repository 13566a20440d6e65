#include "symbreak/metrics.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <unordered_set>

#include "symbreak/errors.hpp"
#include "symbreak/graph6.hpp"

namespace symbreak {
namespace {

// Non-identity elements of a group as flat image / inverse-image tables.
struct FlatGroup {
  int n = 0;
  int count = 0;
  std::vector<std::uint8_t> img;
  std::vector<std::uint8_t> inv;

  explicit FlatGroup(const PermGroup& group) : n(group.degree()) {
    for (const auto& p : group.elements()) {
      if (p.is_identity()) continue;
      const auto images = p.images();
      img.insert(img.end(), images.begin(), images.end());
      inv.resize(img.size());
      for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(count) * n + images[v]] =
          static_cast<std::uint8_t>(v);
      ++count;
    }
  }

  int image(int e, int v) const { return img[static_cast<std::size_t>(e) * n + v]; }
  int preimage(int e, int v) const { return inv[static_cast<std::size_t>(e) * n + v]; }
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class ColoringSearch {
 public:
  ColoringSearch(const FlatGroup& group, int k, Budget& budget)
      : g_(group), k_(k), budget_(budget) {
    const int n = g_.n;
    color_.assign(static_cast<std::size_t>(n), -1);
    remaining_.assign(static_cast<std::size_t>(g_.count), 0);
    for (int e = 0; e < g_.count; ++e) {
      for (int v = 0; v < n; ++v) remaining_[e] += g_.image(e, v) != v ? 1 : 0;
    }
    alive_.resize(static_cast<std::size_t>(n) + 2);
    alive_[0].resize(static_cast<std::size_t>(g_.count));
    std::iota(alive_[0].begin(), alive_[0].end(), 0);
  }

  std::optional<std::vector<int>> run() {
    if (!descend(0, 0)) return std::nullopt;
    std::vector<int> out = color_;
    for (int& c : out) c = std::max(c, 0);
    return out;
  }

 private:
  bool descend(std::size_t depth, int used) {
    budget_.tick();
    const std::vector<int>& alive = alive_[depth];
    if (alive.empty()) return true;

    int closest = alive.front();
    for (int e : alive) {
      if (remaining_[e] < remaining_[closest]) closest = e;
    }
    int v = 0;
    while (g_.image(closest, v) == v || color_[v] >= 0) ++v;

    std::vector<int>& next = alive_[depth + 1];
    const int top = std::min(k_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      color_[v] = c;
      next.clear();
      bool dead = false;
      for (int e : alive) {
        const int w = g_.image(e, v);
        if (w == v) {
          next.push_back(e);
          continue;
        }
        const int u = g_.preimage(e, v);
        if ((color_[w] >= 0 && color_[w] != c) || (color_[u] >= 0 && color_[u] != c)) continue;
        if (--remaining_[e] == 0) dead = true;
        next.push_back(e);
      }
      const bool found = !dead && descend(depth + 1, std::max(used, c + 1));
      for (int e : next) {
        if (g_.image(e, v) != v) ++remaining_[e];
      }
      if (found) return true;
    }
    color_[v] = -1;
    return false;
  }

  const FlatGroup& g_;
  int k_;
  Budget& budget_;
  std::vector<int> color_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> alive_;
};

std::optional<Coloring> find_coloring(const FlatGroup& flat, int k, Budget& budget) {
  if (k < 1) return std::nullopt;
  ColoringSearch search(flat, k, budget);
  auto colors = search.run();
  if (!colors) return std::nullopt;
  return Coloring(std::move(*colors), k);
}

// Orbit representatives (least members) of the subgroup given by element ids,
// restricted to `domain`.
std::vector<int> orbit_representatives(const FlatGroup& g, const std::vector<int>& sub,
                                       VertexSet domain) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : sub) {
    for (int v : domain) {
      const int a = find(v);
      const int b = find(g.image(e, v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> reps;
  for (int v : domain) {
    if (find(v) == v) reps.push_back(v);
  }
  return reps;
}

std::vector<int> stabilize(const FlatGroup& g, const std::vector<int>& sub, int v) {
  std::vector<int> out;
  for (int e : sub) {
    if (g.image(e, v) == v) out.push_back(e);
  }
  return out;
}

std::vector<int> all_ids(const FlatGroup& g) {
  std::vector<int> ids(static_cast<std::size_t>(g.count));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

class DeterminingSearch {
 public:
  DeterminingSearch(const FlatGroup& g, Budget& budget) : g_(g), budget_(budget) {}

  DeterminingResult run() {
    for (int k = 0; k <= g_.n; ++k) {
      visited_.clear();
      VertexSet witness;
      if (descend(VertexSet(), all_ids(g_), k, witness)) return {k, witness};
    }
    // Unreachable: the full vertex set is always determining.
    return {g_.n, VertexSet::range(g_.n)};
  }

 private:
  bool descend(VertexSet chosen, const std::vector<int>& stabilizer, int left,
               VertexSet& witness) {
    budget_.tick();
    if (stabilizer.empty()) {
      witness = chosen;
      return true;
    }
    if (left == 0 || !visited_.insert(chosen.bits()).second) return false;
    VertexSet moved;
    for (int e : stabilizer) {
      for (int v = 0; v < g_.n; ++v) {
        if (g_.image(e, v) != v) moved.insert(v);
      }
    }
    for (int r : orbit_representatives(g_, stabilizer, moved)) {
      VertexSet next = chosen;
      next.insert(r);
      if (descend(next, stabilize(g_, stabilizer, r), left - 1, witness)) return true;
    }
    return false;
  }

  const FlatGroup& g_;
  Budget& budget_;
  std::unordered_set<std::uint64_t> visited_;
};

class DistinguishingClassSearch {
 public:
  DistinguishingClassSearch(const FlatGroup& g, Budget& budget) : g_(g), budget_(budget) {
    // Index elements by the image of each point when the table stays small.
    constexpr std::size_t kMaxIndexEntries = 1U << 23;
    if (static_cast<std::size_t>(g_.count) * g_.n <= kMaxIndexEntries) {
      by_image_.resize(static_cast<std::size_t>(g_.n) * g_.n);
      for (int e = 0; e < g_.count; ++e) {
        for (int v = 0; v < g_.n; ++v) by_image_[v * g_.n + g_.image(e, v)].push_back(e);
      }
    }
  }

  std::optional<VertexSet> find_of_size(int size) {
    size_ = size;
    visited_.clear();
    tested_.clear();
    found_.reset();
    descend(VertexSet(), all_ids(g_), -1);
    return found_;
  }

 private:
  void descend(VertexSet chosen, const std::vector<int>& stabilizer, int last_tail) {
    budget_.tick();
    if (chosen.size() == size_) {
      if (stabilizer.empty() && tested_.insert(chosen.bits()).second &&
          setwise_fixes_pointwise(chosen)) {
        found_ = chosen;
      }
      return;
    }
    const VertexSet free = VertexSet::range(g_.n) - chosen;
    if (stabilizer.empty()) {
      const int need = size_ - chosen.size();
      for (int v : free) {
        if (v <= last_tail) continue;
        if ((free - VertexSet::range(v + 1)).size() < need - 1) break;
        VertexSet next = chosen;
        next.insert(v);
        descend(next, stabilizer, v);
        if (found_) return;
      }
      return;
    }
    if (!visited_.insert(chosen.bits()).second) return;
    for (int r : orbit_representatives(g_, stabilizer, free)) {
      VertexSet next = chosen;
      next.insert(r);
      descend(next, stabilize(g_, stabilizer, r), -1);
      if (found_) return;
    }
  }

  // With `s` determining: no non-identity element maps s onto itself.
  bool setwise_fixes_pointwise(VertexSet s) const {
    auto maps_onto = [&](int e) {
      for (int v : s) {
        if (!s.contains(g_.image(e, v))) return false;
      }
      return true;
    };
    if (by_image_.empty()) {
      for (int e = 0; e < g_.count; ++e) {
        if (maps_onto(e)) return false;
      }
      return true;
    }
    const int anchor = s.front();
    for (int w : s) {
      for (int e : by_image_[anchor * g_.n + w]) {
        if (maps_onto(e)) return false;
      }
    }
    return true;
  }

  const FlatGroup& g_;
  Budget& budget_;
  std::vector<std::vector<int>> by_image_;
  int size_ = 0;
  std::unordered_set<std::uint64_t> visited_;
  std::unordered_set<std::uint64_t> tested_;
  std::optional<VertexSet> found_;
};

void check_degree(int group_degree, int other, const char* what) {
  if (group_degree != other) {
    throw DegreeError(std::string(what) + ": degree " + std::to_string(group_degree) +
                      " vs " + std::to_string(other));
  }
}

}  // namespace

Coloring::Coloring(std::vector<int> colors, int k) : colors_(std::move(colors)), k_(k) {
  if (k_ < 1) throw ArgumentError("a colouring needs at least one colour");
  for (int c : colors_) {
    if (c < 0 || c >= k_) throw ArgumentError("colour id outside 0..k-1");
  }
}

Coloring Coloring::two_coloring(int degree, VertexSet red) {
  std::vector<int> colors(static_cast<std::size_t>(degree), 0);
  for (int v : red) colors.at(static_cast<std::size_t>(v)) = 1;
  return Coloring(std::move(colors), 2);
}

VertexSet Coloring::color_class(int c) const {
  VertexSet s;
  for (int v = 0; v < degree(); ++v) {
    if (colors_[v] == c) s.insert(v);
  }
  return s;
}

bool is_broken(const Permutation& p, const Coloring& c) {
  check_degree(p.degree(), c.degree(), "is_broken");
  for (const Cycle& cycle : p.cycles()) {
    for (int v : cycle) {
      if (c[v] != c[cycle.front()]) return true;
    }
  }
  return false;
}

bool preserves(const Permutation& p, const Coloring& c) {
  check_degree(p.degree(), c.degree(), "preserves");
  for (int v = 0; v < p.degree(); ++v) {
    if (c[p(v)] != c[v]) return false;
  }
  return true;
}

bool is_distinguishing(const PermGroup& group, const Coloring& c) {
  check_degree(group.degree(), c.degree(), "is_distinguishing");
  return std::all_of(group.elements().begin(), group.elements().end(),
                     [&](const Permutation& p) { return p.is_identity() || is_broken(p, c); });
}

std::optional<Coloring> find_distinguishing_coloring(const PermGroup& group, int k,
                                                     const SearchOptions& options) {
  const FlatGroup flat(group);
  Budget budget(options.budget);
  return find_coloring(flat, k, budget);
}

DistinguishingResult distinguishing_number(const PermGroup& group, const SearchOptions& options) {
  const FlatGroup flat(group);
  Budget budget(options.budget);
  for (int k = 1;; ++k) {
    if (auto c = find_coloring(flat, k, budget)) return {k, std::move(*c)};
  }
}

DistinguishingResult distinguishing_number(const Graph& g, const SearchOptions& options,
                                           const AutomorphismOptions& aut) {
  return distinguishing_number(automorphism_group(g, aut), options);
}

bool is_determining_set(const PermGroup& group, VertexSet s) {
  for (const auto& p : group.elements()) {
    if (p.is_identity()) continue;
    bool fixes_all = true;
    for (int v : s) fixes_all = fixes_all && p.fixes(v);
    if (fixes_all) return false;
  }
  return true;
}

DeterminingResult determining_number(const PermGroup& group, const SearchOptions& options) {
  const FlatGroup flat(group);
  Budget budget(options.budget);
  return DeterminingSearch(flat, budget).run();
}

DeterminingResult determining_number(const Graph& g, const SearchOptions& options,
                                     const AutomorphismOptions& aut) {
  return determining_number(automorphism_group(g, aut), options);
}

bool is_distinguishing_class(const PermGroup& group, VertexSet s) {
  if (!is_determining_set(group, s)) return false;
  for (const auto& p : group.elements()) {
    if (p.apply(s) != s) continue;
    for (int v : s) {
      if (!p.fixes(v)) return false;
    }
  }
  return true;
}

std::optional<CostResult> cost_number(const PermGroup& group, const SearchOptions& options,
                                      const CostHints& hints) {
  if (group.is_trivial()) return CostResult{0, VertexSet(), true};
  const FlatGroup flat(group);
  Budget budget(options.budget);
  const bool two = hints.two_distinguishable ? *hints.two_distinguishable
                                             : find_coloring(flat, 2, budget).has_value();
  if (!two) return std::nullopt;
  const int lower = hints.determining_number ? std::max(1, *hints.determining_number) : 1;
  DistinguishingClassSearch search(flat, budget);
  for (int size = lower; size <= group.degree() / 2; ++size) {
    if (auto s = search.find_of_size(size)) return CostResult{size, *s, false};
  }
  throw Error("cost_number: 2-distinguishable group without a class of size <= n/2");
}

std::optional<CostResult> cost_number(const Graph& g, const SearchOptions& options,
                                      const AutomorphismOptions& aut) {
  return cost_number(automorphism_group(g, aut), options);
}

std::vector<std::pair<int, int>> nn_pairs(const Graph& g, int v1, int v2) {
  const VertexSet n1s = g.neighbors(v1);
  const VertexSet n2s = g.neighbors(v2);
  if (v1 == v2) throw ArgumentError("nn_pairs needs two distinct vertices");
  const VertexSet outside = g.vertices() - VertexSet{v1, v2};
  std::vector<std::pair<int, int>> out;
  for (int a : (n1s - n2s) & outside) {
    for (int b : (n2s - n1s) & outside) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SymmetryReport analyze(const Graph& g, const AnalyzeOptions& options) {
  return analyze(g, automorphism_group(g, options.automorphisms), options);
}

SymmetryReport analyze(const Graph& g, const PermGroup& group, const AnalyzeOptions& options) {
  SymmetryReport report;
  report.graph6 = g.order() <= 62 ? encode_graph6(g) : std::string();
  report.n = g.order();
  report.edge_count = g.edge_count();
  report.aut_order = group.order();
  try {
    report.distinguishing = distinguishing_number(group, options.search);
  } catch (const BudgetExceeded&) {
  }
  try {
    report.determining = determining_number(group, options.search);
  } catch (const BudgetExceeded&) {
  }
  CostHints hints;
  if (report.distinguishing) hints.two_distinguishable = report.distinguishing->number <= 2;
  if (report.determining) hints.determining_number = report.determining->number;
  try {
    report.cost = cost_number(group, options.search, hints);
    report.cost_known = true;
  } catch (const BudgetExceeded&) {
  }
  return report;
}

}  // namespace symbreak
