#include "symbreak/theory_checks.hpp"

#include <algorithm>
#include <random>

#include "symbreak/automorphisms.hpp"
#include "symbreak/equivalence.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"

namespace symbreak {

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::pair_stabilizer_trivial: return "pair_stabilizer_trivial";
    case Claim::swap_extensions_involutive: return "swap_extensions_involutive";
    case Claim::unique_swap_extension: return "unique_swap_extension";
    case Claim::no_three_cycle_through_pair: return "no_three_cycle_through_pair";
    case Claim::no_opposite_transposition: return "no_opposite_transposition";
    case Claim::no_three_cycle_on_flipped_points: return "no_three_cycle_on_flipped_points";
    case Claim::transposition_correspondence: return "transposition_correspondence";
    case Claim::no_fixed_partner_transposition: return "no_fixed_partner_transposition";
    case Claim::bare_swap_absent: return "bare_swap_absent";
    case Claim::swap_flips_nn_pair: return "swap_flips_nn_pair";
  }
  return "unknown";
}

bool PropReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const ClaimOutcome& o) { return o.passed; });
}

const ClaimOutcome& PropReport::outcome(Claim claim) const {
  for (const auto& o : outcomes) {
    if (o.claim == claim) return o;
  }
  throw ArgumentError("claim not in report: " + std::string(to_string(claim)));
}

namespace {

bool swaps(const Permutation& p, int a, int b) { return p(a) == b && p(b) == a; }

bool has_three_cycle(const Permutation& p, int a, int b, int c) {
  return p(a) == b && p(b) == c && p(c) == a;
}

bool is_involution(const Permutation& p) {
  for (int v = 0; v < p.degree(); ++v) {
    if (p(p(v)) != v) return false;
  }
  return true;
}

ClaimOutcome start(Claim claim) {
  ClaimOutcome o;
  o.claim = claim;
  return o;
}

void fail(ClaimOutcome& o, std::vector<Permutation> witnesses, std::string detail) {
  if (!o.passed) return;  // keep the first counterexample
  o.passed = false;
  o.witnesses = std::move(witnesses);
  o.detail = std::move(detail);
}

std::string cycle_text(std::initializer_list<int> points) {
  std::string s = "(";
  bool first = true;
  for (int p : points) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

class SuiteRunner {
 public:
  SuiteRunner(const Graph& g, const PermGroup& group, int x, int y)
      : g_(g), group_(group), x_(x), y_(y), n_(group.degree()),
        x_swap_(static_cast<std::size_t>(n_), nullptr),
        y_swap_(static_cast<std::size_t>(n_), nullptr) {
    for (const auto& p : group.elements()) {
      if (swaps(p, x_, y_)) extensions_.push_back(&p);
      const int dx = p(x_);
      if (dx != x_ && dx != y_ && p(y_) == y_ && p(dx) == x_ && !x_swap_[dx]) x_swap_[dx] = &p;
      const int dy = p(y_);
      if (dy != x_ && dy != y_ && p(x_) == x_ && p(dy) == y_ && !y_swap_[dy]) y_swap_[dy] = &p;
    }
  }

  PropReport run(std::optional<int> distinguishing, std::optional<int> determining) {
    PropReport report;
    report.graph6 = g_.order() <= 62 ? encode_graph6(g_) : std::string();
    report.x = x_;
    report.y = y_;
    const bool hard_case = distinguishing == 2 && determining == 2;
    report.outcomes.push_back(stabilizer_trivial());
    report.outcomes.push_back(extensions_involutive());
    report.outcomes.push_back(unique_extension());
    report.outcomes.push_back(no_three_cycle_through_pair());
    report.outcomes.push_back(no_opposite_transposition());
    report.outcomes.push_back(no_three_cycle_on_flipped_points());
    report.outcomes.push_back(transposition_correspondence());
    report.outcomes.push_back(no_fixed_partner());
    report.outcomes.push_back(bare_swap_absent(hard_case));
    report.outcomes.push_back(flips_nn_pair(hard_case));
    return report;
  }

 private:
  /// 2-cycles of p that avoid x and y.
  std::vector<std::pair<int, int>> outside_two_cycles(const Permutation& p) const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v) {
      const int w = p(v);
      if (v < w && p(w) == v && v != x_ && v != y_ && w != x_ && w != y_) out.emplace_back(v, w);
    }
    return out;
  }

  ClaimOutcome stabilizer_trivial() const {
    auto o = start(Claim::pair_stabilizer_trivial);
    o.applicable = true;
    o.instances = 1;
    for (const auto& p : group_.elements()) {
      if (!p.is_identity() && p.fixes(x_) && p.fixes(y_)) {
        fail(o, {p}, "non-identity element fixes x and y");
        break;
      }
    }
    return o;
  }

  ClaimOutcome extensions_involutive() const {
    auto o = start(Claim::swap_extensions_involutive);
    for (const auto& p : group_.elements()) {
      const bool xy = swaps(p, x_, y_);
      const bool xv = !xy && p(x_) != x_ && p(y_) == y_ && p(p(x_)) == x_;
      const bool yv = !xy && p(y_) != y_ && p(x_) == x_ && p(p(y_)) == y_;
      if (!xy && !xv && !yv) continue;
      ++o.instances;
      if (!is_involution(p)) fail(o, {p}, "extension has a cycle longer than 2");
    }
    o.applicable = o.instances > 0;
    return o;
  }

  ClaimOutcome unique_extension() const {
    auto o = start(Claim::unique_swap_extension);
    o.instances = extensions_.size();
    o.applicable = !extensions_.empty();
    if (extensions_.size() > 1) {
      fail(o, {*extensions_[0], *extensions_[1]}, "two elements contain (x,y)");
    }
    return o;
  }

  ClaimOutcome no_three_cycle_through_pair() const {
    auto o = start(Claim::no_three_cycle_through_pair);
    for (const auto* alpha : extensions_) {
      for (auto [d1, d2] : outside_two_cycles(*alpha)) {
        for (int d : {d1, d2}) {
          if (!x_swap_[d]) continue;
          ++o.instances;
          for (const auto& p : group_.elements()) {
            if (has_three_cycle(p, x_, y_, d)) {
              fail(o, {*alpha, *x_swap_[d], p}, "element contains " + cycle_text({x_, y_, d}));
            } else if (has_three_cycle(p, x_, d, y_)) {
              fail(o, {*alpha, *x_swap_[d], p}, "element contains " + cycle_text({x_, d, y_}));
            }
          }
        }
      }
    }
    o.applicable = o.instances > 0;
    return o;
  }

  ClaimOutcome no_opposite_transposition() const {
    auto o = start(Claim::no_opposite_transposition);
    for (const auto* alpha : extensions_) {
      for (auto [d1, d2] : outside_two_cycles(*alpha)) {
        for (int d : {d1, d2}) {
          if (!x_swap_[d]) continue;
          ++o.instances;
          if (y_swap_[d]) {
            fail(o, {*alpha, *x_swap_[d], *y_swap_[d]},
                 "element contains " + cycle_text({y_, d}) + cycle_text({x_}));
          }
        }
      }
    }
    o.applicable = o.instances > 0;
    return o;
  }

  ClaimOutcome no_three_cycle_on_flipped_points() const {
    auto o = start(Claim::no_three_cycle_on_flipped_points);
    for (const auto* alpha : extensions_) {
      const auto cycles = outside_two_cycles(*alpha);
      for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
          const int flipped[4] = {cycles[a].first, cycles[a].second, cycles[b].first,
                                  cycles[b].second};
          for (int di : flipped) {
            if (!x_swap_[di]) continue;
            for (int dj : flipped) {
              if (dj == di) continue;
              ++o.instances;
              for (const auto& p : group_.elements()) {
                const bool bad = (p.fixes(y_) && (has_three_cycle(p, x_, di, dj) ||
                                                  has_three_cycle(p, x_, dj, di))) ||
                                 (p.fixes(x_) && (has_three_cycle(p, y_, di, dj) ||
                                                  has_three_cycle(p, y_, dj, di)));
                if (bad) {
                  fail(o, {*alpha, *x_swap_[di], p},
                       "element has a 3-cycle on x or y with " + std::to_string(di) + "," +
                           std::to_string(dj));
                }
              }
            }
          }
        }
      }
    }
    o.applicable = o.instances > 0;
    return o;
  }

  ClaimOutcome transposition_correspondence() const {
    auto o = start(Claim::transposition_correspondence);
    for (const auto* alpha : extensions_) {
      for (auto [d1, d2] : outside_two_cycles(*alpha)) {
        for (auto [a, b] : {std::pair{d1, d2}, std::pair{d2, d1}}) {
          ++o.instances;
          const auto* left = x_swap_[a];
          const auto* right = y_swap_[b];
          if ((left == nullptr) != (right == nullptr)) {
            fail(o, {*alpha, left ? *left : *right},
                 left ? "no element contains " + cycle_text({y_, b}) + cycle_text({x_})
                      : "no element contains " + cycle_text({x_, a}) + cycle_text({y_}));
          }
        }
      }
    }
    o.applicable = o.instances > 0;
    return o;
  }

  ClaimOutcome no_fixed_partner() const {
    auto o = start(Claim::no_fixed_partner_transposition);
    std::vector<int> partners;
    for (int d = 0; d < n_; ++d) {
      if (x_swap_[d]) partners.push_back(d);
    }
    if (partners.size() < 2) return o;
    o.applicable = true;
    o.instances = partners.size() * (partners.size() - 1) / 2;
    for (const auto& p : group_.elements()) {
      const int d1 = p(x_);
      if (d1 == x_ || d1 == y_ || !p.fixes(y_) || p(d1) != x_) continue;
      for (int d2 : partners) {
        if (d2 != d1 && p.fixes(d2)) {
          fail(o, {*x_swap_[d1], *x_swap_[d2], p},
               "element contains " + cycle_text({x_, d1}) + cycle_text({y_}) +
                   cycle_text({d2}));
        }
      }
    }
    return o;
  }

  ClaimOutcome bare_swap_absent(bool hard_case) const {
    auto o = start(Claim::bare_swap_absent);
    if (!hard_case) return o;
    o.applicable = true;
    o.instances = 1;
    const Cycle swap{x_, y_};
    const auto bare = Permutation::from_cycles(n_, std::span<const Cycle>(&swap, 1));
    if (group_.contains(bare)) fail(o, {bare}, "the transposition itself is an automorphism");
    return o;
  }

  ClaimOutcome flips_nn_pair(bool hard_case) const {
    auto o = start(Claim::swap_flips_nn_pair);
    if (!hard_case || extensions_.empty()) return o;
    o.applicable = true;
    const auto pairs = nn_pairs(g_, x_, y_);
    for (const auto* alpha : extensions_) {
      ++o.instances;
      bool found = false;
      for (auto [d1, d2] : outside_two_cycles(*alpha)) {
        if (std::binary_search(pairs.begin(), pairs.end(), std::pair{d1, d2}) ||
            std::binary_search(pairs.begin(), pairs.end(), std::pair{d2, d1})) {
          found = true;
          break;
        }
      }
      if (!found) fail(o, {*alpha}, "no 2-cycle of the extension is a neighbour-non-neighbour pair");
    }
    return o;
  }

  const Graph& g_;
  const PermGroup& group_;
  int x_;
  int y_;
  int n_;
  std::vector<const Permutation*> extensions_;
  // x_swap_[d]: some element containing (x d)(y); y_swap_[d]: some (y d)(x).
  std::vector<const Permutation*> x_swap_;
  std::vector<const Permutation*> y_swap_;
};

void check_pair(const Graph& g, const PermGroup& group, int x, int y) {
  const int n = g.order();
  if (x < 0 || x >= n || y < 0 || y >= n) throw IndexError("pair vertex out of range");
  if (group.degree() != n) throw DegreeError("group degree differs from graph order");
  if (x == y) throw NotDeterminingPair("pair vertices must differ");
  VertexSet pair;
  pair.insert(x);
  pair.insert(y);
  if (!is_determining_set(group, pair)) {
    throw NotDeterminingPair("{" + std::to_string(x) + "," + std::to_string(y) +
                             "} is not a determining set");
  }
}

}  // namespace

PropReport check_prop_suite(const Graph& g, const PermGroup& group, int x, int y,
                            std::optional<int> distinguishing, std::optional<int> determining) {
  check_pair(g, group, x, y);
  return SuiteRunner(g, group, x, y).run(distinguishing, determining);
}

PropReport check_prop_suite(const Graph& g, int x, int y, const AnalyzeOptions& options) {
  const auto group = automorphism_group(g, options.automorphisms);
  check_pair(g, group, x, y);
  const int d = distinguishing_number(group, options.search).number;
  const int det = determining_number(group, options.search).number;
  return SuiteRunner(g, group, x, y).run(d, det);
}

bool check_restriction_lemma(const Graph& g, VertexSet h, const RestrictionOptions& options) {
  const int n = g.order();
  if (h.empty()) throw ArgumentError("empty vertex set");
  if (!h.is_subset_of(g.vertices())) throw IndexError("vertex set exceeds the graph");
  const VertexSet outside = g.row(h.front()) - h;
  for (int v : h) {
    if (g.row(v) - h != outside) {
      throw NotApplicable("vertices of h have different neighbourhoods outside h");
    }
  }

  const auto group = automorphism_group(g, options.analyze.automorphisms);
  const auto sub = induced_subgraph(g, h);
  const auto sub_group = automorphism_group(sub.graph, options.analyze.automorphisms);

  std::vector<int> restricted(sub.vertices.size());
  auto holds = [&](const Coloring& c) {
    if (!is_distinguishing(group, c)) return true;
    for (std::size_t i = 0; i < sub.vertices.size(); ++i) restricted[i] = c[sub.vertices[i]];
    return is_distinguishing(sub_group, Coloring(restricted, c.k()));
  };

  if (!holds(distinguishing_number(group, options.analyze.search).witness)) return false;

  std::mt19937_64 rng(options.seed);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (int k = 2; k <= options.max_colors; ++k) {
    std::uint64_t total = 1;
    for (int i = 0; i < n && total <= options.exhaustive_limit; ++i) total *= k;
    if (total <= options.exhaustive_limit) {
      std::fill(colors.begin(), colors.end(), 0);
      for (std::uint64_t step = 0; step < total; ++step) {
        if (!holds(Coloring(colors, k))) return false;
        for (int i = 0; i < n; ++i) {  // odometer increment
          if (++colors[i] < k) break;
          colors[i] = 0;
        }
      }
    } else {
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int s = 0; s < options.samples; ++s) {
        for (auto& c : colors) c = pick(rng);
        if (!holds(Coloring(colors, k))) return false;
      }
    }
  }
  return true;
}

bool check_equivalence_preserves_distinguishing(const Graph& g1, const Graph& g2,
                                                const AnalyzeOptions& options) {
  const auto a = automorphism_group(g1, options.automorphisms);
  const auto b = automorphism_group(g2, options.automorphisms);
  const auto cmp = compare_groups(a, b);
  if (cmp.verdict != EquivalenceVerdict::equivalent) {
    throw PreconditionError("graphs are not distinguishably equivalent: " +
                            std::string(to_string(cmp.verdict)));
  }
  const auto d1 = distinguishing_number(a, options.search);
  const auto d2 = distinguishing_number(b, options.search);
  const auto& sigma = *cmp.bijection;
  std::vector<int> carried(static_cast<std::size_t>(g2.order()));
  for (int v = 0; v < g1.order(); ++v) carried[sigma(v)] = d1.witness[v];
  return d1.number == d2.number && is_distinguishing(b, Coloring(carried, d1.witness.k()));
}

VertexSet string_coloring_class(int n) {
  if (n < 1 || n > 4) throw ArgumentError("string colouring needs 1 <= n <= 4");
  VertexSet red;
  for (int i = 0; i < (1 << n); ++i) {
    for (int d = 0; d < n; ++d) {
      if ((i >> d) & 1) red.insert(tail_vertex(n, i, d));
    }
  }
  return red;
}

bool FamilyBoundRecord::passed() const {
  if (det_exact && *det_exact != det_formula) return false;
  if (rho_exact && *rho_exact != rho_formula) return false;
  return clique_minus_one_determining && random_subsets_not_determining &&
         string_class_distinguishing && string_class.size() == rho_formula;
}

FamilyBoundRecord family_lower_bound_check(int n, const FamilyCheckOptions& options) {
  if (n < 1 || n > 3) throw ArgumentError("family check needs 1 <= n <= 3");
  const auto g = generate_family({FamilyKind::clique_with_tails, n});
  const auto group = automorphism_group(g);

  FamilyBoundRecord r;
  r.n = n;
  r.vertices = g.order();
  r.aut_order = group.order();
  r.det_formula = (1 << n) - 1;
  r.rho_formula = n << (n - 1);
  r.degenerate = n == 1;

  for (int i = 0; i + 1 < (1 << n); ++i) r.clique_minus_one.insert(i);
  r.clique_minus_one_determining = is_determining_set(group, r.clique_minus_one);

  r.string_class = string_coloring_class(n);
  r.string_class_distinguishing = is_distinguishing_class(group, r.string_class);

  if (n <= 2) {
    r.det_exact = determining_number(group, options.search).number;
    const auto cost = cost_number(group, options.search, {true, r.det_exact});
    if (cost) r.rho_exact = cost->rho;
  } else {
    // Sets one short of the formula must all fail to determine.
    std::mt19937_64 rng(options.seed);
    auto all = g.vertices().to_vector();
    for (int t = 0; t < options.random_subsets; ++t) {
      std::shuffle(all.begin(), all.end(), rng);
      const auto s = VertexSet::from(std::span<const int>(all.data(), r.det_formula - 1));
      ++r.random_subsets_tested;
      if (is_determining_set(group, s)) r.random_subsets_not_determining = false;
    }
    if (options.exact_minimality) {
      r.det_exact = determining_number(group, options.search).number;
      const auto cost = cost_number(group, options.search, {true, r.det_exact});
      if (cost) r.rho_exact = cost->rho;
    }
  }
  return r;
}

}  // namespace symbreak
