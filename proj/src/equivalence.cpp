#include "symbreak/equivalence.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include <omp.h>

#include "isomorphism_search.hpp"
#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

std::vector<std::vector<int>> sorted_cycle_types(const PermGroup& g) {
  std::vector<std::vector<int>> types;
  types.reserve(g.order());
  for (const auto& p : g.elements()) types.push_back(cycle_type(p));
  std::sort(types.begin(), types.end());
  return types;
}

// Point statistics of an explicit group.
struct PointProfile {
  int n = 0;
  std::vector<int> transfer;  // transfer[u * n + v] = #{g : g(u) = v}
  std::vector<std::vector<int>> lengths;  // sorted cycle lengths through u

  explicit PointProfile(const PermGroup& g) : n(g.degree()) {
    transfer.assign(static_cast<std::size_t>(n) * n, 0);
    lengths.assign(static_cast<std::size_t>(n), {});
    for (const auto& p : g.elements()) {
      for (int u = 0; u < n; ++u) {
        ++transfer[u * n + p(u)];
        lengths[u].push_back(p.cycle_length(u));
      }
    }
    for (auto& l : lengths) std::sort(l.begin(), l.end());
  }

  int at(int u, int v) const { return transfer[u * n + v]; }
};

class ConjugacySearch {
 public:
  ConjugacySearch(const PermGroup& a, const PermGroup& b, std::uint64_t budget)
      : a_(a), b_(b), pa_(a), pb_(b), budget_(budget) {
    const int n = a.degree();
    std::map<std::vector<int>, int> ids;
    class_a_.resize(static_cast<std::size_t>(n));
    class_b_.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      class_a_[u] = ids.emplace(pa_.lengths[u], static_cast<int>(ids.size())).first->second;
    }
    for (int u = 0; u < n; ++u) {
      class_b_[u] = ids.emplace(pb_.lengths[u], static_cast<int>(ids.size())).first->second;
    }
    std::vector<int> size_a(ids.size()), size_b(ids.size());
    for (int c : class_a_) ++size_a[c];
    for (int c : class_b_) ++size_b[c];
    feasible_ = size_a == size_b;

    members_b_.resize(ids.size());
    for (int u = 0; u < n; ++u) members_b_[class_b_[u]].push_back(u);
    order_.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) order_[u] = u;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return size_a[class_a_[x]] < size_a[class_a_[y]];
    });
    image_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<Permutation> run() {
    if (!feasible_) return std::nullopt;
    if (descend(0, VertexSet())) return Permutation(image_);
    return std::nullopt;
  }

 private:
  bool descend(std::size_t depth, VertexSet used) {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    if (depth == order_.size()) return conjugates();
    const int u = order_[depth];
    for (int w : members_b_[class_a_[u]]) {
      if (used.contains(w)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const int x = order_[i];
        const int y = image_[x];
        consistent = pa_.at(u, x) == pb_.at(w, y) && pa_.at(x, u) == pb_.at(y, w);
      }
      if (!consistent) continue;
      image_[u] = static_cast<std::uint8_t>(w);
      VertexSet next = used;
      next.insert(w);
      if (descend(depth + 1, next)) return true;
    }
    return false;
  }

  bool conjugates() const {
    const int n = a_.degree();
    std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
    for (const auto& p : a_.elements()) {
      for (int v = 0; v < n; ++v) images[image_[v]] = image_[p(v)];
      if (!b_.contains(Permutation(images))) return false;
    }
    return true;
  }

  const PermGroup& a_;
  const PermGroup& b_;
  PointProfile pa_, pb_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool feasible_ = true;
  std::vector<int> class_a_, class_b_;
  std::vector<std::vector<int>> members_b_;
  std::vector<int> order_;
  std::vector<std::uint8_t> image_;
};

struct BucketKey {
  int degree;
  std::size_t order;
  std::vector<std::vector<int>> types;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

}  // namespace

bool representations_equal(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         std::equal(a.elements().begin(), a.elements().end(), b.elements().begin());
}

std::string_view to_string(EquivalenceVerdict verdict) {
  switch (verdict) {
    case EquivalenceVerdict::equivalent:
      return "equivalent";
    case EquivalenceVerdict::degree_mismatch:
      return "degree mismatch";
    case EquivalenceVerdict::order_mismatch:
      return "order mismatch";
    case EquivalenceVerdict::cycle_type_mismatch:
      return "cycle-type mismatch";
    case EquivalenceVerdict::no_bijection:
      return "search exhausted";
  }
  return "unknown";
}

GroupComparison compare_groups(const PermGroup& a, const PermGroup& b,
                               const EquivalenceOptions& options) {
  if (a.degree() != b.degree()) return {EquivalenceVerdict::degree_mismatch, std::nullopt};
  if (a.order() != b.order()) return {EquivalenceVerdict::order_mismatch, std::nullopt};
  if (representations_equal(a, b)) {
    return {EquivalenceVerdict::equivalent, Permutation::identity(a.degree())};
  }
  if (sorted_cycle_types(a) != sorted_cycle_types(b)) {
    return {EquivalenceVerdict::cycle_type_mismatch, std::nullopt};
  }
  ConjugacySearch search(a, b, options.budget);
  if (auto sigma = search.run()) return {EquivalenceVerdict::equivalent, std::move(sigma)};
  return {EquivalenceVerdict::no_bijection, std::nullopt};
}

std::optional<Permutation> distinguishably_equivalent(const Graph& g1, const Graph& g2,
                                                      const EquivalenceOptions& options) {
  if (g1.order() != g2.order()) return std::nullopt;
  return compare_groups(automorphism_group(g1, options.automorphisms),
                        automorphism_group(g2, options.automorphisms), options)
      .bijection;
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2) {
  std::optional<Permutation> found;
  detail::IsomorphismSearch search(g1, g2);
  search.run([&](const std::vector<std::uint8_t>& images) {
    found.emplace(images);
    return false;
  });
  return found;
}

EquivalenceClasses equivalence_classes(std::span<const Graph> corpus,
                                       const EquivalenceOptions& options, int jobs) {
  std::vector<PermGroup> groups(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  const auto count = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      groups[i] = automorphism_group(corpus[i], options.automorphisms);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return equivalence_classes(groups, options, jobs);
}

EquivalenceClasses equivalence_classes(std::span<const PermGroup> groups,
                                       const EquivalenceOptions& options, int jobs) {
  std::map<BucketKey, std::size_t> bucket_ids;
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    BucketKey key{groups[i].degree(), groups[i].order(), sorted_cycle_types(groups[i])};
    auto [it, inserted] = bucket_ids.emplace(std::move(key), buckets.size());
    if (inserted) buckets.emplace_back();
    buckets[it->second].push_back(i);
  }

  struct BucketResult {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::pair<std::size_t, std::size_t>> unresolved;
  };
  std::vector<BucketResult> results(buckets.size());
  const auto bucket_count = static_cast<std::ptrdiff_t>(buckets.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::ptrdiff_t bi = 0; bi < bucket_count; ++bi) {
    BucketResult& out = results[bi];
    for (std::size_t i : buckets[bi]) {
      bool placed = false;
      for (auto& cls : out.classes) {
        try {
          if (compare_groups(groups[cls.front()], groups[i], options).bijection) {
            cls.push_back(i);
            placed = true;
            break;
          }
        } catch (const BudgetExceeded&) {
          out.unresolved.emplace_back(cls.front(), i);
        }
      }
      if (!placed) out.classes.push_back({i});
    }
  }

  EquivalenceClasses merged;
  for (auto& r : results) {
    for (auto& c : r.classes) merged.classes.push_back(std::move(c));
    merged.unresolved.insert(merged.unresolved.end(), r.unresolved.begin(), r.unresolved.end());
  }
  std::sort(merged.classes.begin(), merged.classes.end());
  std::sort(merged.unresolved.begin(), merged.unresolved.end());
  return merged;
}

}  // namespace symbreak
