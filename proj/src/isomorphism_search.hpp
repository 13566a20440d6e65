#pragma once

// Backtracking enumeration of isomorphisms between two graphs. Internal to the
// library: automorphism_group runs it with from == to, find_isomorphism stops
// at the first hit.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak::detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& from, const Graph& to) : from_(from), to_(to) {
    const int n = from.order();
    if (to.order() != n) {
      feasible_ = false;
      return;
    }
    std::map<std::vector<int>, int> classes;
    auto classify = [&](const Graph& g, std::vector<int>& out) {
      out.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        std::vector<int> key = {g.degree(v)};
        for (int u : g.row(v)) key.push_back(g.degree(u));
        std::sort(key.begin() + 1, key.end());
        out[v] = classes.emplace(std::move(key), static_cast<int>(classes.size()))
                     .first->second;
      }
    };
    classify(from, class_from_);
    classify(to, class_to_);

    std::vector<int> count_from(classes.size()), count_to(classes.size());
    for (int c : class_from_) ++count_from[c];
    for (int c : class_to_) ++count_to[c];
    feasible_ = count_from == count_to;

    members_to_.resize(classes.size());
    for (int u = 0; u < n; ++u) members_to_[class_to_[u]].push_back(u);

    order_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return from.degree(a) > from.degree(b); });
    image_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Calls visit(images) for every isomorphism; images[v] is the image of v.
  /// visit returns false to stop the search.
  template <typename Visit>
  void run(Visit&& visit) {
    if (!feasible_) return;
    stopped_ = false;
    descend(0, VertexSet(), VertexSet(), visit);
  }

 private:
  template <typename Visit>
  void descend(std::size_t depth, VertexSet mapped_from, VertexSet mapped_to, Visit& visit) {
    if (depth == order_.size()) {
      if (!visit(static_cast<const std::vector<std::uint8_t>&>(image_))) stopped_ = true;
      return;
    }
    const int v = order_[depth];
    VertexSet expected;
    for (int w : from_.row(v) & mapped_from) expected.insert(image_[w]);
    for (int u : members_to_[class_from_[v]]) {
      if (mapped_to.contains(u)) continue;
      if ((to_.row(u) & mapped_to) != expected) continue;
      image_[v] = static_cast<std::uint8_t>(u);
      VertexSet next_from = mapped_from;
      VertexSet next_to = mapped_to;
      next_from.insert(v);
      next_to.insert(u);
      descend(depth + 1, next_from, next_to, visit);
      if (stopped_) return;
    }
  }

  const Graph& from_;
  const Graph& to_;
  bool feasible_ = true;
  bool stopped_ = false;
  std::vector<int> class_from_, class_to_;
  std::vector<std::vector<int>> members_to_;
  std::vector<int> order_;
  std::vector<std::uint8_t> image_;
};

}  // namespace symbreak::detail
