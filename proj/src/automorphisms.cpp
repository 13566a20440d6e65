#include "symbreak/automorphisms.hpp"

#include <numeric>
#include <string>

#include "isomorphism_search.hpp"
#include "symbreak/errors.hpp"

namespace symbreak {

PermGroup automorphism_group(const Graph& g, const AutomorphismOptions& options) {
  if (g.order() > options.max_vertices) {
    throw UnsupportedSize("automorphism_group: order " + std::to_string(g.order()) +
                          " above ceiling " + std::to_string(options.max_vertices));
  }
  std::vector<Permutation> elements;
  detail::IsomorphismSearch search(g, g);
  search.run([&](const std::vector<std::uint8_t>& images) {
    if (elements.size() == options.max_elements) throw GroupTooLarge(options.max_elements);
    elements.emplace_back(images);
    return true;
  });
  return PermGroup::from_elements_unchecked(g.order(), std::move(elements));
}

std::vector<VertexSet> orbits(const PermGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : group.elements()) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(p(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<VertexSet> blocks(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) blocks[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (VertexSet b : blocks) {
    if (!b.empty()) out.push_back(b);
  }
  return out;
}

PermGroup pointwise_stabilizer(const PermGroup& group, VertexSet s) {
  std::vector<Permutation> kept;
  for (const auto& p : group.elements()) {
    bool fixes_all = true;
    for (int v : s) fixes_all = fixes_all && p.fixes(v);
    if (fixes_all) kept.push_back(p);
  }
  return PermGroup::from_elements_unchecked(group.degree(), std::move(kept));
}

PermGroup setwise_stabilizer(const PermGroup& group, VertexSet s) {
  std::vector<Permutation> kept;
  for (const auto& p : group.elements()) {
    if (p.apply(s) == s) kept.push_back(p);
  }
  return PermGroup::from_elements_unchecked(group.degree(), std::move(kept));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (p.apply(g.row(u)) != g.row(p(u))) return false;
  }
  return true;
}

}  // namespace symbreak
