#include "symbreak/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

constexpr int kMaxCanonicalOrder = 8;

int slot_count(int n) { return n * (n - 1) / 2; }

// graph6 column-major slot of the pair i < j.
int slot(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

// For every vertex permutation, where each slot lands.
std::vector<std::vector<int>> slot_images(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  const int m = slot_count(n);
  do {
    std::vector<int> images(static_cast<std::size_t>(m));
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) images[slot(i, j)] = slot(perm[i], perm[j]);
    }
    out.push_back(std::move(images));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t apply(const std::vector<int>& images, std::uint64_t code, int m) {
  std::uint64_t out = 0;
  for (int k = 0; k < m; ++k) {
    if ((code >> (m - 1 - k)) & 1U) out |= std::uint64_t{1} << (m - 1 - images[k]);
  }
  return out;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  if (slot_count(n) > 64) throw UnsupportedSize("adjacency code needs n <= 11");
  const int m = slot_count(n);
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << (m - 1 - slot(i, j));
    }
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  const int m = slot_count(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (m - 1 - slot(i, j))) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw UnsupportedSize("canonical_code supports n <= " +
                          std::to_string(kMaxCanonicalOrder));
  }
  const std::uint64_t code = adjacency_code(g);
  const int m = slot_count(n);
  std::uint64_t best = code;
  for (const auto& images : slot_images(n)) best = std::min(best, apply(images, code, m));
  return best;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw UnsupportedSize("enumerate_graphs supports 1 <= n <= " +
                          std::to_string(kMaxEnumerationOrder) + ", got " +
                          std::to_string(n));
  }
  const int m = slot_count(n);
  const auto perms = slot_images(n);
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    const bool least = std::none_of(perms.begin(), perms.end(), [&](const auto& images) {
      return apply(images, code, m) < code;
    });
    if (least) out.push_back(graph_from_code(n, code));
  }
  return out;
}

}  // namespace symbreak
