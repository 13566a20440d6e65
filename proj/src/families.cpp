#include "symbreak/families.hpp"

#include <array>
#include <bit>
#include <string>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 5> kNames = {{
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete, "complete"},
    {FamilyKind::hypercube, "hypercube"},
    {FamilyKind::clique_with_tails, "clique_with_tails"},
}};

int minimum_parameter(FamilyKind kind) { return kind == FamilyKind::cycle ? 3 : 1; }

int family_order(const FamilySpec& spec) {
  const int p = spec.parameter;
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
      return p;
    case FamilyKind::hypercube:
      return p > 6 ? kMaxVertices + 1 : 1 << p;
    case FamilyKind::clique_with_tails:
      return p > 4 ? kMaxVertices + 1 : p * (1 << p);
  }
  return 0;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Graph generate_family(const FamilySpec& spec) {
  const int p = spec.parameter;
  if (p < minimum_parameter(spec.kind)) {
    throw SpecError(std::string(to_string(spec.kind)) + " requires parameter >= " +
                    std::to_string(minimum_parameter(spec.kind)) + ", got " +
                    std::to_string(p));
  }
  const int order = family_order(spec);
  if (order > kMaxVertices) {
    throw SpecError(std::string(to_string(spec.kind)) + " " + std::to_string(p) +
                    " exceeds " + std::to_string(kMaxVertices) + " vertices");
  }

  Graph g(order);
  switch (spec.kind) {
    case FamilyKind::path:
      for (int v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
      break;
    case FamilyKind::cycle:
      for (int v = 0; v < p; ++v) g.add_edge(v, (v + 1) % p);
      break;
    case FamilyKind::complete:
      for (int u = 0; u < p; ++u) {
        for (int v = u + 1; v < p; ++v) g.add_edge(u, v);
      }
      break;
    case FamilyKind::hypercube:
      for (int u = 0; u < order; ++u) {
        for (int b = 0; b < p; ++b) {
          const int v = u ^ (1 << b);
          if (u < v) g.add_edge(u, v);
        }
      }
      break;
    case FamilyKind::clique_with_tails: {
      const int clique = 1 << p;
      for (int u = 0; u < clique; ++u) {
        for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
        for (int d = 1; d < p; ++d) {
          g.add_edge(tail_vertex(p, u, d - 1), tail_vertex(p, u, d));
        }
      }
      break;
    }
  }
  return g;
}

}  // namespace symbreak
