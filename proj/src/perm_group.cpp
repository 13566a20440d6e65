#include "symbreak/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "symbreak/errors.hpp"

namespace symbreak {

Labeling::Labeling(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("labeling is not injective");
  }
}

Labeling Labeling::identity(int degree) {
  std::vector<std::string> names;
  for (int v = 0; v < degree; ++v) names.push_back(std::to_string(v));
  return Labeling(std::move(names));
}

Labeling Labeling::one_based(int degree) {
  std::vector<std::string> names;
  for (int v = 0; v < degree; ++v) names.push_back(std::to_string(v + 1));
  return Labeling(std::move(names));
}

std::string relabel(const Permutation& p, const Labeling& labels) {
  if (p.degree() != labels.degree()) {
    throw DegreeError("relabel: permutation degree " + std::to_string(p.degree()) +
                      " vs labeling degree " + std::to_string(labels.degree()));
  }
  std::string out;
  for (const Cycle& c : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += labels[c[i]];
    }
    out += ')';
  }
  return out;
}

PermGroup PermGroup::trivial(int degree) {
  return from_elements_unchecked(degree, {Permutation::identity(degree)});
}

PermGroup PermGroup::from_elements_unchecked(int degree, std::vector<Permutation> elements) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  std::sort(g.elements_.begin(), g.elements_.end());
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  for (const auto& p : elements) {
    if (p.degree() != degree) throw DegreeError("element degree mismatch");
  }
  if (!satisfies_group_axioms(degree, elements)) {
    throw ArgumentError("element list is not a permutation group");
  }
  return from_elements_unchecked(degree, std::move(elements));
}

PermGroup PermGroup::generated_by(int degree, std::span<const Permutation> generators) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier = {Permutation::identity(degree)};
  seen.insert(frontier.front());
  std::vector<Permutation> all = frontier;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : generators) {
        Permutation q = compose(s, p);
        if (seen.insert(q).second) {
          all.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return from_elements_unchecked(degree, std::move(all));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool satisfies_group_axioms(int degree, std::span<const Permutation> elements) {
  std::unordered_set<Permutation, PermutationHash> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) return false;
  if (!set.contains(Permutation::identity(degree))) return false;
  for (const auto& a : elements) {
    if (!set.contains(inverse(a))) return false;
    for (const auto& b : elements) {
      if (!set.contains(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::string> representation(const PermGroup& group, const Labeling& labels) {
  std::vector<std::string> out;
  out.reserve(group.order());
  for (const auto& p : group.elements()) out.push_back(relabel(p, labels));
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup conjugate(const PermGroup& group, const Permutation& sigma) {
  if (sigma.degree() != group.degree()) throw DegreeError("conjugate: degree mismatch");
  const Permutation sigma_inv = inverse(sigma);
  std::vector<Permutation> out;
  out.reserve(group.order());
  for (const auto& a : group.elements()) out.push_back(compose(sigma, compose(a, sigma_inv)));
  return PermGroup::from_elements_unchecked(group.degree(), std::move(out));
}

}  // namespace symbreak
