#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symbreak/permutation.hpp"

namespace symbreak {

/// Display names for vertex indices (an injective map index -> label).
class Labeling {
 public:
  /// Throws ArgumentError when two indices share a name.
  explicit Labeling(std::vector<std::string> names);
  /// Names "0".."n-1".
  static Labeling identity(int degree);
  /// Names "1".."n".
  static Labeling one_based(int degree);

  int degree() const { return static_cast<int>(names_.size()); }
  const std::string& operator[](int v) const { return names_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::string> names_;
};

/// Labeled cycle expression of p: every cycle (fixed points included) in
/// parentheses, members comma-separated, no whitespace. Throws DegreeError.
std::string relabel(const Permutation& p, const Labeling& labels);

/// A permutation group given by its full element list. Elements are kept
/// sorted by image array, so the identity is always first.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int degree);
  /// Validates degree, duplicates, identity and closure; throws ArgumentError.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);
  /// Trusts the caller that `elements` already form a group.
  static PermGroup from_elements_unchecked(int degree, std::vector<Permutation> elements);
  /// Closure of a generator set under composition.
  static PermGroup generated_by(int degree, std::span<const Permutation> generators);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() <= 1; }
  std::span<const Permutation> elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation& p) const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Checks the group axioms on an explicit list (identity, inverses, closure).
bool satisfies_group_axioms(int degree, std::span<const Permutation> elements);

/// The automorphism representation of a group under a labeling: the sorted
/// list of labeled cycle expressions of its elements.
std::vector<std::string> representation(const PermGroup& group, const Labeling& labels);

/// sigma * G * sigma^-1, i.e. the image of G when every point v is renamed sigma(v).
PermGroup conjugate(const PermGroup& group, const Permutation& sigma);

}  // namespace symbreak
