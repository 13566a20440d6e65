#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "symbreak/vertex_set.hpp"

namespace symbreak {

using Cycle = std::vector<int>;

/// A bijection on 0..n-1 in array form (n <= 64).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ArgumentError unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int degree);
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  /// Product of disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, std::span<const Cycle> cycles);
  static Permutation from_cycles(int degree, std::initializer_list<Cycle> cycles) {
    return from_cycles(degree, std::span<const Cycle>(cycles.begin(), cycles.size()));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint8_t> images() const { return images_; }

  bool is_identity() const;
  bool fixes(int v) const { return (*this)(v) == v; }
  /// Points moved by the permutation.
  VertexSet support() const;
  VertexSet apply(VertexSet s) const;

  /// Disjoint cycles including fixed points, ordered by least element, each
  /// rotated to start at its least element.
  std::vector<Cycle> cycles() const;
  /// Length of the cycle through v.
  int cycle_length(int v) const;

  /// "(0,1,2)(3)" with the raw indices as names.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// p∘q: apply q first, then p (right-to-left, like function composition).
/// Throws DegreeError when the degrees differ.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Cycle lengths including fixed points, sorted descending.
std::vector<int> cycle_type(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace symbreak
