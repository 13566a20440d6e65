#include "symbreak/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string_view>

#include "symbreak/errors.hpp"

namespace symbreak {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw UnsupportedSize("permutation degree above " + std::to_string(kMaxVertices));
  }
  std::uint64_t seen = 0;
  for (std::uint8_t v : images_) {
    if (v >= images_.size() || ((seen >> v) & 1U)) {
      throw ArgumentError("images do not form a bijection");
    }
    seen |= std::uint64_t{1} << v;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const int> images) {
  std::vector<std::uint8_t> out;
  out.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v >= kMaxVertices) throw ArgumentError("image out of range");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return Permutation(std::move(out));
}

Permutation Permutation::from_cycles(int degree, std::span<const Cycle> cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  VertexSet used;
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int v = c[i];
      if (v < 0 || v >= degree) throw ArgumentError("cycle entry out of range");
      if (used.contains(v)) throw ArgumentError("cycles are not disjoint");
      used.insert(v);
      images[v] = c[(i + 1) % c.size()];
    }
  }
  return from_images(images);
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

VertexSet Permutation::support() const {
  VertexSet s;
  for (int v = 0; v < degree(); ++v) {
    if (images_[v] != v) s.insert(v);
  }
  return s;
}

VertexSet Permutation::apply(VertexSet s) const {
  VertexSet out;
  for (int v : s) out.insert(images_[v]);
  return out;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  VertexSet seen;
  for (int start = 0; start < degree(); ++start) {
    if (seen.contains(start)) continue;
    Cycle c;
    for (int v = start; !seen.contains(v); v = images_[v]) {
      seen.insert(v);
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_length(int v) const {
  int len = 1;
  for (int w = images_[v]; w != v; w = images_[w]) ++len;
  return len;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const Cycle& c : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeError("compose: degrees " + std::to_string(p.degree()) + " and " +
                      std::to_string(q.degree()));
  }
  std::vector<std::uint8_t> images(static_cast<std::size_t>(p.degree()));
  for (int v = 0; v < p.degree(); ++v) images[v] = static_cast<std::uint8_t>(p(q(v)));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(p.degree()));
  for (int v = 0; v < p.degree(); ++v) images[p(v)] = static_cast<std::uint8_t>(v);
  return Permutation(std::move(images));
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const Cycle& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  const auto bytes = p.images();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace symbreak
