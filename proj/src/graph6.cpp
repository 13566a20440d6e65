#include "symbreak/graph6.hpp"

#include <fstream>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kLongForm = 126;

class BitReader {
 public:
  BitReader(std::string_view data, std::size_t base) : data_(data), base_(base) {}

  int next() {
    const std::size_t byte = pos_ / 6;
    const int shift = 5 - static_cast<int>(pos_ % 6);
    ++pos_;
    return (value(byte) >> shift) & 1;
  }

  int value(std::size_t byte) const { return data_[byte] - kBias; }
  std::size_t offset(std::size_t byte) const { return base_ + byte; }

 private:
  std::string_view data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<std::string_view> graph6_payload(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) return std::nullopt;
  return line;
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kLongForm) {
      throw ParseError("character outside 63..126", base + i);
    }
  }
  if (text.empty()) throw ParseError("missing size header", base);

  std::size_t n = 0;
  std::size_t header_len = 1;
  if (text[0] == kLongForm) {
    if (text.size() >= 2 && text[1] == kLongForm) {
      throw UnsupportedSize("8-byte graph6 size form");
    }
    if (text.size() < 4) throw ParseError("truncated size header", base + text.size());
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - kBias);
    header_len = 4;
    if (n < 63) throw ParseError("non-canonical long size form", base);
  } else {
    n = static_cast<std::size_t>(text[0] - kBias);
  }
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw UnsupportedSize("graph6 order " + std::to_string(n) + " above " +
                          std::to_string(kMaxVertices));
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view body = text.substr(header_len);
  if (body.size() != bytes) {
    throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(body.size()),
                     base + header_len + std::min(body.size(), bytes));
  }

  Graph g(static_cast<int>(n));
  BitReader reader(body, base + header_len);
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i) {
      if (reader.next() != 0) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    if ((reader.value(bytes - 1) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits", reader.offset(bytes - 1));
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) {
    throw UnsupportedSize("graph6 encoding supports at most 62 vertices, got " +
                          std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto payload = graph6_payload(line);
    if (!payload) continue;
    try {
      out.push_back(parse_graph6(*payload));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph6(in);
}

}  // namespace symbreak
