#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// CR/LF are stripped. Throws ParseError (with byte offset) on malformed input
/// and UnsupportedSize when the encoded order exceeds kMaxVertices.
Graph parse_graph6(std::string_view text);

/// Encodes `g` under its current vertex numbering. Only the single-byte size
/// form is produced; orders above 62 throw UnsupportedSize.
std::string encode_graph6(const Graph& g);

/// Strips line terminators and an optional header. Returns nullopt for lines
/// that carry no record (blank lines, a bare header).
std::optional<std::string_view> graph6_payload(std::string_view line);

/// Reads every record of a stream; a ParseError names the 1-based line.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace symbreak
