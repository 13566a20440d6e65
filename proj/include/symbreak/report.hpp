#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/metrics.hpp"
#include "symbreak/scan.hpp"
#include "symbreak/theory_checks.hpp"

namespace symbreak {

/// `lines`: tab-separated key=value records. `json`: one compact object per line.
enum class OutputFormat { lines, json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// In line form: `<graph6> n= m= aut= D= Det= rho= flags= D_coloring= Det_set= rho_set=`.
/// "?" marks a metric whose search ran out of budget and "-" an absent value
/// (rho of a graph with D > 2, an empty flag list).
std::string format_report(const SymmetryReport& report, OutputFormat format);

std::string format_skipped(std::string_view graph6, std::string_view reason, OutputFormat format);

/// Claim results as pass / fail / n/a, followed by the witnesses of any failure.
std::string format_prop_report(const PropReport& report, OutputFormat format);

/// The end-of-stream summary object of a corpus scan (always JSON).
std::string format_summary(const TheoremReport& report);

std::string format_family_record(const FamilyBoundRecord& record, OutputFormat format);

struct ClassLine {
  std::size_t id = 0;
  std::vector<std::string> members;
  std::uint64_t aut_order = 1;
  std::optional<int> distinguishing;
};

std::string format_class(const ClassLine& line, OutputFormat format);

}  // namespace symbreak
