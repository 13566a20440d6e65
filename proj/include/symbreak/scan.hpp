#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/equivalence.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/metrics.hpp"
#include "symbreak/theory_checks.hpp"

namespace symbreak {

struct ScanOptions {
  AnalyzeOptions analyze;
  /// Run the proposition suite on graphs with D = 2 and Det = 2.
  bool props = true;
  /// Run it on every determining pair of such a graph, not only the Det-witness.
  bool all_pairs = false;
  int jobs = 1;
  /// Cap on equivalence tests spent looking for a same-order inequivalent pair.
  std::size_t evidence_attempts = 200;
  EquivalenceOptions equivalence;
};

/// Result for one corpus entry.
struct GraphScan {
  std::size_t index = 0;
  /// Empty when the graph could not be analysed at all.
  std::optional<SymmetryReport> report;
  /// Non-empty when some part of the analysis was cut short.
  std::string skipped;
  std::vector<PropReport> props;
  std::vector<std::string> violations;
};

struct TheoremReport {
  std::size_t corpus_size = 0;
  std::vector<GraphScan> graphs;  // input order
  /// Graphs with D = 2 and Det = 2.
  std::size_t subset_count = 0;
  std::map<int, std::size_t> rho_histogram;
  std::vector<std::string> violations;
  std::vector<std::string> rho4_witnesses;
  std::vector<std::size_t> skipped;
  /// Largest rho seen for each determining number.
  std::map<int, int> max_rho_by_det;
  std::size_t prop_suites = 0;
  /// Two graphs with equal order and |Aut| that are not distinguishably
  /// equivalent, with the failed invariant.
  struct Evidence {
    std::string first;
    std::string second;
    std::string reason;
  };
  std::optional<Evidence> same_order_inequivalent;

  bool clean() const { return violations.empty(); }
};

/// Analyses one graph and checks every claim that applies to it. Never throws
/// for analysis failures; those end up in `skipped`.
GraphScan scan_graph(const Graph& g, const ScanOptions& options, std::size_t index = 0);

/// One worker, corpus order.
TheoremReport scan_corpus_serial(std::span<const Graph> corpus, const ScanOptions& options);
/// OpenMP over graphs with options.jobs threads; the report is identical to
/// the serial one.
TheoremReport scan_corpus_parallel(std::span<const Graph> corpus, const ScanOptions& options);
/// Serial for jobs <= 1, parallel otherwise.
TheoremReport scan_corpus(std::span<const Graph> corpus, const ScanOptions& options);

/// Every determining pair {x, y} with x < y.
std::vector<std::pair<int, int>> determining_pairs(const PermGroup& group);

}  // namespace symbreak
