#include "symbreak/scan.hpp"

#include <algorithm>
#include <exception>

#include "symbreak/automorphisms.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph6.hpp"

namespace symbreak {

namespace {

void join(std::string& out, const std::string& part) {
  if (!out.empty()) out += "; ";
  out += part;
}

std::string label(const Graph& g, std::size_t index) {
  return g.order() <= 62 ? encode_graph6(g) : "#" + std::to_string(index);
}

/// Re-verifies every witness in the report and the bounds that hold for all
/// graphs. Returns human-readable violations.
std::vector<std::string> verify(const SymmetryReport& r, const PermGroup& group) {
  std::vector<std::string> out;
  const int n = r.n;
  if (r.distinguishing) {
    const auto& d = *r.distinguishing;
    if (d.witness.k() > d.number || !is_distinguishing(group, d.witness)) {
      out.push_back("distinguishing witness does not re-verify");
    }
  }
  if (r.determining) {
    const auto& det = *r.determining;
    if (det.witness.size() != det.number || !is_determining_set(group, det.witness)) {
      out.push_back("determining witness does not re-verify");
    }
  }
  if (!r.cost_known) return out;
  if (!r.cost) {
    if (r.distinguishing && r.distinguishing->number <= 2) {
      out.push_back("2-distinguishable but no distinguishing class found");
    }
    return out;
  }
  const auto& c = *r.cost;
  if (r.distinguishing && r.distinguishing->number > 2) {
    out.push_back("distinguishing class found although D > 2");
  }
  if (c.degenerate) {
    if (!group.is_trivial()) out.push_back("degenerate cost on a non-trivial group");
    return out;
  }
  if (c.witness.size() != c.rho || !is_distinguishing_class(group, c.witness)) {
    out.push_back("cost witness does not re-verify");
  }
  if (r.determining && r.determining->number > c.rho) {
    out.push_back("determining number exceeds cost");
  }
  // The complement of a distinguishing class is one as well, so the smaller
  // side always fits in half the vertices.
  if (c.rho > n / 2) out.push_back("cost exceeds n/2");
  if (!is_distinguishing_class(group, VertexSet::range(n) - c.witness)) {
    out.push_back("complement of the cost witness is not a distinguishing class");
  }
  if (r.det2_d2_case() && (c.rho < 2 || c.rho > 4)) {
    out.push_back("D = 2 and Det = 2 but rho = " + std::to_string(c.rho));
  }
  return out;
}

void run_props(const Graph& g, const PermGroup& group, const ScanOptions& options,
               GraphScan& scan) {
  std::vector<std::pair<int, int>> pairs;
  if (options.all_pairs) {
    pairs = determining_pairs(group);
  } else {
    const auto w = scan.report->determining->witness.to_vector();
    pairs.emplace_back(w[0], w[1]);
  }
  for (auto [a, b] : pairs) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto report = check_prop_suite(g, group, x, y, 2, 2);
      for (const auto& o : report.outcomes) {
        if (o.passed) continue;
        std::string msg = std::string(to_string(o.claim)) + " fails for (" + std::to_string(x) +
                          "," + std::to_string(y) + "): " + o.detail + " [";
        for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
          if (i > 0) msg += ' ';
          msg += o.witnesses[i].to_string();
        }
        scan.violations.push_back(msg + "]");
      }
      scan.props.push_back(std::move(report));
    }
  }
}

void find_evidence(std::span<const Graph> corpus, const ScanOptions& options,
                   TheoremReport& report) {
  std::map<std::pair<int, std::uint64_t>, std::vector<std::size_t>> buckets;
  for (const auto& s : report.graphs) {
    if (s.report && s.report->aut_order > 1) {
      buckets[{s.report->n, s.report->aut_order}].push_back(s.index);
    }
  }
  std::size_t attempts = 0;
  for (const auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    const auto first = automorphism_group(corpus[members[0]], options.analyze.automorphisms);
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (attempts++ >= options.evidence_attempts) return;
      const auto other = automorphism_group(corpus[members[i]], options.analyze.automorphisms);
      try {
        const auto cmp = compare_groups(first, other, options.equivalence);
        if (cmp.verdict != EquivalenceVerdict::equivalent) {
          report.same_order_inequivalent = TheoremReport::Evidence{
              label(corpus[members[0]], members[0]), label(corpus[members[i]], members[i]),
              std::string(to_string(cmp.verdict))};
          return;
        }
      } catch (const BudgetExceeded&) {
      }
    }
  }
}

TheoremReport reduce(std::span<const Graph> corpus, std::vector<GraphScan> scans,
                     const ScanOptions& options) {
  TheoremReport report;
  report.corpus_size = corpus.size();
  report.graphs = std::move(scans);
  for (const auto& s : report.graphs) {
    const std::string name = label(corpus[s.index], s.index);
    if (!s.skipped.empty()) report.skipped.push_back(s.index);
    for (const auto& v : s.violations) report.violations.push_back(name + ": " + v);
    report.prop_suites += s.props.size();
    if (!s.report) continue;
    const auto& r = *s.report;
    if (r.determining && r.cost_known && r.cost && !r.cost->degenerate) {
      auto& best = report.max_rho_by_det[r.determining->number];
      best = std::max(best, r.cost->rho);
    }
    if (!r.det2_d2_case()) continue;
    ++report.subset_count;
    if (r.cost_known && r.cost) {
      ++report.rho_histogram[r.cost->rho];
      if (r.cost->rho == 4) report.rho4_witnesses.push_back(name);
    }
  }
  find_evidence(corpus, options, report);
  return report;
}

}  // namespace

std::vector<std::pair<int, int>> determining_pairs(const PermGroup& group) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < group.degree(); ++x) {
    for (int y = x + 1; y < group.degree(); ++y) {
      if (is_determining_set(group, VertexSet{x, y})) out.emplace_back(x, y);
    }
  }
  return out;
}

GraphScan scan_graph(const Graph& g, const ScanOptions& options, std::size_t index) {
  GraphScan scan;
  scan.index = index;
  PermGroup group;
  try {
    group = automorphism_group(g, options.analyze.automorphisms);
  } catch (const GroupTooLarge& e) {
    scan.skipped = e.what();
    return scan;
  } catch (const UnsupportedSize& e) {
    scan.skipped = e.what();
    return scan;
  }
  scan.report = analyze(g, group, options.analyze);
  const auto& r = *scan.report;
  if (!r.distinguishing) join(scan.skipped, "budget exceeded: D");
  if (!r.determining) join(scan.skipped, "budget exceeded: Det");
  if (!r.cost_known) join(scan.skipped, "budget exceeded: rho");
  scan.violations = verify(r, group);
  if (options.props && r.det2_d2_case()) run_props(g, group, options, scan);
  return scan;
}

TheoremReport scan_corpus_serial(std::span<const Graph> corpus, const ScanOptions& options) {
  std::vector<GraphScan> scans;
  scans.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) scans.push_back(scan_graph(corpus[i], options, i));
  return reduce(corpus, std::move(scans), options);
}

TheoremReport scan_corpus_parallel(std::span<const Graph> corpus, const ScanOptions& options) {
  const auto count = static_cast<std::ptrdiff_t>(corpus.size());
  std::vector<GraphScan> scans(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      scans[k] = scan_graph(corpus[k], options, k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reduce(corpus, std::move(scans), options);
}

TheoremReport scan_corpus(std::span<const Graph> corpus, const ScanOptions& options) {
  return options.jobs <= 1 ? scan_corpus_serial(corpus, options)
                           : scan_corpus_parallel(corpus, options);
}

}  // namespace symbreak
