// symbreak: distinguishing, determining and cost numbers of small graphs.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "symbreak/automorphisms.hpp"
#include "symbreak/enumerate.hpp"
#include "symbreak/equivalence.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/metrics.hpp"
#include "symbreak/report.hpp"
#include "symbreak/scan.hpp"
#include "symbreak/theory_checks.hpp"

using namespace symbreak;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct Corpus {
  std::vector<Graph> graphs;
  int errors = 0;
};

/// Reads graph6 records, reporting malformed lines on stderr. With fail_fast
/// reading stops at the first bad line.
Corpus read_corpus(std::istream& in, bool fail_fast) {
  Corpus corpus;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto payload = graph6_payload(line);
    if (!payload) continue;
    try {
      corpus.graphs.push_back(parse_graph6(*payload));
    } catch (const Error& e) {
      std::cerr << "error\tline " << number << ": " << e.what() << '\n';
      ++corpus.errors;
      if (fail_fast) break;
    }
  }
  return corpus;
}

Corpus read_corpus(const std::string& path, bool fail_fast) {
  if (path == "-") return read_corpus(std::cin, fail_fast);
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  return read_corpus(in, fail_fast);
}

int default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string bijection_text(const Permutation& sigma) {
  std::string out;
  for (int v = 0; v < sigma.degree(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(v) + "->" + std::to_string(sigma(v));
  }
  return out;
}

void print_scan(std::span<const Graph> corpus, const TheoremReport& report, OutputFormat format,
                bool props, bool quiet) {
  if (!quiet) {
    for (const auto& s : report.graphs) {
      if (!s.report) {
        std::cout << format_skipped(encode_graph6(corpus[s.index]), s.skipped, format) << '\n';
        continue;
      }
      std::cout << format_report(*s.report, format) << '\n';
      if (!props) continue;
      for (const auto& p : s.props) std::cout << format_prop_report(p, format) << '\n';
    }
  }
  std::cout << format_summary(report) << '\n';
}

struct CommonFlags {
  std::string format = "lines";
  std::uint64_t budget = SearchOptions{}.budget;
  std::uint64_t equivalence_budget = EquivalenceOptions{}.budget;
  int jobs = default_jobs();
  bool fail_fast = false;

  OutputFormat output() const { return *parse_output_format(format); }
  ScanOptions scan_options() const {
    ScanOptions o;
    o.analyze.search.budget = budget;
    o.equivalence.budget = equivalence_budget;
    o.jobs = jobs;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"lines", "json"}));
  cmd->add_option("--budget", flags.budget, "Search node cap per metric");
  cmd->add_option("--equiv-budget", flags.equivalence_budget, "Node cap per equivalence test");
  cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--fail-fast", flags.fail_fast, "Stop at the first malformed record");
}

int cmd_analyze(const std::string& input, const CommonFlags& flags) {
  const auto corpus = read_corpus(input, flags.fail_fast);
  if (flags.fail_fast && corpus.errors > 0) return kExitData;
  auto options = flags.scan_options();
  options.props = false;
  options.evidence_attempts = 0;
  const auto report = scan_corpus(corpus.graphs, options);
  for (const auto& s : report.graphs) {
    if (s.report) {
      std::cout << format_report(*s.report, flags.output()) << '\n';
    } else {
      std::cout << format_skipped(encode_graph6(corpus.graphs[s.index]), s.skipped, flags.output())
                << '\n';
    }
  }
  return corpus.errors > 0 || !report.clean() ? kExitData : kExitClean;
}

int cmd_family(const std::string& kind_name, int parameter, bool analyze_it, bool check,
               bool exact, const CommonFlags& flags) {
  const auto kind = parse_family_kind(kind_name);
  if (!kind) {
    std::cerr << "error: unknown family '" << kind_name << "'\n";
    return kExitUsage;
  }
  if (check) {
    if (*kind != FamilyKind::clique_with_tails || parameter < 1 || parameter > 3) {
      std::cerr << "error: --check needs clique_with_tails with parameter 1..3\n";
      return kExitUsage;
    }
    FamilyCheckOptions options;
    options.exact_minimality = exact;
    options.search.budget = flags.budget;
    const auto record = family_lower_bound_check(parameter, options);
    std::cout << format_family_record(record, flags.output()) << '\n';
    return record.passed() ? kExitClean : kExitData;
  }
  Graph g;
  try {
    g = generate_family({*kind, parameter});
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!analyze_it) {
    std::cout << encode_graph6(g) << '\n';
    return kExitClean;
  }
  AnalyzeOptions options;
  options.search.budget = flags.budget;
  std::cout << format_report(analyze(g, options), flags.output()) << '\n';
  return kExitClean;
}

int cmd_equiv(const std::string& input, const CommonFlags& flags) {
  const auto corpus = read_corpus(input, true);
  if (corpus.errors > 0) return kExitData;
  if (corpus.graphs.size() != 2) {
    std::cerr << "error: equiv needs exactly 2 graphs, got " << corpus.graphs.size() << '\n';
    return kExitUsage;
  }
  EquivalenceOptions options;
  options.budget = flags.equivalence_budget;
  try {
    const auto a = automorphism_group(corpus.graphs[0], options.automorphisms);
    const auto b = automorphism_group(corpus.graphs[1], options.automorphisms);
    const auto cmp = compare_groups(a, b, options);
    if (cmp.verdict == EquivalenceVerdict::equivalent) {
      std::cout << "equivalent\t" << bijection_text(*cmp.bijection) << '\n';
    } else {
      std::cout << "not-equivalent\t" << to_string(cmp.verdict) << '\n';
    }
  } catch (const BudgetExceeded& e) {
    std::cout << "unknown\t" << e.what() << '\n';
    return kExitData;
  }
  return kExitClean;
}

int cmd_scan(const std::string& input, int enumerate_up_to, bool props, bool all_pairs,
             bool quiet, const CommonFlags& flags) {
  Corpus corpus;
  if (enumerate_up_to > 0) {
    for (int n = 1; n <= enumerate_up_to; ++n) {
      auto graphs = enumerate_graphs(n);
      corpus.graphs.insert(corpus.graphs.end(), graphs.begin(), graphs.end());
    }
  }
  if (!input.empty()) {
    auto more = read_corpus(input, flags.fail_fast);
    if (flags.fail_fast && more.errors > 0) return kExitData;
    corpus.errors = more.errors;
    corpus.graphs.insert(corpus.graphs.end(), more.graphs.begin(), more.graphs.end());
  }
  auto options = flags.scan_options();
  options.props = true;
  options.all_pairs = all_pairs;
  const auto report = scan_corpus(corpus.graphs, options);
  print_scan(corpus.graphs, report, flags.output(), props, quiet);
  return corpus.errors > 0 || !report.clean() ? kExitData : kExitClean;
}

int cmd_classes(const std::string& input, const CommonFlags& flags) {
  const auto corpus = read_corpus(input, flags.fail_fast);
  if (flags.fail_fast && corpus.errors > 0) return kExitData;
  EquivalenceOptions options;
  options.budget = flags.equivalence_budget;
  const auto classes = equivalence_classes(corpus.graphs, options, flags.jobs);
  SearchOptions search;
  search.budget = flags.budget;
  std::size_t id = 0;
  for (const auto& members : classes.classes) {
    ClassLine line;
    line.id = id++;
    const auto& first = corpus.graphs[members.front()];
    const auto group = automorphism_group(first);
    line.aut_order = group.order();
    try {
      line.distinguishing = distinguishing_number(group, search).number;
    } catch (const BudgetExceeded&) {
    }
    for (auto i : members) line.members.push_back(encode_graph6(corpus.graphs[i]));
    std::cout << format_class(line, flags.output()) << '\n';
  }
  for (auto [a, b] : classes.unresolved) {
    std::cerr << "unresolved\t" << encode_graph6(corpus.graphs[a]) << '\t'
              << encode_graph6(corpus.graphs[b]) << '\n';
  }
  return corpus.errors > 0 || !classes.unresolved.empty() ? kExitData : kExitClean;
}

int cmd_enumerate(int n, bool up_to) {
  for (int order = up_to ? 1 : n; order <= n; ++order) {
    for (const auto& g : enumerate_graphs(order)) std::cout << encode_graph6(g) << '\n';
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry breaking numbers of small graphs"};
  app.require_subcommand(1);
  CommonFlags flags;

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "One report line per graph6 record");
  analyze_cmd->add_option("input", input, "graph6 file, - for stdin")->required();
  add_common(analyze_cmd, flags);

  std::string kind;
  int parameter = 0;
  bool emit = false;
  bool analyze_it = false;
  bool check = false;
  bool exact = false;
  auto* family_cmd = app.add_subcommand("family", "Generate a standard graph family member");
  family_cmd->add_option("kind", kind, "path, cycle, complete, hypercube, clique_with_tails")
      ->required();
  family_cmd->add_option("parameter", parameter, "Family parameter")->required();
  auto* emit_flag = family_cmd->add_flag("--emit", emit, "Print graph6 (default)");
  auto* analyze_flag = family_cmd->add_flag("--analyze", analyze_it, "Print the full report");
  auto* check_flag =
      family_cmd->add_flag("--check", check, "Lower-bound checks for clique_with_tails 1..3");
  emit_flag->excludes(analyze_flag)->excludes(check_flag);
  analyze_flag->excludes(check_flag);
  family_cmd->add_flag("--exact", exact, "With --check 3: run the exact cost search");
  add_common(family_cmd, flags);

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare the automorphism groups of two graphs");
  equiv_cmd->add_option("input", input, "graph6 file with exactly two records, - for stdin")
      ->required();
  add_common(equiv_cmd, flags);

  int enumerate_up_to = 0;
  bool props = false;
  bool all_pairs = false;
  bool quiet = false;
  auto* scan_cmd = app.add_subcommand("scan", "Analyse a corpus and check every claim");
  scan_cmd->add_option("input", input, "graph6 file, - for stdin");
  scan_cmd->add_option("--enumerate", enumerate_up_to, "Add all graphs on 1..n vertices")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  scan_cmd->add_flag("--props", props, "Print proposition suite results");
  scan_cmd->add_flag("--all-pairs", all_pairs, "Check every determining pair, not just one");
  scan_cmd->add_flag("--quiet", quiet, "Print the summary only");
  add_common(scan_cmd, flags);

  auto* classes_cmd = app.add_subcommand("classes", "Group a corpus by equivalent groups");
  classes_cmd->add_option("input", input, "graph6 file, - for stdin")->required();
  add_common(classes_cmd, flags);

  int order = 0;
  bool up_to = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All graphs on n vertices as graph6");
  enumerate_cmd->add_option("n", order, "Vertex count")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  enumerate_cmd->add_flag("--up-to", up_to, "All orders 1..n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, flags);
    if (*family_cmd) return cmd_family(kind, parameter, analyze_it, check, exact, flags);
    if (*equiv_cmd) return cmd_equiv(input, flags);
    if (*scan_cmd) {
      if (input.empty() && enumerate_up_to == 0) {
        std::cerr << "error: scan needs a corpus file or --enumerate\n";
        return kExitUsage;
      }
      return cmd_scan(input, enumerate_up_to, props, all_pairs, quiet, flags);
    }
    if (*classes_cmd) return cmd_classes(input, flags);
    if (*enumerate_cmd) return cmd_enumerate(order, up_to);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
