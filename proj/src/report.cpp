#include "symbreak/report.hpp"

#include <json.hpp>

namespace symbreak {

using Json = nlohmann::ordered_json;

namespace {

std::string join_ints(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string set_text(VertexSet s) { return "{" + join_ints(s.to_vector()) + "}"; }

std::vector<std::string> flags(const SymmetryReport& r) {
  std::vector<std::string> out;
  if (r.det2_d2_case()) out.emplace_back("det2_d2");
  if (r.rho_in_2_4() == true) out.emplace_back("rho_in_2_4");
  if (r.cost_known && r.cost && r.cost->degenerate) out.emplace_back("degenerate");
  return out;
}

std::string claim_state(const ClaimOutcome& o) {
  if (!o.passed) return "fail";
  return o.applicable ? "pass" : "n/a";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "lines") return OutputFormat::lines;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_report(const SymmetryReport& r, OutputFormat format) {
  const auto fl = flags(r);
  if (format == OutputFormat::json) {
    Json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.edge_count;
    j["aut"] = r.aut_order;
    j["D"] = r.distinguishing ? Json(r.distinguishing->number) : Json("unknown");
    j["Det"] = r.determining ? Json(r.determining->number) : Json("unknown");
    if (!r.cost_known) {
      j["rho"] = "unknown";
    } else {
      j["rho"] = r.cost ? Json(r.cost->rho) : Json(nullptr);
    }
    j["flags"] = fl;
    if (r.distinguishing) {
      const auto c = r.distinguishing->witness.colors();
      j["D_coloring"] = std::vector<int>(c.begin(), c.end());
    }
    if (r.determining) j["Det_set"] = r.determining->witness.to_vector();
    if (r.cost_known && r.cost) j["rho_set"] = r.cost->witness.to_vector();
    return j.dump();
  }

  std::string out = r.graph6;
  out += "\tn=" + std::to_string(r.n);
  out += "\tm=" + std::to_string(r.edge_count);
  out += "\taut=" + std::to_string(r.aut_order);
  out += "\tD=" + (r.distinguishing ? std::to_string(r.distinguishing->number) : "?");
  out += "\tDet=" + (r.determining ? std::to_string(r.determining->number) : "?");
  out += "\trho=";
  out += !r.cost_known ? "?" : r.cost ? std::to_string(r.cost->rho) : "-";
  out += "\tflags=";
  if (fl.empty()) out += '-';
  for (std::size_t i = 0; i < fl.size(); ++i) out += (i ? "," : "") + fl[i];
  out += "\tD_coloring=" + (r.distinguishing ? join_ints(r.distinguishing->witness.colors()) : "?");
  out += "\tDet_set=" + (r.determining ? set_text(r.determining->witness) : "?");
  out += "\trho_set=";
  out += !r.cost_known ? "?" : r.cost ? set_text(r.cost->witness) : "-";
  return out;
}

std::string format_skipped(std::string_view graph6, std::string_view reason, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["graph6"] = graph6;
    j["skipped"] = reason;
    return j.dump();
  }
  return std::string(graph6) + "\tskipped=" + std::string(reason);
}

std::string format_prop_report(const PropReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json claims = Json::object();
    Json failures = Json::array();
    for (const auto& o : r.outcomes) {
      claims[std::string(to_string(o.claim))] = claim_state(o);
      if (o.passed) continue;
      Json f;
      f["claim"] = to_string(o.claim);
      f["detail"] = o.detail;
      Json w = Json::array();
      for (const auto& p : o.witnesses) w.push_back(p.to_string());
      f["witnesses"] = w;
      failures.push_back(f);
    }
    Json j;
    j["prop"] = r.graph6;
    j["pair"] = {r.x, r.y};
    j["claims"] = claims;
    j["failures"] = failures;
    return j.dump();
  }
  std::string out = "prop\t" + r.graph6 + "\tpair=" + std::to_string(r.x) + "," + std::to_string(r.y);
  for (const auto& o : r.outcomes) out += "\t" + std::string(to_string(o.claim)) + "=" + claim_state(o);
  for (const auto& o : r.outcomes) {
    if (o.passed) continue;
    out += "\tfailure=" + std::string(to_string(o.claim)) + ":" + o.detail + ":";
    for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
      out += (i ? " " : "") + o.witnesses[i].to_string();
    }
  }
  return out;
}

std::string format_summary(const TheoremReport& r) {
  Json s;
  s["corpus_size"] = r.corpus_size;
  s["subset_count"] = r.subset_count;
  Json hist = Json::object();
  for (auto [rho, count] : r.rho_histogram) hist[std::to_string(rho)] = count;
  s["rho_histogram"] = hist;
  s["rho4_witnesses"] = r.rho4_witnesses;
  s["violations"] = r.violations;
  s["skipped"] = r.skipped;
  Json by_det = Json::object();
  for (auto [det, rho] : r.max_rho_by_det) by_det[std::to_string(det)] = rho;
  s["max_rho_by_det"] = by_det;
  s["prop_suites"] = r.prop_suites;
  if (r.same_order_inequivalent) {
    const auto& e = *r.same_order_inequivalent;
    s["same_order_inequivalent"] = {{"first", e.first}, {"second", e.second}, {"reason", e.reason}};
  } else {
    s["same_order_inequivalent"] = nullptr;
  }
  Json j;
  j["summary"] = s;
  return j.dump();
}

std::string format_family_record(const FamilyBoundRecord& r, OutputFormat format) {
  const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; };
  if (format == OutputFormat::json) {
    Json j;
    j["family"] = "clique_with_tails";
    j["n"] = r.n;
    j["vertices"] = r.vertices;
    j["aut"] = r.aut_order;
    j["Det_formula"] = r.det_formula;
    j["Det"] = r.det_exact ? Json(*r.det_exact) : Json(nullptr);
    j["rho_formula"] = r.rho_formula;
    j["rho"] = r.rho_exact ? Json(*r.rho_exact) : Json(nullptr);
    j["clique_minus_one_determining"] = r.clique_minus_one_determining;
    j["random_subsets_tested"] = r.random_subsets_tested;
    j["random_subsets_not_determining"] = r.random_subsets_not_determining;
    j["string_class"] = r.string_class.to_vector();
    j["string_class_distinguishing"] = r.string_class_distinguishing;
    j["degenerate"] = r.degenerate;
    j["passed"] = r.passed();
    return j.dump();
  }
  std::string out = "family\tclique_with_tails\tn=" + std::to_string(r.n);
  out += "\tvertices=" + std::to_string(r.vertices);
  out += "\taut=" + std::to_string(r.aut_order);
  out += "\tDet_formula=" + std::to_string(r.det_formula) + "\tDet=" + opt(r.det_exact);
  out += "\trho_formula=" + std::to_string(r.rho_formula) + "\trho=" + opt(r.rho_exact);
  out += "\tclique_minus_one=" + std::string(r.clique_minus_one_determining ? "determining" : "not-determining");
  if (r.random_subsets_tested > 0) {
    out += "\trandom_subsets=" + std::to_string(r.random_subsets_tested) +
           (r.random_subsets_not_determining ? ":none-determining" : ":some-determining");
  }
  out += "\tstring_class=" + set_text(r.string_class) +
         (r.string_class_distinguishing ? ":distinguishing" : ":not-distinguishing");
  if (r.degenerate) out += "\tdegenerate";
  out += r.passed() ? "\tpassed" : "\tfailed";
  return out;
}

std::string format_class(const ClassLine& c, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["class"] = c.id;
    j["aut"] = c.aut_order;
    j["D"] = c.distinguishing ? Json(*c.distinguishing) : Json("unknown");
    j["members"] = c.members;
    return j.dump();
  }
  std::string out = "class\t" + std::to_string(c.id) + "\taut=" + std::to_string(c.aut_order);
  out += "\tD=" + (c.distinguishing ? std::to_string(*c.distinguishing) : "?");
  out += "\tmembers=";
  for (std::size_t i = 0; i < c.members.size(); ++i) out += (i ? "," : "") + c.members[i];
  return out;
}

}  // namespace symbreak
