#include "gg/report.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace gg {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "yes" : "no";
}

Json minimality_json(const std::optional<MinimalityResult>& r, std::span<const std::string> labels) {
  if (!r) return nullptr;
  Json j;
  j["holds"] = r->holds;
  j["connectivity"] = r->connectivity;
  if (r->witness) {
    const auto name = [&](Vertex v) {
      return v < labels.size() ? Json(labels[v]) : Json(v);
    };
    j["witness"] = Json::array({name(r->witness->u), name(r->witness->v)});
    j["witness_connectivity"] = r->witness_connectivity;
  } else {
    j["witness"] = nullptr;
    j["witness_connectivity"] = nullptr;
  }
  return j;
}

}  // namespace

Json group_json(const FiniteGroup& group) {
  const GroupClassification c = classify_group(group);
  const ExponentInfo e = exponent_info(group);
  Json j;
  j["group"] = render(group.spec());
  j["order"] = group.order();
  j["spectrum"] = order_spectrum(group);
  j["exponent"] = e.exponent;
  j["full_exponent"] = e.full;
  j["nilpotent"] = c.is_nilpotent;
  Json cls;
  cls["p_group"] = c.is_p_group;
  cls["prime"] = c.is_p_group ? Json(c.prime) : Json(nullptr);
  cls["cyclic"] = c.is_cyclic;
  cls["abelian"] = c.is_abelian;
  cls["elementary_abelian_2"] = c.is_elementary_abelian_2;
  cls["prime_exponent"] = c.is_prime_exponent;
  cls["nilpotent_shape"] = to_string(c.nilpotent_shape);
  j["classification"] = cls;

  const MaximalCyclicFamily family = maximal_cyclic_subgroups(group);
  std::map<std::size_t, std::size_t> by_order;
  for (const CyclicSubgroup& h : family.members) ++by_order[h.size()];
  Json inventory = Json::array();
  for (const auto& [order, count] : by_order) inventory.push_back({{"order", order}, {"count", count}});
  Json members = Json::array();
  for (const CyclicSubgroup& h : family.members) {
    Json elems = Json::array();
    for (Element a : h.elements) elems.push_back(group.name(a));
    members.push_back({{"generator", group.name(h.generator)}, {"order", h.size()}, {"elements", elems}});
  }
  j["maximal_cyclic"] = {{"count", family.size()}, {"by_order", inventory}, {"members", members}};
  return j;
}

Json graph_json(const GroupGraph& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  j["group"] = g.group;
  j["reduction"] = to_string(g.reduction);
  j["n"] = g.graph.order();
  j["m"] = g.graph.size();
  std::map<std::size_t, std::size_t> histogram;
  for (Vertex v = 0; v < g.graph.order(); ++v) ++histogram[g.graph.degree(v)];
  Json hist = Json::array();
  for (const auto& [degree, count] : histogram) hist.push_back({{"degree", degree}, {"count", count}});
  j["degree_histogram"] = hist;
  j["labels"] = g.labels;
  Json edges = Json::array();
  for (const Edge& e : g.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j;
}

Json report_json(const ConnectivityReport& r, std::span<const std::string> labels) {
  Json j;
  j["n"] = r.order;
  j["m"] = r.size;
  j["min_degree"] = r.min_degree;
  j["vertex_connectivity"] = r.vertex_connectivity;
  j["edge_connectivity"] = r.edge_connectivity;
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
  j["dominating"] = r.dominating;
  j["minimally_edge_connected"] = minimality_json(r.minimally_edge_connected, labels);
  j["minimally_connected"] = minimality_json(r.minimally_connected, labels);
  return j;
}

Json verdict_json(const TheoremVerdict& v, bool timing) {
  Json j;
  j["theorem"] = to_string(v.theorem);
  j["group"] = v.group;
  j["graph"] = v.graph;
  j["lhs"] = optional_bool(v.lhs);
  j["rhs"] = optional_bool(v.rhs);
  j["agree"] = v.agree;
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["applicable"] = v.applicable;
  j["millis"] = timing ? Json(v.millis) : Json(nullptr);
  return j;
}

Json sweep_summary_json(const SweepSummary& s) {
  Json j;
  j["groups"] = s.groups;
  j["verdicts"] = s.verdicts;
  j["agreements"] = s.agreements;
  j["disagreements"] = s.disagreements;
  j["inapplicable"] = s.inapplicable;
  j["law_checks"] = s.law_checks;
  j["law_violations"] = s.law_violations;
  j["failures"] = s.failures;
  j["law_violation_details"] = s.law_violation_details;
  return j;
}

Json fuzz_json(const FuzzSummary& s) {
  Json j;
  j["attempts"] = s.attempts;
  j["checked"] = s.checked;
  j["skipped_complete"] = s.skipped_complete;
  j["agreements"] = s.agreements;
  j["disagreements"] = s.disagreements;
  j["law_violations"] = s.law_violations;
  j["counterexample"] = s.counterexample ? Json(*s.counterexample) : Json(nullptr);
  return j;
}

void write_verdict_lines(std::span<const TheoremVerdict> verdicts, bool timing, std::ostream& out) {
  for (const TheoremVerdict& v : verdicts) out << verdict_json(v, timing).dump() << '\n';
}

void write_verdict_table(std::span<const TheoremVerdict> verdicts, bool timing, std::ostream& out) {
  std::size_t group_w = 5, graph_w = 5;
  for (const TheoremVerdict& v : verdicts) {
    group_w = std::max(group_w, v.group.size());
    graph_w = std::max(graph_w, v.graph.size());
  }
  const auto row = [&](std::string_view id, std::string_view group, std::string_view graph,
                       std::string_view app, std::string_view lhs, std::string_view rhs,
                       std::string_view agree, std::string_view millis, std::string_view witness) {
    out << std::left << std::setw(12) << id << ' ' << std::setw(static_cast<int>(group_w)) << group
        << ' ' << std::setw(static_cast<int>(graph_w)) << graph << ' ' << std::setw(10) << app << ' '
        << std::setw(4) << lhs << ' ' << std::setw(4) << rhs << ' ' << std::setw(5) << agree;
    if (timing) out << ' ' << std::right << std::setw(10) << millis << std::left;
    if (!witness.empty()) out << ' ' << witness;
    out << '\n';
  };
  row("theorem", "group", "graph", "applicable", "lhs", "rhs", "agree", "millis", "witness");
  for (const TheoremVerdict& v : verdicts) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(2) << v.millis;
    row(to_string(v.theorem), v.group, v.graph, v.applicable ? "yes" : "no", yes_no(v.lhs),
        yes_no(v.rhs), v.applicable ? (v.agree ? "yes" : "NO") : "-", ms.str(),
        v.witness.value_or(""));
  }
}

void write_sweep_summary(const SweepSummary& s, std::ostream& out) {
  out << "groups: " << s.groups << '\n'
      << "verdicts: " << s.verdicts << '\n'
      << "agreements: " << s.agreements << '\n'
      << "disagreements: " << s.disagreements << '\n'
      << "inapplicable: " << s.inapplicable << '\n'
      << "law checks: " << s.law_checks << '\n'
      << "law violations: " << s.law_violations << '\n'
      << "build failures: " << s.failures.size() << '\n';
  for (const std::string& f : s.failures) out << "  failed: " << f << '\n';
  for (const std::string& d : s.law_violation_details) out << "  law: " << d << '\n';
}

}  // namespace gg
