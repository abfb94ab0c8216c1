// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "gg/connectivity.hpp"
#include "gg/group_graphs.hpp"
#include "gg/theorems.hpp"
#include "json.hpp"

using namespace gg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
// Criteria run in dependency order but print in numeric order.
std::map<int, std::string> lines;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  lines[id] = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + what +
              " [" + detail + "]";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run_shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

FiniteGroup make(const std::string& spec) { return build_group(parse_group_spec(spec)); }

// 1. Maximal cyclic inventories of D, Q and SD up to order 64.
void family_inventories() {
  const auto start = Clock::now();
  std::size_t groups = 0, mismatches = 0;
  std::string first_bad;
  const auto check = [&](const std::string& spec, std::map<std::size_t, std::size_t> want) {
    ++groups;
    std::map<std::size_t, std::size_t> got;
    for (const auto& h : maximal_cyclic_subgroups(make(spec)).members) ++got[h.size()];
    if (got != want) {
      ++mismatches;
      if (first_bad.empty()) first_bad = spec;
    }
  };
  for (std::size_t m = 6; m <= 64; m += 2) {
    std::map<std::size_t, std::size_t> want{{m / 2, 1}};
    want[2] += m / 2;
    check("D(" + std::to_string(m) + ")", want);
  }
  for (std::size_t m = 8; m <= 64; m += 4) {
    std::map<std::size_t, std::size_t> want{{m / 2, 1}};
    want[4] += m / 4;
    check("Q(" + std::to_string(m) + ")", want);
  }
  for (std::size_t m = 16; m <= 64; m += 8) {
    std::map<std::size_t, std::size_t> want{{m / 2, 1}};
    want[2] += m / 4;
    want[4] += m / 8;
    check("SD(" + std::to_string(m) + ")", want);
  }
  const double t = seconds_since(start);
  report(1, mismatches == 0 && t < 5.0, "D/Q/SD maximal cyclic inventories up to order 64",
         std::to_string(groups) + " groups, " + std::to_string(mismatches) + " mismatches" +
             (first_bad.empty() ? "" : " (first " + first_bad + ")") + ", " + fmt_seconds(t) +
             " (limit 5 s)");
}

struct CliSweep {
  int status = -1;
  double seconds = 0;
  std::string lines;
  std::string summary;
};

CliSweep cli_sweep(const std::string& tag) {
  const std::string out = "acceptance_sweep_" + tag + ".jsonl";
  const std::string err = "acceptance_sweep_" + tag + ".txt";
  const auto start = Clock::now();
  CliSweep r;
  r.status = run_shell(std::string(GG_BINARY) + " verify all --max-order 64 --report json > " + out +
                       " 2> " + err);
  r.seconds = seconds_since(start);
  r.lines = slurp(out);
  r.summary = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

// 4. and 7. The CLI sweep, run twice.
void full_sweep() {
  const CliSweep a = cli_sweep("a");
  std::size_t verdicts = 0, applicable = 0, disagreements = 0;
  std::set<std::string> ids, groups;
  std::istringstream in(a.lines);
  for (std::string line; std::getline(in, line);) {
    const auto j = nlohmann::json::parse(line);
    ++verdicts;
    ids.insert(j["theorem"].get<std::string>());
    groups.insert(j["group"].get<std::string>());
    if (j["applicable"].get<bool>()) {
      ++applicable;
      disagreements += !j["agree"].get<bool>();
    }
  }
  const bool clean = a.status == 0 && disagreements == 0 &&
                     a.summary.find("disagreements: 0\n") != std::string::npos;
  report(4, clean && ids.size() == std::size(kAllTheorems) && a.seconds < 120.0,
         "gg verify all --max-order 64 reports zero disagreements",
         std::to_string(groups.size()) + " groups, " + std::to_string(ids.size()) + " theorem ids, " +
             std::to_string(applicable) + " applicable verdicts, " + std::to_string(disagreements) +
             " disagreements, exit " + std::to_string(a.status) + ", " + fmt_seconds(a.seconds) +
             " (limit 120 s)");

  const CliSweep b = cli_sweep("b");
  report(7, !a.lines.empty() && a.lines == b.lines && b.status == a.status,
         "two identical sweeps give byte-identical JSON lines",
         std::to_string(a.lines.size()) + " vs " + std::to_string(b.lines.size()) + " bytes, " +
             (a.lines == b.lines ? "identical" : "different"));
}

// 2., 3. and 6. share one library sweep.
void library_checks() {
  const std::vector<std::string> catalog = builtin_catalog();

  const auto start = Clock::now();
  SweepOptions graph_only;
  graph_only.ids = {TheoremId::kGraphDominating};
  graph_only.audit_laws = false;
  const SweepResult tg = sweep_catalog(catalog, graph_only);
  const FuzzSummary fuzz = fuzz_apex_graphs({});
  const double t = seconds_since(start);
  const std::size_t graph_cases = tg.summary.agreements + tg.summary.disagreements;
  report(3,
         tg.summary.disagreements == 0 && fuzz.disagreements == 0 && fuzz.checked == 1000 &&
             graph_cases >= 20 && t < 60.0,
         "fast dominating-vertex decider equals brute force",
         std::to_string(graph_cases) + " catalog group graphs (" +
             std::to_string(tg.summary.disagreements) + " disagreements), " +
             std::to_string(fuzz.checked) + " seed-42 apex graphs (" +
             std::to_string(fuzz.disagreements) + " disagreements), " + fmt_seconds(t) +
             " (limit 60 s)");

  SweepOptions laws;
  laws.ids = {TheoremId::kReducedPowerRegular, TheoremId::kReducedEnhancedRegular};
  const SweepResult lr = sweep_catalog(catalog, laws);
  report(2, lr.summary.law_violations == 0 && fuzz.law_violations == 0 && lr.summary.law_checks > 0,
         "kappa <= kappa' <= delta and diameter <= 2 implies kappa' = delta",
         std::to_string(lr.summary.law_checks) + " catalog graphs and " +
             std::to_string(fuzz.checked) + " fuzz graphs, " +
             std::to_string(lr.summary.law_violations + fuzz.law_violations) + " violations");

  std::map<TheoremId, std::pair<std::size_t, std::size_t>> counts;  // applicable, disagreements
  for (const TheoremVerdict& v : lr.verdicts) {
    if (!v.applicable) continue;
    ++counts[v.theorem].first;
    counts[v.theorem].second += !v.agree;
  }
  const auto& pw = counts[TheoremId::kReducedPowerRegular];
  const auto& en = counts[TheoremId::kReducedEnhancedRegular];
  report(6, pw.second == 0 && en.second == 0 && pw.first == catalog.size() && en.first == catalog.size(),
         "reduced power / enhanced power graph regularity cross-checks",
         "R_POW " + std::to_string(pw.first) + " groups, " + std::to_string(pw.second) +
             " violations; R_EPG " + std::to_string(en.first) + " groups, " +
             std::to_string(en.second) + " violations; both delete the identity");

  // Informational: the same check with every dominating vertex deleted.
  std::size_t literal = 0;
  for (const TheoremVerdict& v : lr.verdicts) {
    if (v.theorem != TheoremId::kReducedEnhancedRegular) continue;
    const FiniteGroup g = make(v.group);
    const GroupGraph r = reduce(enhanced_power_graph(g), Reduction::kDeleteDominating);
    literal += degree_profile(r.graph).regular != v.rhs.value_or(false);
  }
  lines[60] = "INFO criterion 6: deleting all dominating vertices instead of the identity gives " +
              std::to_string(literal) + " R_EPG violations";
}

// 5. Named values, computed directly from the graphs.
void spot_values() {
  std::vector<std::string> bad;
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const SimpleGraph e32 = enhanced_power_graph(make("E(3,2)")).graph;
  const std::size_t k_e32 = edge_connectivity(e32);
  expect(k_e32 == 2, "kappa'(P_E(E(3,2))) = " + std::to_string(k_e32));
  expect(diameter(e32) == 2u && degree_profile(e32).min_degree == k_e32,
         "diameter-two law on P_E(E(3,2))");

  const SimpleGraph s29 = order_superpower_graph(make("Z(2)*Z(9)")).graph;
  const std::size_t d29 = degree_profile(s29).min_degree, k29 = vertex_connectivity(s29);
  expect(d29 == 9 && k29 == 9,
         "delta, kappa of S(Z(2)*Z(9)) = " + std::to_string(d29) + ", " + std::to_string(k29));

  const SimpleGraph s6 = order_superpower_graph(make("Z(6)")).graph;
  expect(dominating_vertices(s6).size() == 3, "S(Z(6)) dominating count");
  expect(!is_minimally_edge_connected(s6).holds, "S(Z(6)) m.e.c.");

  const SimpleGraph p8 = power_graph(make("E(2,3)")).graph;
  bool star = p8.order() == 8 && p8.size() == 7 && p8.degree(0) == 7;
  expect(star, "P(E(2,3)) = K_{1,7}");
  expect(is_minimally_connected(p8).holds && vertex_connectivity(p8) == 1,
         "P(E(2,3)) minimally connected with kappa = 1");

  std::string detail = "kappa'(P_E(E(3,2))) = " + std::to_string(k_e32) + ", delta = kappa of S(Z(2)*Z(9)) = " +
                       std::to_string(d29) + "/" + std::to_string(k29) +
                       ", S(Z(6)) has " + std::to_string(dominating_vertices(s6).size()) +
                       " dominating vertices, P(E(2,3)) is K_{1,7}";
  for (const std::string& b : bad) detail += "; wrong: " + b;
  report(5, bad.empty(), "spot values", detail);
}

}  // namespace

int main() {
  try {
    family_inventories();
    library_checks();
    full_sweep();
    spot_values();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
