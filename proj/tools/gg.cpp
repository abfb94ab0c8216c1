// gg: group graphs from the command line.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gg/connectivity.hpp"
#include "gg/group.hpp"
#include "gg/group_graphs.hpp"
#include "gg/report.hpp"
#include "gg/theorems.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kGrammar = R"(group spec grammar:
  spec    := factor ('*' factor)*
  factor  := 'Z(' n ')'        cyclic of order n >= 1
           | 'E(' p ',' k ')'  elementary abelian (Z_p)^k, p prime, k >= 1
           | 'D(' 2n ')'       dihedral of order 2n, n >= 3
           | 'Q(' 4n ')'       generalized quaternion of order 4n, n >= 2
           | 'SD(' 8n ')'      semidihedral of order 8n, n >= 2
           | 'S(' n ')'        symmetric group on n points
  The group order may not exceed GG_ORDER_CAP (default 5040).
graph kinds: power, enhanced, super
theorem ids: )";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_grammar(std::ostream& out) {
  out << kGrammar;
  for (std::size_t i = 0; i < std::size(gg::kAllTheorems); ++i)
    out << (i ? ", " : "") << gg::to_string(gg::kAllTheorems[i]);
  out << ", all\n";
}

gg::GraphKind kind_arg(const std::string& text) {
  const auto kind = gg::parse_graph_kind(text);
  if (!kind) throw UsageError("unknown graph kind '" + text + "'");
  return *kind;
}

gg::GroupSpec spec_arg(const std::string& text) {
  try {
    return gg::parse_group_spec(text);
  } catch (const gg::SpecError& e) {
    std::ostringstream msg;
    msg << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << '^';
    throw UsageError(msg.str());
  }
}

// "a/b", an integer, or a decimal in [0, 1].
std::pair<std::uint64_t, std::uint64_t> rational_arg(const std::string& text) {
  std::uint64_t num = 0, den = 1;
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t used = 0;
      num = std::stoull(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      const std::string rest = text.substr(slash + 1);
      den = std::stoull(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    } else if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 9 || frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(text);
      den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::string whole = text.substr(0, dot);
      if (!whole.empty() && whole != "0" && whole != "1") throw std::invalid_argument(text);
      num = (whole == "1" ? den : 0) + std::stoull(frac);
    } else {
      std::size_t used = 0;
      num = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw UsageError("edge probability must look like 1/2, 0.5 or 1: '" + text + "'");
  }
  if (den == 0 || num > den) throw UsageError("edge probability must lie in [0, 1]: '" + text + "'");
  return {num, den};
}

int run_group(const std::string& spec) {
  const gg::FiniteGroup group = gg::build_group(spec_arg(spec));
  std::cout << gg::group_json(group).dump(2) << '\n';
  return kOk;
}

int run_graph(const std::string& kind_text, const std::string& spec, const std::string& reduced,
              const std::string& format, const std::string& out_path) {
  const gg::GraphKind kind = kind_arg(kind_text);
  const auto mode = gg::parse_reduction(reduced);
  if (!mode) throw UsageError("unknown reduction '" + reduced + "'");
  const gg::GroupSpec parsed = spec_arg(spec);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  const gg::FiniteGroup group = gg::build_group(parsed);
  const gg::GroupGraph g = gg::reduce(gg::build_group_graph(group, kind), *mode);
  if (format == "edges") {
    gg::write_edge_list(g.graph, out);
  } else if (format == "dot") {
    gg::write_dot(g.graph, g.labels, std::string(gg::to_string(kind)), out);
  } else {
    out << gg::graph_json(g).dump(2) << '\n';
  }
  return kOk;
}

int run_conn(const std::string& source, const std::string& target, const std::string& reduced) {
  const auto mode = gg::parse_reduction(reduced);
  if (!mode) throw UsageError("unknown reduction '" + reduced + "'");
  gg::Json j;
  if (source == "file") {
    std::ifstream in;
    if (target != "-") {
      in.open(target);
      if (!in) throw std::runtime_error("cannot open " + target);
    }
    const gg::SimpleGraph g = gg::read_edge_list(target == "-" ? std::cin : in);
    j["source"] = target;
    j.update(gg::report_json(gg::connectivity_report(g)));
  } else {
    const gg::GraphKind kind = kind_arg(source);
    const gg::FiniteGroup group = gg::build_group(spec_arg(target));
    const gg::GroupGraph g = gg::reduce(gg::build_group_graph(group, kind), *mode);
    j["kind"] = gg::to_string(kind);
    j["group"] = g.group;
    j["reduction"] = gg::to_string(g.reduction);
    j.update(gg::report_json(gg::connectivity_report(g.graph), g.labels));
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string id = "all";
  std::string catalog;
  std::vector<std::string> groups;
  std::uint64_t max_order = 64;
  unsigned jobs = 0;
  std::string report = "json";
  bool timing = false;
  bool no_laws = false;
};

int run_verify(const VerifyArgs& args) {
  gg::SweepOptions options;
  if (args.id != "all") {
    const auto id = gg::parse_theorem_id(args.id);
    if (!id) throw UsageError("unknown theorem id '" + args.id + "'");
    options.ids = {*id};
  }
  options.max_order = args.max_order;
  options.jobs = args.jobs;
  options.audit_laws = !args.no_laws;

  std::vector<std::string> catalog;
  if (!args.groups.empty()) {
    for (const std::string& g : args.groups) spec_arg(g);
    catalog = args.groups;
  } else if (!args.catalog.empty()) {
    std::ifstream in(args.catalog);
    if (!in) throw UsageError("cannot open catalog " + args.catalog);
    std::ostringstream text;
    text << in.rdbuf();
    catalog = gg::parse_catalog(text.str());
  } else {
    catalog = gg::builtin_catalog();
  }

  const gg::SweepResult result = gg::sweep_catalog(catalog, options);
  if (args.report == "table") {
    gg::write_verdict_table(result.verdicts, args.timing, std::cout);
    std::cout << '\n';
    gg::write_sweep_summary(result.summary, std::cout);
  } else {
    gg::write_verdict_lines(result.verdicts, args.timing, std::cout);
    gg::write_sweep_summary(result.summary, std::cerr);
  }
  const auto& s = result.summary;
  return s.disagreements == 0 && s.failures.empty() && s.law_violations == 0 ? kOk : kFailed;
}

int run_fuzz(const gg::FuzzOptions& options) {
  const gg::FuzzSummary s = gg::fuzz_apex_graphs(options);
  std::cout << gg::fuzz_json(s).dump(2) << '\n';
  return s.disagreements == 0 && s.law_violations == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, their power-type graphs and connectivity checks", "gg"};
  app.require_subcommand(1);
  app.footer("Run 'gg <subcommand> --help' for options.");

  std::string spec, kind, target, reduced = "none", format = "edges", out_path;

  auto* group_cmd = app.add_subcommand("group", "Summarize a group: order, element orders, M(G)");
  group_cmd->add_option("spec", spec, "group spec, e.g. D(12) or Z(2)*Z(9)")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Emit a power, enhanced power or order superpower graph");
  graph_cmd->add_option("kind", kind, "power | enhanced | super")->required();
  graph_cmd->add_option("spec", spec, "group spec")->required();
  graph_cmd->add_option("--reduced", reduced, "none | identity | dominating");
  graph_cmd->add_option("--format", format, "edges | dot | json")
      ->check(CLI::IsMember({"edges", "dot", "json"}));
  graph_cmd->add_option("--out", out_path, "write to FILE instead of stdout");

  auto* conn_cmd = app.add_subcommand("conn", "Connectivity report for a group graph or an edge-list file");
  conn_cmd->add_option("source", kind, "power | enhanced | super | file")->required();
  conn_cmd->add_option("target", target, "group spec, or edge-list path ('-' for stdin)")->required();
  conn_cmd->add_option("--reduced", reduced, "none | identity | dominating");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check theorem ids over a catalog of groups");
  verify_cmd->add_option("id", verify.id, "theorem id or 'all'")->required();
  verify_cmd->add_option("--catalog", verify.catalog, "manifest file, one spec per line");
  verify_cmd->add_option("--group", verify.groups, "check these groups instead of a catalog");
  verify_cmd->add_option("--max-order", verify.max_order, "largest order of a direct factor");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default: all cores)");
  verify_cmd->add_option("--report", verify.report, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  verify_cmd->add_flag("--timing", verify.timing, "include wall time per verdict");
  verify_cmd->add_flag("--no-laws", verify.no_laws, "skip the Whitney and diameter audit");

  gg::FuzzOptions fuzz;
  std::string probability = "1/2";
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare fast and brute-force deciders on random apex graphs");
  fuzz_cmd->add_option("--count", fuzz.count, "non-complete graphs to check");
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_option("--nmin", fuzz.n_min, "fewest vertices, apex included");
  fuzz_cmd->add_option("--nmax", fuzz.n_max, "most vertices, apex included");
  fuzz_cmd->add_option("--p", probability, "edge probability, e.g. 1/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    print_grammar(std::cerr);
    return kUsage;
  }

  try {
    if (*group_cmd) return run_group(spec);
    if (*graph_cmd) return run_graph(kind, spec, reduced, format, out_path);
    if (*conn_cmd) return run_conn(kind, target, reduced);
    if (*verify_cmd) return run_verify(verify);
    if (*fuzz_cmd) {
      std::tie(fuzz.p_num, fuzz.p_den) = rational_arg(probability);
      if (fuzz.count == 0) throw UsageError("--count must be at least 1");
      if (fuzz.n_min < 2 || fuzz.n_min > fuzz.n_max)
        throw UsageError("--nmin and --nmax must satisfy 2 <= nmin <= nmax");
      return run_fuzz(fuzz);
    }
  } catch (const UsageError& e) {
    std::cerr << "gg: " << e.what() << "\n\n";
    print_grammar(std::cerr);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gg: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
