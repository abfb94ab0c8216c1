#include "gg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace gg {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view description;
};

constexpr TheoremInfo kTheoremInfo[] = {
    {TheoremId::kGraphDominating, "T_GRAPH",
     "non-complete graph with a dominating vertex: m.e.c. iff that vertex is the only dominating "
     "one and the rest is regular"},
    {TheoremId::kPowerPrimeExponent, "C_POWER",
     "P(G) non-complete and m.e.c. iff G is non-cyclic of prime exponent"},
    {TheoremId::kEnhancedMec, "C_EPG_MEC",
     "G non-cyclic: P_E(G) m.e.c. iff maximal cyclics have equal order and meet trivially"},
    {TheoremId::kEnhancedNilpotent, "C_EPG_NILP",
     "G non-cyclic nilpotent: P_E(G) m.e.c. iff G is a p-group of exponent p"},
    {TheoremId::kEnhancedDqsd, "C_DQSD", "G in D/Q/SD families: P_E(G) is not m.e.c."},
    {TheoremId::kEnhancedMinConnected, "T_EPG_MC",
     "P_E(G) minimally connected iff G cyclic or elementary abelian 2-group"},
    {TheoremId::kSuperFullExponent, "C_S_FULLEXP",
     "G of full exponent: S(G) m.e.c. iff G is a p-group"},
    {TheoremId::kSuperEvenOrder, "P_S_EVEN", "G of even order, not a p-group: S(G) is not m.e.c."},
    {TheoremId::kSuperMinConnected, "T_S_MC", "S(G) minimally connected iff G is a p-group"},
    {TheoremId::kSuperUniqueInvolution, "P_INV",
     "G not a p-group, deg(x) = delta(S(G)) = kappa(S(G)): x is the unique involution and no "
     "element has order 2^a, a >= 2"},
    {TheoremId::kSuperDegreeEqualsKappa, "T_DK",
     "G nilpotent: delta(S(G)) = kappa(S(G)) iff G is a p-group or Z2 x P with P an odd p-group"},
    {TheoremId::kReducedPowerRegular, "R_POW",
     "P(G) minus identity regular iff G is a cyclic p-group or exp(G) is prime"},
    {TheoremId::kReducedEnhancedRegular, "R_EPG",
     "P_E(G) minus identity regular iff G cyclic or maximal cyclics have equal order and meet "
     "trivially"},
};

const TheoremInfo& info(TheoremId id) {
  for (const TheoremInfo& t : kTheoremInfo)
    if (t.id == id) return t;
  return kTheoremInfo[0];
}

std::string element_set(const FiniteGroup& group, std::span<const Element> elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out += (i ? ", " : "") + group.name(elements[i]);
  }
  return out + "}";
}

std::string subgroup_name(const FiniteGroup& group, const CyclicSubgroup& h) {
  return "<" + group.name(h.generator) + "> (order " + std::to_string(h.size()) + ")";
}

std::string edge_witness(const GroupGraph& g, const MinimalityResult& r, std::string_view measure) {
  if (!r.witness) return {};
  return "deleting {" + g.labels[r.witness->u] + ", " + g.labels[r.witness->v] + "} leaves " +
         std::string(measure) + " = " + std::to_string(r.witness_connectivity) + " (was " +
         std::to_string(r.connectivity) + ")";
}

std::string join_witness(const std::string& lhs, const std::string& rhs) {
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  return "lhs: " + lhs + "; rhs: " + rhs;
}

std::string graph_name(GraphKind kind, Reduction mode = Reduction::kNone) {
  std::string name(to_string(kind));
  if (mode != Reduction::kNone) name += "-minus-" + std::string(to_string(mode));
  return name;
}

// ---------------------------------------------------------------------------
// Graph side: only SimpleGraph queries and the connectivity module.
// ---------------------------------------------------------------------------
namespace graph_side {

bool has_dominating_and_incomplete(const SimpleGraph& g) {
  return !is_complete(g) && !dominating_vertices(g).empty();
}

std::string irregularity(const GroupGraph& g) {
  const DegreeProfile p = degree_profile(g.graph);
  if (p.regular) return {};
  const auto max_it = std::max_element(p.degrees.begin(), p.degrees.end());
  const auto max_v = static_cast<Vertex>(max_it - p.degrees.begin());
  return "deg(" + g.labels[p.min_vertex] + ") = " + std::to_string(p.min_degree) + " but deg(" +
         g.labels[max_v] + ") = " + std::to_string(*max_it);
}

}  // namespace graph_side

}  // namespace

// ---------------------------------------------------------------------------
// Structure side: group tables, order tables and M(G) only.
// ---------------------------------------------------------------------------
namespace structure {

bool equal_order_trivial_intersections(const FiniteGroup& group, const MaximalCyclicFamily& family,
                                       std::string* witness) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      std::vector<Element> common;
      std::set_intersection(m[i].elements.begin(), m[i].elements.end(), m[j].elements.begin(),
                            m[j].elements.end(), std::back_inserter(common));
      if (m[i].size() != m[j].size() || common.size() != 1) {
        if (witness) {
          *witness = subgroup_name(group, m[i]) + " and " + subgroup_name(group, m[j]) +
                     " meet in " + element_set(group, common);
        }
        return false;
      }
    }
  }
  return true;
}

bool all_maximal_cyclics_equal_order(const MaximalCyclicFamily& family) {
  return std::all_of(family.members.begin(), family.members.end(), [&](const CyclicSubgroup& h) {
    return h.size() == family.members.front().size();
  });
}

std::vector<std::size_t> order_divisibility_degrees(const FiniteGroup& group) {
  const auto& ord = group.orders();
  std::map<std::uint32_t, std::size_t> counts;
  for (std::uint32_t o : ord.orders) ++counts[o];
  std::vector<std::size_t> degrees(group.order(), 0);
  for (Element a = 0; a < group.order(); ++a) {
    std::size_t d = 0;
    for (const auto& [o, c] : counts) {
      if (o % ord[a] == 0 || ord[a] % o == 0) d += c;
    }
    degrees[a] = d - 1;  // a itself
  }
  return degrees;
}

std::vector<Element> involutions(const FiniteGroup& group) {
  std::vector<Element> out;
  for (Element a = 0; a < group.order(); ++a)
    if (group.orders()[a] == 2) out.push_back(a);
  return out;
}

}  // namespace structure

std::string_view to_string(TheoremId id) { return info(id).name; }

std::string_view describe(TheoremId id) { return info(id).description; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const TheoremInfo& t : kTheoremInfo)
    if (t.name == text) return t.id;
  return std::nullopt;
}

Reduction reduction_for(TheoremId id) {
  switch (id) {
    case TheoremId::kReducedPowerRegular:
    case TheoremId::kReducedEnhancedRegular:
      return Reduction::kDeleteIdentity;
    case TheoremId::kGraphDominating:
      return Reduction::kDeleteDominating;
    default:
      return Reduction::kNone;
  }
}

bool is_implication(TheoremId id) { return id == TheoremId::kSuperUniqueInvolution; }

TheoremContext::TheoremContext(FiniteGroup group)
    : group_(std::move(group)),
      spec_(render(group_.spec())),
      classification_(classify_group(group_)),
      exponent_(exponent_info(group_)),
      family_(maximal_cyclic_subgroups(group_)) {}

const GroupGraph& TheoremContext::graph(GraphKind kind) {
  return reduced(kind, Reduction::kNone);
}

const GroupGraph& TheoremContext::reduced(GraphKind kind, Reduction mode) {
  const Key key{static_cast<int>(kind), static_cast<int>(mode)};
  auto it = graphs_.find(key);
  if (it != graphs_.end()) return it->second;
  if (mode == Reduction::kNone) {
    GroupGraph g = kind == GraphKind::kEnhanced ? enhanced_power_graph(group_, family_)
                                                : build_group_graph(group_, kind);
    return graphs_.emplace(key, std::move(g)).first->second;
  }
  GroupGraph r = gg::reduce(graph(kind), mode);
  return graphs_.emplace(key, std::move(r)).first->second;
}

const MinimalityResult& TheoremContext::min_edge_connected(GraphKind kind) {
  auto it = mec_.find(static_cast<int>(kind));
  if (it == mec_.end()) {
    it = mec_.emplace(static_cast<int>(kind), is_minimally_edge_connected(graph(kind).graph)).first;
  }
  return it->second;
}

const MinimalityResult& TheoremContext::min_connected(GraphKind kind) {
  auto it = mc_.find(static_cast<int>(kind));
  if (it == mc_.end()) {
    it = mc_.emplace(static_cast<int>(kind), is_minimally_connected(graph(kind).graph)).first;
  }
  return it->second;
}

const ConnectivityReport& TheoremContext::report(GraphKind kind, Reduction mode) {
  const Key key{static_cast<int>(kind), static_cast<int>(mode)};
  auto it = reports_.find(key);
  if (it == reports_.end()) {
    it = reports_.emplace(key, connectivity_report(reduced(kind, mode).graph, false)).first;
  }
  return it->second;
}

namespace {

TheoremVerdict make_verdict(TheoremId id, const TheoremContext& ctx, std::string graph) {
  TheoremVerdict v;
  v.theorem = id;
  v.group = ctx.spec();
  v.graph = std::move(graph);
  return v;
}

void settle(TheoremVerdict& v, bool lhs, bool rhs, const std::string& lhs_witness,
            const std::string& rhs_witness) {
  v.applicable = true;
  v.lhs = lhs;
  v.rhs = rhs;
  v.agree = is_implication(v.theorem) ? (!lhs || rhs) : (lhs == rhs);
  std::string w = join_witness(lhs ? std::string() : lhs_witness, rhs ? std::string() : rhs_witness);
  if (!w.empty()) v.witness = std::move(w);
}

void mec_lhs(TheoremContext& ctx, GraphKind kind, bool& lhs, std::string& witness) {
  const MinimalityResult& r = ctx.min_edge_connected(kind);
  lhs = r.holds;
  witness = edge_witness(ctx.graph(kind), r, "kappa'");
}

void mc_lhs(TheoremContext& ctx, GraphKind kind, bool& lhs, std::string& witness) {
  const MinimalityResult& r = ctx.min_connected(kind);
  lhs = r.holds;
  witness = edge_witness(ctx.graph(kind), r, "kappa");
}

std::string p_group_witness(const TheoremContext& ctx) {
  return "|G| = " + std::to_string(ctx.group().order()) + " is not a prime power";
}

TheoremVerdict check_graph_dominating(TheoremContext& ctx, GraphKind kind) {
  TheoremVerdict v = make_verdict(TheoremId::kGraphDominating, ctx, graph_name(kind));
  const GroupGraph& g = ctx.graph(kind);
  if (!graph_side::has_dominating_and_incomplete(g.graph)) return v;

  bool lhs = false;
  std::string lw;
  mec_lhs(ctx, kind, lhs, lw);
  const bool rhs = minimally_edge_connected_fast(g.graph);
  std::string rw;
  if (!rhs) {
    const auto dom = dominating_vertices(g.graph);
    if (dom.size() > 1) {
      rw = "dominating vertices {" + g.labels[dom[0]] + ", " + g.labels[dom[1]] +
           (dom.size() > 2 ? ", ..." : "") + "}";
    } else {
      rw = "G - " + g.labels[dom[0]] + " not regular: " +
           graph_side::irregularity(ctx.reduced(kind, Reduction::kDeleteDominating));
    }
  }
  settle(v, lhs, rhs, lw, rw);
  return v;
}

TheoremVerdict check_one(TheoremId id, TheoremContext& ctx) {
  const FiniteGroup& G = ctx.group();
  const GroupClassification& c = ctx.classification();
  const std::size_t n = G.order();
  bool lhs = false;
  std::string lw, rw;

  switch (id) {
    case TheoremId::kPowerPrimeExponent: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kPower));
      const GroupGraph& g = ctx.graph(GraphKind::kPower);
      if (is_complete(g.graph)) {
        lw = "P(G) is complete";
      } else {
        mec_lhs(ctx, GraphKind::kPower, lhs, lw);
      }
      const bool rhs = !c.is_cyclic && c.is_prime_exponent;
      if (!rhs) {
        rw = c.is_cyclic ? "G is cyclic"
                         : "exp(G) = " + std::to_string(ctx.exponent().exponent) + " is not prime";
      }
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kEnhancedMec: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kEnhanced));
      if (c.is_cyclic) return v;
      mec_lhs(ctx, GraphKind::kEnhanced, lhs, lw);
      const bool rhs = structure::equal_order_trivial_intersections(G, ctx.maximal_cyclics(), &rw);
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kEnhancedNilpotent: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kEnhanced));
      if (c.is_cyclic || !c.is_nilpotent) return v;
      mec_lhs(ctx, GraphKind::kEnhanced, lhs, lw);
      const bool rhs = c.is_p_group && ctx.exponent().exponent == c.prime;
      if (!rhs) {
        rw = c.is_p_group ? "exp(G) = " + std::to_string(ctx.exponent().exponent)
                          : p_group_witness(ctx);
      }
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kEnhancedDqsd: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kEnhanced));
      if (!is_dqsd_family(G.spec())) return v;
      mec_lhs(ctx, GraphKind::kEnhanced, lhs, lw);
      const bool rhs = structure::equal_order_trivial_intersections(G, ctx.maximal_cyclics(), &rw);
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kEnhancedMinConnected: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kEnhanced));
      mc_lhs(ctx, GraphKind::kEnhanced, lhs, lw);
      const bool rhs = c.is_cyclic || c.is_elementary_abelian_2;
      if (!rhs) {
        const auto& ord = G.orders().orders;
        const auto big = std::find_if(ord.begin(), ord.end(), [](std::uint32_t o) { return o > 2; });
        rw = "non-cyclic with " + G.name(static_cast<Element>(big - ord.begin())) + " of order " +
             std::to_string(*big);
      }
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kSuperFullExponent: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kSuper));
      if (!ctx.exponent().full) return v;
      mec_lhs(ctx, GraphKind::kSuper, lhs, lw);
      if (!c.is_p_group) rw = p_group_witness(ctx);
      settle(v, lhs, c.is_p_group, lw, rw);
      return v;
    }
    case TheoremId::kSuperEvenOrder: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kSuper));
      if (n % 2 != 0 || c.is_p_group) return v;
      mec_lhs(ctx, GraphKind::kSuper, lhs, lw);
      settle(v, lhs, c.is_p_group, lw, p_group_witness(ctx));
      return v;
    }
    case TheoremId::kSuperMinConnected: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kSuper));
      mc_lhs(ctx, GraphKind::kSuper, lhs, lw);
      if (!c.is_p_group) rw = p_group_witness(ctx);
      settle(v, lhs, c.is_p_group, lw, rw);
      return v;
    }
    case TheoremId::kSuperUniqueInvolution: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kSuper));
      if (c.is_p_group) return v;
      const ConnectivityReport& r = ctx.report(GraphKind::kSuper, Reduction::kNone);
      lhs = r.min_degree == r.vertex_connectivity;
      lw = "delta = " + std::to_string(r.min_degree) + ", kappa = " +
           std::to_string(r.vertex_connectivity);

      const auto invs = structure::involutions(G);
      const auto& ord = G.orders().orders;
      const auto order4 = std::find_if(ord.begin(), ord.end(), [](std::uint32_t o) { return o % 4 == 0; });
      const auto degrees = structure::order_divisibility_degrees(G);
      const std::size_t min_deg = *std::min_element(degrees.begin(), degrees.end());
      std::vector<Element> minimizers;
      for (Element a = 0; a < n; ++a)
        if (degrees[a] == min_deg) minimizers.push_back(a);

      bool rhs = true;
      if (invs.size() != 1) {
        rhs = false;
        rw = std::to_string(invs.size()) + " involutions";
      } else if (order4 != ord.end()) {
        rhs = false;
        rw = G.name(static_cast<Element>(order4 - ord.begin())) + " has order " +
             std::to_string(*order4);
      } else if (minimizers != invs) {
        rhs = false;
        rw = "minimum-degree elements " + element_set(G, minimizers) + " are not the involution " +
             G.name(invs.front());
      }
      settle(v, lhs, rhs, lw, rw);
      if (!lhs) v.witness = "premise fails: " + lw;
      return v;
    }
    case TheoremId::kSuperDegreeEqualsKappa: {
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kSuper));
      if (!c.is_nilpotent) return v;
      const ConnectivityReport& r = ctx.report(GraphKind::kSuper, Reduction::kNone);
      lhs = r.min_degree == r.vertex_connectivity;
      lw = "delta = " + std::to_string(r.min_degree) + ", kappa = " +
           std::to_string(r.vertex_connectivity);
      const bool rhs = c.nilpotent_shape == NilpotentShape::kPGroup ||
                       c.nilpotent_shape == NilpotentShape::kZ2CrossOddPGroup;
      if (!rhs) rw = "nilpotent shape " + std::string(to_string(c.nilpotent_shape));
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kReducedPowerRegular: {
      const Reduction mode = reduction_for(id);
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kPower, mode));
      const GroupGraph& g = ctx.reduced(GraphKind::kPower, mode);
      lhs = degree_profile(g.graph).regular;
      lw = graph_side::irregularity(g);
      const bool cyclic_p = c.is_cyclic && c.is_p_group;
      const bool rhs = cyclic_p || c.is_prime_exponent;
      if (!rhs) {
        rw = "exp(G) = " + std::to_string(ctx.exponent().exponent) +
             (c.is_cyclic ? ", cyclic but not a p-group" : ", not cyclic");
      }
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kReducedEnhancedRegular: {
      const Reduction mode = reduction_for(id);
      TheoremVerdict v = make_verdict(id, ctx, graph_name(GraphKind::kEnhanced, mode));
      const GroupGraph& g = ctx.reduced(GraphKind::kEnhanced, mode);
      lhs = degree_profile(g.graph).regular;
      lw = graph_side::irregularity(g);
      const bool rhs =
          c.is_cyclic || structure::equal_order_trivial_intersections(G, ctx.maximal_cyclics(), &rw);
      settle(v, lhs, rhs, lw, rw);
      return v;
    }
    case TheoremId::kGraphDominating:
      break;
  }
  return make_verdict(id, ctx, "");
}

}  // namespace

std::vector<TheoremVerdict> verify_theorem(TheoremId id, TheoremContext& context) {
  using Clock = std::chrono::steady_clock;
  std::vector<TheoremVerdict> out;
  if (context.group().order() < 2) {
    // Every statement concerns groups with a non-identity element.
    out.push_back(make_verdict(id, context, ""));
    return out;
  }
  if (id == TheoremId::kGraphDominating) {
    for (GraphKind kind : {GraphKind::kPower, GraphKind::kEnhanced, GraphKind::kSuper}) {
      const auto start = Clock::now();
      out.push_back(check_graph_dominating(context, kind));
      out.back().millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    return out;
  }
  const auto start = Clock::now();
  out.push_back(check_one(id, context));
  out.back().millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

std::vector<TheoremVerdict> verify_theorem(TheoremId id, const FiniteGroup& group) {
  TheoremContext ctx(group);
  return verify_theorem(id, ctx);
}

std::size_t audit_connectivity_laws(TheoremContext& context, std::vector<std::string>& violations) {
  std::size_t checked = 0;
  for (GraphKind kind : {GraphKind::kPower, GraphKind::kEnhanced, GraphKind::kSuper}) {
    for (Reduction mode :
         {Reduction::kNone, Reduction::kDeleteIdentity, Reduction::kDeleteDominating}) {
      const ConnectivityReport& r = context.report(kind, mode);
      ++checked;
      const std::string where = context.spec() + " " + graph_name(kind, mode);
      if (!whitney_chain_holds(r)) {
        violations.push_back(where + ": kappa = " + std::to_string(r.vertex_connectivity) +
                             ", kappa' = " + std::to_string(r.edge_connectivity) +
                             ", delta = " + std::to_string(r.min_degree));
      }
      if (!diameter_law_holds(r)) {
        violations.push_back(where + ": diameter " + std::to_string(*r.diameter) + " but kappa' = " +
                             std::to_string(r.edge_connectivity) + " != delta = " +
                             std::to_string(r.min_degree));
      }
    }
  }
  return checked;
}

std::vector<std::string> parse_catalog(std::string_view manifest) {
  std::vector<std::string> out;
  std::istringstream in{std::string(manifest)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> builtin_catalog() { return parse_catalog(builtin_catalog_manifest()); }

std::vector<std::string> filter_catalog(std::span<const std::string> catalog,
                                        std::uint64_t max_order) {
  std::vector<std::string> out;
  for (const std::string& text : catalog) {
    try {
      const GroupSpec spec = parse_group_spec(text, std::numeric_limits<std::uint64_t>::max());
      bool keep = true;
      if (const auto* product = std::get_if<DirectProductSpec>(&spec.node)) {
        for (const GroupSpec& f : product->factors) keep = keep && group_order(f) <= max_order;
      } else {
        keep = group_order(spec) <= max_order;
      }
      if (keep) out.push_back(text);
    } catch (const SpecError&) {
      out.push_back(text);  // surfaces as a build failure in the sweep
    }
  }
  return out;
}

namespace {

struct GroupOutcome {
  std::vector<TheoremVerdict> verdicts;
  std::size_t law_checks = 0;
  std::vector<std::string> law_violations;
  std::optional<std::string> failure;
};

GroupOutcome run_group(const std::string& text, const SweepOptions& options) {
  GroupOutcome out;
  try {
    TheoremContext ctx(build_group(parse_group_spec(text, default_order_cap())));
    for (TheoremId id : options.ids) {
      auto v = verify_theorem(id, ctx);
      std::move(v.begin(), v.end(), std::back_inserter(out.verdicts));
    }
    if (options.audit_laws) out.law_checks = audit_connectivity_laws(ctx, out.law_violations);
  } catch (const std::exception& e) {
    out.failure = text + ": " + e.what();
  }
  return out;
}

std::size_t theorem_rank(TheoremId id) {
  const auto it = std::find(std::begin(kAllTheorems), std::end(kAllTheorems), id);
  return static_cast<std::size_t>(it - std::begin(kAllTheorems));
}

}  // namespace

SweepResult sweep_catalog(std::span<const std::string> catalog, const SweepOptions& options) {
  const std::vector<std::string> groups = filter_catalog(catalog, options.max_order);
  std::vector<GroupOutcome> outcomes(groups.size());

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(groups.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) outcomes[i] = run_group(groups[i], options);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SweepResult result;
  result.summary.groups = groups.size();
  std::vector<std::pair<std::size_t, TheoremVerdict>> tagged;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    GroupOutcome& o = outcomes[i];
    if (o.failure) result.summary.failures.push_back(*o.failure);
    result.summary.law_checks += o.law_checks;
    result.summary.law_violations += o.law_violations.size();
    std::move(o.law_violations.begin(), o.law_violations.end(),
              std::back_inserter(result.summary.law_violation_details));
    for (TheoremVerdict& v : o.verdicts) tagged.emplace_back(i, std::move(v));
  }
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    const auto ra = theorem_rank(a.second.theorem), rb = theorem_rank(b.second.theorem);
    return ra != rb ? ra < rb : a.first < b.first;
  });
  for (auto& [pos, v] : tagged) {
    ++result.summary.verdicts;
    if (!v.applicable) {
      ++result.summary.inapplicable;
    } else if (v.agree) {
      ++result.summary.agreements;
    } else {
      ++result.summary.disagreements;
    }
    result.verdicts.push_back(std::move(v));
  }
  return result;
}

FuzzSummary fuzz_apex_graphs(const FuzzOptions& options) {
  if (options.count == 0) throw std::invalid_argument("fuzz count must be at least 1");
  if (options.n_min < 2 || options.n_min > options.n_max) {
    throw std::invalid_argument("fuzz vertex range must satisfy 2 <= nmin <= nmax");
  }
  if (options.p_den == 0 || options.p_num > options.p_den) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }

  FuzzSummary summary;
  std::mt19937_64 rng(options.seed);
  const std::size_t max_attempts = 64 * options.count;
  while (summary.checked < options.count && summary.attempts < max_attempts) {
    ++summary.attempts;
    const std::size_t n = options.n_min + rng() % (options.n_max - options.n_min + 1);
    const auto apex = static_cast<Vertex>(n - 1);
    SimpleGraph::Builder b(n);
    for (Vertex u = 0; u < apex; ++u) {
      b.add_edge(u, apex);
      for (Vertex v = u + 1; v < apex; ++v)
        if (rng() % options.p_den < options.p_num) b.add_edge(u, v);
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph g = relabel(std::move(b).build(), perm);

    if (is_complete(g)) {
      ++summary.skipped_complete;
      continue;
    }
    ++summary.checked;
    const bool fast = minimally_edge_connected_fast(g);
    const bool brute = is_minimally_edge_connected(g).holds;
    if (fast == brute) {
      ++summary.agreements;
    } else {
      ++summary.disagreements;
      if (!summary.counterexample) summary.counterexample = to_edge_list(g);
    }
    const ConnectivityReport r = connectivity_report(g, false);
    if (!whitney_chain_holds(r) || !diameter_law_holds(r)) ++summary.law_violations;
  }
  return summary;
}

}  // namespace gg
