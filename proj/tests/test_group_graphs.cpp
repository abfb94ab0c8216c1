#include "doctest.h"
#include "gg/connectivity.hpp"
#include "gg/group_graphs.hpp"
#include "gg/theorems.hpp"
#include "oracles.hpp"

using namespace gg;

namespace {

FiniteGroup make(const std::string& spec) { return build_group(parse_group_spec(spec)); }

bool edge_subset(const SimpleGraph& a, const SimpleGraph& b) {
  for (const Edge& e : a.edges())
    if (!b.adjacent(e.u, e.v)) return false;
  return true;
}

}  // namespace

TEST_CASE("group graphs match the definition-level oracles on the catalog") {
  for (const std::string& spec : builtin_catalog()) {
    const FiniteGroup g = make(spec);
    CAPTURE(spec);
    const GroupGraph p = power_graph(g);
    const GroupGraph pe = enhanced_power_graph(g);
    const GroupGraph s = order_superpower_graph(g);
    CHECK(p.graph == oracle::power_graph(g));
    CHECK(pe.graph == oracle::enhanced_power_graph(g));
    CHECK(s.graph == oracle::superpower_graph(g));

    // P(G) sits inside both other graphs.
    CHECK(edge_subset(p.graph, pe.graph));
    CHECK(edge_subset(p.graph, s.graph));

    // Dominating vertices of P_E(G) are the elements common to all of M(G).
    const auto family = maximal_cyclic_subgroups(g);
    const auto common = family.common_elements(g.order());
    const auto dom = dominating_vertices(pe.graph);
    CHECK(std::vector<Element>(dom.begin(), dom.end()) == common);

    // Complete power graphs come from cyclic p-groups only; complete enhanced
    // power graphs from cyclic groups only.
    const GroupClassification c = classify_group(g);
    CHECK(is_complete(p.graph) == (c.is_cyclic && c.is_p_group));
    CHECK(is_complete(pe.graph) == c.is_cyclic);
  }
}

TEST_CASE("enhanced power graph is not always inside the superpower graph") {
  const FiniteGroup g = make("Z(6)");
  const GroupGraph pe = enhanced_power_graph(g);
  const GroupGraph s = order_superpower_graph(g);
  CHECK(is_complete(pe.graph));
  CHECK_FALSE(edge_subset(pe.graph, s.graph));
}

TEST_CASE("named examples") {
  CHECK(is_complete(power_graph(make("Z(7)")).graph));
  CHECK(is_complete(power_graph(make("Z(9)")).graph));
  CHECK_FALSE(is_complete(power_graph(make("Z(6)")).graph));
  CHECK(is_complete(enhanced_power_graph(make("Z(6)")).graph));

  const SimpleGraph p8 = power_graph(make("E(2,3)")).graph;
  CHECK(p8.size() == 7);
  CHECK(p8.degree(0) == 7);
  const GroupGraph p8r = reduce(power_graph(make("E(2,3)")), Reduction::kDeleteIdentity);
  CHECK(p8r.graph.order() == 7);
  CHECK(p8r.graph.size() == 0);
  CHECK(degree_profile(p8r.graph).regular);

  const FiniteGroup e32g = make("E(3,2)");
  const SimpleGraph p9 = power_graph(e32g).graph;
  for (Element x = 1; x < 9; ++x) {
    CHECK(p9.degree(x) == 2);
    CHECK(p9.adjacent(x, 0));
    CHECK(p9.adjacent(x, e32g.multiply(x, x)));
  }

  const GroupGraph z6s = order_superpower_graph(make("Z(6)"));
  CHECK_FALSE(is_complete(z6s.graph));
  CHECK(dominating_vertices(z6s.graph) == std::vector<Vertex>{0, 1, 5});
  const GroupGraph z6r = reduce(z6s, Reduction::kDeleteDominating);
  CHECK(z6r.labels == std::vector<std::string>{"2", "3", "4"});

  const FiniteGroup z2z9 = make("Z(2)*Z(9)");
  const GroupGraph s29 = order_superpower_graph(z2z9);
  for (Element a = 0; a < z2z9.order(); ++a)
    if (z2z9.orders()[a] == 2) CHECK(s29.graph.degree(a) == 9);

  for (const char* spec : {"Q(16)", "E(3,3)", "Z(27)", "D(32)"})
    CHECK(is_complete(order_superpower_graph(make(spec)).graph));

  const FiniteGroup e32 = make("E(3,2)");
  const GroupGraph pe = enhanced_power_graph(e32);
  CHECK(pe.graph == power_graph(e32).graph);
  CHECK(pe.graph.order() == 9);
  CHECK(pe.graph.size() == 12);

  const FiniteGroup q8 = make("Q(8)");
  const GroupGraph q = enhanced_power_graph(q8);
  const auto dom = dominating_vertices(q.graph);
  REQUIRE(dom.size() == 2);
  CHECK(q.labels[dom[0]] == "e");
  CHECK(q.labels[dom[1]] == "a^2");
  for (const auto& m : maximal_cyclic_subgroups(q8).members)
    for (Element x : m.elements)
      for (Element y : m.elements)
        if (x != y) CHECK(q.graph.adjacent(x, y));

  const GroupGraph s = order_superpower_graph(make("Z(6)"));
  CHECK(dominating_vertices(s.graph).size() == 3);
  CHECK(degree_profile(s.graph).min_degree == 3);
}

TEST_CASE("reductions") {
  const GroupGraph z9 = reduce(power_graph(make("Z(9)")), Reduction::kDeleteIdentity);
  CHECK(z9.graph.order() == 8);
  CHECK(is_complete(z9.graph));
  CHECK(degree_profile(z9.graph).regular);
  CHECK(z9.reduction == Reduction::kDeleteIdentity);
  CHECK(z9.labels.front() == "1");
  CHECK(z9.elements.front() == 1);

  const GroupGraph q = reduce(enhanced_power_graph(make("Q(8)")), Reduction::kDeleteDominating);
  CHECK(q.graph.order() == 6);
  CHECK(q.graph.size() == 3);

  const GroupGraph same = reduce(power_graph(make("S(3)")), Reduction::kNone);
  CHECK(same.graph == power_graph(make("S(3)")).graph);
}

TEST_CASE("full-exponent groups that are not p-groups have at least three dominating vertices in S(G) when exp >= 3") {
  std::size_t seen = 0;
  for (const std::string& spec : builtin_catalog()) {
    const FiniteGroup g = make(spec);
    const ExponentInfo e = exponent_info(g);
    if (!e.full || classify_group(g).is_p_group || e.exponent < 3) continue;
    ++seen;
    CHECK_MESSAGE(dominating_vertices(order_superpower_graph(g).graph).size() >= 3, spec);
  }
  CHECK(seen > 50);
  // exp(G) = 2 forces a 2-group, whose superpower graph is complete.
  CHECK(dominating_vertices(order_superpower_graph(make("E(2,3)")).graph).size() == 8);
}

TEST_CASE("parse helpers for graph kinds and reductions") {
  CHECK(parse_graph_kind("super") == GraphKind::kSuper);
  CHECK_FALSE(parse_graph_kind("superpower").has_value());
  CHECK(parse_reduction("dominating") == Reduction::kDeleteDominating);
  CHECK(to_string(GraphKind::kEnhanced) == "enhanced");
  CHECK(to_string(Reduction::kDeleteIdentity) == "identity");
}
