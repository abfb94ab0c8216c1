#include "gg/group_graphs.hpp"

#include <algorithm>
#include <map>

namespace gg {

namespace {

GroupGraph wrap(const FiniteGroup& group, GraphKind kind, SimpleGraph graph) {
  GroupGraph g;
  g.graph = std::move(graph);
  g.kind = kind;
  g.group = render(group.spec());
  g.elements.resize(group.order());
  g.labels.resize(group.order());
  for (Element a = 0; a < group.order(); ++a) {
    g.elements[a] = a;
    g.labels[a] = group.name(a);
  }
  return g;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPower: return "power";
    case GraphKind::kEnhanced: return "enhanced";
    case GraphKind::kSuper: return "super";
  }
  return "power";
}

std::string_view to_string(Reduction mode) {
  switch (mode) {
    case Reduction::kNone: return "none";
    case Reduction::kDeleteIdentity: return "identity";
    case Reduction::kDeleteDominating: return "dominating";
  }
  return "none";
}

std::optional<GraphKind> parse_graph_kind(std::string_view text) {
  if (text == "power") return GraphKind::kPower;
  if (text == "enhanced") return GraphKind::kEnhanced;
  if (text == "super") return GraphKind::kSuper;
  return std::nullopt;
}

std::optional<Reduction> parse_reduction(std::string_view text) {
  if (text == "none") return Reduction::kNone;
  if (text == "identity") return Reduction::kDeleteIdentity;
  if (text == "dominating") return Reduction::kDeleteDominating;
  return std::nullopt;
}

GroupGraph power_graph(const FiniteGroup& group) {
  SimpleGraph::Builder b(group.order());
  for (Element y = 0; y < group.order(); ++y) {
    for (Element p = group.multiply(y, y); p != y; p = group.multiply(p, y)) {
      b.add_edge(y, p);
    }
  }
  return wrap(group, GraphKind::kPower, std::move(b).build());
}

GroupGraph enhanced_power_graph(const FiniteGroup& group) {
  return enhanced_power_graph(group, maximal_cyclic_subgroups(group));
}

GroupGraph enhanced_power_graph(const FiniteGroup& group, const MaximalCyclicFamily& family) {
  SimpleGraph::Builder b(group.order());
  for (const CyclicSubgroup& m : family.members) b.add_clique(m.elements);
  return wrap(group, GraphKind::kEnhanced, std::move(b).build());
}

GroupGraph order_superpower_graph(const FiniteGroup& group) {
  // Adjacency only depends on the pair of order classes.
  std::map<std::uint32_t, std::vector<Element>> classes;
  for (Element a = 0; a < group.order(); ++a) classes[group.orders()[a]].push_back(a);

  SimpleGraph::Builder b(group.order());
  for (auto i = classes.begin(); i != classes.end(); ++i) {
    b.add_clique(i->second);
    for (auto j = std::next(i); j != classes.end(); ++j) {
      if (j->first % i->first != 0) continue;  // keys ascend, so only i | j is possible
      for (Element x : i->second)
        for (Element y : j->second) b.add_edge(x, y);
    }
  }
  return wrap(group, GraphKind::kSuper, std::move(b).build());
}

GroupGraph build_group_graph(const FiniteGroup& group, GraphKind kind) {
  switch (kind) {
    case GraphKind::kPower: return power_graph(group);
    case GraphKind::kEnhanced: return enhanced_power_graph(group);
    case GraphKind::kSuper: return order_superpower_graph(group);
  }
  return power_graph(group);
}

GroupGraph reduce(const GroupGraph& source, Reduction mode) {
  std::vector<Vertex> drop;
  if (mode == Reduction::kDeleteIdentity) {
    const auto it = std::find(source.elements.begin(), source.elements.end(), Element{0});
    if (it != source.elements.end()) drop.push_back(static_cast<Vertex>(it - source.elements.begin()));
  } else if (mode == Reduction::kDeleteDominating) {
    drop = dominating_vertices(source.graph);
  }

  PuncturedGraph p = puncture(source.graph, {}, drop);
  GroupGraph out;
  out.graph = std::move(p.graph);
  out.kind = source.kind;
  out.reduction = mode == Reduction::kNone ? source.reduction : mode;
  out.group = source.group;
  for (Vertex v : p.original) {
    out.elements.push_back(source.elements[v]);
    out.labels.push_back(source.labels[v]);
  }
  return out;
}

}  // namespace gg
