#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gg/graph.hpp"
#include "gg/group.hpp"

namespace gg {

enum class GraphKind { kPower, kEnhanced, kSuper };

// Which vertices a reduced (starred) graph deletes.
enum class Reduction { kNone, kDeleteIdentity, kDeleteDominating };

std::string_view to_string(GraphKind kind);
std::string_view to_string(Reduction mode);
std::optional<GraphKind> parse_graph_kind(std::string_view text);
std::optional<Reduction> parse_reduction(std::string_view text);

struct GroupGraph {
  SimpleGraph graph;
  GraphKind kind = GraphKind::kPower;
  Reduction reduction = Reduction::kNone;
  std::string group;              // rendered group spec
  std::vector<Element> elements;  // vertex -> group element
  std::vector<std::string> labels;
};

// x ~ y iff one is a power of the other.
GroupGraph power_graph(const FiniteGroup& group);

// x ~ y iff both lie in a common cyclic subgroup, built as a union of cliques
// over the maximal cyclic subgroups.
GroupGraph enhanced_power_graph(const FiniteGroup& group);
GroupGraph enhanced_power_graph(const FiniteGroup& group, const MaximalCyclicFamily& family);

// x ~ y iff o(x) | o(y) or o(y) | o(x).
GroupGraph order_superpower_graph(const FiniteGroup& group);

GroupGraph build_group_graph(const FiniteGroup& group, GraphKind kind);

// Deletes the identity or every dominating vertex. Labels of the surviving
// vertices are kept. kNone returns a copy.
GroupGraph reduce(const GroupGraph& graph, Reduction mode);

}  // namespace gg
