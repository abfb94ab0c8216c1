#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gg/connectivity.hpp"
#include "gg/group.hpp"
#include "gg/group_graphs.hpp"
#include "gg/theorems.hpp"
#include "json.hpp"

namespace gg {

using Json = nlohmann::ordered_json;

// order, pi_G, exponent, classification and the M(G) inventory.
Json group_json(const FiniteGroup& group);

// Vertex labels, edge list (by label index) and degree histogram.
Json graph_json(const GroupGraph& graph);

// `labels` may be empty, in which case witness edges are reported by index.
Json report_json(const ConnectivityReport& report, std::span<const std::string> labels = {});

// millis is null unless `timing` is set, so sweeps stay byte-reproducible.
Json verdict_json(const TheoremVerdict& verdict, bool timing);

Json sweep_summary_json(const SweepSummary& summary);
Json fuzz_json(const FuzzSummary& summary);

// One JSON object per line.
void write_verdict_lines(std::span<const TheoremVerdict> verdicts, bool timing, std::ostream& out);
// Fixed-width table followed by the summary block.
void write_verdict_table(std::span<const TheoremVerdict> verdicts, bool timing, std::ostream& out);
void write_sweep_summary(const SweepSummary& summary, std::ostream& out);

}  // namespace gg
