#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gg/connectivity.hpp"
#include "gg/group.hpp"
#include "gg/group_graphs.hpp"

namespace gg {

// One id per characterization checked by the suite.
enum class TheoremId {
  kGraphDominating,        // T_GRAPH: m.e.c. <=> unique dominating vertex, regular remainder
  kPowerPrimeExponent,     // C_POWER
  kEnhancedMec,            // C_EPG_MEC
  kEnhancedNilpotent,      // C_EPG_NILP
  kEnhancedDqsd,           // C_DQSD
  kEnhancedMinConnected,   // T_EPG_MC
  kSuperFullExponent,      // C_S_FULLEXP
  kSuperEvenOrder,         // P_S_EVEN
  kSuperMinConnected,      // T_S_MC
  kSuperUniqueInvolution,  // P_INV
  kSuperDegreeEqualsKappa, // T_DK
  kReducedPowerRegular,    // R_POW
  kReducedEnhancedRegular, // R_EPG
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kGraphDominating,       TheoremId::kPowerPrimeExponent,
    TheoremId::kEnhancedMec,           TheoremId::kEnhancedNilpotent,
    TheoremId::kEnhancedDqsd,          TheoremId::kEnhancedMinConnected,
    TheoremId::kSuperFullExponent,     TheoremId::kSuperEvenOrder,
    TheoremId::kSuperMinConnected,     TheoremId::kSuperUniqueInvolution,
    TheoremId::kSuperDegreeEqualsKappa, TheoremId::kReducedPowerRegular,
    TheoremId::kReducedEnhancedRegular,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
// Human-readable statement of what is compared.
std::string_view describe(TheoremId id);

// Reduction used by the reduced-regularity checks.
Reduction reduction_for(TheoremId id);

// Statements of the form "premise implies conclusion" agree unless the
// premise holds and the conclusion fails. All others are equivalences.
bool is_implication(TheoremId id);

struct TheoremVerdict {
  TheoremId theorem = TheoremId::kGraphDominating;
  std::string group;
  std::string graph;  // graph the left-hand side was computed on
  bool applicable = false;
  std::optional<bool> lhs;  // graph side
  std::optional<bool> rhs;  // group-structure side
  bool agree = true;
  std::optional<std::string> witness;
  double millis = 0.0;
};

// Lazily computed, per-group cache of everything the checks need. Graph-side
// and structure-side values are kept apart: structural predicates only read
// the group, its order table and M(G).
class TheoremContext {
 public:
  explicit TheoremContext(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  const std::string& spec() const { return spec_; }
  const GroupClassification& classification() const { return classification_; }
  const ExponentInfo& exponent() const { return exponent_; }
  const MaximalCyclicFamily& maximal_cyclics() const { return family_; }

  const GroupGraph& graph(GraphKind kind);
  const GroupGraph& reduced(GraphKind kind, Reduction mode);
  const MinimalityResult& min_edge_connected(GraphKind kind);
  const MinimalityResult& min_connected(GraphKind kind);
  const ConnectivityReport& report(GraphKind kind, Reduction mode);

 private:
  using Key = std::pair<int, int>;

  FiniteGroup group_;
  std::string spec_;
  GroupClassification classification_;
  ExponentInfo exponent_;
  MaximalCyclicFamily family_;

  std::map<Key, GroupGraph> graphs_;
  std::map<int, MinimalityResult> mec_;
  std::map<int, MinimalityResult> mc_;
  std::map<Key, ConnectivityReport> reports_;
};

// One verdict per graph kind for T_GRAPH, exactly one otherwise.
// Inapplicable checks come back with applicable = false.
std::vector<TheoremVerdict> verify_theorem(TheoremId id, TheoremContext& context);
std::vector<TheoremVerdict> verify_theorem(TheoremId id, const FiniteGroup& group);

// Structural side of each check, exposed for testing; none of these looks at
// a graph.
namespace structure {

// All maximal cyclic subgroups have one order and meet pairwise in {e}.
// On failure, `witness` names an offending pair.
bool equal_order_trivial_intersections(const FiniteGroup& group, const MaximalCyclicFamily& family,
                                       std::string* witness = nullptr);
bool all_maximal_cyclics_equal_order(const MaximalCyclicFamily& family);
// Degree of each element in the order-divisibility relation, from the order table.
std::vector<std::size_t> order_divisibility_degrees(const FiniteGroup& group);
std::vector<Element> involutions(const FiniteGroup& group);

}  // namespace structure

// ---------------------------------------------------------------------------
// Catalog sweeps
// ---------------------------------------------------------------------------

// The builtin catalog manifest (embedded at build time), one spec per entry.
std::string_view builtin_catalog_manifest();
// Parses a manifest: one spec per line, '#' comments and blank lines ignored.
std::vector<std::string> parse_catalog(std::string_view manifest);
std::vector<std::string> builtin_catalog();

// Keeps catalog entries whose every direct factor has order <= max_order.
std::vector<std::string> filter_catalog(std::span<const std::string> catalog,
                                        std::uint64_t max_order);

struct SweepOptions {
  std::vector<TheoremId> ids{std::begin(kAllTheorems), std::end(kAllTheorems)};
  std::uint64_t max_order = 64;
  unsigned jobs = 0;  // 0 = hardware concurrency
  bool audit_laws = true;
};

struct SweepSummary {
  std::size_t groups = 0;
  std::size_t verdicts = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t inapplicable = 0;
  std::size_t law_checks = 0;
  std::size_t law_violations = 0;
  std::vector<std::string> failures;        // "spec: message" for groups that failed to build
  std::vector<std::string> law_violation_details;
};

struct SweepResult {
  std::vector<TheoremVerdict> verdicts;  // sorted by (id, catalog position, graph)
  SweepSummary summary;
};

SweepResult sweep_catalog(std::span<const std::string> catalog, const SweepOptions& options);

// Checks the Whitney chain and the diameter-two law on every group graph and
// reduced graph of one group; returns the number of graphs checked and
// appends any violations.
std::size_t audit_connectivity_laws(TheoremContext& context, std::vector<std::string>& violations);

// ---------------------------------------------------------------------------
// Apex-graph fuzzing of the dominating-vertex criterion
// ---------------------------------------------------------------------------

struct FuzzOptions {
  std::size_t count = 1000;  // non-complete graphs to check
  std::size_t n_min = 4;     // vertex counts include the apex
  std::size_t n_max = 12;
  std::uint64_t p_num = 1;   // edge probability p_num / p_den
  std::uint64_t p_den = 2;
  std::uint64_t seed = 42;
};

struct FuzzSummary {
  std::size_t attempts = 0;
  std::size_t checked = 0;
  std::size_t skipped_complete = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t law_violations = 0;
  std::optional<std::string> counterexample;  // edge-list text
};

// Generates random graphs plus one universal vertex until `count` non-complete
// graphs have been checked (giving up after 64 * count attempts) and compares
// the fast decider against brute force on each.
FuzzSummary fuzz_apex_graphs(const FuzzOptions& options);

}  // namespace gg
