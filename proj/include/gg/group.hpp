#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gg {

// Element indices are 0..|G|-1 with 0 the identity.
using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 5040;

// Order cap from GG_ORDER_CAP, falling back to kDefaultOrderCap.
std::uint64_t default_order_cap();

// ---------------------------------------------------------------------------
// Group-spec mini language
//
//   spec   := factor { "*" factor }
//   factor := "Z(" n ")" | "E(" p "," k ")" | "D(" 2n ")" | "Q(" 4n ")"
//           | "SD(" 8n ")" | "S(" n ")"
//
// D, Q and SD take the group order, not n.
// ---------------------------------------------------------------------------

struct GroupSpec;

struct CyclicSpec {
  std::uint64_t order = 0;
  bool operator==(const CyclicSpec&) const = default;
};

struct ElementaryAbelianSpec {
  std::uint64_t prime = 0;
  std::uint64_t rank = 0;
  bool operator==(const ElementaryAbelianSpec&) const = default;
};

// D_2n = <x, y : x^n = y^2 = e, xy = yx^-1>, stored by group order 2n.
struct DihedralSpec {
  std::uint64_t order = 0;
  bool operator==(const DihedralSpec&) const = default;
};

// Q_4n = <a, b : a^2n = e, a^n = b^2, ab = ba^-1>, stored by group order 4n.
struct QuaternionSpec {
  std::uint64_t order = 0;
  bool operator==(const QuaternionSpec&) const = default;
};

// SD_8n = <a, b : a^4n = b^2 = e, ba = a^(2n-1) b>, stored by group order 8n.
struct SemidihedralSpec {
  std::uint64_t order = 0;
  bool operator==(const SemidihedralSpec&) const = default;
};

struct SymmetricSpec {
  std::uint64_t degree = 0;
  bool operator==(const SymmetricSpec&) const = default;
};

struct DirectProductSpec {
  std::vector<GroupSpec> factors;
  bool operator==(const DirectProductSpec&) const;
};

struct GroupSpec {
  using Node = std::variant<CyclicSpec, ElementaryAbelianSpec, DihedralSpec,
                            QuaternionSpec, SemidihedralSpec, SymmetricSpec,
                            DirectProductSpec>;
  Node node;

  bool operator==(const GroupSpec& other) const { return node == other.node; }
};

// Raised for malformed or out-of-bounds group specs. position() is the byte
// offset into the parsed text (0 for errors found after parsing).
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

GroupSpec parse_group_spec(std::string_view text,
                           std::uint64_t order_cap = default_order_cap());

// Canonical rendering; parse_group_spec(render(s)) == s.
std::string render(const GroupSpec& spec);

// Saturates at UINT64_MAX.
std::uint64_t group_order(const GroupSpec& spec);

// Throws SpecError on any parameter-bound violation or when the order
// exceeds order_cap.
void validate(const GroupSpec& spec, std::uint64_t order_cap);

bool is_dqsd_family(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Finite groups as multiplication tables
// ---------------------------------------------------------------------------

struct ElementOrderTable {
  std::vector<std::uint32_t> orders;

  std::uint32_t operator[](Element a) const { return orders[a]; }
  std::size_t size() const { return orders.size(); }
};

class FiniteGroup {
 public:
  // Takes ownership of a row-major |G|x|G| product table. Validates closure,
  // identity, inverses and associativity (exhaustive up to order 128,
  // sampled above) and throws std::invalid_argument on failure.
  FiniteGroup(GroupSpec spec, std::size_t order, std::vector<std::uint16_t> table,
              std::vector<std::string> names);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  const GroupSpec& spec() const { return spec_; }

  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, std::uint64_t k) const;
  bool commute(Element a, Element b) const {
    return multiply(a, b) == multiply(b, a);
  }
  bool is_abelian() const;

  const std::string& name(Element a) const { return names_[a]; }
  const ElementOrderTable& orders() const { return orders_; }

 private:
  void check_axioms();

  GroupSpec spec_;
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
  ElementOrderTable orders_;
};

FiniteGroup build_group(const GroupSpec& spec,
                        std::uint64_t order_cap = default_order_cap());

const ElementOrderTable& element_order_table(const FiniteGroup& group);

struct CyclicSubgroup {
  Element generator = 0;
  std::vector<Element> elements;  // sorted

  std::size_t size() const { return elements.size(); }
  bool contains(Element a) const;
};

CyclicSubgroup cyclic_subgroup(const FiniteGroup& group, Element generator);

// The set M(G), deduplicated as element sets and sorted by (size, elements).
struct MaximalCyclicFamily {
  std::vector<CyclicSubgroup> members;

  std::size_t size() const { return members.size(); }
  // Elements lying in every member.
  std::vector<Element> common_elements(std::size_t group_order) const;
};

MaximalCyclicFamily maximal_cyclic_subgroups(const FiniteGroup& group);

struct ExponentInfo {
  std::uint64_t exponent = 1;
  bool full = false;  // some element has order exp(G)
};

ExponentInfo exponent_info(const FiniteGroup& group);

// pi_G, ascending.
std::vector<std::uint32_t> order_spectrum(const FiniteGroup& group);

// Elements of coprime order commute.
bool is_nilpotent(const FiniteGroup& group);

enum class NilpotentShape { kPGroup, kZ2CrossOddPGroup, kOther, kNotNilpotent };

std::string_view to_string(NilpotentShape shape);

struct GroupClassification {
  bool is_p_group = false;
  std::uint64_t prime = 0;  // set when is_p_group
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_elementary_abelian_2 = false;
  bool is_prime_exponent = false;
  bool is_nilpotent = false;
  NilpotentShape nilpotent_shape = NilpotentShape::kOther;
};

GroupClassification classify_group(const FiniteGroup& group);

// Number-theory helpers shared with the theorem predicates.
bool is_prime(std::uint64_t n);
// Returns p if n = p^k with k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace gg
