#include "gg/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace gg {

namespace {

// Product tables store 16-bit entries.
constexpr std::size_t kMaxTableOrder = 65535;

struct RawGroup {
  std::size_t order = 0;
  std::vector<std::uint16_t> table;
  std::vector<std::string> names;
};

std::string power_name(const char* symbol, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

RawGroup cyclic(std::size_t n) {
  RawGroup g{n, std::vector<std::uint16_t>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    g.names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  }
  return g;
}

RawGroup elementary_abelian(std::size_t p, std::size_t rank) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= p;
  RawGroup g{n, std::vector<std::uint16_t>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> digits(rank);
    for (std::size_t i = 0, x = a; i < rank; ++i, x /= p) digits[rank - 1 - i] = x % p;
    std::string name = "(";
    for (std::size_t i = 0; i < rank; ++i) name += (i ? "," : "") + std::to_string(digits[i]);
    g.names.push_back(name + ")");
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t sum = 0, place = 1;
      for (std::size_t i = 0, x = a, y = b; i < rank; ++i, x /= p, y /= p, place *= p) {
        sum += ((x % p + y % p) % p) * place;
      }
      g.table[a * n + b] = static_cast<std::uint16_t>(sum);
    }
  }
  return g;
}

// Normal form r^i s^j with index i + rot*j. `twist(j, k)` is the exponent of r
// in s^j r^k s^-j, and `square` is the r-exponent of s^2.
template <typename Twist>
RawGroup semidirect_normal_form(std::size_t rot, const char* r, const char* s, Twist twist,
                                std::size_t square) {
  const std::size_t n = 2 * rot;
  RawGroup g{n, std::vector<std::uint16_t>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a % rot, j = a / rot;
    std::string name = power_name(r, i) + (j ? s : "");
    g.names.push_back(name.empty() ? "e" : name);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k = b % rot, l = b / rot;
      std::size_t exp = (i + twist(j, k)) % rot;
      std::size_t sexp = j + l;
      if (sexp == 2) {
        exp = (exp + square) % rot;
        sexp = 0;
      }
      g.table[a * n + b] = static_cast<std::uint16_t>(exp + rot * sexp);
    }
  }
  return g;
}

RawGroup dihedral(std::size_t order) {
  const std::size_t n = order / 2;
  return semidirect_normal_form(
      n, "x", "y", [n](std::size_t j, std::size_t k) { return j ? (n - k) % n : k; }, 0);
}

RawGroup quaternion(std::size_t order) {
  const std::size_t n = order / 4;
  const std::size_t rot = 2 * n;
  return semidirect_normal_form(
      rot, "a", "b", [rot](std::size_t j, std::size_t k) { return j ? (rot - k) % rot : k; }, n);
}

RawGroup semidihedral(std::size_t order) {
  const std::size_t n = order / 8;
  const std::size_t rot = 4 * n;
  const std::size_t mult = 2 * n - 1;
  return semidirect_normal_form(
      rot, "a", "b", [rot, mult](std::size_t j, std::size_t k) { return j ? (mult * k) % rot : k; },
      0);
}

std::string cycle_notation(const std::vector<std::uint8_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Permutations in lexicographic order; a*b applies b first.
RawGroup symmetric(std::size_t degree) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  std::size_t codes = 1;
  for (std::size_t i = 0; i < degree; ++i) codes *= degree;
  auto encode = [degree](const std::vector<std::uint8_t>& q) {
    std::size_t c = 0;
    for (std::uint8_t v : q) c = c * degree + v;
    return c;
  };
  std::vector<std::uint16_t> index(codes, 0);
  for (std::size_t i = 0; i < n; ++i) index[encode(perms[i])] = static_cast<std::uint16_t>(i);

  RawGroup g{n, std::vector<std::uint16_t>(n * n), {}};
  std::vector<std::uint8_t> composed(degree);
  for (std::size_t a = 0; a < n; ++a) {
    g.names.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < degree; ++i) composed[i] = perms[a][perms[b][i]];
      g.table[a * n + b] = index[encode(composed)];
    }
  }
  return g;
}

RawGroup realize(const GroupSpec& spec);

// Mixed radix with the first factor most significant.
RawGroup direct_product(const std::vector<GroupSpec>& specs) {
  std::vector<RawGroup> parts;
  for (const GroupSpec& s : specs) parts.push_back(realize(s));
  std::size_t n = 1;
  for (const RawGroup& f : parts) n *= f.order;

  std::vector<std::vector<std::size_t>> components(n, std::vector<std::size_t>(parts.size()));
  RawGroup g{n, std::vector<std::uint16_t>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a;
    for (std::size_t f = parts.size(); f-- > 0;) {
      components[a][f] = x % parts[f].order;
      x /= parts[f].order;
    }
    std::string name = "(";
    for (std::size_t f = 0; f < parts.size(); ++f) {
      name += (f ? "," : "") + parts[f].names[components[a][f]];
    }
    g.names.push_back(a == 0 ? "e" : name + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = 0;
      for (std::size_t f = 0; f < parts.size(); ++f) {
        const RawGroup& part = parts[f];
        c = c * part.order + part.table[components[a][f] * part.order + components[b][f]];
      }
      g.table[a * n + b] = static_cast<std::uint16_t>(c);
    }
  }
  return g;
}

RawGroup realize(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> RawGroup {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return cyclic(s.order);
        } else if constexpr (std::is_same_v<T, ElementaryAbelianSpec>) {
          return elementary_abelian(s.prime, s.rank);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return dihedral(s.order);
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          return quaternion(s.order);
        } else if constexpr (std::is_same_v<T, SemidihedralSpec>) {
          return semidihedral(s.order);
        } else if constexpr (std::is_same_v<T, SymmetricSpec>) {
          return symmetric(s.degree);
        } else {
          return direct_product(s.factors);
        }
      },
      spec.node);
}

}  // namespace

FiniteGroup::FiniteGroup(GroupSpec spec, std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<std::string> names)
    : spec_(std::move(spec)),
      order_(order),
      table_(std::move(table)),
      inverses_(order, 0),
      names_(std::move(names)) {
  if (order_ == 0 || table_.size() != order_ * order_ || names_.size() != order_) {
    throw std::invalid_argument("malformed group table");
  }
  check_axioms();

  orders_.orders.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    std::uint32_t k = 1;
    for (Element x = a; x != 0; x = multiply(x, a)) ++k;
    orders_.orders[a] = k;
  }
}

void FiniteGroup::check_axioms() {
  const std::size_t n = order_;
  for (std::uint16_t v : table_) {
    if (v >= n) throw std::invalid_argument("group table not closed");
  }
  for (Element a = 0; a < n; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) {
      throw std::invalid_argument("element 0 is not the identity");
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (multiply(a, b) == 0 && multiply(b, a) == 0) {
        inverses_[a] = b;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element " + names_[a] + " has no inverse");
  }
  auto associative = [this](Element a, Element b, Element c) {
    return multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
  };
  if (n <= 128) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!associative(a, b, c)) throw std::invalid_argument("group table not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 20000; ++i) {
      if (!associative(pick(rng), pick(rng), pick(rng))) {
        throw std::invalid_argument("group table not associative");
      }
    }
  }
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  k %= orders_[a];
  Element r = 0;
  for (std::uint64_t i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

FiniteGroup build_group(const GroupSpec& spec, std::uint64_t order_cap) {
  validate(spec, order_cap);
  if (group_order(spec) > kMaxTableOrder) {
    throw SpecError("group order exceeds the table limit of " + std::to_string(kMaxTableOrder), 0);
  }
  RawGroup raw = realize(spec);
  return FiniteGroup(spec, raw.order, std::move(raw.table), std::move(raw.names));
}

const ElementOrderTable& element_order_table(const FiniteGroup& group) { return group.orders(); }

bool CyclicSubgroup::contains(Element a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& group, Element generator) {
  if (generator >= group.order()) throw std::out_of_range("element index out of range");
  CyclicSubgroup h{generator, {0}};
  for (Element x = generator; x != 0; x = group.multiply(x, generator)) h.elements.push_back(x);
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

std::vector<Element> MaximalCyclicFamily::common_elements(std::size_t group_order) const {
  std::vector<std::size_t> hits(group_order, 0);
  for (const CyclicSubgroup& m : members)
    for (Element a : m.elements) ++hits[a];
  std::vector<Element> out;
  for (Element a = 0; a < group_order; ++a)
    if (hits[a] == members.size()) out.push_back(a);
  return out;
}

MaximalCyclicFamily maximal_cyclic_subgroups(const FiniteGroup& group) {
  const std::size_t n = group.order();
  const ElementOrderTable& ord = group.orders();
  // <c> is properly contained in <b> whenever c is a power of b of smaller order.
  std::vector<bool> dominated(n, false);
  for (Element b = 0; b < n; ++b) {
    for (Element c = b; c != 0; c = group.multiply(c, b)) {
      if (ord[c] < ord[b]) dominated[c] = true;
    }
    if (ord[b] > 1) dominated[0] = true;
  }

  std::set<std::vector<Element>> seen;
  MaximalCyclicFamily family;
  for (Element a = 0; a < n; ++a) {
    if (dominated[a]) continue;
    CyclicSubgroup h = cyclic_subgroup(group, a);
    if (seen.insert(h.elements).second) family.members.push_back(std::move(h));
  }
  std::sort(family.members.begin(), family.members.end(),
            [](const CyclicSubgroup& x, const CyclicSubgroup& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.elements < y.elements;
            });
  return family;
}

ExponentInfo exponent_info(const FiniteGroup& group) {
  ExponentInfo info;
  for (std::uint32_t o : group.orders().orders) info.exponent = std::lcm(info.exponent, std::uint64_t{o});
  for (std::uint32_t o : group.orders().orders) {
    if (o == info.exponent) info.full = true;
  }
  return info;
}

std::vector<std::uint32_t> order_spectrum(const FiniteGroup& group) {
  std::set<std::uint32_t> s(group.orders().orders.begin(), group.orders().orders.end());
  return {s.begin(), s.end()};
}

bool is_nilpotent(const FiniteGroup& group) {
  const ElementOrderTable& ord = group.orders();
  for (Element a = 0; a < group.order(); ++a) {
    for (Element b = a + 1; b < group.order(); ++b) {
      if (std::gcd(ord[a], ord[b]) == 1 && !group.commute(a, b)) return false;
    }
  }
  return true;
}

std::string_view to_string(NilpotentShape shape) {
  switch (shape) {
    case NilpotentShape::kPGroup: return "P_GROUP";
    case NilpotentShape::kZ2CrossOddPGroup: return "Z2_CROSS_ODD_P_GROUP";
    case NilpotentShape::kOther: return "OTHER";
    case NilpotentShape::kNotNilpotent: return "NOT_NILPOTENT";
  }
  return "OTHER";
}

GroupClassification classify_group(const FiniteGroup& group) {
  GroupClassification c;
  const std::size_t n = group.order();
  const ExponentInfo exp = exponent_info(group);

  c.prime = prime_power_base(n);
  c.is_p_group = c.prime != 0;
  c.is_cyclic = std::any_of(group.orders().orders.begin(), group.orders().orders.end(),
                            [n](std::uint32_t o) { return o == n; });
  c.is_abelian = group.is_abelian();
  c.is_elementary_abelian_2 = c.is_abelian && exp.exponent <= 2;
  c.is_prime_exponent = is_prime(exp.exponent);
  c.is_nilpotent = is_nilpotent(group);

  if (!c.is_nilpotent) {
    c.nilpotent_shape = NilpotentShape::kNotNilpotent;
  } else if (c.is_p_group) {
    c.nilpotent_shape = NilpotentShape::kPGroup;
  } else if (n % 2 == 0 && n % 4 != 0) {
    const std::uint64_t odd_base = prime_power_base(n / 2);
    c.nilpotent_shape = odd_base > 2 ? NilpotentShape::kZ2CrossOddPGroup : NilpotentShape::kOther;
  } else {
    c.nilpotent_shape = NilpotentShape::kOther;
  }
  return c;
}

}  // namespace gg
