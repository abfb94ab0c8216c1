#include <numeric>
#include <sstream>

#include "doctest.h"
#include "gg/report.hpp"
#include "gg/theorems.hpp"

using namespace gg;

namespace {

FiniteGroup make(const std::string& spec) { return build_group(parse_group_spec(spec)); }

TheoremVerdict single(TheoremId id, const std::string& spec) {
  const auto v = verify_theorem(id, make(spec));
  REQUIRE(v.size() == 1);
  return v.front();
}

// The catalog rule written out independently of data/catalog.txt.
std::vector<std::string> catalog_by_rule() {
  std::vector<std::pair<std::string, std::uint64_t>> members;
  for (std::uint64_t n = 2; n <= 64; ++n) members.emplace_back("Z(" + std::to_string(n) + ")", n);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t q = p * p;
    for (std::uint64_t k = 2; q <= 64; ++k, q *= p)
      members.emplace_back("E(" + std::to_string(p) + "," + std::to_string(k) + ")", q);
  }
  for (std::uint64_t m = 6; m <= 64; m += 2) members.emplace_back("D(" + std::to_string(m) + ")", m);
  for (std::uint64_t m = 8; m <= 64; m += 4) members.emplace_back("Q(" + std::to_string(m) + ")", m);
  for (std::uint64_t m = 16; m <= 64; m += 8) members.emplace_back("SD(" + std::to_string(m) + ")", m);
  members.emplace_back("S(3)", 6);
  members.emplace_back("S(4)", 24);

  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.first);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& [a, oa] = members[i];
      const auto& [b, ob] = members[j];
      if (std::gcd(oa, ob) != 1 || oa * ob > 72) continue;
      out.push_back(oa <= ob ? a + "*" + b : b + "*" + a);
    }
  return out;
}

}  // namespace

TEST_CASE("builtin catalog follows its stated rule") {
  const auto catalog = builtin_catalog();
  CHECK(catalog == catalog_by_rule());
  CHECK(catalog.size() == 228);
  for (const std::string& spec : catalog) CHECK_NOTHROW(parse_group_spec(spec));
}

TEST_CASE("catalog parsing and filtering") {
  const auto parsed = parse_catalog("# header\n\n  Z(4)  \nD(6) # trailing\n\t\n");
  CHECK(parsed == std::vector<std::string>{"Z(4)", "D(6)"});

  const std::vector<std::string> items{"Z(70)", "Z(8)*Z(9)", "D(66)*Z(1)", "S(4)"};
  CHECK(filter_catalog(items, 64) == std::vector<std::string>{"Z(8)*Z(9)", "S(4)"});
  CHECK(filter_catalog(items, 8) == std::vector<std::string>{});
}

TEST_CASE("theorem ids round-trip") {
  for (TheoremId id : kAllTheorems) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK_FALSE(parse_theorem_id("T_NOPE").has_value());
  CHECK(std::size(kAllTheorems) == 13);
}

TEST_CASE("single verdicts on named groups") {
  const TheoremVerdict q8 = single(TheoremId::kEnhancedMec, "Q(8)");
  CHECK(q8.applicable);
  CHECK(q8.lhs == false);
  CHECK(q8.rhs == false);
  CHECK(q8.agree);
  REQUIRE(q8.witness.has_value());
  CHECK(q8.witness->find("a^2") != std::string::npos);

  const TheoremVerdict e24 = single(TheoremId::kEnhancedMinConnected, "E(2,4)");
  CHECK(e24.lhs == true);
  CHECK(e24.rhs == true);
  CHECK(e24.agree);
  CHECK_FALSE(e24.witness.has_value());

  const TheoremVerdict z2z9 = single(TheoremId::kSuperDegreeEqualsKappa, "Z(2)*Z(9)");
  CHECK(z2z9.lhs == true);
  CHECK(z2z9.rhs == true);

  const TheoremVerdict z6 = single(TheoremId::kSuperMinConnected, "Z(6)");
  CHECK(z6.lhs == false);
  CHECK(z6.rhs == false);
  CHECK(z6.agree);

  const TheoremVerdict k = single(TheoremId::kEnhancedMinConnected, "Z(2)*Z(2)*Z(3)");
  CHECK(k.lhs == false);
  CHECK(k.agree);
}

TEST_CASE("applicability") {
  CHECK_FALSE(single(TheoremId::kEnhancedMec, "Z(12)").applicable);
  CHECK_FALSE(single(TheoremId::kEnhancedNilpotent, "S(3)").applicable);
  CHECK_FALSE(single(TheoremId::kEnhancedDqsd, "Z(8)").applicable);
  CHECK_FALSE(single(TheoremId::kSuperFullExponent, "S(3)").applicable);
  CHECK_FALSE(single(TheoremId::kSuperEvenOrder, "Z(15)").applicable);
  CHECK_FALSE(single(TheoremId::kSuperEvenOrder, "D(8)").applicable);
  CHECK_FALSE(single(TheoremId::kSuperUniqueInvolution, "Q(16)").applicable);
  CHECK_FALSE(single(TheoremId::kSuperDegreeEqualsKappa, "S(4)").applicable);
  CHECK_FALSE(single(TheoremId::kPowerPrimeExponent, "Z(1)").applicable);

  // P_E of a cyclic group is complete, so T_GRAPH skips it; P(Z(12)) is not complete.
  for (const TheoremVerdict& v : verify_theorem(TheoremId::kGraphDominating, make("Z(12)"))) {
    if (v.graph == "enhanced") CHECK_FALSE(v.applicable);
    if (v.graph == "power") CHECK(v.applicable);
  }
}

TEST_CASE("C_DQSD on D(12), Q(16) and SD(16)") {
  SweepOptions options;
  options.ids = {TheoremId::kEnhancedDqsd};
  options.audit_laws = false;
  const std::vector<std::string> groups{"D(12)", "Q(16)", "SD(16)"};
  const SweepResult r = sweep_catalog(groups, options);
  REQUIRE(r.verdicts.size() == 3);
  for (const TheoremVerdict& v : r.verdicts) {
    CHECK(v.applicable);
    CHECK(v.lhs == false);
    CHECK(v.agree);
  }
}

TEST_CASE("superpower graph of a 2-group in the D/Q/SD families is complete and minimally edge connected") {
  TheoremContext ctx(make("D(8)"));
  CHECK(is_complete(ctx.graph(GraphKind::kSuper).graph));
  CHECK(ctx.min_edge_connected(GraphKind::kSuper).holds);
}

TEST_CASE("P_INV premise holds non-vacuously on the named groups") {
  for (const char* spec : {"Z(2)*Z(9)", "Z(2)*Z(3)"}) {
    const TheoremVerdict v = single(TheoremId::kSuperUniqueInvolution, spec);
    CHECK(v.applicable);
    CHECK(v.lhs == true);
    CHECK(v.rhs == true);
    CHECK(v.agree);
  }
  // Premise fails for S(3): vacuous agreement.
  const TheoremVerdict s3 = single(TheoremId::kSuperUniqueInvolution, "S(3)");
  CHECK(s3.applicable);
  CHECK(s3.lhs == false);
  CHECK(s3.agree);
}

TEST_CASE("structural predicates") {
  const FiniteGroup e32 = make("E(3,2)");
  CHECK(structure::equal_order_trivial_intersections(e32, maximal_cyclic_subgroups(e32)));
  std::string witness;
  const FiniteGroup q8 = make("Q(8)");
  CHECK_FALSE(structure::equal_order_trivial_intersections(q8, maximal_cyclic_subgroups(q8), &witness));
  CHECK(witness.find("{e, a^2}") != std::string::npos);
  CHECK(structure::all_maximal_cyclics_equal_order(maximal_cyclic_subgroups(q8)));
  CHECK_FALSE(structure::all_maximal_cyclics_equal_order(maximal_cyclic_subgroups(make("D(6)"))));

  const FiniteGroup z6 = make("Z(6)");
  // Orders 1,6,3,2,3,6.
  CHECK(structure::order_divisibility_degrees(z6) == std::vector<std::size_t>{5, 5, 4, 3, 4, 5});
  CHECK(structure::involutions(z6) == std::vector<Element>{3});
  CHECK(structure::involutions(make("D(12)")).size() == 7);
}

TEST_CASE("T_GRAPH is exercised on many group graphs") {
  SweepOptions options;
  options.ids = {TheoremId::kGraphDominating};
  options.audit_laws = false;
  const SweepResult r = sweep_catalog(builtin_catalog(), options);
  CHECK(r.summary.disagreements == 0);
  CHECK(r.summary.agreements >= 20);
  std::size_t positive = 0;
  for (const TheoremVerdict& v : r.verdicts) positive += v.applicable && v.lhs == true;
  CHECK(positive > 0);
}

TEST_CASE("sweep output is independent of the worker count") {
  SweepOptions one;
  one.jobs = 1;
  SweepOptions many = one;
  many.jobs = 4;
  const auto catalog = filter_catalog(builtin_catalog(), 24);
  std::ostringstream a, b;
  write_verdict_lines(sweep_catalog(catalog, one).verdicts, false, a);
  write_verdict_lines(sweep_catalog(catalog, many).verdicts, false, b);
  CHECK(a.str() == b.str());
  CHECK_FALSE(a.str().empty());
}

TEST_CASE("sweeps report build failures without aborting") {
  SweepOptions options;
  options.audit_laws = false;
  const std::vector<std::string> groups{"Z(4)", "D(5)", "Q(8)"};
  const SweepResult r = sweep_catalog(groups, options);
  REQUIRE(r.summary.failures.size() == 1);
  CHECK(r.summary.failures.front().rfind("D(5):", 0) == 0);
  CHECK(r.summary.groups == 3);
  CHECK(r.summary.disagreements == 0);
}

TEST_CASE("apex fuzzing") {
  SUBCASE("seed 42, 1000 graphs") {
    const FuzzSummary s = fuzz_apex_graphs({});
    CHECK(s.checked == 1000);
    CHECK(s.agreements == 1000);
    CHECK(s.disagreements == 0);
    CHECK(s.law_violations == 0);
    CHECK_FALSE(s.counterexample.has_value());
  }
  SUBCASE("empty graph plus apex is a star") {
    FuzzOptions o;
    o.count = 1;
    o.n_min = o.n_max = 4;
    o.p_num = 0;
    const FuzzSummary s = fuzz_apex_graphs(o);
    CHECK(s.checked == 1);
    CHECK(s.agreements == 1);
  }
  SUBCASE("complete graphs are skipped") {
    FuzzOptions o;
    o.count = 1;
    o.n_min = o.n_max = 3;
    o.p_num = o.p_den = 1;
    const FuzzSummary s = fuzz_apex_graphs(o);
    CHECK(s.checked == 0);
    CHECK(s.skipped_complete == s.attempts);
  }
  SUBCASE("bad options") {
    FuzzOptions o;
    o.count = 0;
    CHECK_THROWS(fuzz_apex_graphs(o));
    o.count = 1;
    o.p_num = 3;
    CHECK_THROWS(fuzz_apex_graphs(o));
  }
}

TEST_CASE("verdict JSON keeps its field order and hides timing by default") {
  const TheoremVerdict v = single(TheoremId::kSuperMinConnected, "Z(6)");
  const std::string line = verdict_json(v, false).dump();
  CHECK(line.rfind(R"j({"theorem":"T_S_MC","group":"Z(6)","graph":"super","lhs":false,"rhs":false,"agree":true,)j", 0) == 0);
  CHECK(line.find(R"("millis":null)") != std::string::npos);
  CHECK(verdict_json(v, true)["millis"].is_number());
}
