#include <random>
#include <set>

#include "doctest.h"
#include "qgsmooth/blowup.hpp"
#include "qgsmooth/corpus.hpp"
#include "qgsmooth/error.hpp"
#include "qgsmooth/smoothing.hpp"

using namespace qgs;

namespace {

struct Built {
  Configuration config;
  ContractionPlan plan;
};

Built final_of(std::string_view name) {
  const Document d = builtin(name).document;
  return {apply_blowups(d.base, d.blowups), *d.plan};
}

bool has_code(const Violations& v, std::string_view code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

ContractionPlan plan_of(std::vector<std::vector<std::string>> chains) {
  ContractionPlan p;
  p.chains = std::move(chains);
  return p;
}

// A (-4)-curve C meeting a (-2)-curve D once.
Configuration four_and_two() {
  Configuration c;
  c.surface = {SurfaceKind::Other, 0, 1, 9, false};
  c.add_curve({"C", -4, 2, 0, {}});
  c.add_curve({"D", -2, 0, 0, {}});
  c.set_pair(0, 1, 1);
  return c;
}

std::set<std::vector<std::string>> unoriented(const std::vector<std::vector<std::string>>& chains) {
  std::set<std::vector<std::string>> s;
  for (auto ch : chains) {
    auto r = ch;
    std::reverse(r.begin(), r.end());
    s.insert(std::min(ch, r));
  }
  return s;
}

}  // namespace

TEST_CASE("plan validation") {
  const Built k1 = final_of("enriques-k1");
  CHECK(validate_plan(k1.config, k1.plan).empty());
  CHECK(has_code(validate_plan(k1.config, plan_of({{}})), "plan-empty-chain"));
  CHECK(has_code(validate_plan(k1.config, plan_of({{"Z"}})), "plan-unknown-curve"));
  CHECK(has_code(validate_plan(k1.config, plan_of({{"S1"}, {"S1"}})), "plan-overlap"));
  CHECK(has_code(validate_plan(k1.config, plan_of({{"F"}})), "plan-not-rational"));
  CHECK(has_code(validate_plan(k1.config, plan_of({{"e1"}})), "plan-self-intersection"));
  CHECK(has_code(validate_plan(k1.config, plan_of({{"G8", "G6", "G7", "G5"}})), "plan-not-linear"));
  // G4 is a lone (-2)-curve: linear but not of class T
  CHECK(has_code(validate_plan(k1.config, plan_of({{"G4"}})), "plan-not-class-T"));
  try {
    contract_invariants(k1.config, plan_of({{"G4"}}));
    FAIL("expected PlanInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PlanInvalid);
  }
}

TEST_CASE("contraction invariants of the corpus") {
  const std::pair<const char*, long long> cases[] = {
      {"enriques-k1", 1}, {"enriques-k2", 2}, {"enriques-k3-kondo7", 3},
      {"enriques-k3-kondo2", 3}, {"enriques-k4", 4}, {"enriques-k5-symplectic", 5}};
  for (const auto& [name, k2] : cases) {
    CAPTURE(name);
    const Built b = final_of(name);
    const ContractionInvariants inv = contract_invariants(b.config, b.plan);
    CHECK(inv.K2_X == Rational(k2));
    CHECK(inv.chi == 1);
    CHECK(inv.p_g == 0);
  }
}

TEST_CASE("pullback of K_X") {
  const Configuration c = four_and_two();
  const ContractionPlan p = plan_of({{"C"}});
  CHECK(chain_contact(c, p, "D") == Rational::parse("1/2"));
  CHECK(pullback_degree(c, p, "D") == Rational::parse("1/2"));
  try {
    pullback_degree(c, p, "C");
    FAIL("expected CurveContracted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CurveContracted);
  }

  // the exceptional curve over G8 n G9 meets the (-4)-ends of both long chains
  const Built k1 = final_of("enriques-k1");
  CHECK(chain_contact(k1.config, k1.plan, "e5") == Rational::parse("4/3"));
  CHECK(chain_contact(k1.config, k1.plan, "e5") > Rational(1));
  CHECK(pullback_degree(k1.config, k1.plan, "e5") == Rational::parse("1/3"));
}

TEST_CASE("ampleness certificates hold on the corpus") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const Built b = final_of(name);
    const AmplenessCertificate a = ampleness_certificate(b.config, b.plan);
    CHECK(a.verdict);
    std::size_t contracted = 0;
    for (const auto& ch : b.plan.chains) contracted += ch.size();
    CHECK(a.entries.size() == b.config.curves.size() - contracted);
    for (const auto& e : a.entries) {
      CHECK(e.positive == (e.degree > Rational(0)));
      CHECK(e.degree == Rational(b.config.curve(e.curve).K_deg) + e.contact);
    }
  }
}

TEST_CASE("pi1 criterion") {
  auto b = final_of("enriques-k1");
  Pi1Report r = pi1_criterion(b.config, b.plan);
  CHECK(r.verdict == Pi1Verdict::CriterionSatisfied);
  CHECK(r.gcd == 1);
  CHECK(r.indices == std::vector<BigInt>{3, 3, 2, 2});
  CHECK(r.notes.empty());

  b = final_of("enriques-k3-kondo7");
  r = pi1_criterion(b.config, b.plan);
  CHECK(r.verdict == Pi1Verdict::CriterionSatisfied);
  CHECK(r.indices == std::vector<BigInt>{3, 7, 6});

  b = final_of("enriques-k2");
  r = pi1_criterion(b.config, b.plan);
  CHECK(r.verdict == Pi1Verdict::Inconclusive);
  CHECK(r.gcd == 2);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0] == "indices share the factor 2");
  bool g1 = false, g9 = false;
  for (const auto& n : r.notes) {
    g1 = g1 || n.rfind("G1 meets only one end curve", 0) == 0;
    g9 = g9 || n.rfind("G9 meets only one end curve", 0) == 0;
  }
  CHECK(g1);
  CHECK(g9);
  CHECK(to_string(Pi1Verdict::CriterionSatisfied) == "criterion-satisfied");
  CHECK(to_string(Pi1Verdict::Inconclusive) == "inconclusive");

  // coprime indices are not enough off an Enriques surface
  const Configuration c = four_and_two();
  r = pi1_criterion(c, plan_of({{"C"}}));
  CHECK(r.verdict == Pi1Verdict::Inconclusive);
  CHECK(std::find(r.notes.begin(), r.notes.end(), "ambient surface is not an Enriques surface") != r.notes.end());
}

TEST_CASE("moduli dimension and topology") {
  CHECK(moduli_dimension(1, 1) == 8);
  CHECK(moduli_dimension(1, 2) == 6);
  CHECK(moduli_dimension(1, 3) == 4);
  CHECK(moduli_dimension(1, 4) == 2);
  CHECK(moduli_dimension(1, 5) == 0);

  const TopologyReport t = topology_report(1, 1, true);
  CHECK(t.c2 == 11);
  CHECK(t.b2_plus == 1);
  CHECK(t.b2_minus == 8);
  REQUIRE(t.cover);
  CHECK(t.cover->chi == 2);
  CHECK(t.cover->c1_squared == 2);
  CHECK(t.cover->c2 == 22);
  CHECK(t.cover->b2_plus == 3);
  CHECK(t.cover->b2_minus == 17);
  CHECK(t.cover->sigma == -14);
  CHECK_FALSE(t.cover->sigma_divisible_by_16);
  CHECK(t.cover->target == "3CP²#17CP²bar");
  CHECK_FALSE(topology_report(3, 1, false).cover);
  CHECK(topology_report(8, 1, true).cover->sigma_divisible_by_16);
  for (long long k = 1; k <= 9; ++k) {
    const TopologyReport r = topology_report(k, 1, true);
    CHECK(r.c2 + k == 12);  // Noether with chi = 1
    CHECK(r.b2_plus + r.b2_minus == r.c2 - 2);
    CHECK(r.cover->sigma == 2 * k - 16);
    CHECK(r.cover->c2 + 2 * k == 24);
  }
  CHECK_THROWS_AS(topology_report(1, 2, false), Error);
}

TEST_CASE("property: K^2 and indices do not depend on chain order or orientation") {
  std::mt19937_64 rng(5);
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const Built b = final_of(name);
    const auto inv = contract_invariants(b.config, b.plan);
    auto idx = pi1_criterion(b.config, b.plan).indices;
    std::sort(idx.begin(), idx.end());
    for (int iter = 0; iter < 10; ++iter) {
      ContractionPlan p = b.plan;
      std::shuffle(p.chains.begin(), p.chains.end(), rng);
      for (auto& ch : p.chains)
        if (rng() & 1) std::reverse(ch.begin(), ch.end());
      CHECK(contract_invariants(b.config, p).K2_X == inv.K2_X);
      auto j = pi1_criterion(b.config, p).indices;
      std::sort(j.begin(), j.end());
      CHECK(j == idx);
    }
  }
}

TEST_CASE("property: chain contact is additive over chains") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const Built b = final_of(name);
    std::set<std::string> contracted;
    for (const auto& ch : b.plan.chains) contracted.insert(ch.begin(), ch.end());
    for (const auto& cv : b.config.curves) {
      if (contracted.count(cv.name)) continue;
      Rational sum;
      for (const auto& ch : b.plan.chains) sum += chain_contact(b.config, plan_of({ch}), cv.name);
      CHECK(sum == chain_contact(b.config, b.plan, cv.name));
    }
  }
}

TEST_CASE("extract_chains recovers the plans up to orientation") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const Built b = final_of(name);
    std::vector<std::string> all;
    for (const auto& ch : b.plan.chains) all.insert(all.end(), ch.begin(), ch.end());
    std::reverse(all.begin(), all.end());
    CHECK(unoriented(extract_chains(b.config, all)) == unoriented(b.plan.chains));
  }
  const Configuration base = builtin("enriques-k1").document.base;
  CHECK_THROWS_AS(extract_chains(base, {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9"}), Error);  // a cycle
  CHECK_THROWS_AS(extract_chains(base, {"G6", "G5", "G7", "S1"}), Error);                             // a fork
  CHECK_THROWS_AS(extract_chains(base, {"S1", "F"}), Error);                                          // S1.F = 2
}

TEST_CASE("singular surface report") {
  const Built b = final_of("enriques-k1");
  const SingularSurfaceReport r = analyze_plan(b.config, b.plan);
  CHECK(r.ambient_K2 == -5);
  CHECK(r.K2_X == Rational(1));
  CHECK(r.contributions == std::vector<Rational>{2, 2, 1, 1});
  CHECK(r.chains.size() == 4);
  CHECK(r.class_t[0].d == 3);
  REQUIRE(r.moduli_dim);
  CHECK(*r.moduli_dim == 8);
  CHECK(r.general_type);
  REQUIRE(r.topology);
  REQUIRE(r.topology->cover);
  CHECK(r.topology->cover->b2_minus == 17);
  CHECK(b.plan.claims_pi1_Z2());
}
