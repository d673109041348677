#include "format.hpp"

#include <string>

namespace qgs::cli {

namespace {

using Json = nlohmann::ordered_json;

template <class Range, class F>
std::string join(const Range& r, F f, const char* sep = ",") {
  std::string out;
  for (const auto& x : r) {
    if (!out.empty()) out += sep;
    out += f(x);
  }
  return out;
}

std::string rational_list(const RatVector& v) {
  return join(v, [](const Rational& x) { return x.to_string(); });
}

std::string indices_of(const SingularSurfaceReport& r) {
  return join(r.pi1.indices, [](const BigInt& x) { return x.str(); });
}

}  // namespace

void write_chain_text(std::ostream& os, const Chain& c) {
  const auto t = recognize_class_T(c);
  const Rational v = hj_value(c);
  if (t) {
    os << "classT d=" << t->d << " n=" << t->n << " a=" << t->a << " m=" << t->m << " q=" << t->q
       << " index=" << t->n;
  } else {
    os << "notT m=" << v.num() << " q=" << v.den();
  }
  os << " contribution=" << k2_contribution(c) << " discrepancies=" << rational_list(discrepancies(c)) << "\n";
}

Json chain_json(const Chain& c) {
  Json j = Json::object();
  const Rational v = hj_value(c);
  j["chain"] = c.entries();
  j["m"] = v.num().str();
  j["q"] = v.den().str();
  const auto t = recognize_class_T(c);
  j["class_T"] = t.has_value();
  if (t) {
    j["d"] = t->d.str();
    j["n"] = t->n.str();
    j["a"] = t->a.str();
    j["index"] = t->n.str();
  }
  j["contribution"] = k2_contribution(c).to_string();
  j["discrepancies"] = Json::array();
  for (const auto& x : discrepancies(c)) j["discrepancies"].push_back(x.to_string());
  return j;
}

void write_text(std::ostream& os, const Analysis& a) {
  os << "example=" << a.name << "\n";
  os << "violations=" << a.violations.size() << "\n";
  for (const auto& v : a.violations) os << "violation=" << v.code << ": " << v.detail << "\n";
  for (const auto& v : a.mismatches) os << "mismatch=" << v.code << ": " << v.detail << "\n";
  if (a.euler)
    os << "euler_sum=" << a.euler->total << " expected=" << a.euler->expected << " deficit=" << a.euler->deficit
       << "\n";
  for (const auto& s : a.advisories) os << "advisory=" << s << "\n";
  os << "blowups=" << a.final_config.blowup_count << "\n";
  os << "ambient_K2=" << a.final_config.ambient_K2() << "\n";

  if (a.hypotheses) {
    os << "hypotheses.stage=" << a.hypotheses->stage << " (informational)\n";
    for (const auto& h : a.hypotheses->checks)
      os << "hypothesis." << h.name << "=" << (h.holds ? "holds" : "not-established") << " " << h.detail << "\n";
    for (const auto& v : a.hypotheses->snc) os << "hypothesis.snc-detail=" << v.code << ": " << v.detail << "\n";
  }

  if (!a.report) {
    os << "result=" << (a.passed ? "pass" : "fail") << "\n";
    return;
  }
  const SingularSurfaceReport& r = *a.report;
  for (std::size_t i = 0; i < r.chains.size(); ++i) {
    const ClassTData& t = r.class_t[i];
    os << "chain=" << r.chains[i].to_string() << " curves=" << join(r.chain_curves[i], [](const std::string& s) { return s; })
       << " d=" << t.d << " n=" << t.n << " a=" << t.a << " contribution=" << r.contributions[i] << "\n";
  }
  for (const auto& e : r.ampleness.entries)
    os << "ample." << e.curve << "=" << e.degree << " contact=" << e.contact << "\n";
  os << "ampleness=PARTIAL verdict=" << (r.ampleness.verdict ? "positive" : "failed") << "\n";
  os << "general_type=" << (r.general_type ? "true" : "false") << "\n";
  if (r.moduli_dim) os << "moduli_dim=" << *r.moduli_dim << "\n";
  if (r.topology) {
    const TopologyReport& t = *r.topology;
    os << "X_t.c2=" << t.c2 << " X_t.b2+=" << t.b2_plus << " X_t.b2-=" << t.b2_minus << "\n";
    if (t.cover) {
      const CoverTopology& c = *t.cover;
      os << "cover.chi=" << c.chi << " cover.c1^2=" << c.c1_squared << " cover.c2=" << c.c2
         << " cover.b2+=" << c.b2_plus << " cover.b2-=" << c.b2_minus << " cover.sigma=" << c.sigma
         << " cover.sigma_divisible_by_16=" << (c.sigma_divisible_by_16 ? "true" : "false") << "\n";
      os << "cover.homeomorphic_to=" << c.target << "\n";
    }
  }
  for (const auto& s : r.assumptions) os << "assumption=" << s << "\n";
  for (const auto& s : r.pi1.notes) os << "note=" << s << "\n";
  os << "result=" << (a.passed ? "pass" : "fail") << "\n";
  os << "K2_X=" << r.K2_X << "\n";
  os << "chi=" << r.chi << "\n";
  os << "p_g=" << r.p_g << "\n";
  os << "q=" << r.q << "\n";
  os << "indices=" << indices_of(r) << "\n";
  os << "gcd=" << r.pi1.gcd << "\n";
  os << "pi1=" << to_string(r.pi1.verdict) << "\n";
}

void write_table_text(std::ostream& os, const VerifyTable& t) {
  std::size_t passed = 0;
  for (const auto& a : t.rows) {
    passed += a.passed ? 1 : 0;
    os << a.name;
    if (a.report) {
      const auto& r = *a.report;
      os << " K2_X=" << r.K2_X << " indices=" << indices_of(r) << " gcd=" << r.pi1.gcd
         << " pi1=" << to_string(r.pi1.verdict) << " ampleness=" << (r.ampleness.verdict ? "positive" : "failed");
    }
    if (a.hypotheses)
      os << " independence=" << a.hypotheses->independence.rank << "/" << a.hypotheses->independence.candidates.size();
    os << " violations=" << a.violations.size() << " mismatches=" << a.mismatches.size()
       << " result=" << (a.passed ? "pass" : "fail") << "\n";
    for (const auto& v : a.violations) os << "  violation=" << v.code << ": " << v.detail << "\n";
    for (const auto& v : a.mismatches) os << "  mismatch=" << v.code << ": " << v.detail << "\n";
  }
  os << "passed=" << passed << "/" << t.rows.size() << "\n";
}

namespace {

Json violations_json(const Violations& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(Json{{"code", v.code}, {"detail", v.detail}});
  return out;
}

}  // namespace

Json to_json(const Analysis& a) {
  Json j = Json::object();
  j["name"] = a.name;
  j["passed"] = a.passed;
  j["violations"] = violations_json(a.violations);
  j["mismatches"] = violations_json(a.mismatches);
  if (a.euler)
    j["euler"] = Json{{"total", a.euler->total}, {"expected", a.euler->expected}, {"deficit", a.euler->deficit},
                      {"unlisted_fibers", a.euler->unlisted_fibers}};
  j["advisories"] = a.advisories;
  j["blowup_count"] = a.final_config.blowup_count;
  j["ambient_K2"] = a.final_config.ambient_K2();
  if (a.hypotheses) {
    Json h = Json::object();
    h["stage"] = a.hypotheses->stage;
    h["candidates"] = a.hypotheses->independence.candidates;
    h["rank"] = a.hypotheses->independence.rank;
    h["independent"] = a.hypotheses->independence.verdict;
    h["snc"] = violations_json(a.hypotheses->snc);
    h["checks"] = Json::array();
    for (const auto& c : a.hypotheses->checks)
      h["checks"].push_back(Json{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    j["hypotheses"] = std::move(h);
  }
  if (a.report) {
    const SingularSurfaceReport& r = *a.report;
    Json rep = Json::object();
    rep["chains"] = Json::array();
    for (std::size_t i = 0; i < r.chains.size(); ++i) {
      const ClassTData& t = r.class_t[i];
      rep["chains"].push_back(Json{{"curves", r.chain_curves[i]},
                                   {"entries", r.chains[i].entries()},
                                   {"d", t.d.str()},
                                   {"n", t.n.str()},
                                   {"a", t.a.str()},
                                   {"m", t.m.str()},
                                   {"q", t.q.str()},
                                   {"contribution", r.contributions[i].to_string()}});
    }
    rep["K2_X"] = r.K2_X.to_string();
    rep["chi"] = r.chi;
    rep["p_g"] = r.p_g;
    rep["q"] = r.q;
    rep["indices"] = Json::array();
    for (const auto& x : r.pi1.indices) rep["indices"].push_back(x.str());
    rep["gcd_indices"] = r.pi1.gcd.str();
    rep["pi1_verdict"] = std::string(to_string(r.pi1.verdict));
    rep["pi1_notes"] = r.pi1.notes;
    Json amp = Json::object();
    amp["scope"] = "PARTIAL";
    amp["verdict"] = r.ampleness.verdict;
    amp["curves"] = Json::array();
    for (const auto& e : r.ampleness.entries)
      amp["curves"].push_back(Json{{"curve", e.curve},
                                   {"degree", e.degree.to_string()},
                                   {"contact", e.contact.to_string()},
                                   {"positive", e.positive}});
    rep["ample_certificate"] = std::move(amp);
    if (r.moduli_dim) rep["moduli_dim"] = *r.moduli_dim;
    rep["general_type"] = r.general_type;
    if (r.topology) {
      const TopologyReport& t = *r.topology;
      Json top = Json{{"c2", t.c2}, {"b2plus", t.b2_plus}, {"b2minus", t.b2_minus}};
      if (t.cover) {
        const CoverTopology& c = *t.cover;
        top["cover"] = Json{{"chi", c.chi},
                            {"c1_squared", c.c1_squared},
                            {"c2", c.c2},
                            {"b2plus", c.b2_plus},
                            {"b2minus", c.b2_minus},
                            {"sigma", c.sigma},
                            {"sigma_divisible_by_16", c.sigma_divisible_by_16},
                            {"homeomorphic_to", c.target}};
      }
      rep["topology"] = std::move(top);
    }
    rep["assumptions"] = r.assumptions;
    j["report"] = std::move(rep);
  }
  return j;
}

Json to_json(const VerifyTable& t) {
  Json j = Json::object();
  j["all_pass"] = t.all_pass;
  j["rows"] = Json::array();
  for (const auto& a : t.rows) j["rows"].push_back(to_json(a));
  return j;
}

}  // namespace qgs::cli
