#include "qgsmooth/corpus.hpp"

#include <algorithm>
#include <map>

#include "corpus_data.hpp"

namespace qgs {

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : corpus_data::entries) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

std::string_view builtin_source(std::string_view name) {
  for (const auto& entry : corpus_data::entries)
    if (entry.name == name) return entry.json;
  throw Error(ErrorKind::UnknownExample, "unknown example '" + std::string(name) + "'");
}

NamedExample builtin(std::string_view name) {
  NamedExample ex;
  ex.name = std::string(name);
  ex.document = parse_document(builtin_source(name));
  if (ex.document.expected) ex.expected = *ex.document.expected;
  return ex;
}

namespace {

Chain oriented(const Chain& c) { return std::min(c, c.reversed()); }

std::vector<Chain> normalized(std::vector<Chain> chains) {
  for (auto& c : chains) c = oriented(c);
  std::sort(chains.begin(), chains.end());
  return chains;
}

std::string list_string(const std::vector<Chain>& chains) {
  std::string out;
  for (const auto& c : chains) out += (out.empty() ? "[" : " [") + c.to_string() + "]";
  return out;
}

HypothesisReport check_hypotheses(const Document& doc, const CertificateRequest& req) {
  HypothesisReport h;
  h.stage = req.stage;
  const std::vector<BlowupStep> prefix(doc.blowups.begin(), doc.blowups.begin() + req.stage);
  const Configuration c = apply_blowups(doc.base, prefix);

  h.independence = independence_certificate(c, req.candidates);
  h.checks.push_back({"numerically-independent", h.independence.verdict,
                      "rank " + std::to_string(h.independence.rank) + " of " +
                          std::to_string(req.candidates.size()) + " candidates"});

  try {
    h.snc = snc_certificate(c, req.divisor);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MissingPointData) throw;
    h.snc.push_back({"missing-point-data", e.what()});
  }
  h.checks.push_back({"simple-normal-crossing", h.snc.empty(),
                      h.snc.empty() ? "no violations" : std::to_string(h.snc.size()) + " violations"});

  // Disjointness from the multiple fibers cannot be read off the pairing;
  // it only counts when declared.
  std::vector<std::string> undeclared;
  const FibrationData* fib = doc.base.fibration ? &*doc.base.fibration : nullptr;
  for (const auto& name : req.candidates) {
    if (fib && std::count(fib->two_sections.begin(), fib->two_sections.end(), name)) continue;
    if (req.exceptional && name == *req.exceptional) continue;
    if (!fib || !std::count(fib->multiple_fiber_disjoint_from.begin(), fib->multiple_fiber_disjoint_from.end(), name))
      undeclared.push_back(name);
  }
  std::string detail = "declared assumption";
  if (!undeclared.empty()) {
    detail = "not declared for";
    for (const auto& n : undeclared) detail += " " + n;
  }
  h.checks.push_back({"disjoint-from-multiple-fibers", undeclared.empty(), detail});

  bool miss = true;
  std::string meets;
  if (req.exceptional && fib) {
    for (const auto& s : fib->two_sections) {
      if (!std::count(req.candidates.begin(), req.candidates.end(), s)) continue;
      if (c.pair(s, *req.exceptional) != 0) {
        miss = false;
        meets += " " + s;
      }
    }
  }
  h.checks.push_back({"two-sections-miss-exceptional", miss,
                      miss ? (req.exceptional ? "S.E = 0 for every 2-section" : "no exceptional curve at this stage")
                           : "meeting the exceptional curve:" + meets});
  return h;
}

void compare_expected(const ExpectedValues& e, Analysis& a) {
  auto mismatch = [&](const std::string& field, const std::string& want, const std::string& got) {
    a.mismatches.push_back({"expected-" + field, field + ": expected " + want + ", got " + got});
  };
  if (e.blowup_count && *e.blowup_count != a.final_config.blowup_count)
    mismatch("blowup_count", std::to_string(*e.blowup_count), std::to_string(a.final_config.blowup_count));
  if (!a.report) {
    if (e.K2 || e.indices || e.gcd || e.chains || e.pi1) a.mismatches.push_back({"expected-report", "no report to compare against"});
    return;
  }
  const SingularSurfaceReport& r = *a.report;
  if (e.K2 && r.K2_X != Rational(*e.K2)) mismatch("K2", std::to_string(*e.K2), r.K2_X.to_string());
  if (e.indices) {
    std::vector<BigInt> want(e.indices->begin(), e.indices->end());
    std::vector<BigInt> got = r.pi1.indices;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) {
      auto join = [](const std::vector<BigInt>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + x.str();
        return s;
      };
      mismatch("indices", join(want), join(got));
    }
  }
  if (e.gcd && r.pi1.gcd != *e.gcd) mismatch("gcd", std::to_string(*e.gcd), r.pi1.gcd.str());
  if (e.chains && normalized(*e.chains) != normalized(r.chains))
    mismatch("chains", list_string(*e.chains), list_string(r.chains));
  if (e.pi1 && *e.pi1 != to_string(r.pi1.verdict)) mismatch("pi1", *e.pi1, std::string(to_string(r.pi1.verdict)));
}

}  // namespace

Analysis analyze(const Document& doc) {
  Analysis a;
  a.name = doc.name;
  a.violations = validate(doc.base);
  if (doc.base.fibration) {
    a.euler = euler_sum_check(*doc.base.fibration, doc.base.surface.chi);
    if (a.euler->deficit < 0)
      a.violations.push_back({"euler-excess", "declared fibers have Euler number " + std::to_string(a.euler->total) +
                                                  " > 12 chi = " + std::to_string(a.euler->expected)});
    if (a.euler->unlisted_fibers)
      a.advisories.push_back("singular fibers with total Euler number " + std::to_string(a.euler->deficit) +
                             " are not listed");
    if (doc.base.surface.kind == SurfaceKind::Enriques ||
        (doc.base.surface.kind == SurfaceKind::En && doc.base.surface.n == 1))
      for (auto& s : i9_forces_i1_lint(*doc.base.fibration)) a.advisories.push_back(std::move(s));
  }

  a.final_config = apply_blowups(doc.base, doc.blowups);
  if (a.violations.empty()) a.violations = validate(a.final_config);

  if (doc.certificates) a.hypotheses = check_hypotheses(doc, *doc.certificates);

  if (doc.plan) {
    Violations pv = validate_plan(a.final_config, *doc.plan);
    if (pv.empty()) a.report = analyze_plan(a.final_config, *doc.plan);
    for (auto& v : pv) a.violations.push_back(std::move(v));
  } else {
    a.violations.push_back({"plan-missing", "document has no contraction plan"});
  }
  if (doc.expected) compare_expected(*doc.expected, a);

  a.passed = a.violations.empty() && a.mismatches.empty() && a.report && a.report->ampleness.verdict;
  return a;
}

Analysis verify_example(std::string_view name) {
  Analysis a = analyze(builtin(name).document);
  if (a.name.empty()) a.name = std::string(name);
  return a;
}

VerifyTable verify_all(const std::optional<std::filesystem::path>& dir) {
  VerifyTable t;
  if (!dir) {
    for (const auto& name : example_names()) t.rows.push_back(verify_example(name));
  } else {
    if (!std::filesystem::is_directory(*dir)) throw Error(ErrorKind::Io, dir->string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Analysis a;
      try {
        a = analyze(load_document(f));
      } catch (const Error& e) {
        a = Analysis{};
        a.violations.push_back({std::string(to_string(e.kind())), e.what()});
      }
      if (a.name.empty()) a.name = f.stem().string();
      t.rows.push_back(std::move(a));
    }
  }
  for (const auto& r : t.rows) t.all_pass = t.all_pass && r.passed;
  return t;
}

}  // namespace qgs
