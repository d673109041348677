#pragma once

// The shipped example constructions and the verification pipeline.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/document.hpp"
#include "qgsmooth/fibration.hpp"
#include "qgsmooth/smoothing.hpp"

namespace qgs {

struct NamedExample {
  std::string name;
  Document document;
  ExpectedValues expected;
};

/// Names of the built-in examples in canonical order.
const std::vector<std::string>& example_names();

/// Raw JSON text of a built-in example. Throws Error(UnknownExample).
std::string_view builtin_source(std::string_view name);

NamedExample builtin(std::string_view name);

/// Vanishing hypotheses evaluated after the first `stage` blow-ups.
struct HypothesisReport {
  int stage = 0;
  IndependenceCertificate independence;
  Violations snc;
  std::vector<HypothesisCheck> checks;
};

struct Analysis {
  std::string name;
  Configuration final_config;
  Violations violations;       // configuration and plan problems
  Violations mismatches;       // disagreements with the expected block
  std::optional<EulerSumResult> euler;
  std::vector<std::string> advisories;
  std::optional<SingularSurfaceReport> report;
  std::optional<HypothesisReport> hypotheses;
  bool passed = false;
};

/// validate -> apply_blowups -> validate_plan -> report -> expectations.
/// Passes iff there are no violations, no mismatches, a plan is present and
/// the ampleness certificate holds. Hypothesis checks are informational.
/// Blow-up failures propagate as Error.
Analysis analyze(const Document& doc);

Analysis verify_example(std::string_view name);

struct VerifyTable {
  std::vector<Analysis> rows;
  bool all_pass = true;
};

/// Built-in corpus, or every *.json in `dir` (sorted by file name).
VerifyTable verify_all(const std::optional<std::filesystem::path>& dir = std::nullopt);

}  // namespace qgs
