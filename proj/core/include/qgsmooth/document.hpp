#pragma once

// JSON documents: a configuration plus blow-ups, a contraction plan, and
// optional expectations.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/blowup.hpp"
#include "qgsmooth/config.hpp"
#include "qgsmooth/smoothing.hpp"
#include "qgsmooth/wahl.hpp"

namespace qgs {

/// Hypothesis checks to run on the configuration after the first `stage`
/// blow-ups (e.g. stage 1 = after blowing up the node of F).
struct CertificateRequest {
  int stage = 0;
  std::vector<std::string> candidates;
  std::vector<std::string> divisor;
  std::optional<std::string> exceptional;
};

struct ExpectedValues {
  std::optional<long long> K2;
  std::optional<std::vector<long long>> indices;
  std::optional<long long> gcd;
  std::optional<int> blowup_count;
  std::optional<std::vector<Chain>> chains;  // multiset, orientation as listed
  std::optional<std::string> pi1;
};

struct Document {
  std::string name;
  std::vector<std::string> notes;
  Configuration base;
  std::vector<BlowupStep> blowups;
  std::optional<ContractionPlan> plan;
  std::optional<CertificateRequest> certificates;
  std::optional<ExpectedValues> expected;
};

/// Structural parse only: schema and name resolution. Throws Error(Schema)
/// or Error(Name).
Document parse_document(std::string_view json_text);

/// Reads and parses a file. Throws Error(Io) when it cannot be read.
Document load_document(const std::filesystem::path& path);

/// Pretty-printed JSON in the same schema; parse_document inverts it.
std::string serialize(const Document& doc);

/// parse_document followed by validate on the base configuration.
/// Throws Error(Validation) carrying the first violation.
Configuration parse(std::string_view json_text);

}  // namespace qgs
