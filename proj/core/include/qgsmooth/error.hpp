#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgs {

enum class ErrorKind {
  Schema,
  Name,
  Validation,
  Io,
  UnknownCurve,
  MissingPointData,
  ExcessMultiplicity,
  NegativeGenus,
  UnknownTag,
  InvalidChain,
  InvalidFraction,
  NotClassT,
  PlanInvalid,
  CurveContracted,
  Domain,
  UnknownExample,
  SingularMatrix,
  NotSymmetric,
};

std::string_view to_string(ErrorKind kind);

// True for errors caused by malformed or unreadable input rather than by a
// failed check; the CLI maps these to exit status 2.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A failed check reported as data. `code` is a short stable tag
// (e.g. "adjunction", "triple-point"); `detail` is human readable.
struct Violation {
  std::string code;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

}  // namespace qgs
