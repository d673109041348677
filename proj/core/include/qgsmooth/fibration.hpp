#pragma once

// Elliptic fibration bookkeeping: Kodaira fibers, Euler numbers, 2-sections.

#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/error.hpp"

namespace qgs {

struct Configuration;

enum class KodairaFamily { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::In;
  int n = 0;  // only meaningful for In and InStar

  /// "I9", "I0*", "IV*", ...; a leading "2" (as in "2I1") is a multiplicity
  /// prefix and is handled by parse_fiber_tag, not here.
  static KodairaType parse(std::string_view tag);
  std::string to_string() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

struct FiberSpec {
  KodairaType type;
  int multiplicity = 1;
  std::vector<std::string> components;  // empty when the fiber is not drawn

  /// Tag with multiplicity prefix, e.g. "2I1".
  std::string tag() const;
};

/// Splits "2I1" into multiplicity 2 and type I1. Throws Error(UnknownTag).
FiberSpec parse_fiber_tag(std::string_view tag);

struct FibrationData {
  std::vector<FiberSpec> fibers;
  std::vector<std::string> two_sections;
  std::vector<std::string> multiple_fiber_disjoint_from;
  bool generic_fiber_class_known = false;
};

int euler_number(const KodairaType& type);
/// Accepts the string form; throws Error(UnknownTag).
int euler_number(std::string_view tag);

struct EulerSumResult {
  bool verdict = false;
  int total = 0;
  int expected = 0;
  int deficit = 0;          // expected - total
  bool unlisted_fibers = false;  // deficit > 0: some singular fibers not declared
};

EulerSumResult euler_sum_check(const FibrationData& f, int chi);

/// Each 2-section meets every fully listed non-multiple fiber with total
/// multiplicity 2 and every multiple fiber's reduced components once.
Violations two_section_incidence_check(const Configuration& c);

/// Non-empty advisory text when an I9 fiber is declared with fewer than
/// three I1 or 2I1 fibers.
std::vector<std::string> i9_forces_i1_lint(const FibrationData& f);

/// Structural invariants: disjoint component lists, multiple fibers of type
/// In, at most two multiple fibers. Names are not resolved here.
Violations validate_fibration(const FibrationData& f);

}  // namespace qgs
