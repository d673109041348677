#pragma once

// Point blow-ups with proper-transform bookkeeping.

#include <optional>
#include <string>
#include <vector>

#include "qgsmooth/config.hpp"

namespace qgs {

struct BlowupStep {
  std::optional<std::string> label;  // default "e<k>", k = blow-up count after the step
  std::vector<Branch> branches;      // may name earlier exceptional curves
  std::optional<std::string> at;     // declared point to consume; must carry these branches
};

/// Blows up one point. For each branch (C,m): C^2 -= m^2, K.C += m,
/// p_a(C) -= m(m-1)/2, C.e = m; for each pair of branches C.D -= m m'.
/// The new curve e has e^2 = -1, K.e = -1, genus 0 and tag "exceptional".
/// The point named by `at`, or else the first declared point with exactly
/// these branches, is consumed, and the
/// m transverse points of C on e are declared as "<e>.<C>" (".<k>" appended
/// when m > 1).
/// Throws Error(UnknownCurve), Error(ExcessMultiplicity), Error(NegativeGenus),
/// Error(Name) for a label that is already taken or an unknown `at` point,
/// Error(Validation) when the `at` point has other branches.
Configuration blow_up(const Configuration& c, const BlowupStep& step);

/// Sequential blow_up; errors are rethrown with the 1-based step number.
Configuration apply_blowups(const Configuration& c, const std::vector<BlowupStep>& steps);

}  // namespace qgs
