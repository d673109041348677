#pragma once

// Contracting class-T chains and the invariants of X and its smoothing X_t.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/config.hpp"
#include "qgsmooth/wahl.hpp"

namespace qgs {

/// Assumption string that asks for the double-cover topology in reports.
inline constexpr std::string_view kPi1IsZ2 = "pi1=Z/2";

struct ContractionPlan {
  std::vector<std::vector<std::string>> chains;  // each contracts to one point
  long long q = 0;                               // declared irregularity of X_t
  std::vector<std::string> assumptions;

  bool claims_pi1_Z2() const;
};

/// Entries -C^2 of the named curves. Throws Error(InvalidChain).
Chain chain_of(const Configuration& c, const std::vector<std::string>& names);

/// Empty iff chains are disjoint linear chains of smooth rational curves
/// with C^2 <= -2, each of class T.
Violations validate_plan(const Configuration& c, const ContractionPlan& p);

struct ContractionInvariants {
  Rational K2_X;
  long long chi = 0;
  long long p_g = 0;
};

/// Throws Error(PlanInvalid) when validate_plan reports anything.
ContractionInvariants contract_invariants(const Configuration& c, const ContractionPlan& p);

/// (sum D_p).C for a curve outside the chains: sum over chains of
/// -sum_i a_i (E_i.C). Throws Error(CurveContracted).
Rational chain_contact(const Configuration& c, const ContractionPlan& p, std::string_view curve);

/// (f^*K_X).C = K.C + chain_contact. Throws Error(CurveContracted).
Rational pullback_degree(const Configuration& c, const ContractionPlan& p, std::string_view curve);

struct AmpleEntry {
  std::string curve;
  Rational degree;   // (f^*K_X).C
  Rational contact;  // (sum D_p).C
  bool positive = false;
};

/// Covers only the curves of the model, hence partial.
struct AmplenessCertificate {
  std::vector<AmpleEntry> entries;
  bool verdict = false;
};

AmplenessCertificate ampleness_certificate(const Configuration& c, const ContractionPlan& p);

enum class Pi1Verdict { CriterionSatisfied, Inconclusive };
std::string_view to_string(Pi1Verdict v);

struct Pi1Report {
  std::vector<BigInt> indices;  // plan order
  BigInt gcd;
  Pi1Verdict verdict = Pi1Verdict::Inconclusive;
  std::vector<std::string> notes;
};

/// Coprime indices on an Enriques ambient give the index criterion. When it
/// does not apply, curves meeting exactly one end curve of the chains once
/// are listed as notes; they are never turned into a verdict.
Pi1Report pi1_criterion(const Configuration& c, const ContractionPlan& p);

long long moduli_dimension(long long chi, long long K2);

struct CoverTopology {
  long long chi = 0;
  long long c1_squared = 0;
  long long c2 = 0;
  long long b2_plus = 0;
  long long b2_minus = 0;
  long long sigma = 0;  // b2+ - b2-
  bool sigma_divisible_by_16 = false;
  std::string target;
};

struct TopologyReport {
  long long c2 = 0;
  long long b2_plus = 0;
  long long b2_minus = 0;
  std::optional<CoverTopology> cover;
};

/// p_g = q = 0 only. Throws Error(Domain) when chi != 1.
TopologyReport topology_report(long long K2, long long chi, bool pi1_is_Z2);

/// Orders the named curves into linear chains using the pairing: connected
/// components of their dual graph, each walked from an end. Components are
/// sorted by their first curve's declaration order. Throws
/// Error(InvalidChain) when a component is not a path.
std::vector<std::vector<std::string>> extract_chains(const Configuration& c,
                                                     const std::vector<std::string>& curves);

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct SingularSurfaceReport {
  std::vector<std::vector<std::string>> chain_curves;
  std::vector<Chain> chains;
  std::vector<ClassTData> class_t;
  std::vector<Rational> contributions;
  long long ambient_K2 = 0;
  Rational K2_X;
  long long chi = 0;
  long long p_g = 0;
  long long q = 0;
  Pi1Report pi1;
  AmplenessCertificate ampleness;
  std::optional<long long> moduli_dim;  // when K2_X is integral
  bool general_type = false;
  std::optional<TopologyReport> topology;
  std::vector<std::string> assumptions;
};

/// Full report for a plan on its final configuration. Throws Error(PlanInvalid).
SingularSurfaceReport analyze_plan(const Configuration& c, const ContractionPlan& p);

}  // namespace qgs
