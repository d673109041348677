#pragma once

// Curve configurations on a surface: curves, intersection pairing, points.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/error.hpp"
#include "qgsmooth/fibration.hpp"
#include "qgsmooth/ratlin.hpp"

namespace qgs {

enum class SurfaceKind { Enriques, K3, En, Other };

std::string_view to_string(SurfaceKind kind);

struct SurfaceInvariants {
  SurfaceKind kind = SurfaceKind::Other;
  int n = 0;  // for E(n)
  int chi = 0;
  int K2 = 0;
  bool K_num_trivial = false;

  static SurfaceInvariants enriques() { return {SurfaceKind::Enriques, 0, 1, 0, true}; }
  static SurfaceInvariants k3() { return {SurfaceKind::K3, 0, 2, 0, true}; }
  static SurfaceInvariants elliptic(int n) { return {SurfaceKind::En, n, n, 0, false}; }
};

struct CurveClass {
  std::string name;
  long long self_int = 0;
  long long K_deg = 0;
  long long genus = 0;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
  bool satisfies_adjunction() const { return 2 * genus - 2 == self_int + K_deg; }
};

struct Branch {
  std::string curve;
  int multiplicity = 1;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct PointSpec {
  std::string name;
  std::vector<Branch> branches;
};

struct Configuration {
  SurfaceInvariants surface;
  std::vector<CurveClass> curves;
  RatMatrix pairing;  // integral, symmetric, indexed like curves
  std::vector<PointSpec> points;
  std::optional<FibrationData> fibration;
  int blowup_count = 0;

  long long ambient_K2() const { return surface.K2 - blowup_count; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error(UnknownCurve).
  std::size_t index_of(std::string_view name) const;
  const CurveClass& curve(std::string_view name) const { return curves[index_of(name)]; }

  long long pair(std::size_t i, std::size_t j) const;
  long long pair(std::string_view a, std::string_view b) const { return pair(index_of(a), index_of(b)); }

  /// Appends a curve, growing the pairing; the diagonal is set from self_int.
  void add_curve(CurveClass curve);
  void set_pair(std::size_t i, std::size_t j, long long value);
};

/// Every problem found, as data: adjunction, pairing shape, point
/// over-counting, Enriques (-2)-curve rule, K-triviality, fibration shape.
Violations validate(const Configuration& c);

struct IndependenceCertificate {
  std::vector<std::string> candidates;
  RatMatrix test_matrix;  // candidates x all curves
  std::size_t rank = 0;
  bool verdict = false;
};

/// Numerical independence of the candidates, certified by pairing them
/// against every curve of the configuration. Throws Error(UnknownCurve).
IndependenceCertificate independence_certificate(const Configuration& c,
                                                 const std::vector<std::string>& candidates);

/// Simple normal crossing check for the union of the named curves.
/// Throws Error(MissingPointData) when two divisor curves meet but no point
/// records where.
Violations snc_certificate(const Configuration& c, const std::vector<std::string>& divisor);

/// Dual graph in DOT: vertex "name (self)", one edge per intersection unit.
std::string export_dot(const Configuration& c);

}  // namespace qgs
