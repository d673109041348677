#pragma once

// Hirzebruch-Jung chains and class-T singularities 1/(dn^2)(1, dna-1).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgsmooth/ratlin.hpp"

namespace qgs {

/// A linear chain [b1,...,bl] of rational curves with Ei^2 = -bi.
class Chain {
 public:
  Chain() = default;
  /// Throws Error(InvalidChain) unless the list is nonempty with every bi >= 2.
  explicit Chain(std::vector<int> entries);

  std::size_t length() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  Chain reversed() const;

  /// Comma separated, e.g. "4,2,3,2".
  std::string to_string() const;
  static Chain parse(std::string_view text);

  // Canonical order: shorter chains first, then lexicographic.
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<int> entries_;
};

struct ClassTData {
  BigInt d;
  BigInt n;
  BigInt a;
  BigInt m;  // d n^2
  BigInt q;  // d n a - 1

  const BigInt& index() const noexcept { return n; }
  friend bool operator==(const ClassTData&, const ClassTData&) = default;
};

/// b1 - 1/(b2 - 1/(... - 1/bl)) in lowest terms.
Rational hj_value(const Chain& c);

/// Inverse of hj_value. Throws Error(InvalidFraction) unless m > q >= 1, gcd(m,q) = 1.
Chain chain_from_fraction(const BigInt& m, const BigInt& q);

std::optional<ClassTData> recognize_class_T(const Chain& c);

/// Every class-T chain with length <= max_len and entries <= max_entry, in
/// canonical order. Built from the seeds [4] and [3,2,...,2,3] by the two
/// moves [b1,..,bl] -> [b1+1,..,bl,2] and [2,b1,..,bl+1].
std::vector<Chain> generate_class_T(std::size_t max_len, int max_entry);

/// Intersection matrix: diagonal -bi, 1 between neighbours.
RatMatrix gram_matrix(const Chain& c);

/// The a with M a = k, ki = bi - 2, i.e. K_Z = f^*K_X + sum ai Ei.
RatVector discrepancies(const Chain& c);

/// -a.k, the change in K^2 from contracting the chain.
Rational k2_contribution(const Chain& c);

/// n for a class-T chain. Throws Error(NotClassT) otherwise.
BigInt index(const Chain& c);

// Allocation-free 64-bit kernels used by the exhaustive suites.

struct Fraction64 {
  std::int64_t m;
  std::int64_t q;
};

struct ClassT64 {
  std::int64_t d;
  std::int64_t n;
  std::int64_t a;
};

/// nullopt when an intermediate value would overflow.
std::optional<Fraction64> hj_fraction64(std::span<const int> entries);

/// Writes the expansion of m/q into out and returns its length, or 0 when it
/// does not fit. Requires m > q >= 1 coprime and m < 2^62.
std::size_t expand_fraction64(std::int64_t m, std::int64_t q, std::span<int> out);

std::optional<ClassT64> recognize_class_T64(std::int64_t m, std::int64_t q);

}  // namespace qgs
