#pragma once

// Exact rational arithmetic and dense linear algebra over Q.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgs {

using BigInt = boost::multiprecision::cpp_int;

/// A rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  /// Accepts "p" or "p/q" with optional leading '-'.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVector = std::vector<Rational>;

/// Row-major dense matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatMatrix transpose() const;
  bool is_symmetric() const;
  RatVector row(std::size_t r) const;

  /// Matrix-vector product M * v.
  RatVector apply(std::span<const Rational> v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const RatMatrix& m);

/// The unique x with M x = v. Throws Error(SingularMatrix) when det M = 0.
RatVector solve_unique(const RatMatrix& m, std::span<const Rational> v);

/// Leading principal minors D_1..D_n of a square matrix.
RatVector leading_principal_minors(const RatMatrix& m);

/// Sylvester's criterion: (-1)^k D_k > 0 for every k.
/// Throws Error(NotSymmetric) for non-symmetric input.
bool is_negative_definite(const RatMatrix& m);

}  // namespace qgs
