#include "qgsmooth/ratlin.hpp"

#include <charconv>
#include <ostream>
#include <utility>

#include "qgsmooth/error.hpp"

namespace qgs {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::Domain, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::Schema, "malformed rational '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw bad();
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::Domain, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorKind::Domain, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::Domain, "dimension mismatch in matrix-vector product");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) acc += (*this)(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Eliminates below pivot (row, col) in the working copy.
void eliminate_below(RatMatrix& a, std::size_t row, std::size_t col) {
  const Rational pivot = a(row, col);
  for (std::size_t r = row + 1; r < a.rows(); ++r) {
    if (a(r, col).is_zero()) continue;
    const Rational factor = a(r, col) / pivot;
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
  }
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    eliminate_below(a, r, c);
    ++r;
  }
  return r;
}

RatVector solve_unique(const RatMatrix& m, std::span<const Rational> v) {
  if (!m.is_square() || v.size() != m.rows())
    throw Error(ErrorKind::Domain, "solve_unique needs a square system");
  const std::size_t n = m.rows();
  RatMatrix a(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n) = v[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (p != c)
      for (std::size_t k = 0; k <= n; ++k) std::swap(a(p, k), a(c, k));
    eliminate_below(a, c, c);
  }
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = a(i, n);
    for (std::size_t c = i + 1; c < n; ++c)
      if (!a(i, c).is_zero()) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

RatVector leading_principal_minors(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Domain, "minors of a non-square matrix");
  // Without row exchanges the k-th pivot equals D_k / D_{k-1}; once a pivot
  // vanishes we fall back to a fresh elimination on the leading block.
  const std::size_t n = m.rows();
  RatVector minors;
  minors.reserve(n);
  RatMatrix a = m;
  Rational det = 1;
  bool degenerate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!degenerate && !a(k, k).is_zero()) {
      det *= a(k, k);
      minors.push_back(det);
      eliminate_below(a, k, k);
      continue;
    }
    degenerate = true;
    RatMatrix block(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c <= k; ++c) block(r, c) = m(r, c);
    if (rank(block) < k + 1) {
      minors.emplace_back(0);
      continue;
    }
    // Nonsingular block: det via elimination with swaps.
    Rational d = 1;
    for (std::size_t c = 0; c <= k; ++c) {
      std::size_t p = c;
      while (block(p, c).is_zero()) ++p;
      if (p != c) {
        for (std::size_t j = 0; j <= k; ++j) std::swap(block(p, j), block(c, j));
        d = -d;
      }
      d *= block(c, c);
      eliminate_below(block, c, c);
    }
    minors.push_back(d);
  }
  return minors;
}

bool is_negative_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "definiteness test needs a symmetric matrix");
  // Sylvester: the k-th elimination pivot D_k/D_{k-1} must be negative.
  RatMatrix a = m;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (a(k, k).sign() >= 0) return false;
    eliminate_below(a, k, k);
  }
  return true;
}

}  // namespace qgs
