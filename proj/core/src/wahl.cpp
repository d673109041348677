#include "qgsmooth/wahl.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "qgsmooth/error.hpp"

namespace qgs {

Chain::Chain(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidChain, "empty chain");
  for (int b : entries_)
    if (b < 2)
      throw Error(ErrorKind::InvalidChain, "chain entry " + std::to_string(b) + " is below 2");
}

Chain Chain::reversed() const {
  Chain r = *this;
  std::reverse(r.entries_.begin(), r.entries_.end());
  return r;
}

std::string Chain::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Chain Chain::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error(ErrorKind::InvalidChain, "malformed chain '" + std::string(text) + "'");
    entries.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Chain(std::move(entries));
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

// ---------------------------------------------------------------------------

Rational hj_value(const Chain& c) {
  if (auto f = hj_fraction64(c.entries())) return Rational(BigInt(f->m), BigInt(f->q));
  // Right to left: p/r is the tail value, each step maps it to (b p - r)/p.
  BigInt p = c.entries().back();
  BigInt r = 1;
  for (std::size_t i = c.length() - 1; i-- > 0;) {
    BigInt next = BigInt(c[i]) * p - r;
    r = std::move(p);
    p = std::move(next);
  }
  return Rational(p, r);
}

Chain chain_from_fraction(const BigInt& m, const BigInt& q) {
  if (!(m > q && q >= 1) || boost::multiprecision::gcd(m, q) != 1)
    throw Error(ErrorKind::InvalidFraction,
                "need m > q >= 1 coprime, got " + m.str() + "/" + q.str());
  if (m < (BigInt(1) << 62)) {
    std::vector<int> out(static_cast<std::size_t>(std::min<BigInt>(m, BigInt(256)).convert_to<long long>()));
    if (std::size_t len = expand_fraction64(m.convert_to<std::int64_t>(), q.convert_to<std::int64_t>(), out)) {
      out.resize(len);
      return Chain(std::move(out));
    }
  }
  std::vector<int> entries;
  BigInt num = m;
  BigInt den = q;
  while (!den.is_zero()) {
    BigInt b = (num + den - 1) / den;  // ceiling
    entries.push_back(b.convert_to<int>());
    BigInt rest = b * den - num;
    num = std::move(den);
    den = std::move(rest);
  }
  return Chain(std::move(entries));
}

std::optional<ClassTData> recognize_class_T(const Chain& c) {
  if (auto f = hj_fraction64(c.entries())) {
    auto t = recognize_class_T64(f->m, f->q);
    if (!t) return std::nullopt;
    return ClassTData{t->d, t->n, t->a, f->m, f->q};
  }
  const Rational v = hj_value(c);
  const BigInt& m = v.num();
  const BigInt& q = v.den();
  // m = d n^2 and q + 1 = d n a with gcd(n,a) = 1 force gcd(m, q+1) = d n.
  const BigInt g = boost::multiprecision::gcd(m, q + 1);
  const BigInt n = m / g;
  if (n < 2 || g % n != 0) return std::nullopt;
  const BigInt d = g / n;
  const BigInt a = (q + 1) / g;
  if (d * n * n != m || a < 1 || a >= n || boost::multiprecision::gcd(n, a) != 1) return std::nullopt;
  return ClassTData{d, n, a, m, q};
}

std::vector<Chain> generate_class_T(std::size_t max_len, int max_entry) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  auto admit = [&](std::vector<int> v) {
    if (v.size() > max_len) return;
    if (*std::max_element(v.begin(), v.end()) > max_entry) return;
    if (seen.insert(v).second) frontier.push_back(std::move(v));
  };
  admit({4});
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<int> seed(len, 2);
    seed.front() = seed.back() = 3;
    admit(std::move(seed));
  }
  // Both moves raise an entry and the length, so every ancestor of an
  // in-bounds chain is itself in bounds and pruning is safe.
  while (!frontier.empty()) {
    std::vector<int> v = std::move(frontier.back());
    frontier.pop_back();
    std::vector<int> left = v;
    left.front() += 1;
    left.push_back(2);
    std::vector<int> right;
    right.reserve(v.size() + 1);
    right.push_back(2);
    right.insert(right.end(), v.begin(), v.end());
    right.back() += 1;
    admit(std::move(left));
    admit(std::move(right));
  }
  std::vector<Chain> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

RatMatrix gram_matrix(const Chain& c) {
  const std::size_t n = c.length();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -c[i];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

RatVector discrepancies(const Chain& c) {
  RatVector k;
  k.reserve(c.length());
  for (int b : c.entries()) k.emplace_back(b - 2);
  return solve_unique(gram_matrix(c), k);
}

Rational k2_contribution(const Chain& c) {
  const RatVector a = discrepancies(c);
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum -= a[i] * Rational(c[i] - 2);
  return sum;
}

BigInt index(const Chain& c) {
  auto t = recognize_class_T(c);
  if (!t) throw Error(ErrorKind::NotClassT, "chain [" + c.to_string() + "] is not of class T");
  return t->n;
}

// ---------------------------------------------------------------------------

std::optional<Fraction64> hj_fraction64(std::span<const int> entries) {
  if (entries.empty()) return std::nullopt;
  std::int64_t p = entries.back();
  std::int64_t r = 1;
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    std::int64_t next;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(entries[i]), p, &next)) return std::nullopt;
    next -= r;
    r = p;
    p = next;
  }
  return Fraction64{p, r};
}

std::size_t expand_fraction64(std::int64_t m, std::int64_t q, std::span<int> out) {
  std::size_t len = 0;
  if (m >= 1 && m <= std::numeric_limits<std::int32_t>::max() && q >= 0) {
    // every later pair is smaller, and 32-bit division is much cheaper
    auto m32 = static_cast<std::uint32_t>(m), q32 = static_cast<std::uint32_t>(q);
    while (q32 != 0) {
      if (len == out.size()) return 0;
      const std::uint32_t b = (m32 - 1) / q32 + 1;
      out[len++] = static_cast<int>(b);
      const std::uint32_t rest = b * q32 - m32;
      m32 = q32;
      q32 = rest;
    }
    return len;
  }
  while (q != 0) {
    if (len == out.size()) return 0;
    const std::int64_t b = (m + q - 1) / q;
    out[len++] = static_cast<int>(b);
    const std::int64_t rest = b * q - m;
    m = q;
    q = rest;
  }
  return len;
}

std::optional<ClassT64> recognize_class_T64(std::int64_t m, std::int64_t q) {
  // Necessary: d n^2 divides (d n a)^2. Rejects almost everything cheaply.
  if (m < 4 || q < 1 || q >= m) return std::nullopt;
  if (q < (std::int64_t{1} << 31)) {
    const auto s = static_cast<std::uint64_t>(q + 1);
    if ((s * s) % static_cast<std::uint64_t>(m) != 0) return std::nullopt;
  } else {
    __extension__ typedef unsigned __int128 u128;
    const auto s = static_cast<u128>(q + 1);
    if ((s * s) % static_cast<u128>(m) != 0) return std::nullopt;
  }
  const std::int64_t g = std::gcd(m, q + 1);
  const std::int64_t n = m / g;
  if (n < 2 || g % n != 0) return std::nullopt;
  const std::int64_t d = g / n;
  const std::int64_t a = (q + 1) / g;
  if (d * n * n != m || a < 1 || a >= n || std::gcd(n, a) != 1) return std::nullopt;
  return ClassT64{d, n, a};
}

}  // namespace qgs
