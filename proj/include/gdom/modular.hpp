#pragma once

// Exact integer helpers and modulo-interval arithmetic shared by every other
// header in the library.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>
#include <algorithm>

namespace gdom {

using Vertex = std::uint64_t;

// Largest modulus accepted anywhere in the library. Keeps every product of two
// residues inside unsigned __int128.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Raised when an exact value would not fit WideInt, or when an instance is
// larger than an operation is willing to materialize.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Raised when a construction fails its own runtime verification. Seeing one of
// these means a proved statement did not hold for the inputs given.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Non-negative 128-bit integer with checked arithmetic.
class WideInt {
 public:
  using rep = unsigned __int128;

  constexpr WideInt() = default;
  constexpr WideInt(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by intent

  static constexpr WideInt from_raw(rep v) {
    WideInt w;
    w.v_ = v;
    return w;
  }

  constexpr rep raw() const { return v_; }

  bool fits_u64() const { return v_ <= std::numeric_limits<std::uint64_t>::max(); }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw RangeError("value exceeds 64 bits: " + to_string());
    return static_cast<std::uint64_t>(v_);
  }

  std::string to_string() const {
    if (v_ == 0) return "0";
    std::string s;
    for (rep x = v_; x != 0; x /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    return {s.rbegin(), s.rend()};
  }

  friend WideInt operator+(WideInt a, WideInt b) {
    rep r = a.v_ + b.v_;
    if (r < a.v_) throw RangeError("128-bit overflow in addition");
    return from_raw(r);
  }

  friend WideInt operator-(WideInt a, WideInt b) {
    if (b.v_ > a.v_) throw RangeError("negative result in WideInt subtraction");
    return from_raw(a.v_ - b.v_);
  }

  friend WideInt operator*(WideInt a, WideInt b) {
    if (a.v_ != 0 && b.v_ > ~rep{0} / a.v_) throw RangeError("128-bit overflow in multiplication");
    return from_raw(a.v_ * b.v_);
  }

  friend WideInt operator/(WideInt a, WideInt b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.v_ / b.v_);
  }

  friend WideInt operator%(WideInt a, WideInt b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.v_ % b.v_);
  }

  WideInt& operator+=(WideInt o) { return *this = *this + o; }
  WideInt& operator*=(WideInt o) { return *this = *this * o; }

  friend constexpr bool operator==(WideInt a, WideInt b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(WideInt a, WideInt b) {
    return a.v_ <=> b.v_;
  }

 private:
  rep v_ = 0;
};

inline WideInt ceil_div(WideInt a, WideInt b) {
  if (b == WideInt{0}) throw std::domain_error("division by zero");
  WideInt q = a / b;
  return (a % b == WideInt{0}) ? q : q + WideInt{1};
}

inline WideInt checked_pow(std::uint64_t base, std::uint64_t exp) {
  WideInt r{1};
  for (std::uint64_t i = 0; i < exp; ++i) r *= WideInt{base};
  return r;
}

// S(d, k) = 1 + d + ... + d^k.
inline WideInt geometric_sum(std::uint64_t d, std::uint64_t k) {
  if (d < 2) throw std::invalid_argument("geometric_sum requires d >= 2");
  WideInt sum{0};
  WideInt term{1};
  for (std::uint64_t j = 0;; ++j) {
    sum += term;
    if (j == k) break;
    term *= WideInt{d};
  }
  return sum;
}

// Least non-negative residue of a signed value.
inline std::uint64_t reduce(__int128 value, std::uint64_t n) {
  __int128 m = static_cast<__int128>(n);
  __int128 r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a % n) + (b % n)) % n);
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  a %= n;
  b %= n;
  return a >= b ? a - b : n - (b - a);
}

/// A run of consecutive residues modulo `modulus`, stored as (start, length).
///
/// Length 0 is the empty run and length == modulus is the whole vertex set;
/// both are normalized to start 0 so that equal sets compare equal.
class ModInterval {
 public:
  ModInterval(std::uint64_t start, std::uint64_t length, std::uint64_t modulus)
      : start_(0), length_(length), modulus_(modulus) {
    if (modulus == 0 || modulus > kMaxModulus) throw std::invalid_argument("ModInterval: bad modulus");
    if (length > modulus) throw std::invalid_argument("ModInterval: length exceeds modulus");
    if (start >= modulus) throw std::invalid_argument("ModInterval: start out of range");
    if (length != 0 && length != modulus) start_ = start;
  }

  static ModInterval full(std::uint64_t modulus) { return {0, modulus, modulus}; }
  static ModInterval empty(std::uint64_t modulus) { return {0, 0, modulus}; }

  std::uint64_t start() const { return start_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t modulus() const { return modulus_; }

  bool is_empty() const { return length_ == 0; }
  bool is_full() const { return length_ == modulus_; }

  // Last residue of a non-empty run.
  std::uint64_t last() const {
    if (is_empty()) throw std::logic_error("ModInterval::last on empty run");
    return add_mod(start_, length_ - 1, modulus_);
  }

  bool contains(std::uint64_t v) const {
    if (v >= modulus_) return false;
    return sub_mod(v, start_, modulus_) < length_;
  }

  std::vector<std::uint64_t> enumerate() const {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(length_));
    std::uint64_t v = start_;
    for (std::uint64_t i = 0; i < length_; ++i) {
      out.push_back(v);
      if (++v == modulus_) v = 0;
    }
    return out;
  }

  friend bool operator==(const ModInterval&, const ModInterval&) = default;

 private:
  std::uint64_t start_;
  std::uint64_t length_;
  std::uint64_t modulus_;
};

/// [i, j] (mod n): residues from i mod n through j mod n, wrapping past n - 1.
/// (i, i) is the singleton; (0, n - 1) is the whole set.
inline ModInterval mod_interval(std::int64_t i, std::int64_t j, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mod_interval: modulus must be positive");
  std::uint64_t a = reduce(i, n);
  std::uint64_t b = reduce(j, n);
  return {a, sub_mod(b, a, n) + 1, n};
}

// True iff A ∪ B is itself one run (empty and full runs count).
inline bool interval_union_is_consecutive(const ModInterval& a, const ModInterval& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("interval union: modulus mismatch");
  if (a.is_empty() || b.is_empty() || a.is_full() || b.is_full()) return true;
  const std::uint64_t n = a.modulus();
  auto starts_in_or_after = [n](const ModInterval& x, std::uint64_t s) {
    return sub_mod(s, x.start(), n) <= x.length();
  };
  return starts_in_or_after(a, b.start()) || starts_in_or_after(b, a.start());
}

// Number of residues covered by the union of `runs`. All runs must share a
// modulus.
inline std::uint64_t union_size(std::span<const ModInterval> runs) {
  if (runs.empty()) return 0;
  const std::uint64_t n = runs.front().modulus();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pieces;  // half-open [lo, hi)
  for (const auto& r : runs) {
    if (r.modulus() != n) throw std::invalid_argument("union_size: modulus mismatch");
    if (r.is_full()) return n;
    if (r.is_empty()) continue;
    std::uint64_t end = r.start() + r.length();
    if (end <= n) {
      pieces.emplace_back(r.start(), end);
    } else {
      pieces.emplace_back(r.start(), n);
      pieces.emplace_back(0, end - n);
    }
  }
  std::sort(pieces.begin(), pieces.end());
  std::uint64_t total = 0;
  std::uint64_t reach = 0;
  for (auto [lo, hi] : pieces) {
    lo = std::max(lo, reach);
    if (hi > lo) {
      total += hi - lo;
      reach = hi;
    }
  }
  return total;
}

// Extended Euclid on signed 128-bit values: returns g and sets x with a*x ≡ g (mod b).
inline __int128 ext_gcd(__int128 a, __int128 b, __int128& x, __int128& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  __int128 x1 = 0;
  __int128 y1 = 0;
  __int128 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// All x in [0, n) with a*x ≡ b (mod n), ascending. Empty when gcd(a mod n, n)
/// does not divide b.
inline std::vector<std::uint64_t> solve_linear_congruence(std::int64_t a, std::int64_t b, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("solve_linear_congruence: modulus must be positive");
  const std::uint64_t ar = reduce(a, n);
  const std::uint64_t br = reduce(b, n);
  const std::uint64_t g = std::gcd(ar, n);  // gcd(0, n) = n
  if (br % g != 0) return {};
  const std::uint64_t step = n / g;
  std::uint64_t x0 = 0;
  if (step > 1) {
    __int128 inv = 0;
    __int128 unused = 0;
    ext_gcd(static_cast<__int128>((ar / g) % step), static_cast<__int128>(step), inv, unused);
    x0 = mul_mod(br / g, reduce(inv, step), step);
  }
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(g));
  for (std::uint64_t t = 0; t < g; ++t) out.push_back(x0 + t * step);
  return out;
}

}  // namespace gdom
