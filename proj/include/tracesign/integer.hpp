#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tracesign {

/// Raised whenever an exact integer operation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact signed integer backed by __int128. Every arithmetic operator is
/// checked; nothing ever wraps silently.
class Int {
 public:
  using raw_type = __int128;

  constexpr Int() = default;
  constexpr Int(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent

  static constexpr Int from_raw(raw_type v) {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr raw_type raw() const { return v_; }

  constexpr int sign() const { return (v_ > 0) - (v_ < 0); }
  constexpr bool is_zero() const { return v_ == 0; }

  /// Narrowing conversion; throws OverflowError if the value does not fit.
  std::int64_t to_int64() const;

  friend Int operator+(Int a, Int b) {
    raw_type r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: addition overflow");
    return from_raw(r);
  }
  friend Int operator-(Int a, Int b) {
    raw_type r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: subtraction overflow");
    return from_raw(r);
  }
  friend Int operator*(Int a, Int b) {
    raw_type r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: multiplication overflow");
    return from_raw(r);
  }
  Int operator-() const { return Int{} - *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int a, Int b) = default;
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

 private:
  raw_type v_ = 0;
};

inline Int abs(Int v) { return v.sign() < 0 ? -v : v; }

/// Decimal rendering, e.g. "-170141183460469231731687303715884105728".
std::string to_string(Int v);

/// Parses an optionally signed decimal string. Throws std::invalid_argument on
/// malformed input and OverflowError when out of range.
Int parse_int(std::string_view text);

}  // namespace tracesign
