#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bicrit {

class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Signed 128-bit integer with checked arithmetic. Every operation that would
// leave the representable range throws OverflowError instead of wrapping.
class Int {
public:
  using rep = __int128;

  constexpr Int() = default;
  template <std::integral T>
  constexpr Int(T v) : v_(static_cast<rep>(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Int from_raw(rep v) {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr rep raw() const { return v_; }

  static Int max();
  static Int min();

  friend Int operator+(Int a, Int b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: addition overflow");
    return from_raw(r);
  }
  friend Int operator-(Int a, Int b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: subtraction overflow");
    return from_raw(r);
  }
  friend Int operator*(Int a, Int b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: multiplication overflow");
    return from_raw(r);
  }
  // Truncating division, as for built-in integers.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: division by zero");
    if (b.v_ == -1) return -a;
    return from_raw(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: division by zero");
    if (b.v_ == -1) return Int{};
    return from_raw(a.v_ % b.v_);
  }
  Int operator-() const { return Int{} - *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator/=(Int o) { return *this = *this / o; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
    return a.v_ < b.v_ ? std::strong_ordering::less
         : a.v_ > b.v_ ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  bool fits_int64() const;
  // Throws OverflowError when the value does not fit.
  std::int64_t to_int64() const;

  std::string to_string() const;
  // Accepts an optional leading '-' followed by decimal digits only.
  static Int parse(std::string_view text);

private:
  rep v_ = 0;
};

Int pow(Int base, unsigned exponent);
Int abs(Int v);

inline std::ostream& operator<<(std::ostream& os, Int v) { return os << v.to_string(); }

}  // namespace bicrit

template <>
struct std::hash<bicrit::Int> {
  std::size_t operator()(bicrit::Int v) const noexcept {
    auto u = static_cast<unsigned __int128>(v.raw());
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^
                                      static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
  }
};
