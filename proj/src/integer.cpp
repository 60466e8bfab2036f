#include "bicrit/integer.hpp"

#include <algorithm>
#include <limits>

namespace bicrit {

namespace {
constexpr Int::rep kMax = static_cast<Int::rep>(~static_cast<unsigned __int128>(0) >> 1);
constexpr Int::rep kMin = -kMax - 1;
}  // namespace

Int Int::max() { return from_raw(kMax); }
Int Int::min() { return from_raw(kMin); }

bool Int::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Int::to_int64() const {
  if (!fits_int64()) throw OverflowError("Int: value " + to_string() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v_);
}

std::string Int::to_string() const {
  if (v_ == 0) return "0";
  // Work on the unsigned magnitude so that Int::min() prints correctly.
  bool negative = v_ < 0;
  auto mag = negative ? static_cast<unsigned __int128>(-(v_ + 1)) + 1
                      : static_cast<unsigned __int128>(v_);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int Int::parse(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw ParseError("Int: empty integer literal '" + std::string(text) + "'");
  Int value;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError("Int: not a decimal integer: '" + std::string(text) + "'");
    // Accumulate negatively so the most negative value parses without overflow.
    value = value * 10 - Int(c - '0');
  }
  return negative ? value : -value;
}

Int pow(Int base, unsigned exponent) {
  Int result = 1;
  for (unsigned e = 0; e < exponent; ++e) result *= base;
  return result;
}

Int abs(Int v) { return v < 0 ? -v : v; }

}  // namespace bicrit
