#include "tracesign/integer.hpp"

#include <algorithm>
#include <limits>

namespace tracesign {

std::int64_t Int::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("Int: value does not fit in 64 bits");
  return static_cast<std::int64_t>(v_);
}

std::string to_string(Int v) {
  using raw = Int::raw_type;
  raw x = v.raw();
  if (x == 0) return "0";
  const bool neg = x < 0;
  std::string out;
  // Work with non-positive values so INT128_MIN renders correctly.
  if (!neg) x = -x;
  while (x != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("integer literal has no digits");
  Int acc;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("invalid character in integer literal: " + std::string(text));
    // Accumulate negatively so the most negative value parses.
    acc = acc * 10 - (ch - '0');
  }
  return neg ? acc : -acc;
}

}  // namespace tracesign
