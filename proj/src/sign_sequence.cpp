#include "tracesign/sign_sequence.hpp"

#include <stdexcept>

namespace tracesign {

SignSequence::SignSequence(int k, std::uint32_t negative_mask) : k_(k), mask_(negative_mask) {
  if (k < 0 || k > 16) throw std::invalid_argument("SignSequence: k out of range");
  if (k < 16 && (negative_mask >> (2 * k)) != 0)
    throw std::invalid_argument("SignSequence: mask has bits beyond 2k");
}

SignSequence SignSequence::parse(std::string_view text) {
  std::uint32_t mask = 0;
  int n = 0;
  for (std::size_t i = 0; i < text.size();) {
    int s = 0;
    if (text[i] == '+') {
      s = 1;
      i += 1;
    } else if (text[i] == '-') {
      s = -1;
      i += 1;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      s = -1;
      i += 3;
    } else {
      throw std::invalid_argument("sign string may only contain '+' and '-': \"" + std::string(text) + "\"");
    }
    if (n >= 32) throw std::invalid_argument("sign string too long");
    if (s < 0) mask |= std::uint32_t{1} << n;
    ++n;
  }
  if (n % 2 != 0) throw std::invalid_argument("sign string length must be even (2k), got " + std::to_string(n));
  return SignSequence(n / 2, mask);
}

std::string SignSequence::to_string() const {
  std::string out;
  for (int slot = 0; slot < length(); ++slot) out += at(slot) < 0 ? '-' : '+';
  return out;
}

}  // namespace tracesign
