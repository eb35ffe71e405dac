#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tracesign {

/// A map {1..2k} -> {+1, -1}, stored as a 2k-bit mask: bit j set means
/// sigma(j+1) = -1. The mask layout is part of the serialized format.
class SignSequence {
 public:
  SignSequence() = default;
  SignSequence(int k, std::uint32_t negative_mask);

  /// All-plus sequence of length 2k.
  static SignSequence all_plus(int k) { return SignSequence(k, 0); }

  /// Parses a string of '+' and '-' (U+2212 is accepted as '-'). The length
  /// must be even; k is half of it.
  static SignSequence parse(std::string_view text);

  int k() const { return k_; }
  int length() const { return 2 * k_; }
  std::uint32_t mask() const { return mask_; }

  /// sigma(slot + 1), as +1 or -1; slot is zero-based.
  int at(int slot) const { return (mask_ >> slot) & 1u ? -1 : 1; }
  int negatives() const { return __builtin_popcount(mask_); }

  std::string to_string() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  int k_ = 0;
  std::uint32_t mask_ = 0;
};

}  // namespace tracesign
