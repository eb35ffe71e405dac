#pragma once

// Exact multilinear polynomials over x_1, y_1, ..., x_k, y_k.
//
// Variable slots are zero-based: slot 2(j-1) is x_j, slot 2j-1 is y_j. A
// monomial is the set of slots it contains, stored as a bit mask, so every
// exponent is 0 or 1 by construction. Terms are kept sorted by mask with no
// zero coefficients.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracesign/integer.hpp"
#include "tracesign/sign_sequence.hpp"

namespace tracesign {

/// Largest number of variable pairs a monomial mask can address.
inline constexpr int kMaxPairs = 16;

struct VarIndex {
  int slot = 0;

  static constexpr VarIndex x(int j) { return {2 * (j - 1)}; }
  static constexpr VarIndex y(int j) { return {2 * j - 1}; }

  constexpr bool is_x() const { return slot % 2 == 0; }
  constexpr int pair() const { return slot / 2 + 1; }
  std::string name() const { return (is_x() ? "x" : "y") + std::to_string(pair()); }
};

struct Monomial {
  std::uint32_t mask = 0;

  static constexpr Monomial one() { return {}; }
  static constexpr Monomial of(VarIndex v) { return {std::uint32_t{1} << v.slot}; }

  constexpr bool contains(VarIndex v) const { return (mask >> v.slot) & 1u; }
  constexpr int degree() const { return __builtin_popcount(mask); }
  constexpr Monomial operator*(Monomial o) const { return {mask | o.mask}; }

  /// "1" for the empty monomial, otherwise "x1*y1*x2".
  std::string to_string() const;

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr auto operator<=>(Monomial, Monomial) = default;
};

struct Term {
  Monomial mono;
  Int coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Thrown when operands disagree on k, a sign sequence or point has the
/// wrong length, or mul_disjoint receives overlapping supports.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultilinearPoly {
 public:
  /// Zero polynomial in zero variables.
  MultilinearPoly() = default;
  /// Zero polynomial in 2k variables.
  explicit MultilinearPoly(int k);

  static MultilinearPoly constant(int k, Int c);
  static MultilinearPoly variable(int k, VarIndex v, Int c = 1);
  static MultilinearPoly monomial(int k, Monomial m, Int c = 1);

  /// Canonicalizes arbitrary input: sorts by mask, merges duplicates, drops
  /// zeros. Rejects masks that use slots >= 2k.
  static MultilinearPoly from_terms(int k, std::vector<Term> terms);

  int k() const { return k_; }
  int num_vars() const { return 2 * k_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Bitwise OR of every stored monomial.
  std::uint32_t support() const;

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  struct Canonical {};
  MultilinearPoly(int k, std::vector<Term> terms, Canonical) : k_(k), terms_(std::move(terms)) {}

  friend MultilinearPoly add(const MultilinearPoly&, const MultilinearPoly&);
  friend MultilinearPoly mul_disjoint(const MultilinearPoly&, const MultilinearPoly&);
  friend MultilinearPoly scale(const MultilinearPoly&, Int);
  friend MultilinearPoly substitute_slot(const MultilinearPoly&, int, int);

  int k_ = 0;
  std::vector<Term> terms_;
};

MultilinearPoly add(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly mul_disjoint(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly scale(const MultilinearPoly& p, Int c);

inline MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q) { return add(p, q); }
inline MultilinearPoly operator-(const MultilinearPoly& p) { return scale(p, -1); }
inline MultilinearPoly operator-(const MultilinearPoly& p, const MultilinearPoly& q) {
  return add(p, scale(q, -1));
}

/// Replaces the variable in `slot` by sign*(1 + variable), fully expanded.
MultilinearPoly substitute_slot(const MultilinearPoly& p, int slot, int sign);

/// p^sigma: every variable v replaced by sigma(v)*(1 + v). Runs 2k
/// single-slot substitutions in slot order. This is the serial reference
/// path; the sweep kernels in sweep.hpp must agree with it.
MultilinearPoly substitute_signs(const MultilinearPoly& p, const SignSequence& sigma);

Int evaluate(const MultilinearPoly& p, std::span<const Int> point);

/// Embeds p into a ring with more variable pairs (new_k >= p.k()).
MultilinearPoly lift(const MultilinearPoly& p, int new_k);

/// Relabels pairs cyclically: pair j becomes pair ((j - 1 + shift) mod k) + 1.
MultilinearPoly rotate_pairs(const MultilinearPoly& p, int shift);

std::optional<int> degree(const MultilinearPoly& p);
Int coefficient(const MultilinearPoly& p, Monomial m);

enum class SignTag { AllNonneg, AllNonpos, Mixed, Zero };

const char* to_string(SignTag tag);

struct SignPattern {
  SignTag tag = SignTag::Zero;
  /// Present iff tag == Mixed: the lowest-mask monomial with a positive
  /// coefficient and the lowest-mask monomial with a negative one.
  std::optional<Monomial> positive_witness;
  std::optional<Monomial> negative_witness;

  bool is_mixed() const { return tag == SignTag::Mixed; }
  /// +1, -1, or 0 (Zero and Mixed have no single sign).
  int sign() const { return tag == SignTag::AllNonneg ? 1 : tag == SignTag::AllNonpos ? -1 : 0; }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

SignPattern sign_pattern(const MultilinearPoly& p);

// Serialization (poly_io.cpp).

/// Canonical text: ascending mask, explicit signs, constant term bare,
/// e.g. "2 - 4*x1*y1". The zero polynomial prints as "0".
std::string to_text(const MultilinearPoly& p);

/// Parses the canonical text form (and light variations: any spacing, a
/// missing coefficient meaning 1). If k is not given it is the largest pair
/// index mentioned.
MultilinearPoly parse_text(std::string_view text, std::optional<int> k = std::nullopt);

/// {"k": <int>, "terms": [{"vars": [...], "coeff": "<decimal>"}, ...]}
std::string to_json(const MultilinearPoly& p);
MultilinearPoly parse_json(std::string_view text);

/// Header "mask,coeff", then one row per term.
std::string to_csv(const MultilinearPoly& p);

}  // namespace tracesign
