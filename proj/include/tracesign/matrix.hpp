#pragma once

// 2x2 matrices over exact integers and over multilinear polynomials.
//
// Entry naming follows the layout M = (a c; b d): `a` is (1,1), `c` is
// (1,2), `b` is (2,1), `d` is (2,2). With this naming the trace pairing is
// tr(F M) = a*f + b*h + c*t + d*g for F = (f h; t g). Anything that prints
// or parses a matrix does so row-major, i.e. [[a, c], [b, d]].

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracesign/integer.hpp"
#include "tracesign/poly.hpp"

namespace tracesign {

struct IntMatrix2 {
  Int a, c, b, d;

  static IntMatrix2 row_major(Int r11, Int r12, Int r21, Int r22) { return {r11, r12, r21, r22}; }
  static IntMatrix2 identity() { return {1, 0, 0, 1}; }

  Int trace() const { return a + d; }
  Int det() const { return a * d - c * b; }
  IntMatrix2 transpose() const { return {a, b, c, d}; }

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a * y.a + x.c * y.b, x.a * y.c + x.c * y.d, x.b * y.a + x.d * y.b, x.b * y.c + x.d * y.d};
  }
  friend IntMatrix2 operator+(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a + y.a, x.c + y.c, x.b + y.b, x.d + y.d};
  }
  friend IntMatrix2 operator*(Int s, const IntMatrix2& x) { return {s * x.a, s * x.c, s * x.b, s * x.d}; }
  IntMatrix2 operator-() const { return {-a, -c, -b, -d}; }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

  /// "[[a,c],[b,d]]"
  std::string to_string() const;
};

/// Parses a row-major literal "[[a,c],[b,d]]" (integers or decimal strings).
IntMatrix2 parse_matrix(std::string_view literal);

/// |a| > |b| > |d| and |a| > |c| > |d|.
bool is_decreasing(const IntMatrix2& m);

/// The fixed matrices. Checks take a Constants by reference so a corrupted
/// table can be fed through them as a negative control.
struct Constants {
  IntMatrix2 A, B, A_inv, B_inv, E;
  IntMatrix2 A1, A2, A3, A4, A5, A6;
  IntMatrix2 A2t, A3t, A4t;

  /// Looks up a matrix by name ("A", "B", "Ainv", "Binv", "E", "A1".."A6",
  /// "A2t", "A3t", "A4t"). Throws std::invalid_argument for unknown names.
  IntMatrix2& by_name(std::string_view name);
  const IntMatrix2& by_name(std::string_view name) const;
  static std::span<const std::string_view> names();
};

/// The canonical values: A = (1 2; 0 1), B = (1 0; -2 1), A_1..A_6 and the
/// transposes.
const Constants& constants();

/// Left factor of M^{ij} for row i in 0..3 and column j in 0..3, so that
/// M^{ij} = left_factor(i, j) * M.
IntMatrix2 m_table_factor(int i, int j, const Constants& k = constants());
IntMatrix2 m_table(const IntMatrix2& m, int i, int j, const Constants& k = constants());

enum class Generator { A4, A4t, A5, A6 };

inline constexpr std::array<Generator, 4> kGenerators = {Generator::A4, Generator::A4t, Generator::A5,
                                                         Generator::A6};

const IntMatrix2& generator_matrix(Generator g, const Constants& k = constants());
/// '4', 'T', '5', '6'.
char generator_letter(Generator g);
const char* generator_name(Generator g);

using GenWord = std::vector<Generator>;

std::string word_to_string(const GenWord& w);
GenWord parse_word(std::string_view text);
IntMatrix2 word_to_matrix(const GenWord& w, const Constants& k = constants());

/// A^m = (1 2m; 0 1) and B^n = (1 0; -2n 1), valid for every integer exponent.
IntMatrix2 power_A(Int m);
IntMatrix2 power_B(Int n);

struct PolyMatrix2 {
  MultilinearPoly f, h, t, g;  // (1,1), (1,2), (2,1), (2,2)

  static PolyMatrix2 identity(int k);
  int k() const { return f.k(); }
  MultilinearPoly trace() const { return f + g; }

  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;
};

/// Product of two polynomial matrices whose entries have disjoint variable
/// supports (left uses only pairs < j, right only pair j, and so on).
PolyMatrix2 multiply_disjoint(const PolyMatrix2& x, const PolyMatrix2& y);

enum class PowerFlavor { Raw, Substituted };

/// A^{x_j} = (1 2x_j; 0 1), or with Substituted, A^{s(1+x_j)}.
PolyMatrix2 sym_power_A(int k, int j, PowerFlavor flavor = PowerFlavor::Raw, int sign = 1);
/// B^{y_j} = (1 0; -2y_j 1), or with Substituted, B^{s(1+y_j)}.
PolyMatrix2 sym_power_B(int k, int j, PowerFlavor flavor = PowerFlavor::Raw, int sign = 1);

/// F_k = A^{x_1} B^{y_1} ... A^{x_k} B^{y_k}; F_0 is the identity.
PolyMatrix2 compute_F(int k);
/// F_k^sigma, built directly from substituted powers.
PolyMatrix2 compute_F_sigma(int k, const SignSequence& sigma);
/// Entrywise substitute_signs.
PolyMatrix2 substitute_signs(const PolyMatrix2& m, const SignSequence& sigma);

/// tr(F M) = a*f + b*h + c*t + d*g.
MultilinearPoly trace_comb(const PolyMatrix2& F, const IntMatrix2& M);

/// p_k = tr F_k.
inline MultilinearPoly trace_polynomial(int k) { return compute_F(k).trace(); }

}  // namespace tracesign
