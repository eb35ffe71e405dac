#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tracesign/matrix.hpp"
#include "tracesign/poly.hpp"
#include "tracesign/sweep.hpp"

namespace tracesign {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

/// Appends the pair of signs for index i: 0 -> (+,+), 1 -> (+,-),
/// 2 -> (-,+), 3 -> (-,-). The first 2k entries are unchanged.
SignSequence extend_sigma(const SignSequence& sigma, int i);

/// (-1)^(k + number of negative entries of sigma).
int predicted_sign(int k, const SignSequence& sigma);

struct Counterexample {
  SignSequence sigma;
  Monomial positive;
  Monomial negative;
};

struct SignFormulaViolation {
  SignSequence sigma;
  SignTag observed = SignTag::Zero;
  int expected = 0;
};

struct GoodnessReport {
  int k = 0;
  std::size_t terms = 0;  // terms of the polynomial that was swept
  bool all_good = true;
  /// Set only when a sign prediction applies (trace polynomials, and
  /// combinations with a > 0).
  std::optional<bool> sign_formula_holds;
  std::vector<SignPattern> per_sigma;  // index = sigma mask
  std::optional<Counterexample> counterexample;  // lowest Mixed sigma
  std::optional<SignFormulaViolation> formula_violation;  // lowest offending sigma

  std::size_t count(SignTag tag) const;
  bool passed() const { return all_good && sign_formula_holds.value_or(true); }
};

/// Sweeps all 4^k sign sequences. Good iff no p^sigma is Mixed.
GoodnessReport goodness(const MultilinearPoly& p, const SweepOptions& opts = {});

/// Compares every per-sigma pattern with overall_sign * predicted_sign(k,
/// sigma). Zero and Mixed entries count as violations.
void check_sign_formula(GoodnessReport& report, int overall_sign = 1);

/// Goodness of p_k plus the sign formula. Requires k >= 1.
GoodnessReport verify_theorem(int k, const SweepOptions& opts = {});

/// Goodness of a*f_k + b*h_k + c*t_k + d*g_k. The sign formula is checked
/// when M.a > 0. Requires k >= 1.
GoodnessReport verify_comb_good(int k, const IntMatrix2& M, const SweepOptions& opts = {});

/// tr(A^{m_1} B^{n_1} ... A^{m_k} B^{n_k}) from integer closed forms; the
/// exponents are interleaved m_1, n_1, m_2, n_2, ...
Int numeric_oracle(int k, std::span<const Int> exponents);

/// 2k exponents drawn uniformly from [-5, 5] without 0.
std::vector<Int> random_exponents(std::mt19937_64& rng, int k);

struct OracleMismatch {
  std::vector<Int> point;
  Int oracle;
  Int polynomial;
};

struct OracleSummary {
  int k = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int agreements = 0;
  std::vector<OracleMismatch> mismatches;
};

/// Compares numeric_oracle with evaluate(p_k, .) on seeded random points.
OracleSummary run_oracle_trials(int k, int trials, std::uint64_t seed);

}  // namespace tracesign
