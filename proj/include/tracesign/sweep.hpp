#pragma once

// The 4^k sign sweep: SignPattern of p^sigma for every sigma.
//
// Two implementations are kept side by side:
//   * Reference: serial, per sigma, substitute_signs() on the sparse term
//     list followed by sign_pattern(). Slow but obviously correct.
//   * Parallel: dense coefficient buffers indexed by monomial mask. The
//     substitution of one slot is an in-place butterfly, and sign sequences
//     that share a prefix share the work for that prefix (depth-first over
//     slots). Top-level prefixes are distributed over OpenMP threads.
// Results are stored by sigma mask, so the output does not depend on thread
// count or scheduling.

#include <vector>

#include "tracesign/poly.hpp"

namespace tracesign {

enum class SweepBackend { Reference, Parallel };

struct SweepOptions {
  /// Worker threads for the parallel backend; 0 means the OpenMP default.
  int jobs = 0;
  SweepBackend backend = SweepBackend::Parallel;
};

/// Largest k accepted by the dense kernel (buffers hold 4^k coefficients).
inline constexpr int kMaxDensePairs = 9;

/// Patterns indexed by sigma mask (bit j set means sigma(j+1) = -1).
std::vector<SignPattern> sign_sweep(const MultilinearPoly& p, const SweepOptions& opts = {});

/// Dense coefficient vector of p^sigma (index = monomial mask), computed with
/// the butterfly kernel.
std::vector<Int> dense_substitute(const MultilinearPoly& p, const SignSequence& sigma);

MultilinearPoly from_dense(int k, const std::vector<Int>& coeffs);

/// Resolves jobs = 0 to the OpenMP default.
int effective_jobs(int jobs);

}  // namespace tracesign
