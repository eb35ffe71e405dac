#pragma once

// Finite checks behind the sign-coherence proof: the constant identities,
// the one-step trace recursion, the k = 1 criterion, the cone
// decompositions, and the properties of the word set generated by
// A_4, A_4^t, A_5, A_6 up to a depth bound.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tracesign/matrix.hpp"
#include "tracesign/verify.hpp"

namespace tracesign {

struct Failure {
  std::string check;
  std::string detail;
  std::string witness;
};

struct CheckOutcome {
  bool ok = true;
  std::size_t instances = 0;
  std::vector<Failure> failures;

  /// Counts one instance; adds a failure record when it did not pass.
  void record(bool passed, std::string check, std::string detail, std::string witness = {});
  void fail(Failure f);
  void merge(CheckOutcome other);
};

CheckOutcome check_linear_identities(const Constants& k = constants());
CheckOutcome check_word_identities(const Constants& k = constants());

/// tr(F_{k+1}^{sigma_i} M) against the four-term right-hand side built from
/// F_k^sigma and M^{i0..i3}, compared as polynomials in 2k+2 variables.
/// k = 0 is the base identity with F_0 = E.
bool check_recursion(int k, const SignSequence& sigma, int i, const IntMatrix2& M, const Constants& c = constants());

/// check_recursion over every k in [k_begin, k_end), every sigma of length
/// 2k, every i and every M in `matrices`.
CheckOutcome check_recursion_suite(int k_begin, int k_end, const std::vector<IntMatrix2>& matrices,
                                   const Constants& c = constants(), int jobs = 0);

enum class BaseVerdict { Holds, Fails, HypothesisNotMet };

const char* to_string(BaseVerdict v);

struct BaseEquivalence {
  BaseVerdict verdict = BaseVerdict::HypothesisNotMet;
  bool good = false;            // a*f_1 + b*h_1 + c*t_1 + d*g_1 is good
  bool traces_nonneg = false;   // tr(M^{i3}) >= 0 for i = 0..3
  std::array<Int, 4> traces{};  // tr(M^{i3})
};

/// Both sides of the k = 1 criterion computed independently. Requires a > 0
/// and every M^{ij} to have a positive (1,1) entry, otherwise the verdict is
/// HypothesisNotMet.
BaseEquivalence check_base_equivalence(const IntMatrix2& M, const Constants& c = constants());

/// denominator * factor == sum_g weights[g] * generator(g), weights >= 0.
struct ConeDecomposition {
  std::string name;
  IntMatrix2 factor;
  Int denominator;
  std::array<Int, 4> weights;  // over A4, A4t, A5, A6
};

std::vector<ConeDecomposition> cone_decompositions(const Constants& c = constants());

/// Every M^{ij} left factor against its decomposition.
CheckOutcome check_cone_decompositions(const Constants& c = constants());

/// For one M: each M^{ij}, scaled by its denominator, equals the same
/// nonnegative combination of A_4 M, A_4^t M, A_5 M, A_6 M.
CheckOutcome check_cone_closure(const IntMatrix2& M, const std::string& label, const Constants& c = constants());

struct DeltaEntry {
  GenWord word;
  IntMatrix2 matrix;
};

/// All words of length <= L in length-lexicographic order (letters ordered
/// A4 < A4t < A5 < A6) with their matrices.
std::vector<DeltaEntry> enumerate_delta(int L, const Constants& c = constants());

struct DeltaReport {
  int depth = 0;
  std::size_t words = 0;
  std::size_t collisions = 0;  // distinct words sharing a matrix
  CheckOutcome properties;     // positivity, decreasing, traces, inductive step
  CheckOutcome closure;        // cone closure instances
};

DeltaReport check_delta_properties(int L, const Constants& c = constants(), int jobs = 0);

/// Fixed extra inputs for the k = 1 criterion, chosen to exercise both
/// verdicts and the hypothesis guard.
std::vector<IntMatrix2> base_fixtures();

/// 50 by default: entries uniform in [-3, 3].
std::vector<IntMatrix2> random_matrices(std::uint64_t seed, int count);

struct CertificateOptions {
  std::uint64_t seed = kDefaultSeed;
  int random_matrix_count = 50;
  int jobs = 0;
  Constants table = constants();
};

struct CertificateReport {
  int delta_depth = 0;
  int k_max = 0;
  bool identities_ok = false;
  bool recursion_ok = false;
  bool base_case_ok = false;
  bool cone_ok = false;
  bool delta_ok = false;
  std::size_t identity_checks = 0;
  std::size_t recursion_instances = 0;
  std::size_t base_instances = 0;
  std::size_t base_skipped = 0;
  std::size_t cone_checks = 0;
  std::size_t delta_words = 0;
  std::size_t delta_collisions = 0;
  std::vector<Failure> failures;

  bool all_ok() const { return identities_ok && recursion_ok && base_case_ok && cone_ok && delta_ok; }
};

/// Runs every check; never stops at the first failure.
CertificateReport full_certificate(int L, int k_max, const CertificateOptions& opts = {});

}  // namespace tracesign
