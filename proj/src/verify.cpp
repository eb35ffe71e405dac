#include "tracesign/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracesign {

SignSequence extend_sigma(const SignSequence& sigma, int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("extend_sigma: index must be in 0..3");
  // i = 2*(first sign negative) + (second sign negative)
  std::uint32_t mask = sigma.mask();
  const int slot = sigma.length();
  if (i & 2) mask |= std::uint32_t{1} << slot;
  if (i & 1) mask |= std::uint32_t{1} << (slot + 1);
  return SignSequence(sigma.k() + 1, mask);
}

int predicted_sign(int k, const SignSequence& sigma) { return (k + sigma.negatives()) % 2 == 0 ? 1 : -1; }

std::size_t GoodnessReport::count(SignTag tag) const {
  return static_cast<std::size_t>(
      std::count_if(per_sigma.begin(), per_sigma.end(), [tag](const SignPattern& p) { return p.tag == tag; }));
}

GoodnessReport goodness(const MultilinearPoly& p, const SweepOptions& opts) {
  GoodnessReport r;
  r.k = p.k();
  r.terms = p.size();
  r.per_sigma = sign_sweep(p, opts);
  for (std::uint32_t mask = 0; mask < r.per_sigma.size(); ++mask) {
    const SignPattern& sp = r.per_sigma[mask];
    if (!sp.is_mixed()) continue;
    r.all_good = false;
    r.counterexample = Counterexample{SignSequence(p.k(), mask), *sp.positive_witness, *sp.negative_witness};
    break;
  }
  return r;
}

void check_sign_formula(GoodnessReport& report, int overall_sign) {
  report.sign_formula_holds = true;
  report.formula_violation.reset();
  for (std::uint32_t mask = 0; mask < report.per_sigma.size(); ++mask) {
    const SignSequence sigma(report.k, mask);
    const int expected = overall_sign * predicted_sign(report.k, sigma);
    if (report.per_sigma[mask].sign() == expected) continue;
    report.sign_formula_holds = false;
    report.formula_violation = SignFormulaViolation{sigma, report.per_sigma[mask].tag, expected};
    return;
  }
}

namespace {

void require_positive_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
}

}  // namespace

GoodnessReport verify_theorem(int k, const SweepOptions& opts) {
  require_positive_k(k);
  GoodnessReport r = goodness(trace_polynomial(k), opts);
  check_sign_formula(r);
  return r;
}

GoodnessReport verify_comb_good(int k, const IntMatrix2& M, const SweepOptions& opts) {
  require_positive_k(k);
  GoodnessReport r = goodness(trace_comb(compute_F(k), M), opts);
  if (M.a.sign() > 0) check_sign_formula(r);
  return r;
}

Int numeric_oracle(int k, std::span<const Int> exponents) {
  if (static_cast<int>(exponents.size()) != 2 * k)
    throw ShapeError("numeric_oracle: expected " + std::to_string(2 * k) + " exponents, got " +
                     std::to_string(exponents.size()));
  IntMatrix2 prod = IntMatrix2::identity();
  for (int j = 0; j < k; ++j) prod = prod * power_A(exponents[2 * j]) * power_B(exponents[2 * j + 1]);
  return prod.trace();
}

std::vector<Int> random_exponents(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> dist(1, 10);
  std::vector<Int> v(2 * k);
  for (Int& e : v) {
    const int r = dist(rng);
    e = r <= 5 ? -r : r - 5;
  }
  return v;
}

OracleSummary run_oracle_trials(int k, int trials, std::uint64_t seed) {
  require_positive_k(k);
  OracleSummary s{k, seed, trials, 0, {}};
  const MultilinearPoly pk = trace_polynomial(k);
  std::mt19937_64 rng(seed);
  for (int n = 0; n < trials; ++n) {
    std::vector<Int> point = random_exponents(rng, k);
    const Int lhs = numeric_oracle(k, point);
    const Int rhs = evaluate(pk, point);
    if (lhs == rhs)
      ++s.agreements;
    else
      s.mismatches.push_back({std::move(point), lhs, rhs});
  }
  return s;
}

}  // namespace tracesign
