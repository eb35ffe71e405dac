#include "tracesign/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace tracesign {

namespace {

using Buffer = std::vector<Int>;

void check_dense_k(int k) {
  if (k > kMaxDensePairs)
    throw ShapeError("dense sweep supports k <= " + std::to_string(kMaxDensePairs) + ", got " + std::to_string(k));
}

Buffer scatter(const MultilinearPoly& p) {
  Buffer d(std::size_t{1} << p.num_vars());
  for (const Term& t : p.terms()) d[t.mono.mask] = t.coeff;
  return d;
}

// Replaces the variable in `slot` by sign*(1 + v) on a dense buffer:
// for every mask m containing v, c = sign*d[m]; d[m] = c; d[m without v] += c.
void butterfly(Buffer& d, int slot, int sign) {
  const std::size_t bit = std::size_t{1} << slot;
  const std::size_t n = d.size();
  for (std::size_t hi = 0; hi < n; hi += 2 * bit) {
    for (std::size_t lo = hi; lo < hi + bit; ++lo) {
      Int& with_v = d[lo + bit];
      if (with_v.is_zero()) continue;
      if (sign < 0) with_v = -with_v;
      d[lo] += with_v;
    }
  }
}

SignPattern classify(const Buffer& d) {
  SignPattern out;
  for (std::size_t m = 0; m < d.size(); ++m) {
    const int s = d[m].sign();
    if (s > 0 && !out.positive_witness) out.positive_witness = Monomial{static_cast<std::uint32_t>(m)};
    if (s < 0 && !out.negative_witness) out.negative_witness = Monomial{static_cast<std::uint32_t>(m)};
    if (out.positive_witness && out.negative_witness) {
      out.tag = SignTag::Mixed;
      return out;
    }
  }
  out.tag = out.positive_witness ? SignTag::AllNonneg : out.negative_witness ? SignTag::AllNonpos : SignTag::Zero;
  out.positive_witness.reset();
  out.negative_witness.reset();
  return out;
}

std::vector<SignPattern> reference_sweep(const MultilinearPoly& p) {
  const std::uint32_t count = std::uint32_t{1} << p.num_vars();
  std::vector<SignPattern> out(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    out[mask] = sign_pattern(substitute_signs(p, SignSequence(p.k(), mask)));
  return out;
}

// Depth-first over the remaining slots. stack[level] is scratch owned by the
// caller's thread; stack[level] holds the state with slots < level applied.
void descend(std::vector<Buffer>& stack, int level, int num_slots, std::uint32_t mask,
             std::vector<SignPattern>& out) {
  if (level == num_slots) {
    out[mask] = classify(stack[level]);
    return;
  }
  // '+' branch on a copy, '-' branch in place (the parent state is dead after).
  stack[level + 1] = stack[level];
  butterfly(stack[level + 1], level, 1);
  descend(stack, level + 1, num_slots, mask, out);
  butterfly(stack[level], level, -1);
  std::swap(stack[level], stack[level + 1]);
  descend(stack, level + 1, num_slots, mask | (std::uint32_t{1} << level), out);
}

std::vector<SignPattern> parallel_sweep(const MultilinearPoly& p, int jobs) {
  const int num_slots = p.num_vars();
  check_dense_k(p.k());
  const std::uint32_t count = std::uint32_t{1} << num_slots;
  std::vector<SignPattern> out(count);
  const Buffer base = scatter(p);

  // Enough top-level prefixes to keep every thread busy.
  int split = 0;
  while (split < num_slots && (1 << split) < 8 * jobs) ++split;
  const int tasks = 1 << split;

  std::vector<std::exception_ptr> errors(tasks);
#pragma omp parallel num_threads(jobs)
  {
    std::vector<Buffer> stack(num_slots + 1);
#pragma omp for schedule(dynamic, 1)
    for (int task = 0; task < tasks; ++task) {
      try {
        stack[split] = base;
        for (int slot = 0; slot < split; ++slot) butterfly(stack[split], slot, (task >> slot) & 1 ? -1 : 1);
        descend(stack, split, num_slots, static_cast<std::uint32_t>(task), out);
      } catch (...) {
        errors[task] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

int effective_jobs(int jobs) { return jobs > 0 ? jobs : std::max(1, omp_get_max_threads()); }

std::vector<SignPattern> sign_sweep(const MultilinearPoly& p, const SweepOptions& opts) {
  if (opts.backend == SweepBackend::Reference) return reference_sweep(p);
  return parallel_sweep(p, effective_jobs(opts.jobs));
}

std::vector<Int> dense_substitute(const MultilinearPoly& p, const SignSequence& sigma) {
  check_dense_k(p.k());
  if (sigma.k() != p.k()) throw ShapeError("dense_substitute: sign sequence length must be 2k");
  Buffer d = scatter(p);
  for (int slot = 0; slot < p.num_vars(); ++slot) butterfly(d, slot, sigma.at(slot));
  return d;
}

MultilinearPoly from_dense(int k, const std::vector<Int>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    if (!coeffs[m].is_zero()) terms.push_back({Monomial{static_cast<std::uint32_t>(m)}, coeffs[m]});
  return MultilinearPoly::from_terms(k, std::move(terms));
}

}  // namespace tracesign
