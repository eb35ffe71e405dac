#include "tracesign/certificate.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <random>

namespace tracesign {

void CheckOutcome::record(bool passed, std::string check, std::string detail, std::string witness) {
  ++instances;
  if (!passed) fail({std::move(check), std::move(detail), std::move(witness)});
}

void CheckOutcome::fail(Failure f) {
  ok = false;
  failures.push_back(std::move(f));
}

void CheckOutcome::merge(CheckOutcome other) {
  ok = ok && other.ok;
  instances += other.instances;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

namespace {

std::string word_label(const GenWord& w) { return w.empty() ? "(empty)" : word_to_string(w); }

void expect_equal(CheckOutcome& out, const char* check, const std::string& what, const IntMatrix2& lhs,
                  const IntMatrix2& rhs) {
  out.record(lhs == rhs, check, lhs.to_string() + " != " + rhs.to_string(), what);
}

}  // namespace

CheckOutcome check_linear_identities(const Constants& k) {
  CheckOutcome out;
  const char* id = "linear_identities";
  expect_equal(out, id, "A4 + A5 = 4 A2", k.A4 + k.A5, 4 * k.A2);
  expect_equal(out, id, "A4 + A6 = 4 A3^t", k.A4 + k.A6, 4 * k.A3t);
  expect_equal(out, id, "A4^t + A5 = 4 A2^t", k.A4t + k.A5, 4 * k.A2t);
  expect_equal(out, id, "A4^t + A6 = 4 A3", k.A4t + k.A6, 4 * k.A3);
  expect_equal(out, id, "A2 + A3 = 4 A1", k.A2 + k.A3, 4 * k.A1);
  return out;
}

CheckOutcome check_word_identities(const Constants& k) {
  CheckOutcome out;
  const char* id = "word_identities";
  // The inverses are checked too: the identities are only meaningful if they are.
  expect_equal(out, id, "A Ainv = E", k.A * k.A_inv, k.E);
  expect_equal(out, id, "B Binv = E", k.B * k.B_inv, k.E);
  expect_equal(out, id, "A4 = -Ainv Binv", k.A4, -(k.A_inv * k.B_inv));
  expect_equal(out, id, "A4^t = -A B", k.A4t, -(k.A * k.B));
  expect_equal(out, id, "A5 = A Binv", k.A5, k.A * k.B_inv);
  expect_equal(out, id, "A6 = Ainv B", k.A6, k.A_inv * k.B);
  return out;
}

namespace {

// tau(0) = tau(3) = 1, tau(1) = tau(2) = 0.
int recursion_sign(int i) { return i == 0 || i == 3 ? -1 : 1; }

// (-1)^tau(i) * (x y T0 + x T1 + y T2 + T3), with T_j = tr(F_k^sigma M^{ij})
// lifted to k+1 pairs.
MultilinearPoly recursion_rhs(const PolyMatrix2& F_sigma, int i, const IntMatrix2& M, const Constants& c) {
  const int k1 = F_sigma.k() + 1;
  const MultilinearPoly x = MultilinearPoly::variable(k1, VarIndex::x(k1));
  const MultilinearPoly y = MultilinearPoly::variable(k1, VarIndex::y(k1));
  std::array<MultilinearPoly, 4> tr;
  for (int j = 0; j < 4; ++j) tr[j] = lift(trace_comb(F_sigma, m_table(M, i, j, c)), k1);
  MultilinearPoly sum = mul_disjoint(mul_disjoint(x, y), tr[0]) + mul_disjoint(x, tr[1]) + mul_disjoint(y, tr[2]) + tr[3];
  return scale(sum, recursion_sign(i));
}

// Left side through the raw F_{k+1}: substitute sigma_i into tr(F_{k+1} M).
// This does not go through compute_F_sigma, so the two sides are computed
// along different routes.
MultilinearPoly recursion_lhs(const PolyMatrix2& F_next, const SignSequence& sigma_i, const IntMatrix2& M) {
  return substitute_signs(trace_comb(F_next, M), sigma_i);
}

}  // namespace

bool check_recursion(int k, const SignSequence& sigma, int i, const IntMatrix2& M, const Constants& c) {
  if (sigma.k() != k) throw ShapeError("check_recursion: sign sequence length must be 2k");
  const SignSequence sigma_i = extend_sigma(sigma, i);
  return recursion_lhs(compute_F(k + 1), sigma_i, M) == recursion_rhs(compute_F_sigma(k, sigma), i, M, c);
}

CheckOutcome check_recursion_suite(int k_begin, int k_end, const std::vector<IntMatrix2>& matrices,
                                   const Constants& c, int jobs) {
  CheckOutcome out;
  for (int k = std::max(0, k_begin); k < k_end; ++k) {
    const PolyMatrix2 F_next = compute_F(k + 1);
    std::vector<MultilinearPoly> raw_traces;
    raw_traces.reserve(matrices.size());
    for (const IntMatrix2& M : matrices) raw_traces.push_back(trace_comb(F_next, M));

    const int sigmas = 1 << (2 * k);
    std::vector<CheckOutcome> per_sigma(sigmas);
    std::vector<std::exception_ptr> errors(sigmas);
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_jobs(jobs))
    for (int mask = 0; mask < sigmas; ++mask) {
      try {
        const SignSequence sigma(k, static_cast<std::uint32_t>(mask));
        const PolyMatrix2 F_sigma = compute_F_sigma(k, sigma);
        for (int i = 0; i < 4; ++i) {
          const SignSequence sigma_i = extend_sigma(sigma, i);
          for (std::size_t m = 0; m < matrices.size(); ++m) {
            const bool same = substitute_signs(raw_traces[m], sigma_i) == recursion_rhs(F_sigma, i, matrices[m], c);
            ++per_sigma[mask].instances;
            if (!same)
              per_sigma[mask].fail({"recursion", "trace recursion differs as a polynomial",
                                    "k=" + std::to_string(k) + " sigma=(" + sigma.to_string() + ")" +
                                        " i=" + std::to_string(i) + " M=" + matrices[m].to_string()});
          }
        }
      } catch (...) {
        errors[mask] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& o : per_sigma) out.merge(std::move(o));
  }
  return out;
}

const char* to_string(BaseVerdict v) {
  switch (v) {
    case BaseVerdict::Holds: return "holds";
    case BaseVerdict::Fails: return "fails";
    case BaseVerdict::HypothesisNotMet: return "hypothesis_not_met";
  }
  return "?";
}

BaseEquivalence check_base_equivalence(const IntMatrix2& M, const Constants& c) {
  BaseEquivalence r;
  bool hypothesis = M.a.sign() > 0;
  for (int i = 0; i < 4 && hypothesis; ++i)
    for (int j = 0; j < 4 && hypothesis; ++j) hypothesis = m_table(M, i, j, c).a.sign() > 0;
  if (!hypothesis) return r;

  r.good = verify_comb_good(1, M, {.jobs = 1}).all_good;
  r.traces_nonneg = true;
  for (int i = 0; i < 4; ++i) {
    r.traces[i] = m_table(M, i, 3, c).trace();
    r.traces_nonneg = r.traces_nonneg && r.traces[i].sign() >= 0;
  }
  r.verdict = r.good == r.traces_nonneg ? BaseVerdict::Holds : BaseVerdict::Fails;
  return r;
}

std::vector<ConeDecomposition> cone_decompositions(const Constants& c) {
  return {
      {"4A1", 4 * c.A1, 4, {1, 1, 1, 1}},  // 16 A1 = A4 + A4^t + A5 + A6
      {"2A2", 2 * c.A2, 2, {1, 0, 1, 0}},
      {"2A3", 2 * c.A3, 2, {0, 1, 0, 1}},
      {"2A2t", 2 * c.A2t, 2, {0, 1, 1, 0}},
      {"2A3t", 2 * c.A3t, 2, {1, 0, 0, 1}},
      {"A4", c.A4, 1, {1, 0, 0, 0}},
      {"A4t", c.A4t, 1, {0, 1, 0, 0}},
      {"A5", c.A5, 1, {0, 0, 1, 0}},
      {"A6", c.A6, 1, {0, 0, 0, 1}},
  };
}

namespace {

IntMatrix2 combine(const std::array<Int, 4>& weights, const std::array<IntMatrix2, 4>& mats) {
  IntMatrix2 sum{0, 0, 0, 0};
  for (int g = 0; g < 4; ++g) sum = sum + weights[g] * mats[g];
  return sum;
}

// Index into cone_decompositions() for the left factor of M^{ij}.
int decomposition_index(int i, int j) {
  static constexpr int table[4][4] = {{0, 2, 3, 6}, {0, 1, 3, 7}, {0, 2, 4, 8}, {0, 1, 4, 5}};
  return table[i][j];
}

}  // namespace

CheckOutcome check_cone_decompositions(const Constants& c) {
  CheckOutcome out;
  const std::array<IntMatrix2, 4> gens = {c.A4, c.A4t, c.A5, c.A6};
  const auto decs = cone_decompositions(c);
  for (const auto& d : decs) {
    const bool nonneg = std::all_of(d.weights.begin(), d.weights.end(), [](Int w) { return w.sign() >= 0; });
    out.record(nonneg && d.denominator.sign() > 0, "cone_decomposition", d.name + ": negative weight", d.name);
    const IntMatrix2 lhs = d.denominator * d.factor;
    const IntMatrix2 rhs = combine(d.weights, gens);
    out.record(lhs == rhs, "cone_decomposition",
               d.name + ": " + lhs.to_string() + " != " + rhs.to_string(), d.name);
  }
  // The decompositions must describe the actual M^{ij} factors.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& d = decs[decomposition_index(i, j)];
      out.record(m_table_factor(i, j, c) == d.factor, "cone_decomposition",
                 "M^" + std::to_string(i) + std::to_string(j) + " factor is not " + d.name,
                 "i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  return out;
}

CheckOutcome check_cone_closure(const IntMatrix2& M, const std::string& label, const Constants& c) {
  CheckOutcome out;
  const auto decs = cone_decompositions(c);
  const std::array<IntMatrix2, 4> images = {c.A4 * M, c.A4t * M, c.A5 * M, c.A6 * M};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& d = decs[decomposition_index(i, j)];
      ++out.instances;
      if (d.denominator * m_table(M, i, j, c) != combine(d.weights, images))
        out.fail({"cone_closure", "M^" + std::to_string(i) + std::to_string(j) + " is not " + d.name + " M", label});
    }
  return out;
}

std::vector<DeltaEntry> enumerate_delta(int L, const Constants& c) {
  if (L < 0) throw std::invalid_argument("enumerate_delta: depth must be >= 0");
  std::vector<DeltaEntry> out{{GenWord{}, c.E}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= L; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      for (Generator g : kGenerators) {
        GenWord w = out[n].word;
        w.push_back(g);
        const IntMatrix2 m = out[n].matrix * generator_matrix(g, c);
        out.push_back({std::move(w), m});
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

void check_delta_word(const DeltaEntry& e, const Constants& c, CheckOutcome& props, CheckOutcome& closure) {
  const IntMatrix2& M = e.matrix;
  const std::string label = word_label(e.word);
  auto expect = [&](bool passed, const char* check, const std::string& detail) {
    ++props.instances;
    if (!passed) props.fail({check, detail + " for " + M.to_string(), label});
  };

  expect(M.a.sign() > 0, "positive_entry", "(1,1) entry is not positive");
  if (!e.word.empty()) {
    expect(is_decreasing(M), "decreasing", "matrix is not decreasing");
    if (M.a.sign() > 0 && is_decreasing(M)) expect(M.trace().sign() > 0, "positive_trace", "trace is not positive");
    // A^m B^n M stays decreasing for m, n = +-1.
    for (int m : {1, -1})
      for (int n : {1, -1})
        expect(is_decreasing(power_A(m) * power_B(n) * M), "power_step",
               "A^" + std::to_string(m) + " B^" + std::to_string(n) + " M is not decreasing");
  }
  for (Generator g : kGenerators) {
    const IntMatrix2& C = generator_matrix(g, c);
    expect((C * M).trace().sign() >= 0, "generator_traces", std::string("tr(") + generator_name(g) + " M) < 0");
    const IntMatrix2 next = M * C;
    expect(is_decreasing(next) && next.a.sign() > 0, "inductive_step",
           std::string("M ") + generator_name(g) + " is not decreasing with positive (1,1) entry");
  }
  closure.merge(check_cone_closure(M, label, c));
}

}  // namespace

DeltaReport check_delta_properties(int L, const Constants& c, int jobs) {
  if (L < 1) throw std::invalid_argument("check_delta_properties: depth must be >= 1");
  DeltaReport r;
  r.depth = L;
  const std::vector<DeltaEntry> entries = enumerate_delta(L, c);
  r.words = entries.size();

  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (entries.size() + kChunk - 1) / kChunk;
  std::vector<CheckOutcome> props(chunks), closure(chunks);
  std::vector<std::exception_ptr> errors(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_jobs(jobs))
  for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
    try {
      const std::size_t end = std::min(entries.size(), (chunk + 1) * kChunk);
      for (std::size_t n = chunk * kChunk; n < end; ++n) check_delta_word(entries[n], c, props[chunk], closure[chunk]);
    } catch (...) {
      errors[chunk] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
    r.properties.merge(std::move(props[chunk]));
    r.closure.merge(std::move(closure[chunk]));
  }

  using Key = std::array<Int::raw_type, 4>;
  std::vector<Key> keys;
  keys.reserve(entries.size());
  for (const auto& e : entries) keys.push_back({e.matrix.a.raw(), e.matrix.c.raw(), e.matrix.b.raw(), e.matrix.d.raw()});
  std::sort(keys.begin(), keys.end());
  for (std::size_t n = 1; n < keys.size(); ++n)
    if (keys[n] == keys[n - 1]) ++r.collisions;
  return r;
}

std::vector<IntMatrix2> base_fixtures() {
  return {
      IntMatrix2::row_major(1, 0, 0, -3),   // traces 6, 2, 2, 6: good
      IntMatrix2::row_major(1, 0, 0, -10),  // tr(A5 M) = -5: not good
      IntMatrix2::row_major(-1, 0, 0, 1),   // a < 0: hypothesis not met
      IntMatrix2::row_major(2, 1, 1, 1),
  };
}

std::vector<IntMatrix2> random_matrices(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<IntMatrix2> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    const int a = dist(rng), c = dist(rng), b = dist(rng), d = dist(rng);
    out.push_back(IntMatrix2::row_major(a, c, b, d));
  }
  return out;
}

CertificateReport full_certificate(int L, int k_max, const CertificateOptions& opts) {
  if (L < 1) throw std::invalid_argument("full_certificate: depth must be >= 1");
  if (k_max < 1) throw std::invalid_argument("full_certificate: k_max must be >= 1");
  const Constants& c = opts.table;
  CertificateReport r;
  r.delta_depth = L;
  r.k_max = k_max;
  auto collect = [&r](CheckOutcome& o) {
    for (auto& f : o.failures) r.failures.push_back(f);
  };

  CheckOutcome identities = check_linear_identities(c);
  identities.merge(check_word_identities(c));
  r.identities_ok = identities.ok;
  r.identity_checks = identities.instances;
  collect(identities);

  CheckOutcome cone = check_cone_decompositions(c);

  // Recursion inputs: words of length <= 2 plus seeded random matrices.
  std::vector<IntMatrix2> rec_matrices;
  for (const auto& e : enumerate_delta(2, c)) rec_matrices.push_back(e.matrix);
  for (const auto& m : random_matrices(opts.seed, opts.random_matrix_count)) rec_matrices.push_back(m);

  CheckOutcome base = check_recursion_suite(0, 1, rec_matrices, c, opts.jobs);
  CheckOutcome recursion = check_recursion_suite(1, k_max, rec_matrices, c, opts.jobs);
  r.recursion_instances = base.instances + recursion.instances;
  r.recursion_ok = base.ok && recursion.ok;

  const PolyMatrix2 F1 = compute_F(1);
  base.record(F1.f == parse_text("1 - 4*x1*y1", 1), "base_values", "f_1 != 1 - 4*x1*y1", "f_1");
  base.record(F1.h == parse_text("2*x1", 1), "base_values", "h_1 != 2*x1", "h_1");
  base.record(F1.t == parse_text("-2*y1", 1), "base_values", "t_1 != -2*y1", "t_1");
  base.record(F1.g == parse_text("1", 1), "base_values", "g_1 != 1", "g_1");

  std::vector<std::pair<std::string, IntMatrix2>> base_inputs;
  for (const auto& e : enumerate_delta(std::min(L, 3), c)) base_inputs.emplace_back(word_label(e.word), e.matrix);
  for (const auto& m : base_fixtures()) base_inputs.emplace_back(m.to_string(), m);
  for (const auto& [label, M] : base_inputs) {
    const BaseEquivalence be = check_base_equivalence(M, c);
    if (be.verdict == BaseVerdict::HypothesisNotMet) {
      ++r.base_skipped;
      continue;
    }
    ++r.base_instances;
    base.record(be.verdict == BaseVerdict::Holds, "base_equivalence",
                std::string("goodness=") + (be.good ? "true" : "false") +
                    " but traces_nonneg=" + (be.traces_nonneg ? "true" : "false"),
                label);
  }
  r.base_case_ok = base.ok;
  collect(base);
  collect(recursion);

  DeltaReport delta = check_delta_properties(L, c, opts.jobs);
  r.delta_words = delta.words;
  r.delta_collisions = delta.collisions;
  r.delta_ok = delta.properties.ok;
  cone.merge(std::move(delta.closure));
  r.cone_ok = cone.ok;
  r.cone_checks = cone.instances;
  collect(cone);
  collect(delta.properties);
  return r;
}

}  // namespace tracesign
