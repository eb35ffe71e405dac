#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tracesign/matrix.hpp"

using namespace tracesign;

namespace {

MultilinearPoly P(const char* text, int k) { return parse_text(text, k); }

IntMatrix2 M(Int r11, Int r12, Int r21, Int r22) { return IntMatrix2::row_major(r11, r12, r21, r22); }

oracle::GeneralPoly G(const MultilinearPoly& p) { return oracle::GeneralPoly::from(p); }

}  // namespace

TEST(Matrix, ConstantTable) {
  const Constants& c = constants();
  EXPECT_EQ(c.A, M(1, 2, 0, 1));
  EXPECT_EQ(c.B, M(1, 0, -2, 1));
  EXPECT_EQ(c.A * c.A_inv, c.E);
  EXPECT_EQ(c.B * c.B_inv, c.E);
  EXPECT_EQ(c.A4, M(3, 2, -2, -1));
  EXPECT_EQ(c.A4t, c.A4.transpose());
  EXPECT_EQ(c.A5, M(5, 2, 2, 1));
  EXPECT_EQ(c.A6, M(5, -2, -2, 1));
  for (std::string_view name : Constants::names()) EXPECT_NO_THROW(Constants(c).by_name(name));
  EXPECT_THROW(Constants(c).by_name("A7"), std::invalid_argument);
}

TEST(Matrix, PowersMatchRepeatedProducts) {
  const Constants& c = constants();
  IntMatrix2 up = c.E, down = c.E;
  for (int m = 0; m <= 5; ++m) {
    EXPECT_EQ(power_A(m), up);
    EXPECT_EQ(power_A(-m), down);
    EXPECT_EQ(power_B(m), [&] {
      IntMatrix2 r = c.E;
      for (int i = 0; i < m; ++i) r = r * c.B;
      return r;
    }());
    up = up * c.A;
    down = down * c.A_inv;
  }
}

TEST(Matrix, ParseAndPrint) {
  const IntMatrix2 m = parse_matrix("[[1, 2], [3, \"-4\"]]");
  EXPECT_EQ(m.a, Int{1});
  EXPECT_EQ(m.c, Int{2});
  EXPECT_EQ(m.b, Int{3});
  EXPECT_EQ(m.d, Int{-4});
  EXPECT_EQ(m.to_string(), "[[1,2],[3,-4]]");
  EXPECT_THROW(parse_matrix("[[1,2],[3]]"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("[[1,2],[3,4.5]]"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("nope"), std::invalid_argument);
}

TEST(Matrix, Decreasing) {
  const Constants& c = constants();
  EXPECT_TRUE(is_decreasing(c.A4));
  EXPECT_TRUE(is_decreasing(c.A5));
  EXPECT_TRUE(is_decreasing(c.A6));
  EXPECT_FALSE(is_decreasing(c.E));
  EXPECT_FALSE(is_decreasing(M(2, 1, 1, 1)));
  EXPECT_FALSE(is_decreasing(M(5, 2, 1, 1)));
}

TEST(Matrix, MTableExamples) {
  const Constants& c = constants();
  EXPECT_EQ(m_table(c.E, 0, 3), c.A4t);
  EXPECT_EQ(m_table(c.E, 1, 3), c.A5);
  EXPECT_EQ(m_table(c.E, 2, 3), c.A6);
  EXPECT_EQ(m_table(c.A4, 3, 3), M(5, 4, -4, -3));
  EXPECT_EQ(m_table(c.E, 2, 0), Int{4} * c.A1);
  EXPECT_THROW(m_table(c.E, 4, 0), std::invalid_argument);
}

TEST(Matrix, Words) {
  const Constants& c = constants();
  EXPECT_EQ(word_to_matrix(parse_word("45")), M(19, 8, -12, -5));
  EXPECT_EQ(word_to_matrix({}), c.E);
  EXPECT_EQ(word_to_string(parse_word("4T56")), "4T56");
  EXPECT_THROW(parse_word("47"), std::invalid_argument);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    GenWord u, v;
    for (int i = len(rng); i > 0; --i) u.push_back(kGenerators[letter(rng)]);
    for (int i = len(rng); i > 0; --i) v.push_back(kGenerators[letter(rng)]);
    GenWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    EXPECT_EQ(word_to_matrix(uv), word_to_matrix(u) * word_to_matrix(v));
  }
}

TEST(SymbolicPowers, Values) {
  const PolyMatrix2 a = sym_power_A(1, 1);
  EXPECT_EQ(a.f, MultilinearPoly::constant(1, 1));
  EXPECT_EQ(a.h, P("2*x1", 1));
  EXPECT_TRUE(a.t.is_zero());
  const PolyMatrix2 b = sym_power_B(2, 2, PowerFlavor::Substituted, -1);
  EXPECT_EQ(b.t, P("2 + 2*y2", 2));
  EXPECT_EQ(b.g, MultilinearPoly::constant(2, 1));
  EXPECT_THROW(sym_power_A(2, 3), std::out_of_range);
  EXPECT_THROW(sym_power_B(2, 0), std::out_of_range);
}

TEST(ComputeF, SmallCases) {
  EXPECT_EQ(compute_F(0), PolyMatrix2::identity(0));
  EXPECT_EQ(trace_polynomial(0), MultilinearPoly::constant(0, 2));
  const PolyMatrix2 f1 = compute_F(1);
  EXPECT_EQ(f1.f, P("1 - 4*x1*y1", 1));
  EXPECT_EQ(f1.h, P("2*x1", 1));
  EXPECT_EQ(f1.t, P("-2*y1", 1));
  EXPECT_EQ(f1.g, P("1", 1));
  EXPECT_EQ(trace_polynomial(1), P("2 - 4*x1*y1", 1));
}

TEST(ComputeF, MatchesSchoolbookProduct) {
  for (int k = 1; k <= 4; ++k) {
    const PolyMatrix2 F = compute_F(k);
    const oracle::GeneralMatrix R = oracle::raw_F(k);
    EXPECT_EQ(F.f, R.e11.to_multilinear()) << "k=" << k;
    EXPECT_EQ(F.h, R.e12.to_multilinear()) << "k=" << k;
    EXPECT_EQ(F.t, R.e21.to_multilinear()) << "k=" << k;
    EXPECT_EQ(F.g, R.e22.to_multilinear()) << "k=" << k;
  }
}

TEST(ComputeF, DeterminantIsOne) {
  for (int k = 0; k <= 4; ++k) {
    const PolyMatrix2 F = compute_F(k);
    EXPECT_TRUE((G(F.f) * G(F.g) - G(F.h) * G(F.t)).is_constant(1)) << "k=" << k;
  }
}

TEST(ComputeF, TraceStructure) {
  Int lead = 1;
  for (int k = 1; k <= 7; ++k) {
    lead *= -4;
    const MultilinearPoly p = trace_polynomial(k);
    EXPECT_EQ(degree(p), 2 * k);
    EXPECT_EQ(coefficient(p, Monomial{(std::uint32_t{1} << (2 * k)) - 1}), lead);
    EXPECT_EQ(coefficient(p, Monomial::one()), Int{2});
    for (int s = 1; s < k; ++s) EXPECT_EQ(rotate_pairs(p, s), p) << "k=" << k << " shift=" << s;
  }
}

TEST(ComputeFSigma, AgreesWithSubstitution) {
  for (int k = 0; k <= 3; ++k)
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      const SignSequence sigma(k, mask);
      EXPECT_EQ(compute_F_sigma(k, sigma), substitute_signs(compute_F(k), sigma)) << sigma.to_string();
    }
}

TEST(ComputeFSigma, MatchesSchoolbookProduct) {
  const int k = 3;
  for (std::uint32_t mask : {0u, 1u, 0b101101u, 63u}) {
    const SignSequence sigma(k, mask);
    const int n = 2 * k;
    const oracle::GeneralMatrix R = oracle::product_of_powers(k, [&](int slot) {
      return oracle::GeneralPoly::constant(n, sigma.at(slot)) *
             (oracle::GeneralPoly::constant(n, 1) + oracle::GeneralPoly::var(n, slot));
    });
    EXPECT_EQ(compute_F_sigma(k, sigma).trace(), (R.e11 + R.e22).to_multilinear());
  }
  EXPECT_EQ(compute_F_sigma(1, SignSequence::parse("+-")).trace(), P("6 + 4*x1 + 4*y1 + 4*x1*y1", 1));
  EXPECT_THROW(compute_F_sigma(2, SignSequence::parse("++")), ShapeError);
}

TEST(TraceComb, Examples) {
  const Constants& c = constants();
  const PolyMatrix2 F1 = compute_F(1);
  EXPECT_EQ(trace_comb(F1, c.A4), P("2 - 4*x1 - 4*y1 - 12*x1*y1", 1));
  EXPECT_EQ(trace_comb(F1, c.E), trace_polynomial(1));
  EXPECT_EQ(trace_comb(F1, c.A1), F1.f);
}

TEST(TraceComb, IsTraceOfProduct) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  const PolyMatrix2 F = compute_F(2);
  const oracle::GeneralMatrix R = oracle::raw_F(2);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix2 m = M(entry(rng), entry(rng), entry(rng), entry(rng));
    auto k = [](Int v) { return oracle::GeneralPoly::constant(4, v); };
    const oracle::GeneralMatrix prod = R * oracle::GeneralMatrix{k(m.a), k(m.c), k(m.b), k(m.d)};
    EXPECT_EQ(trace_comb(F, m), (prod.e11 + prod.e22).to_multilinear()) << m.to_string();
  }
}
