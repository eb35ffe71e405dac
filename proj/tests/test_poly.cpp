#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tracesign/poly.hpp"

using namespace tracesign;

namespace {

MultilinearPoly P(const char* text, int k) { return parse_text(text, k); }

constexpr Monomial kX1{0b0001}, kY1{0b0010}, kX1Y1{0b0011};

}  // namespace

TEST(Poly, AddExamples) {
  // f_1 + g_1 = p_1
  EXPECT_EQ(add(P("1 - 4*x1*y1", 1), P("1", 1)), P("2 - 4*x1*y1", 1));
  const MultilinearPoly p = P("3 - x1 + 7*x1*y1", 1);
  EXPECT_EQ(p + MultilinearPoly(1), p);
  const MultilinearPoly zero = P("2*x1", 1) + P("-2*x1", 1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.size(), 0u);
}

TEST(Poly, AddRejectsMismatchedK) { EXPECT_THROW(add(P("1", 1), P("1", 2)), ShapeError); }

TEST(Poly, MulDisjointExamples) {
  EXPECT_EQ(mul_disjoint(P("1 - 4*x1*y1", 2), P("1 - 4*x2*y2", 2)),
            P("1 - 4*x1*y1 - 4*x2*y2 + 16*x1*y1*x2*y2", 2));
  const MultilinearPoly p = P("5 + x1 - 3*y2", 2);
  EXPECT_EQ(mul_disjoint(p, MultilinearPoly::constant(2, 1)), p);
  EXPECT_EQ(mul_disjoint(P("2*x1", 2), P("-2*y2", 2)), P("-4*x1*y2", 2));
}

TEST(Poly, MulDisjointRejectsSharedVariables) {
  EXPECT_THROW(mul_disjoint(P("x1 + 1", 1), P("x1*y1", 1)), ShapeError);
}

TEST(Poly, MulDisjointMatchesSchoolbookOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    // Split the 6 slots at random into two disjoint halves.
    const std::uint32_t left = std::uniform_int_distribution<std::uint32_t>(0, 63)(rng);
    auto restrict_to = [](const MultilinearPoly& p, std::uint32_t allowed) {
      std::vector<Term> t;
      for (const Term& term : p.terms()) t.push_back({Monomial{term.mono.mask & allowed}, term.coeff});
      return MultilinearPoly::from_terms(p.k(), t);
    };
    const MultilinearPoly a = restrict_to(oracle::random_poly(rng, 3), left);
    const MultilinearPoly b = restrict_to(oracle::random_poly(rng, 3), ~left & 63u);
    const auto expected = (oracle::GeneralPoly::from(a) * oracle::GeneralPoly::from(b)).to_multilinear();
    EXPECT_EQ(mul_disjoint(a, b), expected);
  }
}

TEST(Poly, ScaleExamples) {
  EXPECT_EQ(scale(P("2*x1", 1), -2), P("-4*x1", 1));
  const MultilinearPoly p = P("1 - x1*y1", 1);
  EXPECT_EQ(scale(p, 1), p);
  EXPECT_EQ(scale(P("1 - 4*x1*y1", 1), 3), P("3 - 12*x1*y1", 1));
  EXPECT_TRUE(scale(p, 0).is_zero());
}

TEST(Poly, SubstituteSignsExamples) {
  const MultilinearPoly p1 = P("2 - 4*x1*y1", 1);
  EXPECT_EQ(substitute_signs(p1, SignSequence::parse("++")), P("-2 - 4*x1 - 4*y1 - 4*x1*y1", 1));
  EXPECT_EQ(substitute_signs(p1, SignSequence::parse("+-")), P("6 + 4*x1 + 4*y1 + 4*x1*y1", 1));
  const MultilinearPoly one = MultilinearPoly::constant(2, 1);
  for (std::uint32_t mask = 0; mask < 16; ++mask) EXPECT_EQ(substitute_signs(one, SignSequence(2, mask)), one);
}

TEST(Poly, SubstituteSignsRejectsWrongLength) {
  EXPECT_THROW(substitute_signs(P("x1", 1), SignSequence::parse("++++")), ShapeError);
}

TEST(Poly, SubstituteSignsMatchesExpansionOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    const MultilinearPoly p = oracle::random_poly(rng, k);
    const SignSequence sigma(k, std::uniform_int_distribution<std::uint32_t>(0, (1u << (2 * k)) - 1)(rng));
    EXPECT_EQ(substitute_signs(p, sigma), oracle::substitute_by_expansion(p, sigma)) << to_text(p);
  }
}

TEST(Poly, EvaluateExamples) {
  const std::vector<Int> ones2{1, 1};
  EXPECT_EQ(evaluate(P("2 - 4*x1*y1", 1), ones2), Int{-2});
  const MultilinearPoly p = P("7 + 3*x1 - y2*x2", 2);
  const std::vector<Int> zeros(4, 0);
  EXPECT_EQ(evaluate(p, zeros), Int{7});
  // p_2 from the independent expansion of tr(F_2)
  const MultilinearPoly p2 = P("2 - 4*x1*y1 - 4*x1*y2 - 4*x2*y1 - 4*x2*y2 + 16*x1*y1*x2*y2", 2);
  const std::vector<Int> ones4(4, 1);
  EXPECT_EQ(evaluate(p2, ones4), Int{2});
  EXPECT_THROW(evaluate(p2, ones2), ShapeError);
}

TEST(Poly, SignPatternExamples) {
  EXPECT_EQ(sign_pattern(P("-2 - 4*x1 - 4*y1 - 4*x1*y1", 1)).tag, SignTag::AllNonpos);
  EXPECT_EQ(sign_pattern(MultilinearPoly(1)).tag, SignTag::Zero);
  const SignPattern mixed = sign_pattern(P("1 - 4*x1*y1", 1));
  ASSERT_EQ(mixed.tag, SignTag::Mixed);
  EXPECT_EQ(*mixed.positive_witness, Monomial::one());
  EXPECT_EQ(*mixed.negative_witness, kX1Y1);
  const SignPattern pos = sign_pattern(P("3 + x1", 1));
  EXPECT_EQ(pos.tag, SignTag::AllNonneg);
  EXPECT_FALSE(pos.positive_witness);
}

TEST(Poly, DegreeAndCoefficient) {
  EXPECT_EQ(degree(P("2 - 4*x1*y1", 1)), 2);
  EXPECT_EQ(coefficient(P("1 - 4*x1*y1", 1), kX1Y1), Int{-4});
  EXPECT_EQ(coefficient(P("1 - 4*x1*y1", 1), kX1), Int{0});
  EXPECT_EQ(degree(MultilinearPoly(3)), std::nullopt);
  EXPECT_EQ(degree(MultilinearPoly::constant(0, 5)), 0);
}

TEST(Poly, ZeroPairsAreConstants) {
  const MultilinearPoly c = MultilinearPoly::constant(0, 2);
  EXPECT_EQ(c.num_vars(), 0);
  EXPECT_EQ(substitute_signs(c, SignSequence()), c);
  EXPECT_EQ(evaluate(c, {}), Int{2});
  EXPECT_THROW(MultilinearPoly::from_terms(0, {{kX1, 1}}), ShapeError);
}

TEST(Poly, FromTermsCanonicalizes) {
  const MultilinearPoly p = MultilinearPoly::from_terms(1, {{kX1Y1, 2}, {kX1, 1}, {kX1Y1, -2}, {kY1, 0}, {kX1, 4}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0], (Term{kX1, 5}));
  EXPECT_THROW(MultilinearPoly::from_terms(1, {{Monomial{0b100}, 1}}), ShapeError);
}

TEST(Poly, OverflowPropagates) {
  const Int huge = Int::from_raw(static_cast<Int::raw_type>(1) << 120);
  const MultilinearPoly p = MultilinearPoly::from_terms(1, {{kX1, huge}});
  EXPECT_THROW(scale(p, 1 << 10), OverflowError);
  EXPECT_THROW(mul_disjoint(p, MultilinearPoly::from_terms(1, {{kY1, huge}})), OverflowError);
}

TEST(Poly, RotatePairs) {
  const MultilinearPoly p = P("x1 + 3*y2 - x1*y2", 2);
  EXPECT_EQ(rotate_pairs(p, 1), P("x2 + 3*y1 - x2*y1", 2));
  EXPECT_EQ(rotate_pairs(p, 2), p);
}

// Invariants over random inputs.

TEST(PolyProperty, MultilinearityClosure) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    const MultilinearPoly p = oracle::random_poly(rng, k), q = oracle::random_poly(rng, k);
    const SignSequence sigma(k, static_cast<std::uint32_t>(rng()) & ((1u << (2 * k)) - 1));
    for (const MultilinearPoly& r : {p + q, scale(p, -3), substitute_signs(p, sigma)}) {
      EXPECT_TRUE(oracle::GeneralPoly::from(r).is_multilinear());
      for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(r.terms()[i - 1].mono, r.terms()[i].mono);
      for (const Term& t : r.terms()) EXPECT_FALSE(t.coeff.is_zero());
    }
  }
}

TEST(PolyProperty, SubstitutionCommutesWithEvaluation) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4;
    const MultilinearPoly p = oracle::random_poly(rng, k);
    const SignSequence sigma(k, static_cast<std::uint32_t>(rng()) & ((1u << (2 * k)) - 1));
    std::vector<Int> v(2 * k), w(2 * k);
    for (int s = 0; s < 2 * k; ++s) {
      v[s] = coord(rng);
      w[s] = Int{sigma.at(s)} * (Int{1} + v[s]);
    }
    EXPECT_EQ(evaluate(substitute_signs(p, sigma), v), evaluate(p, w));
  }
}

TEST(PolyProperty, SubstitutionIsLinear) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    const MultilinearPoly p = oracle::random_poly(rng, k), q = oracle::random_poly(rng, k);
    const SignSequence sigma(k, static_cast<std::uint32_t>(rng()) & ((1u << (2 * k)) - 1));
    EXPECT_EQ(substitute_signs(p + q, sigma), substitute_signs(p, sigma) + substitute_signs(q, sigma));
    EXPECT_EQ(substitute_signs(scale(p, -5), sigma), scale(substitute_signs(p, sigma), -5));
  }
}

TEST(PolyProperty, SerializationRoundTrips) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = trial % 5;
    const MultilinearPoly p = oracle::random_poly(rng, k, 20, 1000);
    EXPECT_EQ(parse_json(to_json(p)), p);
    EXPECT_EQ(parse_text(to_text(p), k), p) << to_text(p);
  }
}

TEST(PolyIo, CanonicalTextForm) {
  EXPECT_EQ(to_text(P("6 + 4*x1 + 4*y1 + 4*x1*y1", 1)), "6 + 4*x1 + 4*y1 + 4*x1*y1");
  EXPECT_EQ(to_text(P("-4*x1*y1 + 2", 1)), "2 - 4*x1*y1");
  EXPECT_EQ(to_text(P("-x1", 1)), "-1*x1");
  EXPECT_EQ(to_text(MultilinearPoly(2)), "0");
  EXPECT_EQ(to_csv(P("2 - 4*x1*y1", 1)), "mask,coeff\n0,2\n3,-4\n");
  EXPECT_EQ(to_json(P("2 - 4*x1*y1", 1)),
            R"({"k":1,"terms":[{"coeff":"2","vars":[]},{"coeff":"-4","vars":[0,1]}]})");
}

TEST(PolyIo, ParseErrors) {
  EXPECT_THROW(parse_text("x1*x1"), std::invalid_argument);
  EXPECT_THROW(parse_text("2 +"), std::invalid_argument);
  EXPECT_THROW(parse_text("z1"), std::invalid_argument);
  EXPECT_THROW(parse_text("x3", 2), ShapeError);
  EXPECT_THROW(parse_json(R"({"k":1,"terms":[{"vars":[2],"coeff":"1"}]})"), ShapeError);
}

TEST(SignSequence, ParseAndMask) {
  const SignSequence s = SignSequence::parse("+-\xE2\x88\x92+");
  EXPECT_EQ(s.k(), 2);
  EXPECT_EQ(s.mask(), 0b0110u);
  EXPECT_EQ(s.to_string(), "+--+");
  EXPECT_EQ(s.negatives(), 2);
  EXPECT_THROW(SignSequence::parse("+-+"), std::invalid_argument);
  EXPECT_THROW(SignSequence::parse("+a"), std::invalid_argument);
}
