#include <gtest/gtest.h>

#include <random>

#include "cayleypair/error.hpp"
#include "cayleypair/polynomial.hpp"

using namespace cayleypair;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<BigInt> c(deg + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

}  // namespace

TEST(IntPolynomial, CanonicalForm) {
  IntPolynomial p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(IntPolynomial, Arithmetic) {
  IntPolynomial a = IntPolynomial::linear(3);  // x - 3
  IntPolynomial b = IntPolynomial::linear(-2);
  EXPECT_EQ(a * b, IntPolynomial({-6, -1, 1}));
  EXPECT_EQ((a * b).to_string(), "x^2 - x - 6");
  EXPECT_EQ(a.negate_variable(), IntPolynomial({-3, -1}));
  EXPECT_EQ(a.pow(3).evaluate(5), 8);
  EXPECT_EQ(IntPolynomial({1, 1, 1}).compose(IntPolynomial({0, 2})), IntPolynomial({1, 2, 4}));
  EXPECT_EQ(IntPolynomial({1, 2, 3, 4}).truncated(1), IntPolynomial({1, 2}));
}

TEST(IntPolynomial, ExactDivision) {
  IntPolynomial p = IntPolynomial::linear(3) * IntPolynomial::x().pow(2);
  EXPECT_EQ(exact_divide(p, IntPolynomial::x()), IntPolynomial::linear(3) * IntPolynomial::x());
  EXPECT_THROW(exact_divide(p, IntPolynomial::linear(1)), VerificationFailure);
  EXPECT_THROW(divide(p, IntPolynomial()), InvalidInput);
  // Non-monic divisor with an inexact step.
  EXPECT_THROW(divide(IntPolynomial({1, 1}), IntPolynomial({0, 2})), VerificationFailure);
}

TEST(IntPolynomialProperty, ExactDivideRecoversFactor) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial a = random_poly(rng, trial % 8);
    std::vector<BigInt> bc = random_poly(rng, 1 + trial % 5).coefficients();
    bc.back() = trial % 2 ? 1 : -1;
    IntPolynomial b(bc);
    ASSERT_EQ(exact_divide(a * b, b), a);
    auto [q, r] = divide(a * b + IntPolynomial({1}), b);
    ASSERT_EQ(q * b + r, a * b + IntPolynomial({1}));
    ASSERT_LT(r.degree(), b.degree());
  }
}

TEST(Factorization, ExpandAndPrint) {
  Factorization f;
  f.factors = {{IntPolynomial::linear(3), 1}, {IntPolynomial::x(), 2}};
  EXPECT_EQ(f.expand(), IntPolynomial({0, 0, -3, 1}));
  EXPECT_EQ(f.to_string(), "(x - 3)x^2");
}

TEST(IntPolynomial, JsonRoundTrip) {
  BigInt big("123456789012345678901234567890");
  IntPolynomial p({BigInt(0), BigInt(-4), big});
  nlohmann::json j = to_json_coefficients(p);
  EXPECT_EQ(j[2], "123456789012345678901234567890");
  EXPECT_EQ(from_json_coefficients(j), p);
}
