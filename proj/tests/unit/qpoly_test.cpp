#include "qwick/qpoly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qwick/diagram.hpp"
#include "qwick/errors.hpp"

namespace qwick {
namespace {

QPolynomial random_poly(std::mt19937_64& rng) {
  QPolynomial p;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Rational c(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
    c.canonicalize();
    p += QPolynomial::monomial(static_cast<unsigned>(rng() % 6), c);
  }
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  Rational r(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1);
  r.canonicalize();
  return r;
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("0.5"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("a/b"), DomainError);
}

TEST(QPolynomial, EvalExamples) {
  EXPECT_EQ(QPolynomial::q_power(1).eval(Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ((QPolynomial(1) + QPolynomial::q_power(1)).eval(0), 1);

  QPolynomial touchard;
  for_each_complete(GroundSet(6), [&](const FeynmanDiagram& d) {
    touchard += QPolynomial::q_power(crossing_stats(d).crossings);
  });
  EXPECT_EQ(qpoly_eval(touchard, 1), 15);
  EXPECT_EQ(qpoly_eval(touchard, 0), 5);
  // 5 + 6q + 3q^2 + q^3 for six points.
  EXPECT_EQ(touchard, QPolynomial(5) + QPolynomial::monomial(1, 6) + QPolynomial::monomial(2, 3) +
                          QPolynomial::q_power(3));
}

TEST(QPolynomial, CanonicalNoZeros) {
  QPolynomial p = QPolynomial::q_power(2) - QPolynomial::q_power(2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  EXPECT_TRUE(QPolynomial(0).is_zero());
  EXPECT_TRUE(QPolynomial::monomial(3, 0).terms().empty());
}

TEST(QPolynomial, ToString) {
  EXPECT_EQ((QPolynomial(1) + QPolynomial::q_power(2)).to_string(), "1 + q^2");
  EXPECT_EQ(QPolynomial::monomial(1, Rational(-1, 2)).to_string(), "-1/2*q");
  EXPECT_EQ(QPolynomial().to_string(), "0");
  EXPECT_EQ((QPolynomial(2) - QPolynomial::q_power(1)).to_string(), "2 - q");
}

TEST(QPolynomial, RingLawsRandomized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const QPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * QPolynomial(1), a);
    ASSERT_TRUE((a * QPolynomial()).is_zero());
  }
}

TEST(QPolynomial, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const QPolynomial a = random_poly(rng), b = random_poly(rng);
    const Rational x = random_rational(rng);
    ASSERT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    ASSERT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
  }
}

TEST(QPolynomial, ConstantPartIsEvalAtZero) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const QPolynomial a = random_poly(rng);
    ASSERT_EQ(a.constant_part(), QPolynomial(a.eval(0)));
  }
}

}  // namespace
}  // namespace qwick
