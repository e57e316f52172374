#include "qwick/serialize.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qwick/errors.hpp"
#include "qwick/wick.hpp"

namespace qwick {
namespace {

TEST(Json, WickToNormalTwoVariables) {
  const Json j = to_json(wick_to_normal(2));
  const Json expected = Json::parse(R"([
    {"cov": [], "word": [1, 2], "kind": "normal", "poly": [{"exp": 0, "num": 1, "den": 1}]},
    {"cov": [[1, 2]], "word": [], "kind": "normal", "poly": [{"exp": 0, "num": -1, "den": 1}]}
  ])");
  EXPECT_EQ(j, expected);
}

TEST(Json, QPolynomialLayout) {
  const QPolynomial p = QPolynomial(Rational(1, 2)) + QPolynomial::monomial(3, -2);
  EXPECT_EQ(to_json(p), Json::parse(R"([{"exp":0,"num":1,"den":2},{"exp":3,"num":-2,"den":1}])"));
  EXPECT_EQ(to_json(QPolynomial()), Json::array());
}

TEST(Json, BigCoefficientsAsStrings) {
  Rational big(mpz_class("123456789012345678901234567891"), mpz_class(7));
  big.canonicalize();
  const Json j = to_json(QPolynomial(big));
  EXPECT_TRUE(j[0]["num"].is_string());
  EXPECT_EQ(qpoly_from_json(j), QPolynomial(big));
}

TEST(Json, RoundTripAndByteStability) {
  for (const Expansion& e : {moment_expansion(6), wick_to_normal(5), normal_to_wick(5),
                             product_expansion({2, 1, 2})}) {
    const Json j = to_json(e);
    EXPECT_EQ(expansion_from_json(j), e);
    EXPECT_EQ(j.dump(), to_json(expansion_from_json(j)).dump());
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Expansion e;
    for (int k = 0; k < 6; ++k) {
      Label i = 1 + static_cast<Label>(rng() % 5), j = 1 + static_cast<Label>(rng() % 5);
      CovarianceMonomial c = i == j ? CovarianceMonomial() : CovarianceMonomial({{i, j}});
      std::vector<Label> w(rng() % 3);
      for (auto& l : w) l = 1 + static_cast<Label>(rng() % 5);
      Rational coeff(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
      coeff.canonicalize();
      e.add({c, {w, rng() % 2 ? WordKind::wick : WordKind::normal}},
            QPolynomial::monomial(static_cast<unsigned>(rng() % 4), coeff));
    }
    ASSERT_EQ(expansion_from_json(to_json(e)), e);
  }
}

TEST(Json, RejectsBadInput) {
  EXPECT_THROW(expansion_from_json(Json::parse(
                   R"([{"cov":[],"word":[1],"kind":"odd","poly":[{"exp":0,"num":1,"den":1}]}])")),
               DomainError);
  EXPECT_THROW(qpoly_from_json(Json::parse(R"([{"exp":0,"num":1,"den":0}])")), DomainError);
}

TEST(Json, DiagramAndStats) {
  FeynmanDiagram d(GroundSet::with_blocks({2, 1}), {{2, 3}});
  EXPECT_EQ(to_json(d), Json::parse(R"({"size":3,"blocks":[2,1],"pairs":[[2,3]]})"));
  EXPECT_EQ(to_json(FeynmanDiagram(GroundSet(2), {}))["blocks"], Json(nullptr));
  const Json s = to_json(crossing_stats(FeynmanDiagram(GroundSet(3), {{1, 3}})));
  EXPECT_EQ(s["d"], 1);
  EXPECT_EQ(s["tc"], 1);
  EXPECT_EQ(s["per_pair"][0]["gap"], 1);
}

TEST(Json, OperatorFormAndFockVector) {
  const Json f = to_json(wick_operator_form(1));
  EXPECT_EQ(f, Json::parse(R"([{"word":[[1,1]],"qpow":0},{"word":[[-1,1]],"qpow":0}])"));
  FockVector v = FockVector::vacuum();
  v.add({1, 0}, Rational(2, 3));
  EXPECT_EQ(to_json(v), Json::parse(R"({"":"1","2,1":"2/3"})"));
}

TEST(Pretty, Rendering) {
  EXPECT_EQ(to_pretty(wick_to_normal(2)), "xi1 xi2\n-c(1,2)\n");
  EXPECT_EQ(to_pretty(normal_to_wick(2)), ":xi1 xi2:\nc(1,2)\n");
  EXPECT_EQ(to_pretty(Expansion()), "0\n");
  Expansion e = Expansion::term({CovarianceMonomial({{1, 3}}), {{2}, WordKind::normal}},
                                QPolynomial(1) + QPolynomial::q_power(2));
  EXPECT_EQ(to_pretty(e), "(1 + q^2) * c(1,3) xi2\n");
}

TEST(Csv, OneRowPerExponent) {
  Expansion e = Expansion::term({CovarianceMonomial({{1, 3}}), {{2}, WordKind::wick}},
                                QPolynomial(1) + QPolynomial::monomial(2, Rational(-1, 2)));
  EXPECT_EQ(to_csv(e), "cov,word,kind,exp,num,den\n1-3,2,wick,0,1,1\n1-3,2,wick,2,-1,2\n");
}

}  // namespace
}  // namespace qwick
