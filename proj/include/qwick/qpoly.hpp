#pragma once

#include <map>
#include <string>

#include "qwick/rational.hpp"

namespace qwick {

/// Polynomial in the formal variable q with exact rational coefficients.
/// Zero coefficients are never stored, so the empty map is the zero
/// polynomial and equality is structural.
class QPolynomial {
 public:
  using Terms = std::map<unsigned, Rational>;

  QPolynomial() = default;
  /// The constant polynomial c.
  QPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  QPolynomial(long c) : QPolynomial(Rational(c)) {}  // NOLINT
  QPolynomial(int c) : QPolynomial(Rational(c)) {}   // NOLINT

  static QPolynomial monomial(unsigned exponent, const Rational& coeff = 1);
  static QPolynomial q_power(unsigned exponent) { return monomial(exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(unsigned exponent) const;

  /// Horner evaluation at q = q0.
  Rational eval(const Rational& q0) const;
  /// Exponent-0 part only; the q = 0 convention q^0 = 1, q^c = 0 (c > 0).
  QPolynomial constant_part() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial operator-() const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  /// Human-readable form such as "1 + q^2" or "-1/2*q".
  std::string to_string() const;

 private:
  void add_term(unsigned exponent, const Rational& coeff);

  Terms terms_;
};

inline Rational qpoly_eval(const QPolynomial& p, const Rational& q0) { return p.eval(q0); }

}  // namespace qwick
