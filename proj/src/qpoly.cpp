#include "qwick/qpoly.hpp"

#include <string>

namespace qwick {

QPolynomial::QPolynomial(const Rational& c) { add_term(0, c); }

QPolynomial QPolynomial::monomial(unsigned exponent, const Rational& coeff) {
  QPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

int QPolynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

Rational QPolynomial::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QPolynomial::eval(const Rational& q0) const {
  Rational acc = 0;
  int next = degree();
  auto it = terms_.rbegin();
  for (int e = next; e >= 0; --e) {
    acc *= q0;
    if (it != terms_.rend() && static_cast<int>(it->first) == e) {
      acc += it->second;
      ++it;
    }
  }
  return acc;
}

QPolynomial QPolynomial::constant_part() const { return QPolynomial(coefficient(0)); }

void QPolynomial::add_term(unsigned exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

QPolynomial QPolynomial::operator-() const {
  QPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string var = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
    if (e == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += var;
    } else {
      out += mag.get_str() + "*" + var;
    }
  }
  return out;
}

}  // namespace qwick
