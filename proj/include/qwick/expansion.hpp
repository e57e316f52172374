#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qwick/diagram.hpp"
#include "qwick/qpoly.hpp"

namespace qwick {

/// Index of a random variable xi_i = phi(f_i).
using Label = int;

/// Product of covariances E(xi_i xi_j), stored as a sorted multiset of
/// unordered pairs (min, max). Covariances are symmetric on a real space.
class CovarianceMonomial {
 public:
  CovarianceMonomial() = default;
  /// Throws DomainError on a factor with i == j.
  explicit CovarianceMonomial(std::vector<std::pair<Label, Label>> factors);

  const std::vector<std::pair<Label, Label>>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  friend CovarianceMonomial operator*(const CovarianceMonomial& a, const CovarianceMonomial& b);
  friend auto operator<=>(const CovarianceMonomial&, const CovarianceMonomial&) = default;
  friend bool operator==(const CovarianceMonomial&, const CovarianceMonomial&) = default;

 private:
  std::vector<std::pair<Label, Label>> factors_;
};

enum class WordKind { normal, wick };

/// An ordered product xi_{i1} ... xi_{ir}, either as an operator product
/// (normal) or as the Wick product :xi_{i1} ... xi_{ir}:. The empty word is
/// the identity under either kind; canonical terms always tag it normal.
struct VariableWord {
  std::vector<Label> indices;
  WordKind kind = WordKind::normal;

  bool empty() const { return indices.empty(); }
  friend auto operator<=>(const VariableWord&, const VariableWord&) = default;
  friend bool operator==(const VariableWord&, const VariableWord&) = default;
};

struct TermKey {
  CovarianceMonomial cov;
  VariableWord word;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical finite sum of QPolynomial * covariance monomial * word. No zero
/// coefficients are stored, so two expansions are equal iff their maps are.
class Expansion {
 public:
  using Terms = std::map<TermKey, QPolynomial>;

  Expansion() = default;

  static Expansion identity() { return scalar(QPolynomial(1)); }
  static Expansion scalar(const QPolynomial& value);
  static Expansion term(TermKey key, const QPolynomial& coeff = QPolynomial(1));
  /// Single bare word with coefficient 1.
  static Expansion word(std::vector<Label> indices, WordKind kind = WordKind::normal);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// True when every word is empty.
  bool is_scalar() const;
  bool has_wick_terms() const;
  /// Largest q-exponent over all coefficients, -1 for the zero expansion.
  int max_q_degree() const;

  void add(TermKey key, const QPolynomial& coeff);

  Expansion& operator+=(const Expansion& other);
  Expansion& operator-=(const Expansion& other);
  /// Multiplies every coefficient by `factor`.
  Expansion scaled(const QPolynomial& factor) const;
  /// Multiplies every covariance monomial by `cov`.
  Expansion times_covariance(const CovarianceMonomial& cov) const;
  /// Left multiplication by the field xi_label: prepends `label` to every
  /// word. Throws DomainError if a Wick-kind word is present.
  Expansion prepend_variable(Label label) const;

  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Terms terms_;
};

/// v(gamma): the covariance product over the pairs times the word of
/// singletons in increasing order, coefficient 1. `labels[p - 1]` is the
/// variable attached to position p; when empty, positions are their own
/// labels.
TermKey v_of_diagram(const FeynmanDiagram& diagram, WordKind kind = WordKind::normal,
                     const std::vector<Label>& labels = {});

/// a + scalar * b.
Expansion expansion_combine(const Expansion& a, const Expansion& b, const QPolynomial& scalar);

using WickRule = std::map<std::vector<Label>, Expansion>;

/// Replaces every Wick-kind term by its coefficient times the rule's
/// expansion for that word (covariances and q-polynomials multiply). Throws
/// LookupError naming the word when the rule has no entry, DomainError when
/// a rule output contains Wick-kind words.
Expansion substitute_wick(const Expansion& e, const WickRule& rule);

/// Keeps only the exponent-0 part of every coefficient.
Expansion specialize_free(const Expansion& e);

}  // namespace qwick
