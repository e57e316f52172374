#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qwick/expansion.hpp"
#include "qwick/rational.hpp"
#include "qwick/wick.hpp"

namespace qwick {

/// Truncated q-Fock space over Q^dim holding tensors of degree <= level.
struct FockParams {
  int dim = 2;
  int level = 4;
  Rational q = Rational(1, 3);
};

/// An element f of the real one-particle space, in the orthonormal basis
/// e_0, ..., e_{dim-1}.
struct OneParticleVector {
  std::vector<Rational> coords;

  static OneParticleVector basis(int dim, int k);
  friend bool operator==(const OneParticleVector&, const OneParticleVector&) = default;
};

/// <f, g> on the one-particle space; throws DomainError on mismatched sizes.
Rational dot(const OneParticleVector& f, const OneParticleVector& g);

/// Basis tensor e_{w0} (x) e_{w1} (x) ...; letters are 0-based basis indices
/// and the empty word is the vacuum.
using BasisWord = std::vector<int>;

/// Finitely supported exact combination of basis tensors. Zero coefficients
/// are never stored.
class FockVector {
 public:
  using Entries = std::map<BasisWord, Rational>;

  FockVector() = default;
  /// The unit vacuum vector.
  static FockVector vacuum();
  static FockVector basis(BasisWord word, const Rational& coeff = 1);
  /// f_1 (x) ... (x) f_n expanded over basis words.
  static FockVector elementary_tensor(const std::vector<OneParticleVector>& factors);

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Rational coefficient(const BasisWord& word) const;
  Rational vacuum_coefficient() const { return coefficient({}); }
  /// -1 for the zero vector.
  int max_degree() const;

  void add(const BasisWord& word, const Rational& coeff);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector scaled(const Rational& factor) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Entries entries_;
};

/// Variables xi_label = phi(f_label). Lookups of absent labels throw
/// LookupError.
using Assignment = std::map<Label, OneParticleVector>;

inline constexpr int kDefaultPermutationCap = 8;

/// The q-deformed inner product, summing q^{inversions(pi)} over all
/// permutations pi pairing equal-length words. Throws SizeLimitError for
/// words longer than `max_degree`.
Rational q_inner(const FockVector& u, const FockVector& v, const FockParams& params,
                 int max_degree = kDefaultPermutationCap);

/// a+(f): prepends f. Throws TruncationError if u has a word of length level.
FockVector create(const OneParticleVector& f, const FockVector& u, const FockParams& params);
/// a-(f): sum over letters i of q^{i-1} <f, e_{w_i}> times the word with
/// letter i deleted.
FockVector annihilate(const OneParticleVector& f, const FockVector& u, const FockParams& params);
/// phi(f) = a+(f) + a-(f).
FockVector field_apply(const OneParticleVector& f, const FockVector& u, const FockParams& params);

/// Applies the letters right to left.
FockVector apply_operator_word(const OperatorWord& w, const Assignment& assignment,
                               const FockVector& u, const FockParams& params);
/// phi(f_{l1}) ... phi(f_{lr}) u, rightmost first.
FockVector apply_field_word(const std::vector<Label>& labels, const Assignment& assignment,
                            const FockVector& u, const FockParams& params);
/// Sum of q^{power} * word * u over the summands.
FockVector apply_wick_form(const WickOperatorForm& form, const Assignment& assignment,
                           const FockVector& u, const FockParams& params);

/// <w Omega, Omega>. Intermediate tensors too long to be brought back to the
/// vacuum by the remaining annihilators are dropped, which leaves the vacuum
/// coefficient unchanged.
Rational vacuum_expectation(const OperatorWord& w, const Assignment& assignment,
                            const FockParams& params);
/// E(phi(f_{l1}) ... phi(f_{lr})).
Rational vacuum_expectation(const std::vector<Label>& field_labels, const Assignment& assignment,
                            const FockParams& params);

/// Each covariance becomes a dot product, each coefficient is evaluated at
/// params.q, normal words act as products of fields and Wick words through
/// their creator/annihilator form; the result is the operator applied to the
/// vacuum.
FockVector evaluate_on_vacuum(const Expansion& e, const Assignment& assignment,
                              const FockParams& params);
/// Vacuum coefficient of evaluate_on_vacuum, i.e. the expectation of e.
Rational evaluate_expectation(const Expansion& e, const Assignment& assignment,
                              const FockParams& params);
/// Rational value of a covariance monomial.
Rational evaluate_covariance(const CovarianceMonomial& cov, const Assignment& assignment);

struct GramReport {
  bool positive_definite = false;
  std::size_t size = 0;
  /// Leading principal minors, computed until the first non-positive one.
  std::vector<Rational> leading_minors;
};

/// Gram matrix of all dim^degree basis words under q_inner, tested for
/// positive definiteness by the signs of its leading principal minors.
/// Throws DomainError unless -1 < q < 1.
GramReport gram_check(int degree, const FockParams& params,
                      int max_degree = kDefaultPermutationCap);

}  // namespace qwick
