#include "qwick/fock.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qwick/errors.hpp"

namespace qwick {

OneParticleVector OneParticleVector::basis(int dim, int k) {
  OneParticleVector f{std::vector<Rational>(dim, Rational(0))};
  f.coords.at(k) = 1;
  return f;
}

Rational dot(const OneParticleVector& f, const OneParticleVector& g) {
  if (f.coords.size() != g.coords.size()) throw DomainError("one-particle vectors differ in size");
  Rational acc = 0;
  for (std::size_t k = 0; k < f.coords.size(); ++k) acc += f.coords[k] * g.coords[k];
  return acc;
}

FockVector FockVector::vacuum() { return basis({}); }

FockVector FockVector::basis(BasisWord word, const Rational& coeff) {
  FockVector v;
  v.add(word, coeff);
  return v;
}

FockVector FockVector::elementary_tensor(const std::vector<OneParticleVector>& factors) {
  FockVector out = vacuum();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    FockVector next;
    for (const auto& [word, c] : out.entries_) {
      for (std::size_t k = 0; k < it->coords.size(); ++k) {
        if (it->coords[k] == 0) continue;
        BasisWord w;
        w.reserve(word.size() + 1);
        w.push_back(static_cast<int>(k));
        w.insert(w.end(), word.begin(), word.end());
        next.add(w, c * it->coords[k]);
      }
    }
    out = std::move(next);
  }
  return out;
}

Rational FockVector::coefficient(const BasisWord& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? Rational(0) : it->second;
}

int FockVector::max_degree() const {
  int deg = -1;
  for (const auto& [word, c] : entries_) deg = std::max(deg, static_cast<int>(word.size()));
  return deg;
}

void FockVector::add(const BasisWord& word, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = entries_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [w, c] : other.entries_) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [w, c] : other.entries_) add(w, -c);
  return *this;
}

FockVector FockVector::scaled(const Rational& factor) const {
  FockVector out;
  if (factor == 0) return out;
  for (const auto& [w, c] : entries_) out.entries_.emplace(w, c * factor);
  return out;
}

namespace {

void check_letters(const BasisWord& w, const FockParams& params) {
  for (int letter : w) {
    if (letter < 0 || letter >= params.dim) throw DomainError("basis letter outside the dimension");
  }
}

// Number of inversions of a permutation of 0..n-1.
unsigned inversions(const std::vector<int>& perm) {
  unsigned count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++count;
    }
  }
  return count;
}

// <e_w, e_v>_q for basis words of equal length: the sum of q^{iota(pi)} over
// permutations with w_i = v_{pi(i)} for every i.
Rational basis_inner(const BasisWord& w, const BasisWord& v, const Rational& q) {
  std::vector<int> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational acc = 0;
  do {
    bool match = true;
    for (std::size_t i = 0; i < w.size() && match; ++i) match = w[i] == v[perm[i]];
    if (!match) continue;
    Rational term = 1;
    for (unsigned k = inversions(perm); k > 0; --k) term *= q;
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

std::vector<Rational> powers(const Rational& q, int count) {
  std::vector<Rational> out(std::max(count, 1));
  out[0] = 1;
  for (int k = 1; k < count; ++k) out[k] = out[k - 1] * q;
  return out;
}

const OneParticleVector& lookup(const Assignment& assignment, Label label) {
  auto it = assignment.find(label);
  if (it == assignment.end()) {
    throw LookupError("no one-particle vector assigned to variable " + std::to_string(label));
  }
  return it->second;
}

void drop_longer_than(FockVector& u, int max_len) {
  FockVector kept;
  for (const auto& [w, c] : u.entries()) {
    if (static_cast<int>(w.size()) <= max_len) kept.add(w, c);
  }
  u = std::move(kept);
}

}  // namespace

Rational q_inner(const FockVector& u, const FockVector& v, const FockParams& params,
                 int max_degree) {
  Rational acc = 0;
  for (const auto& [wu, cu] : u.entries()) {
    for (const auto& [wv, cv] : v.entries()) {
      if (wu.size() != wv.size()) continue;
      if (static_cast<int>(wu.size()) > max_degree) {
        throw SizeLimitError("tensor degree " + std::to_string(wu.size()) +
                             " exceeds the permutation cap of " + std::to_string(max_degree));
      }
      acc += cu * cv * basis_inner(wu, wv, params.q);
    }
  }
  return acc;
}

FockVector create(const OneParticleVector& f, const FockVector& u, const FockParams& params) {
  if (static_cast<int>(f.coords.size()) != params.dim) {
    throw DomainError("one-particle vector has the wrong dimension");
  }
  FockVector out;
  for (const auto& [w, c] : u.entries()) {
    if (static_cast<int>(w.size()) >= params.level) {
      throw TruncationError("creation on a degree-" + std::to_string(w.size()) +
                            " tensor exceeds the truncation level " +
                            std::to_string(params.level));
    }
    for (int k = 0; k < params.dim; ++k) {
      if (f.coords[k] == 0) continue;
      BasisWord next;
      next.reserve(w.size() + 1);
      next.push_back(k);
      next.insert(next.end(), w.begin(), w.end());
      out.add(next, c * f.coords[k]);
    }
  }
  return out;
}

FockVector annihilate(const OneParticleVector& f, const FockVector& u, const FockParams& params) {
  if (static_cast<int>(f.coords.size()) != params.dim) {
    throw DomainError("one-particle vector has the wrong dimension");
  }
  const std::vector<Rational> qpow = powers(params.q, std::max(u.max_degree(), 1));
  FockVector out;
  for (const auto& [w, c] : u.entries()) {
    check_letters(w, params);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Rational& weight = f.coords[w[i]];
      if (weight == 0) continue;
      BasisWord next;
      next.reserve(w.size() - 1);
      next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      out.add(next, c * qpow[i] * weight);
    }
  }
  return out;
}

FockVector field_apply(const OneParticleVector& f, const FockVector& u, const FockParams& params) {
  FockVector out = create(f, u, params);
  out += annihilate(f, u, params);
  return out;
}

FockVector apply_operator_word(const OperatorWord& w, const Assignment& assignment,
                               const FockVector& u, const FockParams& params) {
  FockVector v = u;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const OneParticleVector& f = lookup(assignment, it->index);
    v = it->sign > 0 ? create(f, v, params) : annihilate(f, v, params);
    if (v.is_zero()) break;
  }
  return v;
}

FockVector apply_field_word(const std::vector<Label>& labels, const Assignment& assignment,
                            const FockVector& u, const FockParams& params) {
  FockVector v = u;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    v = field_apply(lookup(assignment, *it), v, params);
    if (v.is_zero()) break;
  }
  return v;
}

FockVector apply_wick_form(const WickOperatorForm& form, const Assignment& assignment,
                           const FockVector& u, const FockParams& params) {
  const std::vector<Rational> qpow = [&] {
    unsigned top = 0;
    for (const auto& s : form.summands) top = std::max(top, s.q_power);
    return powers(params.q, static_cast<int>(top) + 1);
  }();
  FockVector out;
  for (const WickSummand& s : form.summands) {
    out += apply_operator_word(s.word, assignment, u, params).scaled(qpow[s.q_power]);
  }
  return out;
}

Rational vacuum_expectation(const OperatorWord& w, const Assignment& assignment,
                            const FockParams& params) {
  std::vector<int> annihilators_left(w.letters.size() + 1, 0);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    annihilators_left[k + 1] = annihilators_left[k] + (w.letters[k].sign < 0 ? 1 : 0);
  }
  FockVector v = FockVector::vacuum();
  for (std::size_t k = w.letters.size(); k-- > 0;) {
    const OperatorLetter& letter = w.letters[k];
    const OneParticleVector& f = lookup(assignment, letter.index);
    v = letter.sign > 0 ? create(f, v, params) : annihilate(f, v, params);
    drop_longer_than(v, annihilators_left[k]);
    if (v.is_zero()) return 0;
  }
  return v.vacuum_coefficient();
}

Rational vacuum_expectation(const std::vector<Label>& field_labels, const Assignment& assignment,
                            const FockParams& params) {
  FockVector v = FockVector::vacuum();
  for (std::size_t k = field_labels.size(); k-- > 0;) {
    v = field_apply(lookup(assignment, field_labels[k]), v, params);
    drop_longer_than(v, static_cast<int>(k));
    if (v.is_zero()) return 0;
  }
  return v.vacuum_coefficient();
}

Rational evaluate_covariance(const CovarianceMonomial& cov, const Assignment& assignment) {
  Rational acc = 1;
  for (const auto& [i, j] : cov.factors()) acc *= dot(lookup(assignment, i), lookup(assignment, j));
  return acc;
}

FockVector evaluate_on_vacuum(const Expansion& e, const Assignment& assignment,
                              const FockParams& params) {
  FockVector out;
  for (const auto& [key, poly] : e.terms()) {
    Rational scalar = poly.eval(params.q);
    if (scalar == 0) continue;
    scalar *= evaluate_covariance(key.cov, assignment);
    if (scalar == 0) continue;
    FockVector image = key.word.kind == WordKind::wick
                           ? apply_wick_form(wick_operator_form(key.word.indices, key.word.indices.size()),
                                             assignment, FockVector::vacuum(), params)
                           : apply_field_word(key.word.indices, assignment, FockVector::vacuum(), params);
    out += image.scaled(scalar);
  }
  return out;
}

Rational evaluate_expectation(const Expansion& e, const Assignment& assignment,
                              const FockParams& params) {
  Rational acc = 0;
  for (const auto& [key, poly] : e.terms()) {
    Rational scalar = poly.eval(params.q);
    if (scalar == 0) continue;
    scalar *= evaluate_covariance(key.cov, assignment);
    if (scalar == 0) continue;
    if (key.word.empty()) {
      acc += scalar;
    } else if (key.word.kind == WordKind::wick) {
      // A nonempty Wick word sends the vacuum into degree >= 1.
      acc += scalar * apply_wick_form(wick_operator_form(key.word.indices, key.word.indices.size()),
                                      assignment, FockVector::vacuum(), params)
                          .vacuum_coefficient();
    } else {
      acc += scalar * vacuum_expectation(key.word.indices, assignment, params);
    }
  }
  return acc;
}

GramReport gram_check(int degree, const FockParams& params, int max_degree) {
  if (!(params.q > -1 && params.q < 1)) {
    throw DomainError("positivity of the q-inner product needs -1 < q < 1, got q = " +
                      params.q.get_str());
  }
  if (degree < 0) throw DomainError("degree must be non-negative");
  if (degree > max_degree) {
    throw SizeLimitError("degree " + std::to_string(degree) + " exceeds the permutation cap of " +
                         std::to_string(max_degree));
  }
  std::vector<BasisWord> words{BasisWord{}};
  for (int k = 0; k < degree; ++k) {
    std::vector<BasisWord> next;
    for (const BasisWord& w : words) {
      for (int letter = 0; letter < params.dim; ++letter) {
        BasisWord x = w;
        x.push_back(letter);
        next.push_back(std::move(x));
      }
    }
    words = std::move(next);
  }
  const std::size_t n = words.size();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = basis_inner(words[i], words[j], params.q);
  }
  // Elimination without pivoting: the k-th pivot is D_k / D_{k-1}, so the
  // running product of pivots is the k-th leading principal minor.
  GramReport report{true, n, {}};
  Rational minor = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = gram[k][k];
    minor *= pivot;
    report.leading_minors.push_back(minor);
    if (pivot <= 0) {
      report.positive_definite = false;
      return report;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (gram[i][k] == 0) continue;
      const Rational factor = gram[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) gram[i][j] -= factor * gram[k][j];
    }
  }
  return report;
}

}  // namespace qwick
