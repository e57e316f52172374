#include "qwick/expansion.hpp"

#include <algorithm>
#include <string>

#include "qwick/errors.hpp"

namespace qwick {

CovarianceMonomial::CovarianceMonomial(std::vector<std::pair<Label, Label>> factors)
    : factors_(std::move(factors)) {
  for (auto& [i, j] : factors_) {
    if (i == j) throw DomainError("covariance factor needs two distinct indices");
    if (i > j) std::swap(i, j);
  }
  std::sort(factors_.begin(), factors_.end());
}

CovarianceMonomial operator*(const CovarianceMonomial& a, const CovarianceMonomial& b) {
  CovarianceMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

namespace {

TermKey normalized(TermKey key) {
  if (key.word.empty()) key.word.kind = WordKind::normal;
  return key;
}

}  // namespace

Expansion Expansion::scalar(const QPolynomial& value) { return term(TermKey{}, value); }

Expansion Expansion::term(TermKey key, const QPolynomial& coeff) {
  Expansion e;
  e.add(std::move(key), coeff);
  return e;
}

Expansion Expansion::word(std::vector<Label> indices, WordKind kind) {
  return term(TermKey{{}, {std::move(indices), kind}});
}

bool Expansion::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.word.empty(); });
}

bool Expansion::has_wick_terms() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.word.kind == WordKind::wick; });
}

int Expansion::max_q_degree() const {
  int deg = -1;
  for (const auto& [key, poly] : terms_) deg = std::max(deg, poly.degree());
  return deg;
}

void Expansion::add(TermKey key, const QPolynomial& coeff) {
  if (coeff.is_zero()) return;
  key = normalized(std::move(key));
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expansion& Expansion::operator+=(const Expansion& other) {
  for (const auto& [key, poly] : other.terms_) add(key, poly);
  return *this;
}

Expansion& Expansion::operator-=(const Expansion& other) {
  for (const auto& [key, poly] : other.terms_) add(key, -poly);
  return *this;
}

Expansion Expansion::scaled(const QPolynomial& factor) const {
  Expansion out;
  for (const auto& [key, poly] : terms_) out.add(key, poly * factor);
  return out;
}

Expansion Expansion::times_covariance(const CovarianceMonomial& cov) const {
  Expansion out;
  for (const auto& [key, poly] : terms_) out.add({key.cov * cov, key.word}, poly);
  return out;
}

Expansion Expansion::prepend_variable(Label label) const {
  Expansion out;
  for (const auto& [key, poly] : terms_) {
    if (key.word.kind == WordKind::wick && !key.word.empty()) {
      throw DomainError("cannot left-multiply a Wick-kind word by a field");
    }
    TermKey next = key;
    next.word.indices.insert(next.word.indices.begin(), label);
    out.add(std::move(next), poly);
  }
  return out;
}

TermKey v_of_diagram(const FeynmanDiagram& diagram, WordKind kind,
                     const std::vector<Label>& labels) {
  auto label = [&](Position p) { return labels.empty() ? p : labels.at(p - 1); };
  std::vector<std::pair<Label, Label>> factors;
  factors.reserve(diagram.num_pairs());
  for (const Pair& pr : diagram.pairs()) factors.emplace_back(label(pr.left), label(pr.right));
  std::vector<Label> word;
  for (Position p : diagram.singletons()) word.push_back(label(p));
  return normalized(TermKey{CovarianceMonomial(std::move(factors)), {std::move(word), kind}});
}

Expansion expansion_combine(const Expansion& a, const Expansion& b, const QPolynomial& scalar) {
  Expansion out = a;
  out += b.scaled(scalar);
  return out;
}

namespace {

std::string word_name(const std::vector<Label>& indices) {
  std::string s = ":";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    s += (k ? " xi" : "xi") + std::to_string(indices[k]);
  }
  return s + ":";
}

}  // namespace

Expansion substitute_wick(const Expansion& e, const WickRule& rule) {
  Expansion out;
  for (const auto& [key, poly] : e.terms()) {
    if (key.word.kind != WordKind::wick) {
      out.add(key, poly);
      continue;
    }
    auto it = rule.find(key.word.indices);
    if (it == rule.end()) {
      throw LookupError("no substitution rule for Wick word " + word_name(key.word.indices));
    }
    for (const auto& [rkey, rpoly] : it->second.terms()) {
      if (rkey.word.kind == WordKind::wick) {
        throw DomainError("substitution rule for " + word_name(key.word.indices) +
                          " contains Wick-kind words");
      }
      out.add({key.cov * rkey.cov, rkey.word}, poly * rpoly);
    }
  }
  return out;
}

Expansion specialize_free(const Expansion& e) {
  Expansion out;
  for (const auto& [key, poly] : e.terms()) out.add(key, poly.constant_part());
  return out;
}

}  // namespace qwick
