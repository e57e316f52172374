#include "qwick/wick.hpp"

#include <numeric>
#include <string>

#include "qwick/errors.hpp"

namespace qwick {

namespace {

std::vector<Label> iota_labels(int n) {
  if (n < 0) throw DomainError("number of variables must be non-negative");
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

void check_size(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw SizeLimitError("size " + std::to_string(size) + " exceeds the enumeration cap of " +
                         std::to_string(cap));
  }
}

QPolynomial signed_q_power(bool negative, int exponent) {
  return QPolynomial::monomial(static_cast<unsigned>(exponent), negative ? -1 : 1);
}

}  // namespace

OperatorWord OperatorWord::from_signs(const SignSequence& eps, const std::vector<Label>& labels) {
  OperatorWord w;
  w.letters.reserve(eps.size());
  for (std::size_t k = 0; k < eps.size(); ++k) {
    w.letters.push_back({eps[k], labels.empty() ? static_cast<Label>(k + 1) : labels.at(k)});
  }
  return w;
}

unsigned split_inversions(const std::vector<int>& creators, const std::vector<int>& annihilators) {
  unsigned count = 0;
  for (int i : creators) {
    for (int j : annihilators) {
      if (i > j) ++count;
    }
  }
  return count;
}

WickOperatorForm wick_operator_form(const std::vector<Label>& labels, std::size_t cap) {
  const std::size_t n = labels.size();
  check_size(n, cap);
  WickOperatorForm form;
  form.summands.reserve(std::size_t{1} << n);
  // Bit (n - 1 - k) set means position k is an annihilator, so counting up
  // walks the choices lexicographically with creators first.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> creators, annihilators;
    for (std::size_t k = 0; k < n; ++k) {
      bool annihilator = (mask >> (n - 1 - k)) & 1U;
      (annihilator ? annihilators : creators).push_back(static_cast<int>(k));
    }
    WickSummand s;
    for (int k : creators) s.word.letters.push_back({1, labels[k]});
    for (int k : annihilators) s.word.letters.push_back({-1, labels[k]});
    s.q_power = split_inversions(creators, annihilators);
    form.summands.push_back(std::move(s));
  }
  return form;
}

WickOperatorForm wick_operator_form(int n, std::size_t cap) {
  return wick_operator_form(iota_labels(n), cap);
}

Expansion m_epsilon_expansion(const SignSequence& eps, std::size_t cap) {
  if (!catalan_check(eps).catalan) return {};
  Expansion out;
  for_each_compatible(eps, [&](const FeynmanDiagram& d) {
    out.add(v_of_diagram(d), QPolynomial::q_power(crossing_stats(d).crossings));
  }, cap);
  return out;
}

Expansion moment_expansion(int n, std::size_t cap) {
  Expansion out;
  for_each_complete(GroundSet(n), [&](const FeynmanDiagram& d) {
    out.add(v_of_diagram(d), QPolynomial::q_power(crossing_stats(d).crossings));
  }, cap);
  return out;
}

Expansion wick_to_normal(const std::vector<Label>& labels, std::size_t cap) {
  Expansion out;
  for_each_diagram(GroundSet(static_cast<int>(labels.size())), [&](const FeynmanDiagram& d) {
    const CrossingStats s = crossing_stats(d);
    out.add(v_of_diagram(d, WordKind::normal, labels),
            signed_q_power(d.num_pairs() % 2 == 1, s.a));
  }, cap);
  return out;
}

Expansion wick_to_normal(int n, std::size_t cap) { return wick_to_normal(iota_labels(n), cap); }

namespace {

Expansion wick_recursive_impl(const std::vector<Label>& labels) {
  if (labels.empty()) return Expansion::identity();
  const Label head = labels.front();
  const std::vector<Label> rest(labels.begin() + 1, labels.end());
  Expansion out = wick_recursive_impl(rest).prepend_variable(head);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<Label> omitted = rest;
    omitted.erase(omitted.begin() + static_cast<std::ptrdiff_t>(i));
    Expansion sub = wick_recursive_impl(omitted)
                        .times_covariance(CovarianceMonomial({{head, rest[i]}}));
    out -= sub.scaled(QPolynomial::q_power(static_cast<unsigned>(i)));
  }
  return out;
}

}  // namespace

Expansion wick_recursive(const std::vector<Label>& labels, std::size_t cap) {
  check_size(labels.size(), cap);
  return wick_recursive_impl(labels);
}

Expansion wick_recursive(int n, std::size_t cap) { return wick_recursive(iota_labels(n), cap); }

Expansion normal_to_wick(const std::vector<Label>& labels, std::size_t cap) {
  Expansion out;
  for_each_diagram(GroundSet(static_cast<int>(labels.size())), [&](const FeynmanDiagram& d) {
    out.add(v_of_diagram(d, WordKind::wick, labels),
            QPolynomial::q_power(crossing_stats(d).total_crossings));
  }, cap);
  return out;
}

Expansion normal_to_wick(int n, std::size_t cap) { return normal_to_wick(iota_labels(n), cap); }

Expansion product_expectation(const std::vector<int>& blocks, std::size_t cap) {
  Expansion out;
  for_each_nonlinking(GroundSet::with_blocks(blocks), true, [&](const FeynmanDiagram& d) {
    out.add(v_of_diagram(d), QPolynomial::q_power(crossing_stats(d).crossings));
  }, cap);
  return out;
}

Expansion product_expansion(const std::vector<int>& blocks, std::size_t cap) {
  Expansion out;
  for_each_nonlinking(GroundSet::with_blocks(blocks), false, [&](const FeynmanDiagram& d) {
    out.add(v_of_diagram(d, WordKind::wick),
            QPolynomial::q_power(crossing_stats(d).total_crossings));
  }, cap);
  return out;
}

Expansion free_moment(int n, std::size_t cap) {
  Expansion out;
  for_each_complete(GroundSet(n), [&](const FeynmanDiagram& d) {
    if (classify(d).noncrossing) out.add(v_of_diagram(d), QPolynomial(1));
  }, cap);
  return out;
}

Expansion free_wick_to_normal(int n, std::size_t cap) {
  Expansion out;
  for_each_diagram(GroundSet(n), [&](const FeynmanDiagram& d) {
    if (classify(d).gap_free) out.add(v_of_diagram(d), QPolynomial(d.num_pairs() % 2 ? -1 : 1));
  }, cap);
  return out;
}

Expansion free_normal_to_wick(int n, std::size_t cap) {
  Expansion out;
  for_each_diagram(GroundSet(n), [&](const FeynmanDiagram& d) {
    if (classify(d).strongly_noncrossing) out.add(v_of_diagram(d, WordKind::wick), QPolynomial(1));
  }, cap);
  return out;
}

Expansion free_product_expectation(const std::vector<int>& blocks, std::size_t cap) {
  Expansion out;
  for_each_nonlinking(GroundSet::with_blocks(blocks), true, [&](const FeynmanDiagram& d) {
    if (classify(d).noncrossing) out.add(v_of_diagram(d), QPolynomial(1));
  }, cap);
  return out;
}

Expansion free_product_expansion(const std::vector<int>& blocks, std::size_t cap) {
  Expansion out;
  for_each_nonlinking(GroundSet::with_blocks(blocks), false, [&](const FeynmanDiagram& d) {
    if (classify(d).strongly_noncrossing) out.add(v_of_diagram(d, WordKind::wick), QPolynomial(1));
  }, cap);
  return out;
}

}  // namespace qwick
