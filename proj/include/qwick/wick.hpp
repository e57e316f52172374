#pragma once

#include <cstddef>
#include <vector>

#include "qwick/diagram.hpp"
#include "qwick/expansion.hpp"

namespace qwick {

/// a^{+1}(f_index) (creator) or a^{-1}(f_index) (annihilator).
struct OperatorLetter {
  int sign = 1;
  Label index = 0;

  friend auto operator<=>(const OperatorLetter&, const OperatorLetter&) = default;
};

/// Product of creation/annihilation operators; the rightmost letter acts
/// first. Letter order is meaningful and never canonicalized.
struct OperatorWord {
  std::vector<OperatorLetter> letters;

  /// The word a^{eps(1)}(f_{labels[0]}) ... a^{eps(2n)}(f_{labels[2n-1]}).
  static OperatorWord from_signs(const SignSequence& eps, const std::vector<Label>& labels = {});

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

struct WickSummand {
  OperatorWord word;
  unsigned q_power = 0;
};

/// The Wick product as the sum over splits I + J of
/// a+(f_I) a-(f_J) q^{iota(I,J)}: creators first, then annihilators, each run
/// in increasing position order.
struct WickOperatorForm {
  std::vector<WickSummand> summands;
};

/// Number of pairs (p, r) with I[p] > J[r].
unsigned split_inversions(const std::vector<int>& creators, const std::vector<int>& annihilators);

/// One summand per split of the positions of `labels`, ordered
/// lexicographically by the per-position choice (creator before annihilator).
WickOperatorForm wick_operator_form(const std::vector<Label>& labels,
                                    std::size_t cap = kDefaultEnumerationCap);
WickOperatorForm wick_operator_form(int n, std::size_t cap = kDefaultEnumerationCap);

/// The vacuum expectation m(eps) as a sum over compatible complete diagrams
/// of v(gamma) q^{c(gamma)}; zero when eps is not Catalan. Throws
/// DomainError for odd length.
Expansion m_epsilon_expansion(const SignSequence& eps, std::size_t cap = kDefaultEnumerationCap);

/// E(xi_1 ... xi_n): the sum over complete diagrams of v(gamma) q^{c(gamma)};
/// zero for odd n.
Expansion moment_expansion(int n, std::size_t cap = kDefaultEnumerationCap);

/// :xi_{l1} ... xi_{ln}: in normal products, as the sum over all diagrams
/// of (-1)^{#pairs} q^{g - c} v(gamma).
Expansion wick_to_normal(const std::vector<Label>& labels,
                         std::size_t cap = kDefaultEnumerationCap);
Expansion wick_to_normal(int n, std::size_t cap = kDefaultEnumerationCap);

/// The same expansion built from the recursion that peels off the first
/// variable: W(f, f_1..f_n) = phi(f) W(f_1..f_n) - sum q^{i-1} <f,f_i> W(.. f_i omitted ..).
Expansion wick_recursive(const std::vector<Label>& labels,
                         std::size_t cap = kDefaultEnumerationCap);
Expansion wick_recursive(int n, std::size_t cap = kDefaultEnumerationCap);

/// xi_{l1} ... xi_{ln} in Wick products: sum over all diagrams of
/// :v(gamma): q^{tc(gamma)}.
Expansion normal_to_wick(const std::vector<Label>& labels,
                         std::size_t cap = kDefaultEnumerationCap);
Expansion normal_to_wick(int n, std::size_t cap = kDefaultEnumerationCap);

/// E(Y_1 ... Y_t) for Y_p the Wick product of block p: sum over complete
/// diagrams that link no two vertices of one block, crossings counted in the
/// lexicographic order. Positions (p, k) are relabelled 1..n.
Expansion product_expectation(const std::vector<int>& blocks,
                              std::size_t cap = kDefaultEnumerationCap);

/// Y_1 ... Y_t expanded in Wick products: sum over all non-linking diagrams
/// of :v(gamma): q^{tc(gamma)}.
Expansion product_expansion(const std::vector<int>& blocks,
                            std::size_t cap = kDefaultEnumerationCap);

// q = 0 formulas computed by restricting the diagram sums to NC, GF and SNC
// diagrams rather than by evaluating at q = 0.

/// Sum of v(gamma) over complete noncrossing diagrams.
Expansion free_moment(int n, std::size_t cap = kDefaultEnumerationCap);
/// Sum of (-1)^{#pairs} v(gamma) over gap-free diagrams.
Expansion free_wick_to_normal(int n, std::size_t cap = kDefaultEnumerationCap);
/// Sum of :v(gamma): over strongly noncrossing diagrams.
Expansion free_normal_to_wick(int n, std::size_t cap = kDefaultEnumerationCap);
/// Sum of v(gamma) over complete noncrossing non-linking diagrams.
Expansion free_product_expectation(const std::vector<int>& blocks,
                                   std::size_t cap = kDefaultEnumerationCap);
/// Sum of :v(gamma): over strongly noncrossing non-linking diagrams.
Expansion free_product_expansion(const std::vector<int>& blocks,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace qwick
