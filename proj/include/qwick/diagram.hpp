#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qwick {

/// 1-based position in an ordered ground set.
using Position = int;

/// Ground sets above this size are refused by the enumerators unless the
/// caller passes a larger cap.
inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// The ordered set {1, ..., n}, optionally overlaid with a block structure.
/// Blocks never reorder elements: block p holds the next blocks[p] positions,
/// so (p, k) corresponds to position offset(p) + k.
class GroundSet {
 public:
  explicit GroundSet(int size);
  /// Throws DomainError on a zero block size.
  static GroundSet with_blocks(std::vector<int> block_sizes);

  int size() const { return size_; }
  bool has_blocks() const { return blocked_; }
  const std::vector<int>& blocks() const { return blocks_; }

  /// 0-based block index of a position; every position is its own block
  /// when no block structure is present.
  int block_of(Position p) const;
  /// Lexicographic label (block, index-in-block), both 1-based.
  std::pair<int, int> lex_label(Position p) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int size_ = 0;
  bool blocked_ = false;
  std::vector<int> blocks_;
  std::vector<int> block_index_;
};

struct Pair {
  Position left;
  Position right;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A partition of the ground set into ordered pairs (left < right) and
/// singletons. Pairs are kept sorted by left endpoint, which makes equality
/// of diagrams equality of their canonical forms.
class FeynmanDiagram {
 public:
  /// Validates and canonicalizes; throws DomainError on overlapping pairs,
  /// out-of-range positions or pairs with left >= right.
  FeynmanDiagram(GroundSet ground, std::vector<Pair> pairs);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t num_pairs() const { return pairs_.size(); }
  bool complete() const { return 2 * pairs_.size() == static_cast<std::size_t>(ground_.size()); }

  /// Unpaired positions in increasing order.
  std::vector<Position> singletons() const;
  /// 0 for a singleton, otherwise the partner position.
  Position partner(Position p) const;

  friend bool operator==(const FeynmanDiagram& a, const FeynmanDiagram& b) {
    return a.ground_ == b.ground_ && a.pairs_ == b.pairs_;
  }

 private:
  GroundSet ground_;
  std::vector<Pair> pairs_;
};

struct PairStats {
  Pair pair;
  int left_crossings = 0;   // c_l: pairs (k,l) with k < i < l < j
  int right_crossings = 0;  // c_r: pairs (k,l) with i < k < j < l
  int gap = 0;              // every position strictly between the endpoints
  int degenerate = 0;       // singletons strictly between the endpoints
  int a() const { return gap - left_crossings; }
};

struct CrossingStats {
  int crossings = 0;             // c
  int degenerate_crossings = 0;  // d
  int total_crossings = 0;       // tc = c + d
  int gap = 0;                   // g
  int a = 0;                     // g - c
  std::vector<PairStats> per_pair;
};

CrossingStats crossing_stats(const FeynmanDiagram& diagram);

struct DiagramClass {
  bool noncrossing = false;
  bool strongly_noncrossing = false;
  bool gap_free = false;
};

DiagramClass classify(const FeynmanDiagram& diagram);

/// A word of signs in {+1, -1}; +1 marks a creator, -1 an annihilator.
class SignSequence {
 public:
  /// Throws DomainError if an entry is not +1 or -1.
  explicit SignSequence(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }

  /// sigma[k] = entries[k] + ... + entries[last], 0-based.
  std::vector<int> right_partial_sums() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;
  friend auto operator<=>(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<int> entries_;
};

struct CatalanCheck {
  bool catalan = false;
  std::vector<int> sigma;
};

/// Throws DomainError for odd length.
CatalanCheck catalan_check(const SignSequence& eps);

/// All Catalan sequences of the given even length, in lexicographic order
/// with -1 < +1.
std::vector<SignSequence> catalan_sequences(int length);

/// Throws DomainError for an incomplete diagram.
SignSequence epsilon_of(const FeynmanDiagram& diagram);

using DiagramVisitor = std::function<void(const FeynmanDiagram&)>;

// The enumerators visit diagrams in lexicographic order of their sorted pair
// lists (the empty list first). Each throws SizeLimitError when the ground set
// exceeds `cap`.

void for_each_diagram(const GroundSet& ground, const DiagramVisitor& visit,
                      std::size_t cap = kDefaultEnumerationCap);
void for_each_complete(const GroundSet& ground, const DiagramVisitor& visit,
                       std::size_t cap = kDefaultEnumerationCap);
/// Throws DomainError for odd-length or non-Catalan eps.
void for_each_compatible(const SignSequence& eps, const DiagramVisitor& visit,
                         std::size_t cap = kDefaultEnumerationCap);
/// Diagrams with no pair inside a single block. Throws DomainError if the
/// ground set carries no block structure.
void for_each_nonlinking(const GroundSet& ground, bool complete_only,
                         const DiagramVisitor& visit,
                         std::size_t cap = kDefaultEnumerationCap);

std::vector<FeynmanDiagram> enumerate_diagrams(const GroundSet& ground,
                                               std::size_t cap = kDefaultEnumerationCap);
std::vector<FeynmanDiagram> enumerate_complete(const GroundSet& ground,
                                               std::size_t cap = kDefaultEnumerationCap);
std::vector<FeynmanDiagram> enumerate_compatible(const SignSequence& eps,
                                                 std::size_t cap = kDefaultEnumerationCap);
std::vector<FeynmanDiagram> enumerate_nonlinking(const GroundSet& ground, bool complete_only,
                                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace qwick
