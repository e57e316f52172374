#include "qwick/diagram.hpp"

#include <algorithm>
#include <string>

#include "qwick/errors.hpp"

namespace qwick {

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 0) throw DomainError("ground set size must be non-negative");
}

GroundSet GroundSet::with_blocks(std::vector<int> block_sizes) {
  int total = 0;
  for (int b : block_sizes) {
    if (b <= 0) throw DomainError("block sizes must be positive");
    total += b;
  }
  GroundSet ground(total);
  ground.blocked_ = true;
  ground.block_index_.reserve(total);
  for (std::size_t p = 0; p < block_sizes.size(); ++p) {
    ground.block_index_.insert(ground.block_index_.end(), block_sizes[p], static_cast<int>(p));
  }
  ground.blocks_ = std::move(block_sizes);
  return ground;
}

int GroundSet::block_of(Position p) const {
  if (!blocked_) return p - 1;
  return block_index_[p - 1];
}

std::pair<int, int> GroundSet::lex_label(Position p) const {
  if (!blocked_) return {p, 1};
  int block = block_index_[p - 1];
  int offset = 0;
  for (int b = 0; b < block; ++b) offset += blocks_[b];
  return {block + 1, p - offset};
}

FeynmanDiagram::FeynmanDiagram(GroundSet ground, std::vector<Pair> pairs)
    : ground_(std::move(ground)), pairs_(std::move(pairs)) {
  std::vector<bool> used(ground_.size() + 1, false);
  for (const Pair& pr : pairs_) {
    if (pr.left < 1 || pr.right > ground_.size() || pr.left >= pr.right) {
      throw DomainError("invalid pair (" + std::to_string(pr.left) + "," +
                        std::to_string(pr.right) + ") on a ground set of size " +
                        std::to_string(ground_.size()));
    }
    if (used[pr.left] || used[pr.right]) throw DomainError("pairs of a diagram must be disjoint");
    used[pr.left] = used[pr.right] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::vector<Position> FeynmanDiagram::singletons() const {
  std::vector<bool> used(ground_.size() + 1, false);
  for (const Pair& pr : pairs_) used[pr.left] = used[pr.right] = true;
  std::vector<Position> out;
  for (Position p = 1; p <= ground_.size(); ++p) {
    if (!used[p]) out.push_back(p);
  }
  return out;
}

Position FeynmanDiagram::partner(Position p) const {
  for (const Pair& pr : pairs_) {
    if (pr.left == p) return pr.right;
    if (pr.right == p) return pr.left;
  }
  return 0;
}

CrossingStats crossing_stats(const FeynmanDiagram& diagram) {
  const auto& pairs = diagram.pairs();
  std::vector<bool> paired(diagram.ground().size() + 1, false);
  for (const Pair& pr : pairs) paired[pr.left] = paired[pr.right] = true;

  CrossingStats stats;
  stats.per_pair.reserve(pairs.size());
  for (const Pair& pr : pairs) {
    PairStats ps{pr};
    for (const Pair& other : pairs) {
      if (other.left < pr.left && pr.left < other.right && other.right < pr.right) {
        ++ps.left_crossings;
      }
      if (pr.left < other.left && other.left < pr.right && pr.right < other.right) {
        ++ps.right_crossings;
      }
    }
    ps.gap = pr.right - pr.left - 1;
    for (Position k = pr.left + 1; k < pr.right; ++k) {
      if (!paired[k]) ++ps.degenerate;
    }
    stats.crossings += ps.left_crossings;
    stats.degenerate_crossings += ps.degenerate;
    stats.gap += ps.gap;
    stats.per_pair.push_back(ps);
  }
  stats.total_crossings = stats.crossings + stats.degenerate_crossings;
  stats.a = stats.gap - stats.crossings;
  return stats;
}

DiagramClass classify(const FeynmanDiagram& diagram) {
  const CrossingStats s = crossing_stats(diagram);
  return {s.crossings == 0, s.total_crossings == 0, s.gap == 0};
}

SignSequence::SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != 1 && e != -1) throw DomainError("sign sequence entries must be +1 or -1");
  }
}

std::vector<int> SignSequence::right_partial_sums() const {
  std::vector<int> sigma(entries_.size());
  int running = 0;
  for (std::size_t k = entries_.size(); k-- > 0;) {
    running += entries_[k];
    sigma[k] = running;
  }
  return sigma;
}

CatalanCheck catalan_check(const SignSequence& eps) {
  if (eps.size() % 2 != 0) throw DomainError("sign sequence must have even length");
  CatalanCheck out{true, eps.right_partial_sums()};
  const std::size_t len = eps.size();
  if (len == 0) return out;
  if (out.sigma[len - 1] <= 0 || out.sigma[0] != 0) out.catalan = false;
  for (std::size_t k = 1; k + 1 < len; ++k) {
    if (out.sigma[k] < 0) out.catalan = false;
  }
  return out;
}

std::vector<SignSequence> catalan_sequences(int length) {
  if (length < 0 || length % 2 != 0) throw DomainError("Catalan sequences need even length");
  std::vector<SignSequence> out;
  std::vector<int> entries(length);
  // Built right to left so the running suffix sum stays non-negative.
  auto rec = [&](auto&& self, int k, int suffix) -> void {
    if (k < 0) {
      if (suffix == 0) out.emplace_back(entries);
      return;
    }
    for (int e : {-1, 1}) {
      int next = suffix + e;
      if (next < 0 || next > k) continue;  // k entries remain to bring it back to 0
      entries[k] = e;
      self(self, k - 1, next);
    }
  };
  rec(rec, length - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SignSequence epsilon_of(const FeynmanDiagram& diagram) {
  if (!diagram.complete()) throw DomainError("epsilon_of requires a complete diagram");
  std::vector<int> entries(diagram.ground().size(), 0);
  for (const Pair& pr : diagram.pairs()) {
    entries[pr.left - 1] = -1;
    entries[pr.right - 1] = 1;
  }
  return SignSequence(std::move(entries));
}

namespace {

void check_cap(int size, std::size_t cap) {
  if (static_cast<std::size_t>(size) > cap) {
    throw SizeLimitError("ground set of size " + std::to_string(size) +
                         " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

/// Constraints shared by every enumerator.
struct Filter {
  bool complete_only = false;
  bool nonlinking = false;
  const SignSequence* eps = nullptr;
};

class Enumerator {
 public:
  Enumerator(const GroundSet& ground, Filter filter, const DiagramVisitor& visit)
      : ground_(ground), filter_(filter), visit_(visit), used_(ground.size() + 2, false) {}

  void run() {
    if (filter_.complete_only) {
      complete(1);
    } else {
      all(1);
    }
  }

 private:
  bool allowed(Position i, Position j) const {
    if (filter_.nonlinking && ground_.block_of(i) == ground_.block_of(j)) return false;
    if (filter_.eps && ((*filter_.eps)[i - 1] != -1 || (*filter_.eps)[j - 1] != 1)) return false;
    return true;
  }

  void emit() { visit_(FeynmanDiagram(ground_, pairs_)); }

  // Lexicographic order: the current prefix (no further pairs) comes first,
  // then extensions by (i, j) in increasing order with i past the last left
  // endpoint.
  void all(Position start) {
    emit();
    const int n = ground_.size();
    for (Position i = start; i <= n; ++i) {
      if (used_[i]) continue;
      for (Position j = i + 1; j <= n; ++j) {
        if (used_[j] || !allowed(i, j)) continue;
        push(i, j);
        all(i + 1);
        pop(i, j);
      }
    }
  }

  // The smallest free position must open a pair.
  void complete(Position start) {
    const int n = ground_.size();
    Position i = start;
    while (i <= n && used_[i]) ++i;
    if (i > n) {
      emit();
      return;
    }
    for (Position j = i + 1; j <= n; ++j) {
      if (used_[j] || !allowed(i, j)) continue;
      push(i, j);
      complete(i + 1);
      pop(i, j);
    }
  }

  void push(Position i, Position j) {
    used_[i] = used_[j] = true;
    pairs_.push_back({i, j});
  }
  void pop(Position i, Position j) {
    used_[i] = used_[j] = false;
    pairs_.pop_back();
  }

  const GroundSet& ground_;
  Filter filter_;
  const DiagramVisitor& visit_;
  std::vector<bool> used_;
  std::vector<Pair> pairs_;
};

std::vector<FeynmanDiagram> collect(const std::function<void(const DiagramVisitor&)>& source) {
  std::vector<FeynmanDiagram> out;
  source([&](const FeynmanDiagram& d) { out.push_back(d); });
  return out;
}

}  // namespace

void for_each_diagram(const GroundSet& ground, const DiagramVisitor& visit, std::size_t cap) {
  check_cap(ground.size(), cap);
  Enumerator(ground, {}, visit).run();
}

void for_each_complete(const GroundSet& ground, const DiagramVisitor& visit, std::size_t cap) {
  check_cap(ground.size(), cap);
  if (ground.size() % 2 != 0) return;
  Enumerator(ground, {.complete_only = true}, visit).run();
}

void for_each_compatible(const SignSequence& eps, const DiagramVisitor& visit, std::size_t cap) {
  check_cap(static_cast<int>(eps.size()), cap);
  if (!catalan_check(eps).catalan) {
    throw DomainError("sign sequence is not Catalan; no compatible diagrams exist");
  }
  GroundSet ground(static_cast<int>(eps.size()));
  Enumerator(ground, {.complete_only = true, .eps = &eps}, visit).run();
}

void for_each_nonlinking(const GroundSet& ground, bool complete_only, const DiagramVisitor& visit,
                         std::size_t cap) {
  if (!ground.has_blocks()) throw DomainError("non-linking enumeration needs a block structure");
  check_cap(ground.size(), cap);
  if (complete_only && ground.size() % 2 != 0) return;
  Enumerator(ground, {.complete_only = complete_only, .nonlinking = true}, visit).run();
}

std::vector<FeynmanDiagram> enumerate_diagrams(const GroundSet& ground, std::size_t cap) {
  return collect([&](const DiagramVisitor& v) { for_each_diagram(ground, v, cap); });
}

std::vector<FeynmanDiagram> enumerate_complete(const GroundSet& ground, std::size_t cap) {
  return collect([&](const DiagramVisitor& v) { for_each_complete(ground, v, cap); });
}

std::vector<FeynmanDiagram> enumerate_compatible(const SignSequence& eps, std::size_t cap) {
  return collect([&](const DiagramVisitor& v) { for_each_compatible(eps, v, cap); });
}

std::vector<FeynmanDiagram> enumerate_nonlinking(const GroundSet& ground, bool complete_only,
                                                 std::size_t cap) {
  return collect(
      [&](const DiagramVisitor& v) { for_each_nonlinking(ground, complete_only, v, cap); });
}

}  // namespace qwick
