#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qwick/fock.hpp"
#include "qwick/rational.hpp"
#include "qwick/serialize.hpp"

namespace qwick {

/// Identifiers accepted by run_verify, in canonical order.
const std::vector<std::string>& verify_theorem_ids();

struct VerifyConfig {
  /// Largest size checked; each theorem has its own default.
  std::optional<int> n;
  /// Block structures for t3.3 / t3.4 / free; defaults to a fixed list.
  std::vector<std::vector<int>> blocks;
  /// q values; defaults depend on the theorem.
  std::vector<Rational> qs;
  /// One-particle dimensions cycled over the random assignments.
  std::vector<int> dims{2};
  /// Truncation level override; by default each instance uses exactly the
  /// tensor degree it needs.
  std::optional<int> level;
  /// Random assignments per (instance, q).
  int assignments = 5;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

struct VerifyRecord {
  std::string theorem;
  Json instance;
  bool pass = false;
  /// Complete reproduction data on failure, null on success.
  Json witness;
};

/// Runs one verification suite. Records come back in a deterministic order
/// for a fixed config. Throws DomainError for an unknown theorem id or an
/// out-of-domain parameter (gram with q outside (-1, 1)).
std::vector<VerifyRecord> run_verify(const std::string& theorem, const VerifyConfig& config);

Json to_json(const VerifyRecord& r);

/// Integer coordinates in [-3, 3] drawn from `rng` for labels 1..count.
Assignment random_assignment(int count, int dim, std::mt19937_64& rng);

/// f_1, ..., f_count taken from the assignment in label order.
std::vector<OneParticleVector> assigned_vectors(const Assignment& assignment, int count);

}  // namespace qwick
