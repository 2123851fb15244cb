#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <kseg/semigroup.hpp>

namespace kseg {

/// Exhaustive enumeration is refused above this order; the order-5 space
/// already holds 5^16 candidate tables.
inline constexpr int kExhaustiveOrderCap = 4;

struct SampleSpec {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

struct EnumerationTask {
  int order = 1;
  bool k_only = false;
  bool dedup = false;  // keep one table per isomorphism class
  int worker_count = 1;
  std::optional<SampleSpec> sample;  // uniform random tables instead of all
};

struct OrderStats {
  int order = 0;
  std::uint64_t candidates = 0;   // size of the candidate space scanned
  std::uint64_t associative = 0;  // valid semigroups with the fixed zero
  std::uint64_t k_semigroups = 0;
  std::uint64_t emitted = 0;      // after the task's filters
};

struct EnumerationResult {
  OrderStats stats;
  std::vector<FiniteSemigroup> semigroups;
};

/// All n x n tables with the zero row and column fixed, filtered by
/// associativity (checked incrementally with early pruning), optionally by
/// categoricity, optionally deduplicated to lexicographically least
/// isomorphism-class representatives. Output order is lexicographic in the
/// free-entry vector regardless of worker_count. Throws BoundError above
/// the exhaustive cap unless sampling is requested.
EnumerationResult enumerate_semigroups(const EnumerationTask& task);

struct PropertyFailure {
  int order = 0;
  std::uint64_t index = 0;  // position in the per-order emission sequence
  RawSemigroup semigroup;
  std::string property;
  std::string witness;
};

struct CorpusVerdict {
  int max_order = 0;
  std::vector<OrderStats> per_order;
  std::vector<PropertyFailure> property_failures;
  /// Semigroups that are 3-nilpotent yet keep a non-annihilating element:
  /// they break the nilpotency/annihilator equivalence and are therefore
  /// not categorical at zero. Recorded as data, not failures.
  std::uint64_t equivalence_exhibits = 0;
  std::optional<RawSemigroup> first_exhibit;

  bool ok() const { return property_failures.empty(); }
};

/// Runs the whole verification battery over every semigroup with zero of
/// order <= max_order: decomposition flags on each semigroup categorical at
/// zero, refusal on each that is not, revalidation of every emitted table.
CorpusVerdict verify_corpus(int max_order, int worker_count = 1);

}  // namespace kseg
