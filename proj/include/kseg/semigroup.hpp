#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <kseg/errors.hpp>

namespace kseg {

/// A semigroup table as read from (or written to) a JSON document, before
/// any validation has happened.
struct RawSemigroup {
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<std::string>> table;
};

/// One reason a raw table fails validation. `where` holds the labels
/// involved (a triple for associativity failures, a single label otherwise).
struct Violation {
  std::string kind;  // "shape", "labels", "zero", "associativity"
  std::vector<std::string> where;
  std::string message;
};

struct ValidationResult;

/// A finite semigroup with a distinguished absorbing zero, stored as a dense
/// Cayley table over integer indices. Labels appear only at the I/O boundary.
/// Instances are immutable and always satisfy the full invariant set
/// (associativity, zero absorption, label uniqueness).
class FiniteSemigroup {
 public:
  /// Checks every invariant of `raw` and reports the complete violation
  /// list; the semigroup is only constructed when the list is empty.
  static ValidationResult validate(const RawSemigroup& raw);

  /// Builds from already-indexed parts, running the same checks as
  /// validate(). Throws DomainError on the first violation; meant for
  /// internal builders whose output is valid by construction.
  static FiniteSemigroup from_parts(std::vector<std::string> labels,
                                    const std::string& zero_label,
                                    const std::vector<int>& table);

  int size() const { return static_cast<int>(labels_.size()); }
  int zero() const { return zero_; }
  bool is_zero(int i) const { return i == zero_; }

  /// Product of element i by element j (i acts on the left).
  int product(int i, int j) const { return table_[i * size() + j]; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  RawSemigroup to_raw() const;

  bool operator==(const FiniteSemigroup& other) const {
    return labels_ == other.labels_ && zero_ == other.zero_ &&
           table_ == other.table_;
  }

 private:
  FiniteSemigroup(std::vector<std::string> labels, int zero,
                  std::vector<int> table);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  int zero_ = 0;
  std::vector<int> table_;
};

struct ValidationResult {
  std::optional<FiniteSemigroup> semigroup;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// A subset of a semigroup's elements, as a bitset over indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : in_(universe, false) {}

  static ElementSet all(int universe);
  static ElementSet single(int universe, int element);
  static ElementSet from_labels(const FiniteSemigroup& s,
                                const std::vector<std::string>& labels);

  int universe() const { return static_cast<int>(in_.size()); }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int i) const { return in_[i]; }
  void add(int i);
  void remove(int i);

  bool subset_of(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;
  ElementSet intersected(const ElementSet& other) const;
  ElementSet complemented() const;

  /// Member indices in ascending order.
  std::vector<int> members() const;
  std::vector<std::string> member_labels(const FiniteSemigroup& s) const;

  /// True when the set is exactly {zero}.
  bool zero_only(int zero) const { return count_ == 1 && in_[zero]; }

  bool operator==(const ElementSet& other) const { return in_ == other.in_; }

 private:
  std::vector<bool> in_;
  int count_ = 0;
};

/// A partition of {0..n-1} into disjoint nonempty blocks. Blocks are kept in
/// canonical form: ordered by least member, members ascending.
class Partition {
 public:
  Partition() = default;

  /// block_of[i] = arbitrary block identifier; identifiers are renumbered
  /// canonically (by least member).
  static Partition from_block_of(const std::vector<int>& block_of);
  static Partition from_blocks(int n,
                               const std::vector<std::vector<int>>& blocks);
  static Partition discrete(int n);
  static Partition universal(int n);
  /// One block holding `block`, all other elements singletons.
  static Partition collapse(int n, const ElementSet& block);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_id(int element) const { return block_of_[element]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool same_block(int a, int b) const { return block_of_[a] == block_of_[b]; }

  /// Every block of this partition is contained in a block of `coarser`.
  bool refines(const Partition& coarser) const;

  /// The block containing `zero` is the singleton {zero}.
  bool zero_restricted(int zero) const;

  bool operator==(const Partition& other) const {
    return block_of_ == other.block_of_;
  }

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<int>> blocks_;
};

/// A total map between two semigroups' elements. Whether it actually is a
/// homomorphism is a property to check, not an invariant.
struct Homomorphism {
  FiniteSemigroup source;
  FiniteSemigroup target;
  std::vector<int> map;  // source index -> target index

  int apply(int i) const { return map[i]; }
};

///  Set product {x*y | x in X, y in Y}.
ElementSet set_product(const FiniteSemigroup& s, const ElementSet& x,
                       const ElementSet& y);

enum class IdealSide { left, right, two_sided };

/// SX subset X (left), XS subset X (right), or both.
bool is_ideal(const FiniteSemigroup& s, const ElementSet& x, IdealSide side);

bool is_congruence(const FiniteSemigroup& s, const Partition& p);

struct CongruenceInfo {
  Partition partition;
  bool zero_restricted;
};

/// All congruences of s, each flagged 0-restricted or not, in
/// restricted-growth-string order. Refuses when size() > bound.
std::vector<CongruenceInfo> enumerate_congruences(const FiniteSemigroup& s,
                                                  int bound = 8);

struct QuotientResult {
  FiniteSemigroup quotient;
  Homomorphism projection;
};

/// Quotient by a congruence. Each block is labeled by its lexicographically
/// least member label; the block containing zero becomes the new zero.
/// Throws DomainError when p is not a congruence.
QuotientResult quotient(const FiniteSemigroup& s, const Partition& p);

bool check_homomorphism(const Homomorphism& f);
bool is_injective(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);
/// The complete preimage of the target's zero is {source zero}.
bool is_zero_restricted(const Homomorphism& f);

/// Exhaustive search for a multiplicative zero-preserving bijection; the
/// search permutes only nonzero elements. Returns nothing when the sizes
/// differ or no permutation works. Refuses when size() > bound.
std::optional<Homomorphism> find_isomorphism(const FiniteSemigroup& s,
                                             const FiniteSemigroup& s2,
                                             int bound = 8);

}  // namespace kseg
