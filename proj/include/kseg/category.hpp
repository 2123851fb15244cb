#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <kseg/semigroup.hpp>

namespace kseg {

struct Morphism {
  std::string name;
  int dom = -1;
  int cod = -1;
};

/// A small category document before validation, JSON-shaped.
struct RawCategory {
  std::vector<std::string> objects;
  // name, dom, cod
  std::vector<std::array<std::string, 3>> morphisms;
  // object -> identity morphism name, in object order
  std::vector<std::pair<std::string, std::string>> identities;
  // first, then, equals: doing `first` and then `then` equals `equals`
  std::vector<std::array<std::string, 3>> composition;
};

struct CategoryValidation;

/// A finite category with identities and a total composition table on
/// composable pairs. Valid by construction: instances exist only after the
/// identity and associativity laws have been checked.
class SmallCategory {
 public:
  static CategoryValidation validate(const RawCategory& raw);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object(int i) const { return objects_[i]; }
  const Morphism& morphism(int i) const { return morphisms_[i]; }
  std::optional<int> object_index(std::string_view label) const;
  std::optional<int> morphism_index(std::string_view name) const;

  /// Identity morphism of object `obj`.
  int identity(int obj) const { return identity_[obj]; }

  /// Composite "g after f" for cod(f) = dom(g); -1 when not composable.
  int then(int f, int g) const { return then_[f][g]; }

  /// Morphism indices with the given domain and codomain.
  std::vector<int> hom(int dom, int cod) const;

  RawCategory to_raw() const;

 private:
  SmallCategory() = default;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> then_;
};

struct CategoryValidation {
  std::optional<SmallCategory> category;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Seeded generator of valid small categories: identities always present,
/// composition closed by construction, validated before returning.
/// Deterministic for a fixed argument tuple. object_count is capped at 4;
/// total morphisms at object_count + max_extra_arrows. Throws Error after
/// bounded retries when no category fits the budget.
SmallCategory random_category(std::uint64_t seed, int object_count,
                              int max_extra_arrows);

}  // namespace kseg
