#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <kseg/category.hpp>
#include <kseg/rees.hpp>
#include <kseg/semigroup.hpp>

namespace kseg {

/// Joins a fresh zero to the morphism set of C; the product of f by g is
/// their composite "f after g" when dom(f) = cod(g) and zero otherwise.
/// The result is always categorical at zero. Throws DomainError when a
/// morphism is named "0" (reserved label).
FiniteSemigroup semigroup_of_category(const SmallCategory& c);

/// Raw form of a 3-nilpotent construction spec: a carrier A containing "0",
/// subsets B and C covering A with 0 in both, and a partial table phi from
/// (B minus C) x (C minus B) into B intersect C (absent pairs read as 0).
struct RawNilpotentSpec {
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::vector<std::string> c;
  // b label, c label, value label
  std::vector<std::array<std::string, 3>> phi;
};

struct NilpotentSpec {
  std::vector<std::string> a;  // labels; "0" present
  std::vector<bool> in_b, in_c;
  std::map<std::pair<int, int>, int> phi;  // (b idx, c idx) -> value idx

  bool in_b_only(int i) const { return in_b[i] && !in_c[i]; }
  bool in_c_only(int i) const { return in_c[i] && !in_b[i]; }
};

struct NilpotentSpecValidation {
  std::optional<NilpotentSpec> spec;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every invariant of the raw spec, including the two witness
/// conditions (each b in B\C has some c with phi(b,c) != 0, and dually),
/// and reports the complete violation list.
NilpotentSpecValidation validate_nilpotent_spec(const RawNilpotentSpec& raw);

/// The semigroup on A with x*y = phi(x,y) when x in B\C and y in C\B, and 0
/// otherwise. Always 3-nilpotent and categorical at zero, with left
/// annihilator exactly C and right annihilator exactly B.
FiniteSemigroup nilpotent_from_spec(const NilpotentSpec& spec);

/// Materializes Rees data into its Cayley table (see ReesSemigroup).
FiniteSemigroup rees_semigroup(const ReesSemigroup& data);

/// Raw form of the morphism-set extension spec: an ambient category, two
/// object selections delta and d (read as full subcategories), and for each
/// object a of d a chosen morphism epsilon_a from a into delta.
struct RawMorExtensionSpec {
  RawCategory category;
  std::vector<std::string> delta;
  std::vector<std::string> d;
  std::vector<std::pair<std::string, std::string>> epsilon;  // object -> name
};

struct MorExtensionSpec {
  SmallCategory ambient;
  std::vector<bool> in_delta, in_d;  // per object
  std::vector<int> epsilon;          // per object; -1 outside d

  /// Objects reached by some epsilon_a (the set of bars of d's objects).
  std::vector<bool> epsilon_image() const;
};

struct MorExtensionValidation {
  std::optional<MorExtensionSpec> spec;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

MorExtensionValidation validate_mor_extension_spec(
    const RawMorExtensionSpec& raw);

/// The semigroup on {0} + {f | dom f in delta, cod f in d} with
/// g*f = g after epsilon_{cod f} after f when that epsilon ends at dom g,
/// and 0 otherwise. Validated and categorical at zero.
FiniteSemigroup mor_extension(const MorExtensionSpec& spec);

}  // namespace kseg
