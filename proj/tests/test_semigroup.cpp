#include <doctest.h>

#include <algorithm>
#include <set>

#include <kseg/enumeration.hpp>
#include <kseg/semigroup.hpp>

#include "helpers.hpp"

using namespace kseg;
using namespace kseg::testing;

namespace {

// Independent associativity oracle: a plain triple scan over label rows,
// sharing no code with the library's validator.
bool naive_associative(const std::vector<std::string>& elements,
                       const std::vector<std::vector<std::string>>& table) {
  auto index = [&](const std::string& label) {
    return std::find(elements.begin(), elements.end(), label) -
           elements.begin();
  };
  const int n = static_cast<int>(elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::string left = table[index(table[a][b])][c];
        const std::string right = table[a][index(table[b][c])];
        if (left != right) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("validate accepts the null semigroup") {
  RawSemigroup raw{{"0", "a"}, "0", {{"0", "0"}, {"0", "0"}}};
  auto result = FiniteSemigroup::validate(raw);
  REQUIRE(result.ok());
  CHECK(result.semigroup->size() == 2);
  CHECK(result.semigroup->zero() == 0);
}

TEST_CASE("validate reports the failing associativity triple") {
  // a*(a*a) = a*b = 0 but (a*a)*a = b*a = a
  RawSemigroup raw{{"0", "a", "b"},
                   "0",
                   {{"0", "0", "0"}, {"0", "b", "0"}, {"0", "a", "0"}}};
  auto result = FiniteSemigroup::validate(raw);
  REQUIRE(!result.ok());
  bool found = false;
  for (const auto& v : result.violations)
    if (v.kind == "associativity" &&
        v.where == std::vector<std::string>{"a", "a", "a"})
      found = true;
  CHECK(found);
}

TEST_CASE("validate accepts a*a=b, cross-checked by the naive oracle") {
  RawSemigroup raw{{"0", "a", "b"},
                   "0",
                   {{"0", "0", "0"}, {"0", "b", "0"}, {"0", "0", "0"}}};
  REQUIRE(naive_associative(raw.elements, raw.table));
  CHECK(FiniteSemigroup::validate(raw).ok());
}

TEST_CASE("validate catches label and zero problems") {
  SUBCASE("duplicate labels") {
    RawSemigroup raw{{"0", "a", "a"},
                     "0",
                     {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}};
    auto result = FiniteSemigroup::validate(raw);
    REQUIRE(!result.ok());
    CHECK(result.violations.front().kind == "labels");
  }
  SUBCASE("unknown zero") {
    RawSemigroup raw{{"0", "a"}, "z", {{"0", "0"}, {"0", "0"}}};
    CHECK(!FiniteSemigroup::validate(raw).ok());
  }
  SUBCASE("unknown entry label") {
    RawSemigroup raw{{"0", "a"}, "0", {{"0", "0"}, {"0", "q"}}};
    CHECK(!FiniteSemigroup::validate(raw).ok());
  }
  SUBCASE("ragged table") {
    RawSemigroup raw{{"0", "a"}, "0", {{"0", "0"}, {"0"}}};
    auto result = FiniteSemigroup::validate(raw);
    REQUIRE(!result.ok());
    CHECK(result.violations.front().kind == "shape");
  }
  SUBCASE("zero absorption failure") {
    RawSemigroup raw{{"0", "a"}, "0", {{"0", "a"}, {"0", "0"}}};
    auto result = FiniteSemigroup::validate(raw);
    REQUIRE(!result.ok());
    CHECK(result.violations.front().kind == "zero");
  }
}

TEST_CASE("set products") {
  const FiniteSemigroup s = a_squared_b();
  const ElementSet zero_set = ElementSet::single(3, s.zero());
  const ElementSet a_set = ElementSet::from_labels(s, {"a"});

  CHECK(set_product(s, zero_set, ElementSet::all(3)) == zero_set);
  CHECK(set_product(s, a_set, a_set) == ElementSet::from_labels(s, {"b"}));

  const FiniteSemigroup null4 = null_semigroup(4);
  CHECK(set_product(null4, ElementSet::all(4), ElementSet::all(4)) ==
        ElementSet::single(4, null4.zero()));
}

TEST_CASE("ideals") {
  const FiniteSemigroup s = a_squared_b();
  CHECK(is_ideal(s, ElementSet::single(3, s.zero()), IdealSide::left));
  CHECK(is_ideal(s, ElementSet::single(3, s.zero()), IdealSide::right));
  CHECK(is_ideal(s, ElementSet::single(3, s.zero()), IdealSide::two_sided));
  // a*a = b escapes {a}
  CHECK(!is_ideal(s, ElementSet::from_labels(s, {"a"}), IdealSide::left));
  CHECK(is_ideal(s, ElementSet::from_labels(s, {"0", "b"}),
                 IdealSide::two_sided));
}

TEST_CASE("congruence recognition on a*a=b") {
  const FiniteSemigroup s = a_squared_b();
  CHECK(is_congruence(s, Partition::discrete(3)));
  CHECK(is_congruence(s, Partition::universal(3)));
  CHECK(is_congruence(s, Partition::from_blocks(3, {{0, 2}, {1}})));
  CHECK(!is_congruence(s, Partition::from_blocks(3, {{0, 1}, {2}})));
  CHECK(!is_congruence(s, Partition::from_blocks(3, {{0}, {1, 2}})));
}

TEST_CASE("congruence enumeration matches an independent partition filter") {
  const FiniteSemigroup s = a_squared_b();

  // Independent oracle: enumerate all 5 partitions of a 3-set by hand and
  // filter by the congruence definition applied directly to the table.
  const std::vector<std::vector<std::vector<int>>> partitions = {
      {{0}, {1}, {2}}, {{0, 1}, {2}}, {{0, 2}, {1}}, {{0}, {1, 2}},
      {{0, 1, 2}}};
  int oracle_count = 0;
  for (const auto& blocks : partitions) {
    auto block_of = [&](int x) {
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int el : blocks[b])
          if (el == x) return static_cast<int>(b);
      return -1;
    };
    bool compatible = true;
    for (const auto& block : blocks)
      for (int a : block)
        for (int b : block)
          for (int t = 0; t < 3 && compatible; ++t)
            compatible =
                block_of(s.product(t, a)) == block_of(s.product(t, b)) &&
                block_of(s.product(a, t)) == block_of(s.product(b, t));
    if (compatible) ++oracle_count;
  }
  REQUIRE(oracle_count == 3);

  const auto congruences = enumerate_congruences(s);
  CHECK(congruences.size() == 3);

  bool has_discrete = false, has_universal = false;
  for (const auto& info : congruences) {
    if (info.partition == Partition::discrete(3)) {
      has_discrete = true;
      CHECK(info.zero_restricted);
    }
    if (info.partition == Partition::universal(3)) {
      has_universal = true;
      CHECK(!info.zero_restricted);
    }
  }
  CHECK(has_discrete);
  CHECK(has_universal);
}

TEST_CASE("congruences of the null semigroup of order 2") {
  const auto congruences = enumerate_congruences(null_semigroup(2));
  REQUIRE(congruences.size() == 2);
  int zero_restricted = 0;
  for (const auto& info : congruences)
    if (info.zero_restricted) ++zero_restricted;
  CHECK(zero_restricted == 1);
}

TEST_CASE("congruence enumeration refuses above the bound") {
  CHECK_THROWS_AS(enumerate_congruences(null_semigroup(9)), BoundError);
  CHECK_NOTHROW(enumerate_congruences(null_semigroup(9), 9));
}

TEST_CASE("quotient by the Rees congruence collapsing {0,b}") {
  const FiniteSemigroup s = a_squared_b();
  const auto [q, projection] =
      quotient(s, Partition::from_blocks(3, {{0, 2}, {1}}));
  CHECK(q.labels() == std::vector<std::string>{"0", "a"});
  CHECK(q.label(q.zero()) == "0");
  CHECK(q.product(1, 1) == q.zero());  // the image of a*a = b collapses
  CHECK(check_homomorphism(projection));
  CHECK(is_surjective(projection));
}

TEST_CASE("discrete and universal quotients") {
  const FiniteSemigroup s = a_squared_b();
  const auto iso_copy = quotient(s, Partition::discrete(3));
  CHECK(iso_copy.quotient.size() == 3);
  CHECK(find_isomorphism(s, iso_copy.quotient).has_value());

  const auto point = quotient(s, Partition::universal(3));
  CHECK(point.quotient.size() == 1);

  CHECK_THROWS_AS(quotient(s, Partition::from_blocks(3, {{0, 1}, {2}})),
                  DomainError);
}

TEST_CASE("homomorphism checks") {
  const FiniteSemigroup s = a_squared_b();
  const Homomorphism id{s, s, {0, 1, 2}};
  CHECK(check_homomorphism(id));
  CHECK(is_injective(id));
  CHECK(is_zero_restricted(id));

  const FiniteSemigroup null3 = null_semigroup(3);
  const Homomorphism constant{null3, null3, {0, 0, 0}};
  CHECK(check_homomorphism(constant));
  CHECK(!is_injective(constant));
  CHECK(!is_zero_restricted(constant));

  // a -> b is not multiplicative on a*a=b
  const Homomorphism bad{s, s, {0, 2, 2}};
  CHECK(!check_homomorphism(bad));
}

TEST_CASE("isomorphism search") {
  const FiniteSemigroup s = a_squared_b();
  auto self = find_isomorphism(s, s);
  REQUIRE(self.has_value());
  CHECK(check_homomorphism(*self));
  CHECK(is_injective(*self));

  CHECK(!find_isomorphism(null_semigroup(2), semilattice2()).has_value());
  CHECK(!find_isomorphism(null_semigroup(2), null_semigroup(3)).has_value());
  CHECK_THROWS_AS(find_isomorphism(null_semigroup(9), null_semigroup(9)),
                  BoundError);
}

TEST_CASE("isomorphism search is symmetric over the order-3 corpus") {
  EnumerationTask task;
  task.order = 3;
  const auto corpus = enumerate_semigroups(task).semigroups;
  REQUIRE(corpus.size() == 20);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool forward = find_isomorphism(corpus[i], corpus[j]).has_value();
      const bool backward = find_isomorphism(corpus[j], corpus[i]).has_value();
      CHECK(forward == backward);
    }
}

TEST_CASE("quotients of enumerated congruences re-validate") {
  EnumerationTask task;
  task.order = 3;
  for (const auto& s : enumerate_semigroups(task).semigroups) {
    for (const auto& info : enumerate_congruences(s)) {
      const auto [q, projection] = quotient(s, info.partition);
      CHECK(FiniteSemigroup::validate(q.to_raw()).ok());
      CHECK(check_homomorphism(projection));
      CHECK(is_surjective(projection));
    }
  }
}
