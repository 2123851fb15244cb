#include <doctest.h>

#include <kseg/constructors.hpp>
#include <kseg/enumeration.hpp>
#include <kseg/structure.hpp>

#include "helpers.hpp"

using namespace kseg;
using namespace kseg::testing;

namespace {

SmallCategory two_object_identity_category() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"ix", "x", "x"}, {"iy", "y", "y"}};
  raw.identities = {{"x", "ix"}, {"y", "iy"}};
  raw.composition = {{"ix", "ix", "ix"}, {"iy", "iy", "iy"}};
  auto validated = SmallCategory::validate(raw);
  REQUIRE(validated.ok());
  return std::move(*validated.category);
}

SmallCategory arrow_category() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"ix", "x", "x"}, {"iy", "y", "y"}, {"f", "x", "y"}};
  raw.identities = {{"x", "ix"}, {"y", "iy"}};
  raw.composition = {{"ix", "ix", "ix"},
                     {"iy", "iy", "iy"},
                     {"ix", "f", "f"},
                     {"f", "iy", "f"}};
  auto validated = SmallCategory::validate(raw);
  REQUIRE(validated.ok());
  return std::move(*validated.category);
}

}  // namespace

TEST_CASE("P/Q/N on the two-object identity category") {
  const FiniteSemigroup s =
      semigroup_of_category(two_object_identity_category());
  REQUIRE(s.size() == 3);
  const PqnData pqn = compute_pqn(s);

  CHECK(pqn.i_count() == 2);
  CHECK(pqn.lambda_count() == 2);
  CHECK(pqn.p_classes.zero_restricted(s.zero()));
  CHECK(pqn.q_classes.zero_restricted(s.zero()));

  // diagonal classes only
  CHECK(pqn.n_classes.size() == 2);
  CHECK(pqn.n_classes.count({0, 0}) == 1);
  CHECK(pqn.n_classes.count({1, 1}) == 1);
  CHECK(pqn.n_classes.count({0, 1}) == 0);
  CHECK(pqn.n_classes.count({1, 0}) == 0);
}

TEST_CASE("P/Q/N on the arrow category") {
  const FiniteSemigroup s = semigroup_of_category(arrow_category());
  REQUIRE(s.size() == 4);
  const PqnData pqn = compute_pqn(s);

  // arrows ending at y form one P-class, arrows leaving x one Q-class
  REQUIRE(pqn.i_count() == 2);
  REQUIRE(pqn.lambda_count() == 2);
  const auto p1 = pqn.p_classes.blocks()[pqn.i_blocks[0]];
  const auto p2 = pqn.p_classes.blocks()[pqn.i_blocks[1]];
  CHECK(p1 == std::vector<int>{*s.index_of("ix")});
  CHECK(p2 == std::vector<int>{*s.index_of("iy"), *s.index_of("f")});
  const auto q1 = pqn.q_classes.blocks()[pqn.lambda_blocks[0]];
  const auto q2 = pqn.q_classes.blocks()[pqn.lambda_blocks[1]];
  CHECK(q1 == std::vector<int>{*s.index_of("ix"), *s.index_of("f")});
  CHECK(q2 == std::vector<int>{*s.index_of("iy")});

  // N classes are the hom sets: (i,lambda) = (2,1) holds exactly f
  REQUIRE(pqn.n_classes.count({1, 0}) == 1);
  CHECK(pqn.n_classes.at({1, 0}).member_labels(s) ==
        std::vector<std::string>{"f"});
}

TEST_CASE("compute_pqn rejects a degenerate complement") {
  const FiniteSemigroup s = degenerate_complement_example();
  REQUIRE(is_categorical_at_zero(s));

  const auto [t, inclusion] = complement_subsemigroup(s);
  CHECK(t.labels() == std::vector<std::string>{"0", "t", "w"});
  try {
    compute_pqn(t);
    FAIL("compute_pqn accepted a degenerate complement");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("'t'") != std::string::npos);
  }

  // the pipeline surfaces the same failure
  CHECK_THROWS_AS(decompose(s), DomainError);
}

TEST_CASE("the sandwich matrix of a category semigroup is the identity") {
  const FiniteSemigroup s =
      semigroup_of_category(two_object_identity_category());
  const PqnData pqn = compute_pqn(s);
  const ReesSemigroup rees = sandwich_matrix(s, pqn);
  CHECK(rees.w == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
}

TEST_CASE("the trivial semigroup decomposes to empty Rees data") {
  const FiniteSemigroup s = null_semigroup(1);
  const DecompositionReport report = decompose(s);
  CHECK(report.t.size() == 1);
  CHECK(report.rees.i_labels.empty());
  CHECK(report.rees.lambda_labels.empty());
  CHECK(report.rees_materialized.size() == 1);
  CHECK(report.phi.map == std::vector<int>{0});
  CHECK(report.all_checks_pass());
}

TEST_CASE("decomposing a Rees semigroup recovers its sandwich matrix") {
  ReesSemigroup data;
  data.i_labels = {"1", "2"};
  data.lambda_labels = {"1", "2"};
  data.w = {{1, 0}, {0, 1}};
  const FiniteSemigroup m = data.materialize();
  REQUIRE(m.size() == 5);
  REQUIRE(is_categorical_at_zero(m));

  const DecompositionReport report = decompose(m);
  CHECK(report.annihilators.quasi.zero_only(m.zero()));
  CHECK(report.t.size() == 5);
  CHECK(report.rees.w == data.w);
  CHECK(report.all_checks_pass());
  CHECK(find_isomorphism(report.rees_materialized, m).has_value());
}

TEST_CASE("the embedding on the identity category hits the diagonal") {
  const FiniteSemigroup s =
      semigroup_of_category(two_object_identity_category());
  const DecompositionReport report = decompose(s);
  REQUIRE(report.all_checks_pass());

  const FiniteSemigroup& m = report.rees_materialized;
  REQUIRE(report.t_mod_n.size() == 3);
  // ix's class lands on (1,1), iy's class on (2,2)
  const int ix_class = report.projection.apply(*report.t.index_of("ix"));
  const int iy_class = report.projection.apply(*report.t.index_of("iy"));
  CHECK(m.label(report.phi.apply(ix_class)) == "(1,1)");
  CHECK(m.label(report.phi.apply(iy_class)) == "(2,2)");
  CHECK(is_zero_restricted(report.phi));
  CHECK(is_injective(report.phi));
  CHECK(check_homomorphism(report.phi));
}

TEST_CASE("a group with adjoined zero collapses to one class") {
  // {0,1,g} with 1 the identity and g*g = 1: no nonzero product vanishes,
  // so both profiles lump 1 and g together and N has a two-element class.
  const FiniteSemigroup s = make_semigroup(
      {"0", "1", "g"}, "0",
      {{"0", "0", "0"}, {"0", "1", "g"}, {"0", "g", "1"}});
  REQUIRE(is_categorical_at_zero(s));

  const DecompositionReport report = decompose(s);
  CHECK(report.all_checks_pass());
  CHECK(report.pqn.i_count() == 1);
  CHECK(report.pqn.lambda_count() == 1);
  REQUIRE(report.pqn.n_classes.count({0, 0}) == 1);
  CHECK(report.pqn.n_classes.at({0, 0}).count() == 2);

  // T/N is the two-element semilattice embedded onto the 1x1 Rees semigroup
  CHECK(report.t_mod_n.size() == 2);
  CHECK(report.rees.w == std::vector<std::vector<int>>{{1}});
  CHECK(report.rees_materialized.size() == 2);
  CHECK(is_injective(report.phi));

  const Partition n = greatest_zero_restricted_congruence(s);
  CHECK(n.block_count() == 2);
  CHECK(n.zero_restricted(s.zero()));
}

TEST_CASE("decompose refuses non-categorical input with its witness") {
  try {
    decompose(a_squared_b());
    FAIL("decompose accepted a non-categorical table");
  } catch (const NotCategoricalError& e) {
    CHECK(e.witness_labels() ==
          std::array<std::string, 3>{"a", "a", "a"});
  }
}

TEST_CASE("decomposition flags hold on all order-3 semigroups categorical "
          "at zero") {
  EnumerationTask task;
  task.order = 3;
  task.k_only = true;
  const auto corpus = enumerate_semigroups(task).semigroups;
  REQUIRE(corpus.size() == 16);
  for (const auto& s : corpus) {
    const DecompositionReport report = decompose(s);
    CHECK(report.all_checks_pass());
    if (!report.all_checks_pass())
      for (const auto& w : report.witnesses) MESSAGE(w);
  }
}

TEST_CASE("N is the greatest 0-restricted congruence on complements from "
          "the order-3 corpus") {
  EnumerationTask task;
  task.order = 3;
  task.k_only = true;
  for (const auto& s : enumerate_semigroups(task).semigroups) {
    const auto [t, inclusion] = complement_subsemigroup(s);
    const Partition n = greatest_zero_restricted_congruence(t);
    CHECK(is_congruence(t, n));
    CHECK(n.zero_restricted(t.zero()));
    for (const auto& info : enumerate_congruences(t)) {
      if (!info.zero_restricted) continue;
      CHECK(info.partition.refines(n));
    }
  }
}

TEST_CASE("P-classes with zero are right ideals and Q-classes left ideals") {
  EnumerationTask task;
  task.order = 3;
  task.k_only = true;
  for (const auto& s : enumerate_semigroups(task).semigroups) {
    const auto [t, inclusion] = complement_subsemigroup(s);
    const PqnData pqn = compute_pqn(t);
    for (int i = 0; i < pqn.i_count(); ++i) {
      ElementSet with_zero(t.size());
      with_zero.add(t.zero());
      for (int el : pqn.p_classes.blocks()[pqn.i_blocks[i]])
        with_zero.add(el);
      CHECK(is_ideal(t, with_zero, IdealSide::right));
    }
    for (int l = 0; l < pqn.lambda_count(); ++l) {
      ElementSet with_zero(t.size());
      with_zero.add(t.zero());
      for (int el : pqn.q_classes.blocks()[pqn.lambda_blocks[l]])
        with_zero.add(el);
      CHECK(is_ideal(t, with_zero, IdealSide::left));
    }
  }
}

TEST_CASE("the pipeline does not assume the zero sits first") {
  const FiniteSemigroup s = make_semigroup(
      {"x", "0", "y"}, "0",
      {{"x", "0", "0"}, {"0", "0", "0"}, {"0", "0", "y"}});
  REQUIRE(s.zero() == 1);
  const DecompositionReport report = decompose(s);
  CHECK(report.all_checks_pass());
  CHECK(report.t.labels() == std::vector<std::string>{"x", "0", "y"});
  CHECK(report.pqn.i_count() == 2);
  CHECK(report.rees.w == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

  // quotient block labels come from the lexicographically least member
  const auto [q, projection] =
      quotient(s, Partition::from_blocks(3, {{0}, {1}, {2}}));
  CHECK(q.labels() == s.labels());
}

TEST_CASE("category interpretation checks pass on hand-built categories") {
  for (const SmallCategory& cat :
       {two_object_identity_category(), arrow_category()}) {
    const FiniteSemigroup s = semigroup_of_category(cat);
    const DecompositionReport report = decompose(s);
    const auto checks = category_interpretation_check(s, cat, report);
    REQUIRE(checks.size() == 7);
    for (const auto& check : checks) {
      INFO(check.name, ": ", check.witness);
      CHECK(check.passed);
    }
  }
}
