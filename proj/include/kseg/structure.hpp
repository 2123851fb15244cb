#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <kseg/category.hpp>
#include <kseg/k_analysis.hpp>
#include <kseg/rees.hpp>
#include <kseg/semigroup.hpp>

namespace kseg {

/// The two annihilation-profile equivalences on a semigroup T whose only
/// two-sided degenerate element is zero, together with their common
/// refinement. Two elements are P-related when the same elements left-
/// annihilate them, Q-related when they right-annihilate the same elements;
/// zero forms a singleton class in each. Nonzero P-classes are indexed by I,
/// nonzero Q-classes by Lambda, both ordered by least member.
struct PqnData {
  Partition p_classes;
  Partition q_classes;
  std::vector<int> i_blocks;       // nonzero P-class block ids, ascending
  std::vector<int> lambda_blocks;  // nonzero Q-class block ids, ascending
  // (position in i_blocks, position in lambda_blocks) -> nonempty class
  std::map<std::pair<int, int>, ElementSet> n_classes;

  int i_count() const { return static_cast<int>(i_blocks.size()); }
  int lambda_count() const { return static_cast<int>(lambda_blocks.size()); }
};

/// Computes P, Q and N on t. Throws DomainError naming the element when a
/// nonzero element is annihilated by all of t on either side (such an
/// element would share zero's profile).
PqnData compute_pqn(const FiniteSemigroup& t);

/// The common refinement of P and Q as a partition (zero is a singleton
/// block): the coarsest 0-restricted congruence on t.
Partition n_partition(const FiniteSemigroup& t, const PqnData& pqn);

Partition greatest_zero_restricted_congruence(const FiniteSemigroup& t);

/// Rees data with w[lambda][i] = 1 exactly when the set product of the
/// Q-class by the P-class is not {0}. Each such product is either all zero
/// or zero-free; a mixed product throws DomainError (impossible when t came
/// from a semigroup categorical at zero).
ReesSemigroup sandwich_matrix(const FiniteSemigroup& t, const PqnData& pqn);

/// The map from t's quotient by N into the materialized Rees semigroup,
/// sending the class at (i,lambda) to the pair (i,lambda) and zero to zero.
Homomorphism rees_embedding(const FiniteSemigroup& t, const PqnData& pqn,
                            const ReesSemigroup& rees);

/// Everything the decomposition pipeline produces, plus the verification
/// flags. `checks` preserves a fixed order; `witnesses` explains every
/// false flag.
struct DecompositionReport {
  FiniteSemigroup s;
  Annihilators annihilators;        // of s
  FiniteSemigroup t;                // complement subsemigroup
  PqnData pqn;                      // on t
  ReesSemigroup rees;
  FiniteSemigroup rees_materialized;
  FiniteSemigroup t_mod_n;
  Homomorphism projection;          // t -> t_mod_n
  Homomorphism phi;                 // t_mod_n -> rees_materialized
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> witnesses;

  bool all_checks_pass() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
  bool check(const std::string& name) const {
    for (const auto& [n, ok] : checks)
      if (n == name) return ok;
    return false;
  }
};

/// Runs the full pipeline on a semigroup categorical at zero: annihilators,
/// complement subsemigroup, P/Q/N, sandwich matrix, embedding; records a
/// flag for every verified law. The exhaustive congruence cross-check and
/// the quotient-isomorphism check run only when t fits the bounds (their
/// keys are omitted otherwise). Throws NotCategoricalError on non-K input.
DecompositionReport decompose(const FiniteSemigroup& s,
                              int congruence_bound = 8, int iso_bound = 8);

struct InterpretationCheck {
  std::string name;
  bool passed;
  std::string witness;  // empty on success
};

/// Verifies the category reading of a decomposition where s was built from
/// c: trivial quasi-annihilator, P-classes = codomain fibers, Q-classes =
/// domain fibers, N-classes = hom sets, sandwich matrix = identity under the
/// object correspondence, diagonal classes are monoids, and the class/object
/// correspondence is bijective.
std::vector<InterpretationCheck> category_interpretation_check(
    const FiniteSemigroup& s, const SmallCategory& c,
    const DecompositionReport& report);

}  // namespace kseg
