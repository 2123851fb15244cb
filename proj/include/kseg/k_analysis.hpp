#pragma once

#include <array>
#include <optional>
#include <string>

#include <kseg/semigroup.hpp>

namespace kseg {

/// A triple witnessing failure of categoricity at zero:
/// f*g != 0, g*h != 0, yet f*g*h = 0.
struct CategoricityWitness {
  int f, g, h;

  std::string describe(const FiniteSemigroup& s) const {
    return "(" + s.label(f) + "," + s.label(g) + "," + s.label(h) + ")";
  }
};

/// Raised when an operation that requires categoricity at zero is handed a
/// semigroup that is not; carries the first violating triple.
class NotCategoricalError : public DomainError {
 public:
  NotCategoricalError(const FiniteSemigroup& s, CategoricityWitness w)
      : DomainError("not categorical at zero, witness " + w.describe(s)),
        witness_(w),
        labels_{s.label(w.f), s.label(w.g), s.label(w.h)} {}

  CategoricityWitness witness() const { return witness_; }
  const std::array<std::string, 3>& witness_labels() const { return labels_; }

 private:
  CategoricityWitness witness_;
  std::array<std::string, 3> labels_;
};

/// First triple (in lexicographic index order) violating "f*g*h = 0 implies
/// f*g = 0 or g*h = 0", or nothing when the semigroup is categorical at zero.
std::optional<CategoricityWitness> categoricity_witness(
    const FiniteSemigroup& s);

inline bool is_categorical_at_zero(const FiniteSemigroup& s) {
  return !categoricity_witness(s).has_value();
}

/// left  = {a | aS = 0},  right = {a | Sa = 0},  quasi = left union right.
/// All three are two-sided ideals.
struct Annihilators {
  ElementSet left;
  ElementSet right;
  ElementSet quasi;
};

Annihilators annihilators(const FiniteSemigroup& s);

/// Least n >= 1 with S^n = {0} under iterated set products, or nothing when
/// the descending chain S >= S^2 >= ... stabilizes above {0}.
std::optional<int> nilpotency_degree(const FiniteSemigroup& s);

/// The law "S^3 = 0 exactly when every element is a left or right
/// annihilator". Holds on every semigroup categorical at zero; can fail
/// otherwise (the nilpotent-to-annihilator direction needs categoricity).
bool three_nilpotent_iff_fully_annihilating(const FiniteSemigroup& s);

struct ComplementResult {
  FiniteSemigroup t;          // (S without quasi-annihilator) plus zero
  Homomorphism inclusion;     // t -> s, identity on surviving labels
};

/// The complement subsemigroup T = (S \ Ann_q S) + {0}, with multiplication
/// inherited from S. Throws DomainError naming the offending pair if a
/// product of two non-annihilator elements lands in Ann_q S \ {0} (possible
/// only when s is not categorical at zero).
ComplementResult complement_subsemigroup(const FiniteSemigroup& s);

}  // namespace kseg
