#pragma once

#include <string>
#include <vector>

#include <kseg/semigroup.hpp>

namespace kseg {

/// Rees data over the one-element group: index sets I and Lambda plus a
/// {0,1} sandwich matrix W indexed [lambda][i]. Nonzero elements are the
/// pairs (i,lambda); the product (i,lambda)(j,mu) is (i,mu) when
/// w[lambda][j] = 1 and zero otherwise.
struct ReesSemigroup {
  std::vector<std::string> i_labels;
  std::vector<std::string> lambda_labels;
  std::vector<std::vector<int>> w;  // |Lambda| rows of |I| entries in {0,1}

  static std::string pair_label(const std::string& i, const std::string& l) {
    return "(" + i + "," + l + ")";
  }

  /// Number of nonzero elements.
  int pair_count() const {
    return static_cast<int>(i_labels.size() * lambda_labels.size());
  }

  /// Builds the Cayley table; the result is a valid semigroup with zero and
  /// categorical at zero for every {0,1} matrix. Throws DomainError on
  /// dimension mismatch or entries outside {0,1}.
  FiniteSemigroup materialize() const;
};

}  // namespace kseg
