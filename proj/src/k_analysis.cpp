#include <kseg/k_analysis.hpp>

namespace kseg {

std::optional<CategoricityWitness> categoricity_witness(
    const FiniteSemigroup& s) {
  const int n = s.size();
  const int z = s.zero();
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      const int fg = s.product(f, g);
      if (fg == z) continue;
      for (int h = 0; h < n; ++h) {
        if (s.product(g, h) == z) continue;
        if (s.product(fg, h) == z) return CategoricityWitness{f, g, h};
      }
    }
  }
  return std::nullopt;
}

Annihilators annihilators(const FiniteSemigroup& s) {
  const int n = s.size();
  const int z = s.zero();
  Annihilators ann{ElementSet(n), ElementSet(n), ElementSet(n)};
  for (int a = 0; a < n; ++a) {
    bool left = true, right = true;
    for (int x = 0; x < n; ++x) {
      if (s.product(a, x) != z) left = false;
      if (s.product(x, a) != z) right = false;
      if (!left && !right) break;
    }
    if (left) ann.left.add(a);
    if (right) ann.right.add(a);
  }
  ann.quasi = ann.left.united(ann.right);
  return ann;
}

std::optional<int> nilpotency_degree(const FiniteSemigroup& s) {
  const ElementSet everything = ElementSet::all(s.size());
  ElementSet power = everything;
  int degree = 1;
  while (true) {
    if (power.zero_only(s.zero())) return degree;
    ElementSet next = set_product(s, power, everything);
    if (next == power) return std::nullopt;
    power = std::move(next);
    ++degree;
  }
}

bool three_nilpotent_iff_fully_annihilating(const FiniteSemigroup& s) {
  const auto degree = nilpotency_degree(s);
  const bool three_nilpotent = degree.has_value() && *degree <= 3;
  const bool fully_annihilating =
      annihilators(s).quasi == ElementSet::all(s.size());
  return three_nilpotent == fully_annihilating;
}

ComplementResult complement_subsemigroup(const FiniteSemigroup& s) {
  const int z = s.zero();
  const Annihilators ann = annihilators(s);

  std::vector<int> keep;  // indices of T's elements within S, in S order
  for (int i = 0; i < s.size(); ++i)
    if (i == z || !ann.quasi.contains(i)) keep.push_back(i);

  std::vector<int> position(s.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) position[keep[k]] = (int)k;

  const int m = static_cast<int>(keep.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int p = s.product(keep[a], keep[b]);
      if (p != z && ann.quasi.contains(p))
        throw DomainError(
            "complement is not closed: " + s.label(keep[a]) + "*" +
            s.label(keep[b]) + " = " + s.label(p) +
            " lies in the quasi-annihilator (input is not categorical "
            "at zero)");
      table[a * m + b] = position[p];
    }
  }

  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i : keep) labels.push_back(s.label(i));

  FiniteSemigroup t =
      FiniteSemigroup::from_parts(std::move(labels), s.label(z), table);

  std::vector<int> incl(m);
  for (int k = 0; k < m; ++k) incl[k] = keep[k];
  return {t, Homomorphism{t, s, std::move(incl)}};
}

}  // namespace kseg
