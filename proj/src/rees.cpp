#include <kseg/rees.hpp>

namespace kseg {

FiniteSemigroup ReesSemigroup::materialize() const {
  const int ni = static_cast<int>(i_labels.size());
  const int nl = static_cast<int>(lambda_labels.size());
  if (static_cast<int>(w.size()) != nl)
    throw DomainError("sandwich matrix has " + std::to_string(w.size()) +
                      " rows, expected one per Lambda label (" +
                      std::to_string(nl) + ")");
  for (const auto& row : w) {
    if (static_cast<int>(row.size()) != ni)
      throw DomainError("sandwich matrix row has " +
                        std::to_string(row.size()) +
                        " entries, expected one per I label (" +
                        std::to_string(ni) + ")");
    for (int v : row)
      if (v != 0 && v != 1)
        throw DomainError("sandwich matrix entries must be 0 or 1");
  }

  // Element order: zero first, then pairs (i,lambda) with i major.
  std::vector<std::string> labels;
  labels.reserve(1 + static_cast<std::size_t>(ni) * nl);
  labels.push_back("0");
  for (int i = 0; i < ni; ++i)
    for (int l = 0; l < nl; ++l)
      labels.push_back(pair_label(i_labels[i], lambda_labels[l]));

  const int n = static_cast<int>(labels.size());
  auto at = [&](int i, int l) { return 1 + i * nl + l; };
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < ni; ++i)
    for (int l = 0; l < nl; ++l)
      for (int j = 0; j < ni; ++j)
        for (int m = 0; m < nl; ++m)
          table[at(i, l) * n + at(j, m)] = w[l][j] ? at(i, m) : 0;

  return FiniteSemigroup::from_parts(std::move(labels), "0", table);
}

}  // namespace kseg
