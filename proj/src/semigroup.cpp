#include <kseg/semigroup.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace kseg {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> labels, int zero,
                                 std::vector<int> table)
    : labels_(std::move(labels)), zero_(zero), table_(std::move(table)) {
  for (int i = 0; i < size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<int> FiniteSemigroup::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RawSemigroup FiniteSemigroup::to_raw() const {
  RawSemigroup raw;
  raw.elements = labels_;
  raw.zero = labels_[zero_];
  raw.table.resize(size());
  for (int i = 0; i < size(); ++i) {
    raw.table[i].reserve(size());
    for (int j = 0; j < size(); ++j)
      raw.table[i].push_back(labels_[product(i, j)]);
  }
  return raw;
}

ValidationResult FiniteSemigroup::validate(const RawSemigroup& raw) {
  ValidationResult result;
  auto fail = [&](std::string kind, std::vector<std::string> where,
                  std::string message) {
    result.violations.push_back(
        {std::move(kind), std::move(where), std::move(message)});
  };

  const int n = static_cast<int>(raw.elements.size());
  if (n == 0) {
    fail("labels", {}, "element list is empty");
    return result;
  }

  std::set<std::string> seen;
  for (const auto& label : raw.elements) {
    if (!seen.insert(label).second)
      fail("labels", {label}, "duplicate element label '" + label + "'");
  }

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(raw.elements[i], i);

  int zero = -1;
  if (auto it = index.find(raw.zero); it != index.end()) {
    zero = it->second;
  } else {
    fail("zero", {raw.zero},
         "declared zero '" + raw.zero + "' is not an element");
  }

  if (static_cast<int>(raw.table.size()) != n) {
    fail("shape", {},
         "table has " + std::to_string(raw.table.size()) + " rows, expected " +
             std::to_string(n));
    return result;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw.table[i].size()) != n) {
      fail("shape", {raw.elements[i]},
           "row '" + raw.elements[i] + "' has " +
               std::to_string(raw.table[i].size()) + " entries, expected " +
               std::to_string(n));
      return result;
    }
  }

  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = index.find(raw.table[i][j]);
      if (it == index.end()) {
        fail("labels", {raw.elements[i], raw.elements[j]},
             "product entry '" + raw.table[i][j] + "' at (" + raw.elements[i] +
                 "," + raw.elements[j] + ") is not an element");
      } else {
        table[i * n + j] = it->second;
      }
    }
  }
  if (!result.violations.empty()) return result;

  auto prod = [&](int i, int j) { return table[i * n + j]; };

  if (zero >= 0) {
    for (int i = 0; i < n; ++i) {
      if (prod(zero, i) != zero)
        fail("zero", {raw.elements[i]},
             raw.zero + "*" + raw.elements[i] + " = " +
                 raw.elements[prod(zero, i)] + ", expected " + raw.zero);
      if (prod(i, zero) != zero)
        fail("zero", {raw.elements[i]},
             raw.elements[i] + "*" + raw.zero + " = " +
                 raw.elements[prod(i, zero)] + ", expected " + raw.zero);
    }
  }

  // Complete associativity scan: every failing triple is reported with both
  // parenthesizations spelled out.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = prod(a, b);
      for (int c = 0; c < n; ++c) {
        const int left = prod(ab, c);
        const int right = prod(a, prod(b, c));
        if (left != right) {
          fail("associativity",
               {raw.elements[a], raw.elements[b], raw.elements[c]},
               "(" + raw.elements[a] + "*" + raw.elements[b] + ")*" +
                   raw.elements[c] + " = " + raw.elements[left] + " but " +
                   raw.elements[a] + "*(" + raw.elements[b] + "*" +
                   raw.elements[c] + ") = " + raw.elements[right]);
        }
      }
    }
  }

  if (result.violations.empty())
    result.semigroup = FiniteSemigroup(raw.elements, zero, std::move(table));
  return result;
}

FiniteSemigroup FiniteSemigroup::from_parts(std::vector<std::string> labels,
                                            const std::string& zero_label,
                                            const std::vector<int>& table) {
  RawSemigroup raw;
  raw.zero = zero_label;
  raw.elements = std::move(labels);
  const int n = static_cast<int>(raw.elements.size());
  raw.table.resize(n);
  for (int i = 0; i < n; ++i) {
    raw.table[i].reserve(n);
    for (int j = 0; j < n; ++j)
      raw.table[i].push_back(raw.elements.at(table[i * n + j]));
  }
  auto result = validate(raw);
  if (!result.ok()) {
    std::vector<std::string> messages;
    for (const auto& v : result.violations) messages.push_back(v.message);
    throw DomainError("internal table construction failed: " +
                      join(messages, "; "));
  }
  return std::move(*result.semigroup);
}

ElementSet ElementSet::all(int universe) {
  ElementSet s(universe);
  for (int i = 0; i < universe; ++i) s.add(i);
  return s;
}

ElementSet ElementSet::single(int universe, int element) {
  ElementSet s(universe);
  s.add(element);
  return s;
}

ElementSet ElementSet::from_labels(const FiniteSemigroup& s,
                                   const std::vector<std::string>& labels) {
  ElementSet set(s.size());
  for (const auto& label : labels) {
    auto idx = s.index_of(label);
    if (!idx) throw DomainError("unknown element label '" + label + "'");
    set.add(*idx);
  }
  return set;
}

void ElementSet::add(int i) {
  if (!in_[i]) {
    in_[i] = true;
    ++count_;
  }
}

void ElementSet::remove(int i) {
  if (in_[i]) {
    in_[i] = false;
    --count_;
  }
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (int i = 0; i < universe(); ++i)
    if (in_[i] && !other.in_[i]) return false;
  return true;
}

ElementSet ElementSet::united(const ElementSet& other) const {
  ElementSet out(universe());
  for (int i = 0; i < universe(); ++i)
    if (in_[i] || other.in_[i]) out.add(i);
  return out;
}

ElementSet ElementSet::intersected(const ElementSet& other) const {
  ElementSet out(universe());
  for (int i = 0; i < universe(); ++i)
    if (in_[i] && other.in_[i]) out.add(i);
  return out;
}

ElementSet ElementSet::complemented() const {
  ElementSet out(universe());
  for (int i = 0; i < universe(); ++i)
    if (!in_[i]) out.add(i);
  return out;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int i = 0; i < universe(); ++i)
    if (in_[i]) out.push_back(i);
  return out;
}

std::vector<std::string> ElementSet::member_labels(
    const FiniteSemigroup& s) const {
  std::vector<std::string> out;
  out.reserve(count_);
  for (int i : members()) out.push_back(s.label(i));
  return out;
}

Partition Partition::from_block_of(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  Partition p;
  p.block_of_.assign(n, -1);
  std::unordered_map<int, int> renumber;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] =
        renumber.emplace(block_of[i], static_cast<int>(p.blocks_.size()));
    if (fresh) p.blocks_.emplace_back();
    p.block_of_[i] = it->second;
    p.blocks_[it->second].push_back(i);
  }
  return p;
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(n, -1);
  int id = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw DomainError("partition block is empty");
    for (int el : block) {
      if (el < 0 || el >= n || block_of[el] != -1)
        throw DomainError("partition blocks must be disjoint and in range");
      block_of[el] = id;
    }
    ++id;
  }
  for (int i = 0; i < n; ++i)
    if (block_of[i] == -1)
      throw DomainError("partition blocks must cover all elements");
  return from_block_of(block_of);
}

Partition Partition::discrete(int n) {
  std::vector<int> block_of(n);
  std::iota(block_of.begin(), block_of.end(), 0);
  return from_block_of(block_of);
}

Partition Partition::universal(int n) {
  return from_block_of(std::vector<int>(n, 0));
}

Partition Partition::collapse(int n, const ElementSet& block) {
  std::vector<int> block_of(n);
  int next = 1;
  for (int i = 0; i < n; ++i) block_of[i] = block.contains(i) ? 0 : next++;
  return from_block_of(block_of);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (const auto& block : blocks_) {
    const int target = coarser.block_of_[block.front()];
    for (int el : block)
      if (coarser.block_of_[el] != target) return false;
  }
  return true;
}

bool Partition::zero_restricted(int zero) const {
  return blocks_[block_of_[zero]].size() == 1;
}

ElementSet set_product(const FiniteSemigroup& s, const ElementSet& x,
                       const ElementSet& y) {
  ElementSet out(s.size());
  for (int a : x.members())
    for (int b : y.members()) out.add(s.product(a, b));
  return out;
}

bool is_ideal(const FiniteSemigroup& s, const ElementSet& x, IdealSide side) {
  const bool left = side == IdealSide::left || side == IdealSide::two_sided;
  const bool right = side == IdealSide::right || side == IdealSide::two_sided;
  for (int a = 0; a < s.size(); ++a) {
    for (int b : x.members()) {
      if (left && !x.contains(s.product(a, b))) return false;
      if (right && !x.contains(s.product(b, a))) return false;
    }
  }
  return true;
}

bool is_congruence(const FiniteSemigroup& s, const Partition& p) {
  if (p.size() != s.size()) return false;
  for (const auto& block : p.blocks()) {
    const int a = block.front();
    for (std::size_t k = 1; k < block.size(); ++k) {
      const int b = block[k];
      for (int t = 0; t < s.size(); ++t) {
        if (!p.same_block(s.product(t, a), s.product(t, b))) return false;
        if (!p.same_block(s.product(a, t), s.product(b, t))) return false;
      }
    }
  }
  return true;
}

std::vector<CongruenceInfo> enumerate_congruences(const FiniteSemigroup& s,
                                                  int bound) {
  const int n = s.size();
  if (n > bound)
    throw BoundError("congruence enumeration needs size <= " +
                     std::to_string(bound) + ", got " + std::to_string(n) +
                     "; raise the bound to at least " + std::to_string(n));

  std::vector<CongruenceInfo> out;
  // Restricted growth strings enumerate every partition exactly once, in
  // lexicographic order.
  std::vector<int> rgs(n, 0);
  while (true) {
    Partition p = Partition::from_block_of(rgs);
    if (is_congruence(s, p)) {
      const bool zr = p.zero_restricted(s.zero());
      out.push_back({std::move(p), zr});
    }
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int k = 0; k < i; ++k) max_prefix = std::max(max_prefix, rgs[k]);
      if (rgs[i] <= max_prefix) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

QuotientResult quotient(const FiniteSemigroup& s, const Partition& p) {
  if (!is_congruence(s, p))
    throw DomainError("quotient requires a congruence partition");

  const int k = p.block_count();
  std::vector<std::string> labels(k);
  for (int b = 0; b < k; ++b) {
    std::string least = s.label(p.blocks()[b].front());
    for (int el : p.blocks()[b]) least = std::min(least, s.label(el));
    labels[b] = least;
  }

  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[a * k + b] =
          p.block_id(s.product(p.blocks()[a].front(), p.blocks()[b].front()));

  const std::string zero_label = labels[p.block_id(s.zero())];
  FiniteSemigroup q =
      FiniteSemigroup::from_parts(std::move(labels), zero_label, table);

  std::vector<int> proj(s.size());
  for (int i = 0; i < s.size(); ++i) proj[i] = p.block_id(i);
  return {q, Homomorphism{s, q, std::move(proj)}};
}

bool check_homomorphism(const Homomorphism& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (static_cast<int>(f.map.size()) != s.size()) return false;
  for (int i : f.map)
    if (i < 0 || i >= t.size()) return false;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (f.map[s.product(a, b)] != t.product(f.map[a], f.map[b]))
        return false;
  return true;
}

bool is_injective(const Homomorphism& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (int i : f.map) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

bool is_surjective(const Homomorphism& f) {
  std::vector<bool> hit(f.target.size(), false);
  int covered = 0;
  for (int i : f.map)
    if (!hit[i]) {
      hit[i] = true;
      ++covered;
    }
  return covered == f.target.size();
}

bool is_zero_restricted(const Homomorphism& f) {
  for (int i = 0; i < f.source.size(); ++i)
    if ((f.map[i] == f.target.zero()) != (i == f.source.zero())) return false;
  return true;
}

std::optional<Homomorphism> find_isomorphism(const FiniteSemigroup& s,
                                             const FiniteSemigroup& s2,
                                             int bound) {
  if (s.size() != s2.size()) return std::nullopt;
  const int n = s.size();
  if (n > bound)
    throw BoundError("isomorphism search needs size <= " +
                     std::to_string(bound) + ", got " + std::to_string(n) +
                     "; raise the bound to at least " + std::to_string(n));

  std::vector<int> from;  // nonzero indices of s, ascending
  std::vector<int> to;    // nonzero indices of s2, ascending
  for (int i = 0; i < n; ++i) {
    if (i != s.zero()) from.push_back(i);
    if (i != s2.zero()) to.push_back(i);
  }

  // Any isomorphism of semigroups with zero maps zero to zero (it is the
  // unique z with zS = Sz = {z}), so only nonzero elements are permuted.
  std::vector<int> map(n);
  do {
    map[s.zero()] = s2.zero();
    for (std::size_t k = 0; k < from.size(); ++k) map[from[k]] = to[k];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (map[s.product(a, b)] != s2.product(map[a], map[b])) ok = false;
    if (ok) return Homomorphism{s, s2, map};
  } while (std::next_permutation(to.begin(), to.end()));
  return std::nullopt;
}

}  // namespace kseg
