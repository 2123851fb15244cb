#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <kseg/constructors.hpp>
#include <kseg/rees.hpp>
#include <kseg/semigroup.hpp>

namespace kseg::testing {

/// Builds a semigroup from label rows, validating on the way.
inline FiniteSemigroup make_semigroup(
    std::vector<std::string> elements, const std::string& zero,
    const std::vector<std::vector<std::string>>& table) {
  RawSemigroup raw{std::move(elements), zero, table};
  auto result = FiniteSemigroup::validate(raw);
  if (!result.ok())
    throw DomainError("test fixture invalid: " +
                      result.violations.front().message);
  return std::move(*result.semigroup);
}

/// The 3-element semigroup {0,a,b} with a*a = b and all other products zero.
/// Not categorical at zero: a*a != 0, a*a != 0, but a*a*a = 0.
inline FiniteSemigroup a_squared_b() {
  return make_semigroup({"0", "a", "b"}, "0",
                        {{"0", "0", "0"}, {"0", "b", "0"}, {"0", "0", "0"}});
}

inline FiniteSemigroup null_semigroup(int n) {
  std::vector<std::string> labels{"0"};
  for (int i = 1; i < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  std::vector<std::vector<std::string>> table(
      n, std::vector<std::string>(n, "0"));
  return make_semigroup(std::move(labels), "0", table);
}

/// {0,e} with e*e = e.
inline FiniteSemigroup semilattice2() {
  return make_semigroup({"0", "e"}, "0", {{"0", "0"}, {"0", "e"}});
}

/// A 5-element semigroup categorical at zero whose complement subsemigroup
/// T = {0,t,w} has t annihilating all of T, while t stays outside the
/// quasi-annihilator of the whole semigroup (t*s = p, w*t = t).
inline FiniteSemigroup degenerate_complement_example() {
  return make_semigroup({"0", "t", "s", "p", "w"}, "0",
                        {{"0", "0", "0", "0", "0"},
                         {"0", "0", "p", "0", "0"},
                         {"0", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "0"},
                         {"0", "t", "p", "p", "w"}});
}

inline int draw(std::mt19937_64& gen, int bound) {
  return static_cast<int>(gen() % static_cast<std::uint64_t>(bound));
}

/// Seeded generator of valid 3-nilpotent construction specs. Produces both
/// the degenerate all-shared shape (null multiplication) and proper splits
/// with witness conditions repaired after random phi assignment.
inline RawNilpotentSpec random_nilpotent_spec(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RawNilpotentSpec raw;

  int b_only = 0, c_only = 0, shared = draw(gen, 4);
  if (draw(gen, 4) != 0) {  // proper split
    b_only = 1 + draw(gen, 2);
    c_only = 1 + draw(gen, 2);
    shared = 1 + draw(gen, 2);
  }

  std::vector<std::string> bs, cs, ss;
  for (int i = 0; i < b_only; ++i) bs.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < c_only; ++i) cs.push_back("c" + std::to_string(i + 1));
  for (int i = 0; i < shared; ++i) ss.push_back("s" + std::to_string(i + 1));

  raw.a = {"0"};
  raw.a.insert(raw.a.end(), bs.begin(), bs.end());
  raw.a.insert(raw.a.end(), cs.begin(), cs.end());
  raw.a.insert(raw.a.end(), ss.begin(), ss.end());
  raw.b = {"0"};
  raw.b.insert(raw.b.end(), bs.begin(), bs.end());
  raw.b.insert(raw.b.end(), ss.begin(), ss.end());
  raw.c = {"0"};
  raw.c.insert(raw.c.end(), cs.begin(), cs.end());
  raw.c.insert(raw.c.end(), ss.begin(), ss.end());

  std::vector<std::vector<std::string>> value(
      b_only, std::vector<std::string>(c_only, "0"));
  for (int b = 0; b < b_only; ++b)
    for (int c = 0; c < c_only; ++c) {
      const int v = draw(gen, shared + 1);
      value[b][c] = v == 0 ? "0" : ss[v - 1];
    }
  // repair the witness conditions
  for (int b = 0; b < b_only; ++b) {
    bool ok = false;
    for (int c = 0; c < c_only; ++c) ok = ok || value[b][c] != "0";
    if (!ok) value[b][draw(gen, c_only)] = ss[draw(gen, shared)];
  }
  for (int c = 0; c < c_only; ++c) {
    bool ok = false;
    for (int b = 0; b < b_only; ++b) ok = ok || value[b][c] != "0";
    if (!ok) value[draw(gen, b_only)][c] = ss[draw(gen, shared)];
  }
  for (int b = 0; b < b_only; ++b)
    for (int c = 0; c < c_only; ++c)
      if (value[b][c] != "0" || draw(gen, 2) == 0)
        raw.phi.push_back({bs[b], cs[c], value[b][c]});
  return raw;
}

/// Seeded random Rees data with dimensions up to 4x4 and uniform {0,1}
/// entries (all-zero rows and columns included).
inline ReesSemigroup random_rees_spec(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  ReesSemigroup rees;
  const int ni = 1 + draw(gen, 4);
  const int nl = 1 + draw(gen, 4);
  for (int i = 0; i < ni; ++i) rees.i_labels.push_back("i" + std::to_string(i + 1));
  for (int l = 0; l < nl; ++l)
    rees.lambda_labels.push_back("l" + std::to_string(l + 1));
  rees.w.assign(nl, std::vector<int>(ni, 0));
  for (auto& row : rees.w)
    for (auto& v : row) v = draw(gen, 2);
  return rees;
}

}  // namespace kseg::testing
