#include <kseg/constructors.hpp>

#include <algorithm>
#include <set>

namespace kseg {

FiniteSemigroup semigroup_of_category(const SmallCategory& c) {
  const int m = c.morphism_count();
  for (int i = 0; i < m; ++i)
    if (c.morphism(i).name == "0")
      throw DomainError("morphism name '0' is reserved for the zero element");

  std::vector<std::string> labels;
  labels.reserve(m + 1);
  labels.push_back("0");
  for (int i = 0; i < m; ++i) labels.push_back(c.morphism(i).name);

  const int n = m + 1;
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  // f*g composes g first and then f, so f*g is nonzero exactly when
  // dom f = cod g; arrows into an object share a left-annihilation profile.
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int composite = c.then(g, f);
      table[(f + 1) * n + (g + 1)] = composite < 0 ? 0 : composite + 1;
    }

  return FiniteSemigroup::from_parts(std::move(labels), "0", table);
}

NilpotentSpecValidation validate_nilpotent_spec(const RawNilpotentSpec& raw) {
  NilpotentSpecValidation result;
  auto fail = [&](std::string kind, std::vector<std::string> where,
                  std::string message) {
    result.violations.push_back(
        {std::move(kind), std::move(where), std::move(message)});
  };

  NilpotentSpec spec;
  spec.a = raw.a;
  const int n = static_cast<int>(spec.a.size());

  std::set<std::string> seen;
  for (const auto& label : spec.a)
    if (!seen.insert(label).second)
      fail("labels", {label}, "duplicate carrier label '" + label + "'");

  auto idx = [&](const std::string& label) -> int {
    for (int i = 0; i < n; ++i)
      if (spec.a[i] == label) return i;
    return -1;
  };

  const int zero = idx("0");
  if (zero < 0) fail("zero", {}, "carrier must contain the zero label '0'");

  spec.in_b.assign(n, false);
  spec.in_c.assign(n, false);
  for (const auto& label : raw.b) {
    const int i = idx(label);
    if (i < 0)
      fail("labels", {label}, "B member '" + label + "' is not in A");
    else
      spec.in_b[i] = true;
  }
  for (const auto& label : raw.c) {
    const int i = idx(label);
    if (i < 0)
      fail("labels", {label}, "C member '" + label + "' is not in A");
    else
      spec.in_c[i] = true;
  }
  if (!result.violations.empty()) return result;

  for (int i = 0; i < n; ++i)
    if (!spec.in_b[i] && !spec.in_c[i])
      fail("cover", {spec.a[i]},
           "'" + spec.a[i] + "' lies in neither B nor C (A must be B union C)");
  if (zero >= 0 && !(spec.in_b[zero] && spec.in_c[zero]))
    fail("zero", {}, "the zero must belong to both B and C");

  for (const auto& [b, c, value] : raw.phi) {
    const int bi = idx(b), ci = idx(c), vi = idx(value);
    if (bi < 0 || ci < 0 || vi < 0) {
      fail("phi", {b, c, value}, "phi entry names a label outside A");
      continue;
    }
    if (!spec.in_b_only(bi))
      fail("phi", {b}, "phi argument '" + b + "' must lie in B minus C");
    if (!spec.in_c_only(ci))
      fail("phi", {c}, "phi argument '" + c + "' must lie in C minus B");
    if (!(spec.in_b[vi] && spec.in_c[vi]))
      fail("phi", {value},
           "phi value '" + value + "' must lie in B intersect C");
    if (!spec.phi.emplace(std::make_pair(bi, ci), vi).second)
      fail("phi", {b, c}, "duplicate phi entry for (" + b + "," + c + ")");
  }
  if (!result.violations.empty()) return result;

  // Witness conditions keep the annihilators exactly C and B.
  for (int b = 0; b < n; ++b) {
    if (!spec.in_b_only(b)) continue;
    bool witnessed = false;
    for (const auto& [key, value] : spec.phi)
      if (key.first == b && value != zero) witnessed = true;
    if (!witnessed)
      fail("witness", {spec.a[b]},
           "'" + spec.a[b] + "' in B minus C has no c with phi(b,c) != 0");
  }
  for (int c = 0; c < n; ++c) {
    if (!spec.in_c_only(c)) continue;
    bool witnessed = false;
    for (const auto& [key, value] : spec.phi)
      if (key.second == c && value != zero) witnessed = true;
    if (!witnessed)
      fail("witness", {spec.a[c]},
           "'" + spec.a[c] + "' in C minus B has no b with phi(b,c) != 0");
  }

  if (result.violations.empty()) result.spec = std::move(spec);
  return result;
}

FiniteSemigroup nilpotent_from_spec(const NilpotentSpec& spec) {
  const int n = static_cast<int>(spec.a.size());
  int zero = -1;
  for (int i = 0; i < n; ++i)
    if (spec.a[i] == "0") zero = i;
  if (zero < 0) throw DomainError("nilpotent spec carrier lacks '0'");

  std::vector<int> table(static_cast<std::size_t>(n) * n, zero);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (spec.in_b_only(x) && spec.in_c_only(y)) {
        auto it = spec.phi.find({x, y});
        table[x * n + y] = it == spec.phi.end() ? zero : it->second;
      }
  return FiniteSemigroup::from_parts(spec.a, "0", table);
}

FiniteSemigroup rees_semigroup(const ReesSemigroup& data) {
  return data.materialize();
}

std::vector<bool> MorExtensionSpec::epsilon_image() const {
  std::vector<bool> image(ambient.object_count(), false);
  for (int o = 0; o < ambient.object_count(); ++o)
    if (epsilon[o] >= 0) image[ambient.morphism(epsilon[o]).cod] = true;
  return image;
}

MorExtensionValidation validate_mor_extension_spec(
    const RawMorExtensionSpec& raw) {
  MorExtensionValidation result;
  auto fail = [&](std::string kind, std::vector<std::string> where,
                  std::string message) {
    result.violations.push_back(
        {std::move(kind), std::move(where), std::move(message)});
  };

  auto validated = SmallCategory::validate(raw.category);
  if (!validated.ok()) {
    for (auto& v : validated.violations) result.violations.push_back(v);
    return result;
  }

  MorExtensionSpec spec{std::move(*validated.category), {}, {}, {}};
  const int oc = spec.ambient.object_count();
  spec.in_delta.assign(oc, false);
  spec.in_d.assign(oc, false);
  spec.epsilon.assign(oc, -1);

  for (const auto& label : raw.delta) {
    auto o = spec.ambient.object_index(label);
    if (!o)
      fail("objects", {label}, "delta object '" + label + "' is unknown");
    else
      spec.in_delta[*o] = true;
  }
  for (const auto& label : raw.d) {
    auto o = spec.ambient.object_index(label);
    if (!o)
      fail("objects", {label}, "d object '" + label + "' is unknown");
    else
      spec.in_d[*o] = true;
  }
  if (!result.violations.empty()) return result;

  for (const auto& [obj, name] : raw.epsilon) {
    auto o = spec.ambient.object_index(obj);
    if (!o) {
      fail("epsilon", {obj}, "epsilon declared for unknown object '" + obj +
                                 "'");
      continue;
    }
    if (!spec.in_d[*o]) {
      fail("epsilon", {obj},
           "epsilon declared for '" + obj + "', which is not in d");
      continue;
    }
    auto m = spec.ambient.morphism_index(name);
    if (!m) {
      fail("epsilon", {name},
           "epsilon morphism '" + name + "' is not in the category");
      continue;
    }
    if (spec.epsilon[*o] != -1)
      fail("epsilon", {obj}, "object '" + obj + "' has two epsilon choices");
    const Morphism& mor = spec.ambient.morphism(*m);
    if (mor.dom != *o)
      fail("epsilon", {name},
           "epsilon of '" + obj + "' must start at '" + obj + "'");
    if (!spec.in_delta[mor.cod])
      fail("epsilon", {name},
           "epsilon of '" + obj + "' must end inside delta");
    spec.epsilon[*o] = *m;
  }
  for (int o = 0; o < oc; ++o)
    if (spec.in_d[o] && spec.epsilon[o] == -1)
      fail("epsilon", {spec.ambient.object(o)},
           "d object '" + spec.ambient.object(o) + "' lacks an epsilon");

  if (result.violations.empty()) result.spec = std::move(spec);
  return result;
}

FiniteSemigroup mor_extension(const MorExtensionSpec& spec) {
  const SmallCategory& cat = spec.ambient;

  // Carrier: morphisms from a delta object to a d object, plus zero.
  std::vector<int> carrier;
  for (int f = 0; f < cat.morphism_count(); ++f)
    if (spec.in_delta[cat.morphism(f).dom] && spec.in_d[cat.morphism(f).cod])
      carrier.push_back(f);

  std::vector<std::string> labels;
  labels.reserve(carrier.size() + 1);
  labels.push_back("0");
  for (int f : carrier) {
    if (cat.morphism(f).name == "0")
      throw DomainError("morphism name '0' is reserved for the zero element");
    labels.push_back(cat.morphism(f).name);
  }

  const int n = static_cast<int>(labels.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int gi = 0; gi < (int)carrier.size(); ++gi) {
    const int g = carrier[gi];
    for (int fi = 0; fi < (int)carrier.size(); ++fi) {
      const int f = carrier[fi];
      const int eps = spec.epsilon[cat.morphism(f).cod];
      if (eps < 0)
        throw DomainError("epsilon missing for object '" +
                          cat.object(cat.morphism(f).cod) + "'");
      if (cat.morphism(eps).cod != cat.morphism(g).dom) continue;
      const int via = cat.then(f, eps);      // epsilon after f
      const int composite = cat.then(via, g);  // g after that
      if (via < 0 || composite < 0)
        throw DomainError("composition lookup failed; category malformed");
      // The composite runs delta -> d, so it lies in the carrier.
      const auto pos =
          std::find(carrier.begin(), carrier.end(), composite);
      if (pos == carrier.end())
        throw DomainError("composite '" + cat.morphism(composite).name +
                          "' escapes the carrier; spec is inconsistent");
      table[(gi + 1) * n + (fi + 1)] =
          static_cast<int>(pos - carrier.begin()) + 1;
    }
  }

  return FiniteSemigroup::from_parts(std::move(labels), "0", table);
}

}  // namespace kseg
