#include <kseg/category.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace kseg {

std::optional<int> SmallCategory::object_index(std::string_view label) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[i] == label) return i;
  return std::nullopt;
}

std::optional<int> SmallCategory::morphism_index(std::string_view name) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms_[i].name == name) return i;
  return std::nullopt;
}

std::vector<int> SmallCategory::hom(int dom, int cod) const {
  std::vector<int> out;
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms_[i].dom == dom && morphisms_[i].cod == cod)
      out.push_back(i);
  return out;
}

RawCategory SmallCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (const auto& m : morphisms_)
    raw.morphisms.push_back({m.name, objects_[m.dom], objects_[m.cod]});
  for (int o = 0; o < object_count(); ++o)
    raw.identities.emplace_back(objects_[o], morphisms_[identity_[o]].name);
  for (int f = 0; f < morphism_count(); ++f)
    for (int g = 0; g < morphism_count(); ++g)
      if (then_[f][g] >= 0)
        raw.composition.push_back({morphisms_[f].name, morphisms_[g].name,
                                   morphisms_[then_[f][g]].name});
  return raw;
}

CategoryValidation SmallCategory::validate(const RawCategory& raw) {
  CategoryValidation result;
  auto fail = [&](std::string kind, std::vector<std::string> where,
                  std::string message) {
    result.violations.push_back(
        {std::move(kind), std::move(where), std::move(message)});
  };

  std::set<std::string> seen;
  for (const auto& o : raw.objects)
    if (!seen.insert(o).second)
      fail("objects", {o}, "duplicate object label '" + o + "'");

  SmallCategory cat;
  cat.objects_ = raw.objects;
  auto oidx = [&](const std::string& label) -> int {
    for (int i = 0; i < cat.object_count(); ++i)
      if (cat.objects_[i] == label) return i;
    return -1;
  };

  seen.clear();
  for (const auto& [name, dom, cod] : raw.morphisms) {
    if (!seen.insert(name).second)
      fail("morphisms", {name}, "duplicate morphism name '" + name + "'");
    const int d = oidx(dom), c = oidx(cod);
    if (d < 0)
      fail("morphisms", {name},
           "morphism '" + name + "' has unknown domain '" + dom + "'");
    if (c < 0)
      fail("morphisms", {name},
           "morphism '" + name + "' has unknown codomain '" + cod + "'");
    cat.morphisms_.push_back({name, d, c});
  }
  if (!result.violations.empty()) return result;

  auto midx = [&](const std::string& name) -> int {
    for (int i = 0; i < cat.morphism_count(); ++i)
      if (cat.morphisms_[i].name == name) return i;
    return -1;
  };

  cat.identity_.assign(cat.object_count(), -1);
  for (const auto& [obj, name] : raw.identities) {
    const int o = oidx(obj);
    const int m = midx(name);
    if (o < 0) {
      fail("identities", {obj}, "identity declared for unknown object '" +
                                    obj + "'");
      continue;
    }
    if (m < 0) {
      fail("identities", {name},
           "identity '" + name + "' is not a declared morphism");
      continue;
    }
    if (cat.identity_[o] != -1)
      fail("identities", {obj}, "object '" + obj + "' has two identities");
    if (cat.morphisms_[m].dom != o || cat.morphisms_[m].cod != o)
      fail("identities", {name},
           "identity '" + name + "' of '" + obj + "' is not an endomorphism");
    cat.identity_[o] = m;
  }
  for (int o = 0; o < cat.object_count(); ++o)
    if (cat.identity_[o] == -1)
      fail("identities", {cat.objects_[o]},
           "object '" + cat.objects_[o] + "' lacks an identity");
  if (!result.violations.empty()) return result;

  const int mc = cat.morphism_count();
  cat.then_.assign(mc, std::vector<int>(mc, -1));
  for (const auto& [first, then, equals] : raw.composition) {
    const int f = midx(first), g = midx(then), h = midx(equals);
    if (f < 0 || g < 0 || h < 0) {
      fail("composition", {first, then, equals},
           "composition entry names an unknown morphism");
      continue;
    }
    if (cat.morphisms_[f].cod != cat.morphisms_[g].dom) {
      fail("composition", {first, then},
           "'" + first + "' then '" + then + "' is not a composable pair");
      continue;
    }
    if (cat.then_[f][g] != -1)
      fail("composition", {first, then},
           "duplicate composition entry for '" + first + "' then '" + then +
               "'");
    if (cat.morphisms_[h].dom != cat.morphisms_[f].dom ||
        cat.morphisms_[h].cod != cat.morphisms_[g].cod)
      fail("composition", {first, then, equals},
           "composite '" + equals + "' has the wrong domain or codomain");
    cat.then_[f][g] = h;
  }
  if (!result.violations.empty()) return result;

  for (int f = 0; f < mc; ++f)
    for (int g = 0; g < mc; ++g)
      if ((cat.morphisms_[f].cod == cat.morphisms_[g].dom) !=
          (cat.then_[f][g] >= 0))
        fail("composition", {cat.morphisms_[f].name, cat.morphisms_[g].name},
             "composition must be defined exactly on composable pairs; "
             "missing or spurious entry for '" +
                 cat.morphisms_[f].name + "' then '" + cat.morphisms_[g].name +
                 "'");
  if (!result.violations.empty()) return result;

  for (int f = 0; f < mc; ++f) {
    const int pre = cat.identity_[cat.morphisms_[f].dom];
    const int post = cat.identity_[cat.morphisms_[f].cod];
    if (cat.then_[pre][f] != f)
      fail("laws", {cat.morphisms_[f].name},
           "identity law fails: id then '" + cat.morphisms_[f].name +
               "' is not '" + cat.morphisms_[f].name + "'");
    if (cat.then_[f][post] != f)
      fail("laws", {cat.morphisms_[f].name},
           "identity law fails: '" + cat.morphisms_[f].name +
               "' then id is not '" + cat.morphisms_[f].name + "'");
  }

  for (int f = 0; f < mc; ++f)
    for (int g = 0; g < mc; ++g) {
      if (cat.then_[f][g] < 0) continue;
      for (int h = 0; h < mc; ++h) {
        if (cat.then_[g][h] < 0) continue;
        if (cat.then_[cat.then_[f][g]][h] != cat.then_[f][cat.then_[g][h]])
          fail("laws",
               {cat.morphisms_[f].name, cat.morphisms_[g].name,
                cat.morphisms_[h].name},
               "composition is not associative on ('" +
                   cat.morphisms_[f].name + "','" + cat.morphisms_[g].name +
                   "','" + cat.morphisms_[h].name + "')");
      }
    }

  if (result.violations.empty()) result.category = std::move(cat);
  return result;
}

namespace {

// Deterministic bounded draw; std::uniform_int_distribution is
// implementation-defined, so raw generator output is reduced directly.
int draw(std::mt19937_64& gen, int bound) {
  return static_cast<int>(gen() % static_cast<std::uint64_t>(bound));
}

struct Builder {
  RawCategory raw;

  void object(const std::string& label) { raw.objects.push_back(label); }
  void morphism(const std::string& name, const std::string& dom,
                const std::string& cod) {
    raw.morphisms.push_back({name, dom, cod});
  }
  void identity(const std::string& obj, const std::string& name) {
    raw.identities.emplace_back(obj, name);
    morphism(name, obj, obj);
  }
  void compose(const std::string& first, const std::string& then,
               const std::string& equals) {
    raw.composition.push_back({first, then, equals});
  }
};

// A thin category from a preorder: at most one arrow per ordered object
// pair, so every diagram commutes and all laws hold by construction.
bool thin_attempt(std::mt19937_64& gen, const std::vector<std::string>& objs,
                  int max_morphisms, Builder& b) {
  const int k = static_cast<int>(objs.size());
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a) rel[a][a] = true;
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c)
      if (a != c && draw(gen, 3) == 0) rel[a][c] = true;
  // transitive closure
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      for (int c = 0; c < k; ++c)
        if (rel[a][m] && rel[m][c]) rel[a][c] = true;

  int count = 0;
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c)
      if (rel[a][c]) ++count;
  if (count > max_morphisms) return false;

  auto name = [&](int a, int c) {
    return a == c ? "id_" + objs[a] : "a_" + objs[a] + "_" + objs[c];
  };
  for (int a = 0; a < k; ++a) b.identity(objs[a], name(a, a));
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c)
      if (a != c && rel[a][c]) b.morphism(name(a, c), objs[a], objs[c]);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      if (!rel[a][c]) continue;
      for (int e = 0; e < k; ++e)
        if (rel[c][e]) b.compose(name(a, c), name(c, e), name(a, e));
    }
  return true;
}

// The free category on a forward-edge quiver: morphisms are paths, composition
// is concatenation, so the laws hold by construction. Parallel arrows arise
// whenever two paths share endpoints.
bool free_attempt(std::mt19937_64& gen, const std::vector<std::string>& objs,
                  int max_morphisms, Builder& b) {
  const int k = static_cast<int>(objs.size());
  struct Edge {
    std::string name;
    int from, to;
  };
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a)
    for (int c = a + 1; c < k; ++c) {
      int copies = 0;
      if (draw(gen, 2) == 0) copies = 1;
      if (copies == 1 && draw(gen, 4) == 0) copies = 2;
      for (int r = 0; r < copies; ++r)
        edges.push_back(
            {"g" + std::to_string(edges.size() + 1), a, c});
    }

  // Every nonempty path, named by its edge list right-to-left (outermost
  // edge first), enumerated in a deterministic order.
  struct Path {
    std::vector<int> edge_ids;
    int from, to;
    std::string name;
  };
  std::vector<Path> paths;
  for (int i = 0; i < (int)edges.size(); ++i)
    paths.push_back({{i}, edges[i].from, edges[i].to, edges[i].name});
  // extend paths breadth-first until no new ones appear
  std::size_t start = 0;
  while (start < paths.size()) {
    const std::size_t stop = paths.size();
    for (std::size_t p = start; p < stop; ++p)
      for (int i = 0; i < (int)edges.size(); ++i)
        if (edges[i].from == paths[p].to) {
          Path ext = paths[p];
          ext.edge_ids.push_back(i);
          ext.to = edges[i].to;
          ext.name = edges[i].name + "." + ext.name;
          paths.push_back(std::move(ext));
        }
    start = stop;
    if ((int)paths.size() + k > max_morphisms + 8) break;  // hopeless, bail
  }
  if ((int)paths.size() + k > max_morphisms) return false;

  for (int a = 0; a < k; ++a) b.identity(objs[a], "id_" + objs[a]);
  for (const auto& p : paths) b.morphism(p.name, objs[p.from], objs[p.to]);

  auto path_name = [&](const std::vector<int>& ids) {
    std::string n = edges[ids[0]].name;
    for (std::size_t i = 1; i < ids.size(); ++i)
      n = edges[ids[i]].name + "." + n;
    return n;
  };
  for (const auto& p : paths) {
    b.compose("id_" + objs[p.from], p.name, p.name);
    b.compose(p.name, "id_" + objs[p.to], p.name);
    for (const auto& q : paths)
      if (q.from == p.to) {
        std::vector<int> joined = p.edge_ids;
        joined.insert(joined.end(), q.edge_ids.begin(), q.edge_ids.end());
        b.compose(p.name, q.name, path_name(joined));
      }
  }
  for (int a = 0; a < k; ++a) b.compose("id_" + objs[a], "id_" + objs[a],
                                        "id_" + objs[a]);
  return true;
}

// One object carrying a small monoid, remaining objects a thin category.
bool monoid_attempt(std::mt19937_64& gen, const std::vector<std::string>& objs,
                    int max_morphisms, Builder& b) {
  // tables over {identity, m1[, m2]}; all are associative monoids
  static const std::vector<std::vector<std::vector<int>>> tables = {
      {{0, 1}, {1, 0}},                            // cyclic of order 2
      {{0, 1}, {1, 1}},                            // idempotent pair
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},           // cyclic of order 3
  };
  const auto& table = tables[draw(gen, (int)tables.size())];
  const int msize = static_cast<int>(table.size());

  const int k = static_cast<int>(objs.size());
  if (k + (msize - 1) > max_morphisms) return false;

  const std::string& host = objs[0];
  std::vector<std::string> names{"id_" + host};
  for (int i = 1; i < msize; ++i)
    names.push_back("m" + std::to_string(i) + "_" + host);

  b.identity(host, names[0]);
  for (int i = 1; i < msize; ++i) b.morphism(names[i], host, host);
  for (int i = 0; i < msize; ++i)
    for (int j = 0; j < msize; ++j)
      b.compose(names[i], names[j], names[table[i][j]]);

  if (k > 1) {
    std::vector<std::string> rest(objs.begin() + 1, objs.end());
    Builder sub;
    for (const auto& o : rest) sub.object(o);
    if (!thin_attempt(gen, rest, max_morphisms - msize, sub)) return false;
    b.raw.objects.insert(b.raw.objects.end(), sub.raw.objects.begin(),
                         sub.raw.objects.end());
    b.raw.morphisms.insert(b.raw.morphisms.end(), sub.raw.morphisms.begin(),
                           sub.raw.morphisms.end());
    b.raw.identities.insert(b.raw.identities.end(),
                            sub.raw.identities.begin(),
                            sub.raw.identities.end());
    b.raw.composition.insert(b.raw.composition.end(),
                             sub.raw.composition.begin(),
                             sub.raw.composition.end());
  }
  return true;
}

}  // namespace

SmallCategory random_category(std::uint64_t seed, int object_count,
                              int max_extra_arrows) {
  if (object_count < 1 || object_count > 4)
    throw BoundError("random_category needs 1 <= object_count <= 4");
  if (max_extra_arrows < 0)
    throw BoundError("random_category needs max_extra_arrows >= 0");

  std::mt19937_64 gen(seed);
  const int max_morphisms = object_count + max_extra_arrows;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::string> objs;
    for (int i = 0; i < object_count; ++i)
      objs.push_back("o" + std::to_string(i + 1));

    Builder b;
    bool built = false;
    switch (draw(gen, 3)) {
      case 0:
        for (const auto& o : objs) b.object(o);
        built = thin_attempt(gen, objs, max_morphisms, b);
        break;
      case 1:
        for (const auto& o : objs) b.object(o);
        built = free_attempt(gen, objs, max_morphisms, b);
        break;
      default:
        b.object(objs[0]);
        built = monoid_attempt(gen, objs, max_morphisms, b);
        break;
    }
    if (!built) continue;

    auto validated = SmallCategory::validate(b.raw);
    if (validated.ok()) return std::move(*validated.category);
  }
  throw Error("random_category gave up after 64 attempts for object_count=" +
              std::to_string(object_count) + ", max_extra_arrows=" +
              std::to_string(max_extra_arrows));
}

}  // namespace kseg
