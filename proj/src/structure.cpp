#include <kseg/structure.hpp>

#include <algorithm>
#include <set>

namespace kseg {

namespace {

ElementSet block_set(int n, const std::vector<int>& block) {
  ElementSet out(n);
  for (int el : block) out.add(el);
  return out;
}

int position_of(const std::vector<int>& sorted_ids, int id) {
  for (int k = 0; k < (int)sorted_ids.size(); ++k)
    if (sorted_ids[k] == id) return k;
  return -1;
}

}  // namespace

PqnData compute_pqn(const FiniteSemigroup& t) {
  const int n = t.size();
  const int z = t.zero();

  // Annihilation profiles: left_prof[a] marks the x with x*a = 0 (P side),
  // right_prof[a] the x with a*x = 0 (Q side).
  std::vector<std::vector<bool>> left_prof(n, std::vector<bool>(n)),
      right_prof(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      left_prof[a][x] = t.product(x, a) == z;
      right_prof[a][x] = t.product(a, x) == z;
    }

  for (int a = 0; a < n; ++a) {
    if (a == z) continue;
    if (std::find(left_prof[a].begin(), left_prof[a].end(), false) ==
        left_prof[a].end())
      throw DomainError("element '" + t.label(a) +
                        "' is annihilated by every element and would share "
                        "zero's left-annihilation profile");
    if (std::find(right_prof[a].begin(), right_prof[a].end(), false) ==
        right_prof[a].end())
      throw DomainError("element '" + t.label(a) +
                        "' annihilates every element and would share zero's "
                        "right-annihilation profile");
  }

  auto group = [&](const std::vector<std::vector<bool>>& prof) {
    std::vector<int> block_of(n);
    std::map<std::vector<bool>, int> ids;
    for (int a = 0; a < n; ++a)
      block_of[a] = ids.emplace(prof[a], (int)ids.size()).first->second;
    return Partition::from_block_of(block_of);
  };

  PqnData pqn;
  pqn.p_classes = group(left_prof);
  pqn.q_classes = group(right_prof);

  for (int b = 0; b < pqn.p_classes.block_count(); ++b)
    if (b != pqn.p_classes.block_id(z)) pqn.i_blocks.push_back(b);
  for (int b = 0; b < pqn.q_classes.block_count(); ++b)
    if (b != pqn.q_classes.block_id(z)) pqn.lambda_blocks.push_back(b);

  for (int a = 0; a < n; ++a) {
    if (a == z) continue;
    const int i = position_of(pqn.i_blocks, pqn.p_classes.block_id(a));
    const int l = position_of(pqn.lambda_blocks, pqn.q_classes.block_id(a));
    auto [it, fresh] =
        pqn.n_classes.emplace(std::make_pair(i, l), ElementSet(n));
    (void)fresh;
    it->second.add(a);
  }
  return pqn;
}

Partition n_partition(const FiniteSemigroup& t, const PqnData& pqn) {
  std::vector<int> key(t.size());
  for (int a = 0; a < t.size(); ++a)
    key[a] = pqn.p_classes.block_id(a) * pqn.q_classes.block_count() +
             pqn.q_classes.block_id(a);
  return Partition::from_block_of(key);
}

Partition greatest_zero_restricted_congruence(const FiniteSemigroup& t) {
  return n_partition(t, compute_pqn(t));
}

ReesSemigroup sandwich_matrix(const FiniteSemigroup& t, const PqnData& pqn) {
  ReesSemigroup rees;
  for (int i = 0; i < pqn.i_count(); ++i)
    rees.i_labels.push_back(std::to_string(i + 1));
  for (int l = 0; l < pqn.lambda_count(); ++l)
    rees.lambda_labels.push_back(std::to_string(l + 1));

  rees.w.assign(pqn.lambda_count(), std::vector<int>(pqn.i_count(), 0));
  for (int l = 0; l < pqn.lambda_count(); ++l) {
    const ElementSet q_class = block_set(
        t.size(), pqn.q_classes.blocks()[pqn.lambda_blocks[l]]);
    for (int i = 0; i < pqn.i_count(); ++i) {
      const ElementSet p_class =
          block_set(t.size(), pqn.p_classes.blocks()[pqn.i_blocks[i]]);
      const ElementSet prod = set_product(t, q_class, p_class);
      if (prod.contains(t.zero()) && prod.count() > 1)
        throw DomainError(
            "class product mixes zero with nonzero elements at (lambda=" +
            std::to_string(l + 1) + ", i=" + std::to_string(i + 1) +
            "); input was not categorical at zero");
      rees.w[l][i] = prod.contains(t.zero()) ? 0 : 1;
    }
  }
  return rees;
}

Homomorphism rees_embedding(const FiniteSemigroup& t, const PqnData& pqn,
                            const ReesSemigroup& rees) {
  const Partition n = n_partition(t, pqn);
  QuotientResult q = quotient(t, n);
  FiniteSemigroup m = rees.materialize();

  std::vector<int> map(q.quotient.size());
  for (int b = 0; b < q.quotient.size(); ++b) {
    if (b == q.quotient.zero()) {
      map[b] = m.zero();
      continue;
    }
    const int rep = n.blocks()[b].front();
    const int i = position_of(pqn.i_blocks, pqn.p_classes.block_id(rep));
    const int l =
        position_of(pqn.lambda_blocks, pqn.q_classes.block_id(rep));
    const auto idx = m.index_of(
        ReesSemigroup::pair_label(rees.i_labels[i], rees.lambda_labels[l]));
    if (!idx)
      throw DomainError("class image missing from the Rees semigroup");
    map[b] = *idx;
  }
  return Homomorphism{q.quotient, m, std::move(map)};
}

DecompositionReport decompose(const FiniteSemigroup& s, int congruence_bound,
                              int iso_bound) {
  if (auto w = categoricity_witness(s)) throw NotCategoricalError(s, *w);

  DecompositionReport report{
      s,  annihilators(s), s, {}, {}, s, s, Homomorphism{s, s, {}},
      Homomorphism{s, s, {}}, {}, {}};
  auto record = [&](const std::string& name, bool ok,
                    const std::string& witness) {
    report.checks.emplace_back(name, ok);
    if (!ok) report.witnesses.push_back(name + ": " + witness);
  };

  const int z = s.zero();
  const Annihilators& ann = report.annihilators;

  {
    bool ok = true;
    std::string witness;
    const std::pair<const ElementSet*, const char*> sets[] = {
        {&ann.left, "left"}, {&ann.right, "right"}, {&ann.quasi, "quasi"}};
    for (const auto& [set, name] : sets)
      if (!is_ideal(s, *set, IdealSide::two_sided)) {
        ok = false;
        witness = std::string(name) + " annihilator is not a two-sided ideal";
      }
    record("annihilator_ideals", ok, witness);
  }

  {
    const ElementSet sq = set_product(s, ann.quasi, ann.quasi);
    const ElementSet cube = set_product(s, sq, ann.quasi);
    record("quasi_annihilator_cube_zero", cube.zero_only(z),
           "cube contains " +
               (cube.count() ? s.label(cube.members().back()) : ""));
  }

  record("three_nilpotent_iff_fully_annihilating",
         three_nilpotent_iff_fully_annihilating(s),
         "nilpotency and annihilator totality disagree");

  // Throws when the complement is not closed, which cannot happen here:
  // categoricity was established above.
  ComplementResult complement = complement_subsemigroup(s);
  report.t = complement.t;
  record("complement_closed", true, "");

  const FiniteSemigroup& t = report.t;
  report.pqn = compute_pqn(t);
  const PqnData& pqn = report.pqn;

  const Partition n = n_partition(t, pqn);
  record("n_congruence", is_congruence(t, n), "N is not a congruence");
  record("n_zero_restricted", n.zero_restricted(t.zero()),
         "zero's N-class is not a singleton");

  if (t.size() <= congruence_bound) {
    bool ok = true;
    std::string witness;
    for (const auto& info : enumerate_congruences(t, congruence_bound)) {
      if (!info.zero_restricted) continue;
      if (!info.partition.refines(n)) {
        ok = false;
        witness = "a 0-restricted congruence with " +
                  std::to_string(info.partition.block_count()) +
                  " blocks does not refine N";
        break;
      }
    }
    record("n_greatest_zero_restricted", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < pqn.i_count() && ok; ++i) {
      const ElementSet p_class =
          block_set(t.size(), pqn.p_classes.blocks()[pqn.i_blocks[i]]);
      for (int l = 0; l < pqn.lambda_count() && ok; ++l) {
        const ElementSet q_class = block_set(
            t.size(), pqn.q_classes.blocks()[pqn.lambda_blocks[l]]);
        ElementSet allowed(t.size());
        allowed.add(t.zero());
        if (auto it = pqn.n_classes.find({i, l}); it != pqn.n_classes.end())
          allowed = allowed.united(it->second);
        if (!set_product(t, p_class, q_class).subset_of(allowed)) {
          ok = false;
          witness = "P_" + std::to_string(i + 1) + " Q_" +
                    std::to_string(l + 1) + " escapes its N-class";
        }
      }
    }
    record("pq_products_within_n", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int l = 0; l < pqn.lambda_count() && ok; ++l) {
      const ElementSet q_class = block_set(
          t.size(), pqn.q_classes.blocks()[pqn.lambda_blocks[l]]);
      for (int i = 0; i < pqn.i_count() && ok; ++i) {
        const ElementSet p_class =
            block_set(t.size(), pqn.p_classes.blocks()[pqn.i_blocks[i]]);
        const ElementSet prod = set_product(t, q_class, p_class);
        if (prod.contains(t.zero()) && prod.count() > 1) {
          ok = false;
          witness = "Q_" + std::to_string(l + 1) + " P_" +
                    std::to_string(i + 1) + " mixes zero and nonzero";
        }
      }
    }
    record("qp_zero_dichotomy", ok, witness);
  }

  report.rees = sandwich_matrix(t, pqn);
  report.rees_materialized = report.rees.materialize();

  {
    bool ok = true;
    std::string witness;
    for (const auto& [key1, class1] : pqn.n_classes) {
      for (const auto& [key2, class2] : pqn.n_classes) {
        const auto [i, l] = key1;
        const auto [j, m] = key2;
        const ElementSet prod = set_product(t, class1, class2);
        if (report.rees.w[l][j] == 0) {
          if (!prod.zero_only(t.zero())) {
            ok = false;
            witness = "classes with a zero sandwich entry have a nonzero "
                      "product";
          }
        } else {
          ElementSet target(t.size());
          if (auto it = pqn.n_classes.find({i, m});
              it != pqn.n_classes.end())
            target = it->second;
          if (!prod.subset_of(target)) {
            ok = false;
            witness = "class product escapes the expected N-class";
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    record("n_class_products", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (const auto& [key, members] : pqn.n_classes) {
      const ElementSet prod = set_product(t, members, members);
      const bool null_product = prod.zero_only(t.zero());
      const bool zero_free =
          !prod.contains(t.zero()) && prod.subset_of(members);
      if (!null_product && !zero_free) {
        ok = false;
        witness = "a class squares neither to {0} nor into itself";
        break;
      }
    }
    record("n_class_zero_structure", ok, witness);
  }

  {
    QuotientResult q = quotient(t, n);
    report.t_mod_n = q.quotient;
    report.projection = q.projection;
  }
  report.phi = rees_embedding(t, pqn, report.rees);

  record("embedding_homomorphism", check_homomorphism(report.phi),
         "phi is not multiplicative");
  record("embedding_injective", is_injective(report.phi),
         "phi identifies two classes");
  record("embedding_zero_restricted", is_zero_restricted(report.phi),
         "phi maps a nonzero class to zero");

  if (t.size() <= iso_bound) {
    const Partition collapse = Partition::collapse(s.size(), ann.quasi);
    bool ok = is_congruence(s, collapse);
    std::string witness = "collapsing the quasi-annihilator is not a "
                          "congruence";
    if (ok) {
      QuotientResult rees_quotient = quotient(s, collapse);
      ok = find_isomorphism(rees_quotient.quotient, t, iso_bound).has_value();
      witness = "the collapsed quotient is not isomorphic to the complement";
    }
    record("rees_quotient_isomorphic_complement", ok, witness);
  }

  return report;
}

std::vector<InterpretationCheck> category_interpretation_check(
    const FiniteSemigroup& s, const SmallCategory& c,
    const DecompositionReport& report) {
  std::vector<InterpretationCheck> out;
  auto record = [&](const std::string& name, bool ok, std::string witness) {
    out.push_back({name, ok, ok ? "" : std::move(witness)});
  };

  record("quasi_annihilator_trivial",
         report.annihilators.quasi.zero_only(s.zero()),
         "a nonzero morphism annihilates or is annihilated by everything");

  const FiniteSemigroup& t = report.t;
  const PqnData& pqn = report.pqn;

  auto class_labels = [&](const Partition& p, int block) {
    std::set<std::string> labels;
    for (int el : p.blocks()[block]) labels.insert(t.label(el));
    return labels;
  };

  // Object -> class positions via fiber matching.
  std::vector<int> object_i(c.object_count(), -1),
      object_lambda(c.object_count(), -1);
  bool p_ok = pqn.i_count() == c.object_count();
  bool q_ok = pqn.lambda_count() == c.object_count();
  std::string p_witness = p_ok ? "" : "class and object counts differ";
  std::string q_witness = q_ok ? "" : "class and object counts differ";

  for (int o = 0; o < c.object_count(); ++o) {
    std::set<std::string> into, outof;
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.morphism(f).cod == o) into.insert(c.morphism(f).name);
      if (c.morphism(f).dom == o) outof.insert(c.morphism(f).name);
    }
    for (int i = 0; i < pqn.i_count(); ++i)
      if (class_labels(pqn.p_classes, pqn.i_blocks[i]) == into)
        object_i[o] = i;
    for (int l = 0; l < pqn.lambda_count(); ++l)
      if (class_labels(pqn.q_classes, pqn.lambda_blocks[l]) == outof)
        object_lambda[o] = l;
    if (object_i[o] < 0 && p_ok) {
      p_ok = false;
      p_witness = "no P-class equals the arrows into '" + c.object(o) + "'";
    }
    if (object_lambda[o] < 0 && q_ok) {
      q_ok = false;
      q_witness = "no Q-class equals the arrows out of '" + c.object(o) + "'";
    }
  }
  record("p_classes_match_codomain_fibers", p_ok, p_witness);
  record("q_classes_match_domain_fibers", q_ok, q_witness);

  const bool correspondence = p_ok && q_ok;

  {
    bool ok = correspondence;
    std::string witness = "class/object correspondence unavailable";
    if (correspondence) {
      for (int oi = 0; oi < c.object_count() && ok; ++oi)
        for (int oj = 0; oj < c.object_count() && ok; ++oj) {
          std::set<std::string> expected;
          for (int f : c.hom(oj, oi)) expected.insert(c.morphism(f).name);
          std::set<std::string> actual;
          if (auto it =
                  pqn.n_classes.find({object_i[oi], object_lambda[oj]});
              it != pqn.n_classes.end())
            for (const auto& label : it->second.member_labels(t))
              actual.insert(label);
          if (expected != actual) {
            ok = false;
            witness = "N-class at ('" + c.object(oi) + "','" + c.object(oj) +
                      "') differs from the hom set";
          }
        }
    }
    record("n_classes_match_hom_sets", ok, witness);
  }

  {
    bool ok = correspondence;
    std::string witness = "class/object correspondence unavailable";
    if (correspondence) {
      for (int oi = 0; oi < c.object_count() && ok; ++oi)
        for (int oj = 0; oj < c.object_count() && ok; ++oj) {
          const int expected = oi == oj ? 1 : 0;
          if (report.rees.w[object_lambda[oj]][object_i[oi]] != expected) {
            ok = false;
            witness = "sandwich entry at ('" + c.object(oj) + "','" +
                      c.object(oi) + "') is not " + std::to_string(expected);
          }
        }
    }
    record("sandwich_identity_on_objects", ok, witness);
  }

  {
    bool ok = correspondence;
    std::string witness = "class/object correspondence unavailable";
    if (correspondence) {
      for (int o = 0; o < c.object_count() && ok; ++o) {
        auto it = pqn.n_classes.find({object_i[o], object_lambda[o]});
        if (it == pqn.n_classes.end()) {
          ok = false;
          witness = "diagonal class of '" + c.object(o) + "' is empty";
          break;
        }
        const auto members = it->second.members();
        for (int a : members)
          for (int b : members)
            if (!it->second.contains(t.product(a, b))) {
              ok = false;
              witness = "diagonal class of '" + c.object(o) +
                        "' is not closed under products";
            }
        bool has_identity = false;
        for (int e : members) {
          bool neutral = true;
          for (int a : members)
            if (t.product(e, a) != a || t.product(a, e) != a) neutral = false;
          if (neutral) has_identity = true;
        }
        if (ok && !has_identity) {
          ok = false;
          witness =
              "diagonal class of '" + c.object(o) + "' has no identity";
        }
      }
    }
    record("endo_classes_are_monoids", ok, witness);
  }

  {
    bool ok = correspondence;
    std::string witness = "class/object correspondence unavailable";
    if (correspondence) {
      std::set<int> i_hits(object_i.begin(), object_i.end());
      std::set<int> l_hits(object_lambda.begin(), object_lambda.end());
      ok = (int)i_hits.size() == c.object_count() &&
           (int)l_hits.size() == c.object_count() &&
           pqn.i_count() == c.object_count() &&
           pqn.lambda_count() == c.object_count();
      witness = "objects and classes do not correspond one-to-one";
    }
    record("class_object_correspondence_bijective", ok, witness);
  }

  return out;
}

}  // namespace kseg
