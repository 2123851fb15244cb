#include <kseg/io.hpp>

#include <fstream>
#include <sstream>

namespace kseg {

namespace {

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw UsageError("missing key '" + std::string(key) + "'");
  return j.at(key);
}

std::vector<std::string> string_array(const Json& j, const char* key) {
  const Json& arr = expect(j, key);
  if (!arr.is_array())
    throw UsageError("'" + std::string(key) + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw UsageError("'" + std::string(key) +
                       "' must hold strings only");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_string())
    throw UsageError("'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("JSON parse error: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json semigroup_to_json(const FiniteSemigroup& s) {
  return raw_semigroup_to_json(s.to_raw());
}

Json raw_semigroup_to_json(const RawSemigroup& raw) {
  Json j;
  j["elements"] = raw.elements;
  j["zero"] = raw.zero;
  j["table"] = raw.table;
  return j;
}

RawSemigroup raw_semigroup_from_json(const Json& j) {
  RawSemigroup raw;
  raw.elements = string_array(j, "elements");
  raw.zero = string_field(j, "zero");
  const Json& table = expect(j, "table");
  if (!table.is_array()) throw UsageError("'table' must be an array");
  for (const auto& row : table) {
    if (!row.is_array())
      throw UsageError("'table' rows must be arrays of labels");
    std::vector<std::string> r;
    for (const auto& v : row) {
      if (!v.is_string()) throw UsageError("'table' entries must be strings");
      r.push_back(v.get<std::string>());
    }
    raw.table.push_back(std::move(r));
  }
  return raw;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json arr = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["kind"] = v.kind;
    item["where"] = v.where;
    item["message"] = v.message;
    arr.push_back(std::move(item));
  }
  return arr;
}

RawCategory raw_category_from_json(const Json& j) {
  RawCategory raw;
  raw.objects = string_array(j, "objects");
  const Json& morphisms = expect(j, "morphisms");
  if (!morphisms.is_array()) throw UsageError("'morphisms' must be an array");
  for (const auto& m : morphisms)
    raw.morphisms.push_back({string_field(m, "name"), string_field(m, "dom"),
                             string_field(m, "cod")});
  const Json& identities = expect(j, "identities");
  if (!identities.is_object())
    throw UsageError("'identities' must be an object");
  for (const auto& [obj, name] : identities.items()) {
    if (!name.is_string())
      throw UsageError("'identities' values must be strings");
    raw.identities.emplace_back(obj, name.get<std::string>());
  }
  const Json& composition = expect(j, "composition");
  if (!composition.is_array())
    throw UsageError("'composition' must be an array");
  for (const auto& entry : composition)
    raw.composition.push_back({string_field(entry, "first"),
                               string_field(entry, "then"),
                               string_field(entry, "equals")});
  return raw;
}

Json category_to_json(const SmallCategory& c) {
  const RawCategory raw = c.to_raw();
  Json j;
  j["objects"] = raw.objects;
  Json morphisms = Json::array();
  for (const auto& [name, dom, cod] : raw.morphisms) {
    Json m;
    m["name"] = name;
    m["dom"] = dom;
    m["cod"] = cod;
    morphisms.push_back(std::move(m));
  }
  j["morphisms"] = std::move(morphisms);
  Json identities = Json::object();
  for (const auto& [obj, name] : raw.identities) identities[obj] = name;
  j["identities"] = std::move(identities);
  Json composition = Json::array();
  for (const auto& [first, then, equals] : raw.composition) {
    Json entry;
    entry["first"] = first;
    entry["then"] = then;
    entry["equals"] = equals;
    composition.push_back(std::move(entry));
  }
  j["composition"] = std::move(composition);
  return j;
}

RawNilpotentSpec raw_nilpotent_spec_from_json(const Json& j) {
  RawNilpotentSpec raw;
  raw.a = string_array(j, "A");
  raw.b = string_array(j, "B");
  raw.c = string_array(j, "C");
  const Json& phi = expect(j, "phi");
  if (!phi.is_array()) throw UsageError("'phi' must be an array");
  for (const auto& entry : phi)
    raw.phi.push_back({string_field(entry, "b"), string_field(entry, "c"),
                       string_field(entry, "value")});
  return raw;
}

ReesSemigroup rees_spec_from_json(const Json& j) {
  ReesSemigroup rees;
  rees.i_labels = string_array(j, "I");
  rees.lambda_labels = string_array(j, "Lambda");
  const Json& w = expect(j, "W");
  if (!w.is_array()) throw UsageError("'W' must be an array of rows");
  for (const auto& row : w) {
    if (!row.is_array()) throw UsageError("'W' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw UsageError("'W' entries must be integers 0 or 1");
      r.push_back(v.get<int>());
    }
    rees.w.push_back(std::move(r));
  }
  return rees;
}

RawMorExtensionSpec raw_mor_extension_spec_from_json(const Json& j) {
  RawMorExtensionSpec raw;
  raw.category = raw_category_from_json(expect(j, "category"));
  raw.delta = string_array(j, "delta");
  raw.d = string_array(j, "d");
  const Json& eps = expect(j, "epsilon");
  if (!eps.is_object()) throw UsageError("'epsilon' must be an object");
  for (const auto& [obj, name] : eps.items()) {
    if (!name.is_string()) throw UsageError("'epsilon' values must be strings");
    raw.epsilon.emplace_back(obj, name.get<std::string>());
  }
  return raw;
}

Json annihilators_to_json(const FiniteSemigroup& s, const Annihilators& ann) {
  Json j;
  j["left"] = ann.left.member_labels(s);
  j["right"] = ann.right.member_labels(s);
  j["quasi"] = ann.quasi.member_labels(s);
  return j;
}

Json analysis_to_json(const FiniteSemigroup& s) {
  Json j;
  const auto witness = categoricity_witness(s);
  j["categorical_at_zero"] = !witness.has_value();
  if (witness) {
    j["categoricity_witness"] = Json::array(
        {s.label(witness->f), s.label(witness->g), s.label(witness->h)});
  } else {
    j["categoricity_witness"] = nullptr;
  }
  j["annihilators"] = annihilators_to_json(s, annihilators(s));
  const auto degree = nilpotency_degree(s);
  if (degree)
    j["nilpotency_degree"] = *degree;
  else
    j["nilpotency_degree"] = nullptr;
  j["three_nilpotent_iff_fully_annihilating"] =
      three_nilpotent_iff_fully_annihilating(s);
  return j;
}

Json report_to_json(const DecompositionReport& report) {
  const FiniteSemigroup& t = report.t;
  const PqnData& pqn = report.pqn;

  Json j;
  j["annihilators"] = annihilators_to_json(report.s, report.annihilators);
  j["t_elements"] = t.labels();

  Json p_classes = Json::array();
  for (int block : pqn.i_blocks) {
    Json members = Json::array();
    for (int el : pqn.p_classes.blocks()[block]) members.push_back(t.label(el));
    p_classes.push_back(std::move(members));
  }
  j["p_classes"] = std::move(p_classes);

  Json q_classes = Json::array();
  for (int block : pqn.lambda_blocks) {
    Json members = Json::array();
    for (int el : pqn.q_classes.blocks()[block]) members.push_back(t.label(el));
    q_classes.push_back(std::move(members));
  }
  j["q_classes"] = std::move(q_classes);

  Json n_classes = Json::array();
  for (const auto& [key, members] : pqn.n_classes) {
    Json entry;
    entry["i"] = report.rees.i_labels[key.first];
    entry["lambda"] = report.rees.lambda_labels[key.second];
    entry["members"] = members.member_labels(t);
    n_classes.push_back(std::move(entry));
  }
  j["n_classes"] = std::move(n_classes);

  Json sandwich;
  sandwich["i_count"] = pqn.i_count();
  sandwich["lambda_count"] = pqn.lambda_count();
  sandwich["rows"] = report.rees.w;
  j["sandwich"] = std::move(sandwich);

  const Partition n = n_partition(t, pqn);
  Json phi = Json::array();
  for (int b = 0; b < report.t_mod_n.size(); ++b) {
    if (b == report.t_mod_n.zero()) continue;
    const int rep = n.blocks()[b].front();
    int i_pos = -1, l_pos = -1;
    for (int k = 0; k < pqn.i_count(); ++k)
      if (pqn.i_blocks[k] == pqn.p_classes.block_id(rep)) i_pos = k;
    for (int k = 0; k < pqn.lambda_count(); ++k)
      if (pqn.lambda_blocks[k] == pqn.q_classes.block_id(rep)) l_pos = k;
    Json entry;
    entry["class"] = report.t_mod_n.label(b);
    entry["image_i"] = report.rees.i_labels[i_pos];
    entry["image_lambda"] = report.rees.lambda_labels[l_pos];
    phi.push_back(std::move(entry));
  }
  j["phi"] = std::move(phi);

  Json verified = Json::object();
  for (const auto& [name, ok] : report.checks) verified[name] = ok;
  j["verified"] = std::move(verified);
  j["witnesses"] = report.witnesses;
  return j;
}

Json interpretation_to_json(const std::vector<InterpretationCheck>& checks) {
  Json arr = Json::array();
  for (const auto& check : checks) {
    Json item;
    item["name"] = check.name;
    item["passed"] = check.passed;
    item["witness"] = check.witness;
    arr.push_back(std::move(item));
  }
  return arr;
}

Json stats_to_json(const OrderStats& stats) {
  Json j;
  j["order"] = stats.order;
  j["candidates"] = stats.candidates;
  j["associative"] = stats.associative;
  j["k_semigroups"] = stats.k_semigroups;
  j["emitted"] = stats.emitted;
  return j;
}

Json verdict_to_json(const CorpusVerdict& verdict) {
  Json j;
  j["max_order"] = verdict.max_order;
  Json orders = Json::array();
  for (const auto& stats : verdict.per_order)
    orders.push_back(stats_to_json(stats));
  j["orders"] = std::move(orders);
  j["equivalence_exhibits"] = verdict.equivalence_exhibits;
  if (verdict.first_exhibit)
    j["first_exhibit"] = raw_semigroup_to_json(*verdict.first_exhibit);
  else
    j["first_exhibit"] = nullptr;
  Json failures = Json::array();
  for (const auto& f : verdict.property_failures) {
    Json item;
    item["order"] = f.order;
    item["index"] = f.index;
    item["semigroup"] = raw_semigroup_to_json(f.semigroup);
    item["property"] = f.property;
    item["witness"] = f.witness;
    failures.push_back(std::move(item));
  }
  j["property_failures"] = std::move(failures);
  j["failure_count"] = verdict.property_failures.size();
  return j;
}

}  // namespace kseg
