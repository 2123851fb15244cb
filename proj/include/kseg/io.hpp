#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <kseg/category.hpp>
#include <kseg/constructors.hpp>
#include <kseg/enumeration.hpp>
#include <kseg/k_analysis.hpp>
#include <kseg/rees.hpp>
#include <kseg/semigroup.hpp>
#include <kseg/structure.hpp>

namespace kseg {

/// All emission goes through ordered JSON so key order is fixed and output
/// is byte-reproducible.
using Json = nlohmann::ordered_json;

/// Parses text as JSON; throws UsageError with the parser's message.
Json parse_json(const std::string& text);

/// Reads and parses a JSON file; throws UsageError when unreadable.
Json load_json_file(const std::string& path);

// Semigroup documents:
// { "elements": [...], "zero": "0", "table": [[...], ...] }
Json semigroup_to_json(const FiniteSemigroup& s);
Json raw_semigroup_to_json(const RawSemigroup& raw);
RawSemigroup raw_semigroup_from_json(const Json& j);

Json violations_to_json(const std::vector<Violation>& violations);

// Category documents:
// { "objects": [...], "morphisms": [{"name","dom","cod"}...],
//   "identities": {...}, "composition": [{"first","then","equals"}...] }
RawCategory raw_category_from_json(const Json& j);
Json category_to_json(const SmallCategory& c);

// { "A": [...], "B": [...], "C": [...], "phi": [{"b","c","value"}...] }
RawNilpotentSpec raw_nilpotent_spec_from_json(const Json& j);

// { "I": [...], "Lambda": [...], "W": [[...], ...] }
ReesSemigroup rees_spec_from_json(const Json& j);

// { "category": {...}, "delta": [...], "d": [...], "epsilon": {...} }
RawMorExtensionSpec raw_mor_extension_spec_from_json(const Json& j);

Json annihilators_to_json(const FiniteSemigroup& s, const Annihilators& ann);

/// Analysis summary: categoricity, annihilators, nilpotency, and the
/// nilpotency/annihilator equivalence flag.
Json analysis_to_json(const FiniteSemigroup& s);

Json report_to_json(const DecompositionReport& report);

Json interpretation_to_json(const std::vector<InterpretationCheck>& checks);

Json stats_to_json(const OrderStats& stats);
Json verdict_to_json(const CorpusVerdict& verdict);

}  // namespace kseg
