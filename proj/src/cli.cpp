#include <kseg/cli.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include <kseg/constructors.hpp>
#include <kseg/enumeration.hpp>
#include <kseg/io.hpp>
#include <kseg/structure.hpp>

namespace kseg {

namespace {

void emit(const Json& doc, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream file(output_path);
    if (!file) throw UsageError("cannot write '" + output_path + "'");
    file << doc.dump(2) << "\n";
  }
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

void render_violations_text(const Json& violations, std::ostream& out) {
  for (const auto& v : violations)
    out << "  [" << v.at("kind").get<std::string>() << "] "
        << v.at("message").get<std::string>() << "\n";
}

/// Loads and validates a semigroup document. On violation, emits the
/// validation result and returns nothing; the caller should exit 1.
std::optional<FiniteSemigroup> load_semigroup(const std::string& path,
                                              const std::string& format,
                                              std::ostream& out) {
  const RawSemigroup raw = raw_semigroup_from_json(load_json_file(path));
  auto result = FiniteSemigroup::validate(raw);
  if (!result.ok()) {
    Json doc;
    doc["valid"] = false;
    doc["violations"] = violations_to_json(result.violations);
    if (format == "text") {
      out << "invalid semigroup document (" << result.violations.size()
          << " violations)\n";
      render_violations_text(doc["violations"], out);
    } else {
      out << doc.dump(2) << "\n";
    }
    return std::nullopt;
  }
  return std::move(result.semigroup);
}

int cmd_validate(const std::string& input, const std::string& format,
                 std::ostream& out) {
  auto s = load_semigroup(input, format, out);
  if (!s) return 1;
  if (format == "text") {
    out << "valid semigroup with " << s->size() << " elements, zero '"
        << s->label(s->zero()) << "'\n";
  } else {
    Json doc;
    doc["valid"] = true;
    doc["violations"] = Json::array();
    out << doc.dump(2) << "\n";
  }
  return 0;
}

void render_analysis_text(const Json& a, std::ostream& out) {
  out << "categorical at zero: "
      << (a.at("categorical_at_zero").get<bool>() ? "yes" : "no") << "\n";
  if (!a.at("categoricity_witness").is_null()) {
    const auto& w = a.at("categoricity_witness");
    out << "witness: (" << w[0].get<std::string>() << ","
        << w[1].get<std::string>() << "," << w[2].get<std::string>() << ")\n";
  }
  const auto& ann = a.at("annihilators");
  out << "left annihilator:  "
      << join_labels(ann.at("left").get<std::vector<std::string>>()) << "\n";
  out << "right annihilator: "
      << join_labels(ann.at("right").get<std::vector<std::string>>()) << "\n";
  out << "quasi-annihilator: "
      << join_labels(ann.at("quasi").get<std::vector<std::string>>()) << "\n";
  if (a.at("nilpotency_degree").is_null())
    out << "nilpotency degree: none\n";
  else
    out << "nilpotency degree: " << a.at("nilpotency_degree").get<int>()
        << "\n";
  out << "3-nilpotent iff fully annihilating: "
      << (a.at("three_nilpotent_iff_fully_annihilating").get<bool>() ? "yes"
                                                                     : "no")
      << "\n";
}

int cmd_analyze(const std::string& input, const std::string& format,
                const std::string& output, std::ostream& out) {
  auto s = load_semigroup(input, format, out);
  if (!s) return 1;
  const Json doc = analysis_to_json(*s);
  if (format == "text")
    render_analysis_text(doc, out);
  else
    emit(doc, output, out);
  return doc.at("categorical_at_zero").get<bool>() ? 0 : 1;
}

void render_report_text(const Json& r, std::ostream& out) {
  const auto& ann = r.at("annihilators");
  out << "quasi-annihilator: "
      << join_labels(ann.at("quasi").get<std::vector<std::string>>()) << "\n";
  out << "complement T: "
      << join_labels(r.at("t_elements").get<std::vector<std::string>>())
      << "\n";
  out << "P-classes:";
  for (const auto& cls : r.at("p_classes"))
    out << " " << join_labels(cls.get<std::vector<std::string>>());
  out << "\nQ-classes:";
  for (const auto& cls : r.at("q_classes"))
    out << " " << join_labels(cls.get<std::vector<std::string>>());
  out << "\nsandwich matrix (" << r.at("sandwich").at("lambda_count").get<int>()
      << "x" << r.at("sandwich").at("i_count").get<int>() << "):\n";
  for (const auto& row : r.at("sandwich").at("rows")) {
    out << " ";
    for (const auto& v : row) out << " " << v.get<int>();
    out << "\n";
  }
  out << "embedding:";
  for (const auto& entry : r.at("phi"))
    out << " " << entry.at("class").get<std::string>() << "->("
        << entry.at("image_i").get<std::string>() << ","
        << entry.at("image_lambda").get<std::string>() << ")";
  out << "\nverified:\n";
  for (const auto& [name, ok] : r.at("verified").items())
    out << "  " << (ok.get<bool>() ? "pass" : "FAIL") << "  " << name << "\n";
  for (const auto& w : r.at("witnesses"))
    out << "  witness: " << w.get<std::string>() << "\n";
}

int cmd_decompose(const std::string& input, const std::string& format,
                  const std::string& output, int congruence_bound,
                  int iso_bound, std::ostream& out) {
  auto s = load_semigroup(input, format, out);
  if (!s) return 1;
  try {
    const DecompositionReport report =
        decompose(*s, congruence_bound, iso_bound);
    const Json doc = report_to_json(report);
    if (format == "text")
      render_report_text(doc, out);
    else
      emit(doc, output, out);
    return report.all_checks_pass() ? 0 : 1;
  } catch (const NotCategoricalError& e) {
    Json doc;
    doc["error"] = "not_categorical_at_zero";
    doc["witness"] = e.witness_labels();
    if (format == "text")
      out << "not categorical at zero; witness (" << e.witness_labels()[0]
          << "," << e.witness_labels()[1] << "," << e.witness_labels()[2]
          << ")\n";
    else
      out << doc.dump(2) << "\n";
    return 1;
  } catch (const DomainError& e) {
    Json doc;
    doc["error"] = "decomposition_failed";
    doc["message"] = e.what();
    if (format == "text")
      out << "decomposition failed: " << e.what() << "\n";
    else
      out << doc.dump(2) << "\n";
    return 1;
  }
}

int emit_spec_violations(const std::vector<Violation>& violations,
                         const std::string& format, std::ostream& out) {
  Json doc;
  doc["valid"] = false;
  doc["violations"] = violations_to_json(violations);
  if (format == "text") {
    out << "invalid construction spec (" << violations.size()
        << " violations)\n";
    render_violations_text(doc["violations"], out);
  } else {
    out << doc.dump(2) << "\n";
  }
  return 1;
}

int cmd_construct(const std::string& kind, const std::string& input,
                  const std::string& format, const std::string& output,
                  std::ostream& out) {
  const Json j = load_json_file(input);
  std::optional<FiniteSemigroup> result;
  std::vector<Violation> violations;

  if (kind == "category") {
    auto validated = SmallCategory::validate(raw_category_from_json(j));
    if (validated.ok())
      result = semigroup_of_category(*validated.category);
    else
      violations = std::move(validated.violations);
  } else if (kind == "nilpotent") {
    auto validated = validate_nilpotent_spec(raw_nilpotent_spec_from_json(j));
    if (validated.ok())
      result = nilpotent_from_spec(*validated.spec);
    else
      violations = std::move(validated.violations);
  } else if (kind == "rees") {
    result = rees_semigroup(rees_spec_from_json(j));
  } else if (kind == "mor-ext") {
    auto validated =
        validate_mor_extension_spec(raw_mor_extension_spec_from_json(j));
    if (validated.ok())
      result = mor_extension(*validated.spec);
    else
      violations = std::move(validated.violations);
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }

  if (!result) return emit_spec_violations(violations, format, out);
  emit(semigroup_to_json(*result), output, out);
  return 0;
}

int cmd_enumerate(const EnumerationTask& task, bool count_only,
                  const std::string& format, const std::string& output,
                  std::ostream& out) {
  const EnumerationResult result = enumerate_semigroups(task);
  if (count_only) {
    const Json doc = stats_to_json(result.stats);
    if (format == "text") {
      out << "order " << result.stats.order << ": candidates "
          << result.stats.candidates << ", associative "
          << result.stats.associative << ", categorical "
          << result.stats.k_semigroups << ", emitted " << result.stats.emitted
          << "\n";
    } else {
      emit(doc, output, out);
    }
    return 0;
  }
  // One compact document per line; the stream is the contract, so --format
  // does not change it.
  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw UsageError("cannot write '" + output + "'");
    sink = &file;
  }
  for (const auto& s : result.semigroups)
    *sink << semigroup_to_json(s).dump() << "\n";
  return 0;
}

void render_verdict_text(const Json& v, std::ostream& out) {
  for (const auto& stats : v.at("orders"))
    out << "order " << stats.at("order").get<int>() << ": candidates "
        << stats.at("candidates").get<std::uint64_t>() << ", associative "
        << stats.at("associative").get<std::uint64_t>() << ", categorical "
        << stats.at("k_semigroups").get<std::uint64_t>() << "\n";
  out << "equivalence exhibits: "
      << v.at("equivalence_exhibits").get<std::uint64_t>() << "\n";
  out << "property failures: " << v.at("failure_count").get<std::uint64_t>()
      << "\n";
  for (const auto& f : v.at("property_failures"))
    out << "  FAIL order " << f.at("order").get<int>() << " #"
        << f.at("index").get<std::uint64_t>() << " "
        << f.at("property").get<std::string>() << ": "
        << f.at("witness").get<std::string>() << "\n";
}

int cmd_verify(int max_order, int jobs, const std::string& format,
               const std::string& output, std::ostream& out) {
  const CorpusVerdict verdict = verify_corpus(max_order, jobs);
  const Json doc = verdict_to_json(verdict);
  if (format == "text")
    render_verdict_text(doc, out);
  else
    emit(doc, output, out);
  return verdict.ok() ? 0 : 1;
}

int cmd_check_category(const std::string& category_path,
                       const std::string& semigroup_path,
                       const std::string& format, std::ostream& out) {
  auto validated =
      SmallCategory::validate(raw_category_from_json(load_json_file(category_path)));
  if (!validated.ok())
    return emit_spec_violations(validated.violations, format, out);
  const SmallCategory& cat = *validated.category;
  FiniteSemigroup derived = semigroup_of_category(cat);

  if (!semigroup_path.empty()) {
    auto provided = load_semigroup(semigroup_path, format, out);
    if (!provided) return 1;
    if (!(*provided == derived)) {
      Json doc;
      doc["error"] = "semigroup_mismatch";
      doc["message"] =
          "the provided semigroup is not the category's morphism semigroup";
      if (format == "text")
        out << doc["message"].get<std::string>() << "\n";
      else
        out << doc.dump(2) << "\n";
      return 1;
    }
  }

  const DecompositionReport report = decompose(derived);
  const auto checks = category_interpretation_check(derived, cat, report);
  bool all = report.all_checks_pass();
  for (const auto& c : checks) all = all && c.passed;

  Json doc;
  doc["checks"] = interpretation_to_json(checks);
  doc["decomposition_verified"] = report.all_checks_pass();
  doc["all_passed"] = all;
  if (format == "text") {
    for (const auto& c : checks)
      out << (c.passed ? "pass" : "FAIL") << "  " << c.name
          << (c.witness.empty() ? "" : "  (" + c.witness + ")") << "\n";
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"kseg - structure analysis of finite semigroups with zero"};
  app.require_subcommand(1);

  std::string input, output, format = "json", semigroup_path, category_path;
  int congruence_bound = 8, iso_bound = 8;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "check a semigroup document");
  validate->add_option("--input", input, "semigroup JSON file")->required();
  add_format(validate);

  auto* analyze = app.add_subcommand(
      "analyze", "categoricity, annihilators and nilpotency of a semigroup");
  analyze->add_option("--input", input, "semigroup JSON file")->required();
  analyze->add_option("--output", output, "write the report to a file");
  add_format(analyze);

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "full structure decomposition with verification flags");
  decompose_cmd->add_option("--input", input, "semigroup JSON file")
      ->required();
  decompose_cmd->add_option("--output", output, "write the report to a file");
  decompose_cmd->add_option("--congruence-bound", congruence_bound,
                            "size cap for exhaustive congruence checks");
  decompose_cmd->add_option("--iso-bound", iso_bound,
                            "size cap for isomorphism searches");
  add_format(decompose_cmd);

  auto* construct = app.add_subcommand(
      "construct", "build a semigroup from a construction spec");
  std::string kind;
  construct
      ->add_option("kind", kind, "category | nilpotent | rees | mor-ext")
      ->required()
      ->check(CLI::IsMember({"category", "nilpotent", "rees", "mor-ext"}));
  construct->add_option("--input", input, "construction spec JSON file")
      ->required();
  construct->add_option("--output", output, "write the semigroup to a file");
  add_format(construct);

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "enumerate semigroups with zero of a given order");
  int order = 1, jobs = 1;
  bool k_only = false, up_to_iso = false, count_only = false;
  std::uint64_t sample_count = 0, seed = 0;
  enumerate_cmd->add_option("--order", order, "number of elements")
      ->required();
  enumerate_cmd->add_flag("--k-only", k_only,
                          "keep only semigroups categorical at zero");
  enumerate_cmd->add_flag("--up-to-iso", up_to_iso,
                          "emit one representative per isomorphism class");
  enumerate_cmd->add_flag("--count", count_only, "print counts only");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads");
  auto* sample_opt = enumerate_cmd->add_option(
      "--sample", sample_count, "sample this many random tables instead");
  enumerate_cmd->add_option("--seed", seed, "seed for sampling")
      ->needs(sample_opt);
  enumerate_cmd->add_option("--output", output, "write the stream to a file");
  add_format(enumerate_cmd);

  auto* verify = app.add_subcommand(
      "verify", "machine-check the structure laws over the whole corpus");
  int max_order = 3;
  verify->add_option("--max-order", max_order, "largest order to enumerate")
      ->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--output", output, "write the verdict to a file");
  add_format(verify);

  auto* check_cat = app.add_subcommand(
      "check-category", "verify the category reading of a decomposition");
  check_cat->add_option("--category", category_path, "category JSON file")
      ->required();
  check_cat->add_option("--semigroup", semigroup_path,
                        "optional semigroup JSON file to cross-check");
  add_format(check_cat);

  std::vector<const char*> argv;
  argv.push_back("kseg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (app.got_subcommand(validate)) return cmd_validate(input, format, out);
    if (app.got_subcommand(analyze))
      return cmd_analyze(input, format, output, out);
    if (app.got_subcommand(decompose_cmd))
      return cmd_decompose(input, format, output, congruence_bound, iso_bound,
                           out);
    if (app.got_subcommand(construct))
      return cmd_construct(kind, input, format, output, out);
    if (app.got_subcommand(enumerate_cmd)) {
      EnumerationTask task;
      task.order = order;
      task.k_only = k_only;
      task.dedup = up_to_iso;
      task.worker_count = jobs;
      if (*sample_opt) task.sample = SampleSpec{sample_count, seed};
      return cmd_enumerate(task, count_only, format, output, out);
    }
    if (app.got_subcommand(verify))
      return cmd_verify(max_order, jobs, format, output, out);
    if (app.got_subcommand(check_cat))
      return cmd_check_category(category_path, semigroup_path, format, out);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kseg
