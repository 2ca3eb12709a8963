#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evidentia/checks.hpp"
#include "evidentia/compiler.hpp"
#include "evidentia/dsl/parser.hpp"
#include "evidentia/dsl/printer.hpp"
#include "evidentia/query.hpp"

namespace evidentia::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaId = "evidentia-output-v1";

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "evidentia: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    err << "evidentia: error reading '" << path << "'\n";
    return std::nullopt;
  }
  return ss.str();
}

// Exact text, decimal and magnitude of one value.
struct Rendered {
  std::string exact;
  std::optional<std::string> decimal;
  std::string magnitude;
};

Rendered render(const Hyperrational& v, int digits) {
  Rendered r{v.to_string(), std::nullopt, std::string(to_string(v.magnitude()))};
  if (v.magnitude() != MagnitudeClass::infinite)
    r.decimal = format_decimal(v.standard_part(), digits);
  return r;
}

std::string value_text(const Rendered& r) {
  std::string s = r.exact;
  if (r.magnitude == "infinitesimal" || r.magnitude == "infinite")
    s += " (" + r.magnitude + ")";
  if (r.decimal)
    s += " ≈ " + *r.decimal;
  return s;
}

std::string odds_kind_name(Odds::Kind k) {
  switch (k) {
    case Odds::Kind::zero: return "zero";
    case Odds::Kind::finite: return "finite";
    case Odds::Kind::infinite: return "infinite";
  }
  return "?";
}

void print_text(std::ostream& out, const QueryResult& r, int digits) {
  const std::string tag = "  [" + r.provenance + "]";
  if (r.error) {
    out << r.query << " = error: " << *r.error << tag << "\n";
    return;
  }
  if (r.kind == dsl::QueryKind::table) {
    out << r.query << tag << "\n";
    for (const auto& row : r.rows)
      out << "  " << row.name << " = " << value_text(render(row.value, digits)) << "\n";
    return;
  }
  std::string odds;
  if (r.odds_kind && *r.odds_kind == Odds::Kind::infinite)
    odds = "infinite-odds";
  else if (r.odds_kind && *r.odds_kind == Odds::Kind::zero)
    odds = "0";
  if (r.kind == dsl::QueryKind::log_odds) {
    out << r.query << " ≈ " << r.log_odds.value_or("undefined") << " (odds "
        << (r.value ? r.value->to_string() : odds) << ")" << tag << "\n";
    return;
  }
  if (r.value)
    out << r.query << " = " << value_text(render(*r.value, digits)) << tag << "\n";
  else
    out << r.query << " = " << odds << tag << "\n";
}

ordered_json value_json(const std::optional<Hyperrational>& v, int digits) {
  ordered_json j;
  if (!v) {
    j["exact"] = nullptr;
    j["decimal"] = nullptr;
    j["magnitude"] = nullptr;
    return j;
  }
  const Rendered r = render(*v, digits);
  j["exact"] = r.exact;
  j["decimal"] = r.decimal ? ordered_json(*r.decimal) : ordered_json(nullptr);
  j["magnitude"] = r.magnitude;
  return j;
}

ordered_json record_json(const QueryResult& r, int digits) {
  ordered_json j;
  j["query"] = r.query;
  j["kind"] = std::string(dsl::to_string(r.kind));
  j.update(value_json(r.value, digits));
  j["provenance"] = r.provenance;
  j["odds"] = r.odds_kind ? ordered_json(odds_kind_name(*r.odds_kind)) : ordered_json(nullptr);
  j["log_odds"] = r.log_odds ? ordered_json(*r.log_odds) : ordered_json(nullptr);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json x;
    x["name"] = row.name;
    x.update(value_json(row.value, digits));
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
  return j;
}

std::string log_base_name(LogBase b) {
  switch (b) {
    case LogBase::natural: return "e";
    case LogBase::two: return "2";
    case LogBase::ten: return "10";
  }
  return "?";
}

struct EvalArgs {
  std::string file;
  bool scaled = false;
  int digits = 6;
  std::string format = "text";
  LogBase log_base = LogBase::natural;
  std::size_t max_atoms = kDefaultAtomLimit;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const auto source = read_file(a.file, err);
  if (!source)
    return kIoError;
  auto parsed = dsl::parse_source(*source);
  err << parsed.diagnostics.render(a.file);
  if (!parsed.ok())
    return kFailure;
  auto compiled = compile(parsed.ast, {a.scaled, a.max_atoms});
  err << compiled.diagnostics.render(a.file);
  if (!compiled.ok())
    return kFailure;

  const auto results = evaluate_all(*compiled.model, {a.digits, a.log_base});
  int code = kSuccess;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].error) {
      const auto& span = compiled.model->queries[i].source.span;
      err << a.file << ":" << span.line << ":" << span.column << ": error: " << *results[i].error
          << "\n";
      code = kFailure;
    }
  }

  if (a.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaId;
    doc["model"] = compiled.model->name;
    doc["scaled"] = a.scaled;
    doc["digits"] = a.digits;
    doc["log_base"] = log_base_name(a.log_base);
    ordered_json records = ordered_json::array();
    for (const auto& r : results)
      records.push_back(record_json(r, a.digits));
    doc["records"] = std::move(records);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      print_text(out, r, a.digits);
  }
  return code;
}

struct CheckArgs {
  std::optional<std::string> file;
  std::optional<std::uint64_t> seed;
  std::uint64_t instances = 1000;
  std::size_t exhaustive_atoms = 12;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<checks::Fixture> fixtures;
  if (a.file) {
    const auto source = read_file(*a.file, err);
    if (!source)
      return kIoError;
    auto parsed = dsl::parse_source(*source);
    err << parsed.diagnostics.render(*a.file);
    if (!parsed.ok())
      return kFailure;
    auto finite = compile(parsed.ast, {false, kDefaultAtomLimit});
    auto scaled = compile(parsed.ast, {true, kDefaultAtomLimit});
    if (!finite.ok() && !scaled.ok()) {
      err << finite.diagnostics.render(*a.file);
      return kFailure;
    }
    fixtures.push_back({*a.file, *source});
  } else {
    fixtures = checks::builtin_fixtures();
  }

  checks::CheckOptions options;
  options.seed = checks::kDefaultSeed;
  if (const char* env = std::getenv("EVIDENTIA_SEED")) {
    try {
      options.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "evidentia: EVIDENTIA_SEED is not an unsigned integer: '" << env << "'\n";
      return kIoError;
    }
  }
  if (a.seed)
    options.seed = *a.seed;
  options.instances = a.instances;
  options.exhaustive_atoms = a.exhaustive_atoms;

  out << "seed " << options.seed << ", " << options.instances << " instances, "
      << fixtures.size() << (fixtures.size() == 1 ? " model" : " models") << "\n";
  if (options.instances == 0) {
    err << "warning: --instances 0 requested; nothing was checked\n";
    out << "0 suites run\n";
    return kSuccess;
  }

  bool all_passed = true;
  for (const auto& r : checks::run_all(fixtures, options)) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    out << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases, "
        << r.failures << " failures, " << r.skipped << " skipped, " << secs.str() << " s)\n";
    for (const auto& c : r.counterexamples)
      out << "  counterexample: " << c << "\n";
    all_passed = all_passed && r.passed();
  }
  return all_passed ? kSuccess : kFailure;
}

int cmd_parse(const std::string& file, bool dump_ast, std::ostream& out, std::ostream& err) {
  const auto source = read_file(file, err);
  if (!source)
    return kIoError;
  auto parsed = dsl::parse_source(*source);
  if (parsed.ok() && parsed.ast.declarations.empty())
    parsed.diagnostics.error("empty model", parsed.ast.span);
  err << parsed.diagnostics.render(file);
  if (parsed.diagnostics.has_errors())
    return kFailure;
  out << (dump_ast ? dsl::dump(parsed.ast) : dsl::to_source(parsed.ast));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evidence, odds and probability over counted possibility spaces",
               "evidentia"};
  app.require_subcommand(1);

  EvalArgs eval;
  std::string log_base = "e";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate every query of a model file");
  eval_cmd->add_option("file", eval.file, "Model file")->required();
  eval_cmd->add_flag("--scaled", eval.scaled, "Compile with total evidence aleph");
  eval_cmd->add_option("--digits", eval.digits, "Decimal places")
      ->default_val(6)
      ->check(CLI::Range(0, 1000));
  eval_cmd->add_option("--format", eval.format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("--log-base", log_base, "Base of L(...) queries")
      ->default_val("e")
      ->check(CLI::IsMember({"e", "2", "10"}));
  eval_cmd->add_option("--max-atoms", eval.max_atoms, "Largest space to compile")
      ->default_val(kDefaultAtomLimit)
      ->check(CLI::PositiveNumber);

  CheckArgs check;
  std::string check_file;
  std::uint64_t seed = 0;
  auto* check_cmd = app.add_subcommand("check", "Run the property and oracle suites");
  check_cmd->add_option("file", check_file, "Model file (default: built-in fixtures)");
  auto* seed_opt = check_cmd->add_option("--seed", seed, "Seed (default 271828, or EVIDENTIA_SEED)");
  check_cmd->add_option("--instances", check.instances, "Randomized instances per suite")
      ->default_val(1000);
  check_cmd->add_option("--exhaustive-atoms", check.exhaustive_atoms,
                        "Product rule: check every pair on spaces up to this size")
      ->default_val(12)
      ->check(CLI::Range(0, 16));

  std::string parse_file;
  bool dump_ast = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a model file");
  parse_cmd->add_option("file", parse_file, "Model file")->required();
  parse_cmd->add_flag("--dump-ast", dump_ast, "Print the syntax tree with source spans");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kIoError;
  }

  if (*eval_cmd) {
    eval.log_base = log_base == "2" ? LogBase::two : log_base == "10" ? LogBase::ten
                                                                       : LogBase::natural;
    return cmd_eval(eval, out, err);
  }
  if (*check_cmd) {
    if (!check_file.empty())
      check.file = check_file;
    if (*seed_opt)
      check.seed = seed;
    return cmd_check(check, out, err);
  }
  return cmd_parse(parse_file, dump_ast, out, err);
}

}  // namespace evidentia::cli
