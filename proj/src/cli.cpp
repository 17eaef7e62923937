#include "recsym/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "recsym/checker.hpp"
#include "recsym/expr.hpp"

namespace recsym {

namespace {

constexpr std::size_t kDefaultCount = 1000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid seed from ") + origin + ": '" + text + "'");
  }
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_seed(flag, "--seed");
  if (const char* env = std::getenv("RECSYM_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "RECSYM_SEED");
  }
  return SampleConfig{}.seed;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front())) != 0) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; });
}

std::string format_residual(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Best-effort human rendering of a serialized value.
std::string render(const Json& j) {
  try {
    if (j.is_object() && j.contains("s")) return to_string(quat_from_json(j));
    if (j.is_object() && j.contains("m")) return to_string(mat_from_json(j));
    if (j.is_object() && j.contains("re")) return to_string(cscalar_from_json(j));
    if (j.is_array()) {
      std::string out = "[";
      for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + render(j[k]);
      return out + "]";
    }
  } catch (const Error&) {
  }
  return j.dump();
}

void print_counterexample(std::ostream& out, const char* label, const Counterexample& c) {
  out << label << " at sample " << c.position << "\n";
  out << "  inputs:";
  for (std::size_t k = 0; k < c.inputs.size(); ++k) out << (k ? ", " : " ") << to_string(c.inputs[k]);
  out << "\n  lhs: " << render(c.lhs) << "\n  rhs: " << render(c.rhs) << "\n";
  out << "  residual: " << (c.residual ? format_residual(*c.residual) : std::string("n/a")) << "\n";
}

void print_report_line(std::ostream& out, const IdentityReport& r) {
  out << (r.passed ? "PASS " : "FAIL ") << r.identity_id << "  samples=" << r.samples_run
      << "  worst_abs=" << format_residual(r.worst_abs_residual)
      << "  worst_rel=" << format_residual(r.worst_rel_residual);
  if (r.vacuous) out << "  (vacuous)";
  if (r.kind == ReportKind::Search) out << "  witness=" << (r.witness ? "found" : "none");
  out << "\n";
}

int cmd_eval(const std::string& source, const std::vector<std::string>& lets, Backend backend, bool json,
             std::ostream& out) {
  std::vector<Binding> bindings;
  for (const auto& let : lets) {
    const auto eq = let.find('=');
    if (eq == std::string::npos) throw UsageError("--let expects NAME=QUAT, got '" + let + "'");
    std::string name = let.substr(0, eq);
    if (!is_identifier(name)) throw UsageError("invalid binding name '" + name + "'");
    const bool taken = std::any_of(bindings.begin(), bindings.end(), [&](const Binding& b) { return b.name == name; });
    if (taken) throw UsageError("'" + name + "' is bound more than once");
    Value value = evaluate(let.substr(eq + 1), bindings, backend);
    if (type_of(value) != ValueType::Quat) {
      throw Error(Errc::TypeError, "--let " + name + " must be a 4-vector, got a " + std::string(type_name(type_of(value))));
    }
    bindings.push_back({std::move(name), std::move(value)});
  }
  const Value result = evaluate(source, bindings, backend);
  if (json) {
    out << value_to_json(result).dump() << "\n";
  } else {
    out << format_value(result) << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::vector<std::string>& ids, const SampleConfig& cfg, const std::string& json_path,
              std::ostream& out, std::ostream& err) {
  for (const auto& id : ids) {
    if (!is_identity(id) && !is_property(id)) throw UsageError("unknown identity '" + id + "'");
  }
  std::vector<IdentityReport> reports;
  if (ids.empty()) {
    reports = run_suite(cfg);
  } else {
    for (const auto& id : ids) reports.push_back(is_identity(id) ? check_identity(id, cfg) : run_search(id, cfg));
  }
  const SuiteSummary summary = summarize(reports);

  std::ostream& human = json_path.empty() ? out : err;
  for (const auto& r : reports) {
    print_report_line(human, r);
    if (!r.passed && r.counterexample) print_counterexample(human, "  counterexample", *r.counterexample);
  }
  human << summary.passed << "/" << summary.total << " passed\n";

  if (!json_path.empty()) {
    const std::string doc = suite_to_json(reports).dump(2);
    if (json_path == "-") {
      out << doc << "\n";
    } else {
      std::ofstream file(json_path);
      if (!file) throw UsageError("cannot write '" + json_path + "'");
      file << doc << "\n";
    }
  }
  return summary.all_passed ? kExitOk : kExitFailed;
}

int cmd_search(const std::string& id, const SampleConfig& cfg, std::ostream& out) {
  if (!is_property(id)) throw UsageError("unknown property '" + id + "'");
  const IdentityReport report = run_search(id, cfg);
  if (report.witness) {
    print_counterexample(out, "witness", *report.witness);
  } else if (report.counterexample) {
    print_counterexample(out, "error", *report.counterexample);
  } else {
    out << "no counterexample in " << report.samples_run << " samples\n";
  }
  const Expectation expected = property_expectation(id);
  out << "expected: " << (expected == Expectation::Witness ? "witness" : "no witness") << " -> "
      << (report.passed ? "as expected" : "UNEXPECTED") << "\n";
  return report.passed ? kExitOk : kExitFailed;
}

std::string boost_expr(const std::vector<std::string>& v) {
  return "boost(" + v[0] + "," + v[1] + "," + v[2] + ")";
}

int cmd_boost(const std::vector<std::string>& velocity, const std::vector<std::string>& compose_with,
              const std::string& rule, Backend backend, std::ostream& out) {
  const Value first = evaluate(boost_expr(velocity), {}, backend);
  if (compose_with.empty()) {
    out << format_value(first) << "\n";
    out << "qform = " << to_string(qform(std::get<Quat4>(first))) << "\n";
    return kExitOk;
  }
  std::vector<Binding> bindings{{"B1", first}, {"B2", evaluate(boost_expr(compose_with), {}, backend)}};
  const Value composed = evaluate(rule + "(B1, B2)", bindings, backend);
  out << "B1 = " << format_value(bindings[0].value) << "\n";
  out << "B2 = " << format_value(bindings[1].value) << "\n";
  out << rule << "(B1, B2) = " << format_value(composed) << "\n";
  out << "qform = " << to_string(qform(std::get<Quat4>(composed))) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition rules for complex 4-vectors: evaluate, verify identities, search counterexamples"};
  app.name("recsym");
  app.require_subcommand(1);

  std::string backend_text;
  std::string seed_text;
  std::size_t count = kDefaultCount;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  std::string source;
  std::vector<std::string> lets;
  bool eval_json = false;
  eval->add_option("EXPR", source, "Expression, e.g. \"qform(le((1;1,0,0),(13;0,0,5)))\"")->required();
  eval->add_option("--let", lets, "Bind NAME=QUAT before evaluating (repeatable)");
  eval->add_option("--backend", backend_text, "exact (default) or float")->check(CLI::IsMember({"exact", "float"}));
  eval->add_flag("--json", eval_json, "Print the value as JSON");

  auto* check = app.add_subcommand("check", "Run registered identities (all when no --id)");
  std::vector<std::string> check_ids;
  std::string json_path;
  check->add_option("--id", check_ids, "Identity id (repeatable)");
  check->add_option("--seed", seed_text, "Sample seed (default: RECSYM_SEED or built-in)");
  check->add_option("--count", count, "Samples per identity");
  check->add_option("--backend", backend_text, "exact (default) or float")->check(CLI::IsMember({"exact", "float"}));
  check->add_option("--json", json_path, "Write the JSON report to PATH ('-' for standard output)");

  auto* search = app.add_subcommand("search", "Search for a counterexample to a registered property");
  std::string search_id;
  search->add_option("--id", search_id, "Property id")->required();
  search->add_option("--seed", seed_text, "Sample seed (default: RECSYM_SEED or built-in)");
  search->add_option("--count", count, "Samples to try");
  search->add_option("--backend", backend_text, "exact (default) or float")->check(CLI::IsMember({"exact", "float"}));

  auto* boost = app.add_subcommand("boost", "Boost 4-vector from a velocity in units of c");
  std::vector<std::string> velocity;
  std::vector<std::string> compose_with;
  std::string rule = "le";
  boost->add_option("V", velocity, "VX VY VZ")->expected(3)->required()->allow_extra_args(false);
  boost->add_option("--compose", compose_with, "Second velocity VX2 VY2 VZ2")->expected(3);
  boost->add_option("--rule", rule, "le (default) or rs")->check(CLI::IsMember({"le", "rs"}));
  boost->add_option("--backend", backend_text, "float (default) or exact")->check(CLI::IsMember({"exact", "float"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const Backend backend = backend_text.empty() ? Backend::Exact : parse_backend(backend_text);
      return cmd_eval(source, lets, backend, eval_json, out);
    }
    if (boost->parsed()) {
      const Backend backend = backend_text.empty() ? Backend::Float : parse_backend(backend_text);
      return cmd_boost(velocity, compose_with, rule, backend, out);
    }
    SampleConfig cfg;
    cfg.seed = resolve_seed(seed_text);
    cfg.count = count;
    cfg.backend = backend_text.empty() ? Backend::Exact : parse_backend(backend_text);
    if (check->parsed()) return cmd_check(check_ids, cfg, json_path, out, err);
    return cmd_search(search_id, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace recsym
