// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/examples.hpp"
#include "qcorr/json_format.hpp"
#include "qcorr/properties.hpp"
#include "qcorr/report.hpp"
#include "qcorr/scenario.hpp"

namespace qcorr::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string example_id;
  std::string decomposition;
  std::string format = "table";
  std::string params;
  std::uint64_t seed = 0;
  int trials = 200;
};

ReportFormat parse_format(const std::string& f) { return f == "json" ? ReportFormat::kJson : ReportFormat::kTable; }

std::optional<std::string> decomposition_filter(const Options& o) {
  if (o.decomposition.empty()) return std::nullopt;
  return o.decomposition;
}

int report_error(const Error& e, const Options& o, std::ostream& out, std::ostream& err) {
  const int code = e.is_validation() ? kExitValidation : kExitEngine;
  if (o.format == "json") {
    json obj = {{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"exit_code", code}}}};
    out << pretty_json(obj);
  } else {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
  }
  return code;
}

int cmd_run(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.file);
  out << emit_report(run_scenario(s, decomposition_filter(o)), parse_format(o.format));
  return kExitOk;
}

int cmd_paper_example(const Options& o, std::ostream& out) {
  const Scenario s = examples::build(o.example_id, examples::parse_params(o.params));
  out << emit_report(run_scenario(s, decomposition_filter(o)), parse_format(o.format));
  return kExitOk;
}

int cmd_export_example(const Options& o, std::ostream& out) {
  out << scenario_to_text(examples::build(o.example_id, examples::parse_params(o.params)));
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.file);
  std::size_t decs = 1;
  std::string detail;
  if (const auto* q = std::get_if<QuantumModel>(&s.model)) {
    decs = q->decompositions.size();
    detail = "dim " + std::to_string(q->state.dim());
  } else {
    detail = std::to_string(std::get<ClassicalModel>(s.model).phase_space.size()) + " phase-space points";
  }
  if (o.format == "json") {
    out << pretty_json(json{{"valid", true}, {"name", s.name}, {"mode", s.is_quantum() ? "quantum" : "classical"},
                {"decompositions", decs}});
  } else {
    out << "ok: " << s.name << " (" << (s.is_quantum() ? "quantum" : "classical") << ", " << detail << ", " << decs
        << (decs == 1 ? " decomposition" : " decompositions") << ")\n";
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = properties::run_all(o.seed, o.trials);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });

  if (o.format == "json") {
    json suites = json::array();
    for (const auto& r : results)
      suites.push_back({{"name", r.name}, {"trials", r.trials}, {"worst", r.worst}, {"bound", r.bound},
                        {"passed", r.passed()}, {"failure", r.failure}});
    out << pretty_json(json{{"seed", o.seed}, {"trials", o.trials}, {"seconds", secs}, {"passed", ok}, {"suites", suites}});
  } else {
    out << "selftest seed=" << o.seed << " trials=" << o.trials << '\n';
    for (const auto& r : results) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "worst %.3g < %.0e", r.worst, r.bound);
      out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  (" << buf << ")";
      if (!r.failure.empty()) out << "  " << r.failure;
      out << '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    out << (ok ? "all suites passed" : "some suites FAILED") << " in " << buf << " s\n";
  }
  return ok ? kExitOk : kExitEngine;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcorr: classical correlation and entanglement densities of two observables"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_decomposition = [&](CLI::App* sub) {
    sub->add_option("--decomposition", o.decomposition, "Only this named decomposition, or 'spectral'");
  };

  std::string example_help = "Example id:";
  for (const auto& id : examples::ids()) example_help += " " + id;

  auto* run_cmd = app.add_subcommand("run", "Run a scenario file");
  run_cmd->add_option("file", o.file, "Scenario JSON file")->required();
  add_decomposition(run_cmd);
  add_format(run_cmd);

  auto* paper_cmd = app.add_subcommand("paper-example", "Run a built-in two-qubit example");
  paper_cmd->add_option("id", o.example_id, example_help)->required();
  paper_cmd->add_option("--params", o.params, "Parameter overrides, k=v,k=v");
  add_decomposition(paper_cmd);
  add_format(paper_cmd);

  auto* export_cmd = app.add_subcommand("export-example", "Print a built-in example as a scenario file");
  export_cmd->add_option("id", o.example_id, example_help)->required();
  export_cmd->add_option("--params", o.params, "Parameter overrides, k=v,k=v");

  auto* validate_cmd = app.add_subcommand("validate", "Load and validate a scenario file");
  validate_cmd->add_option("file", o.file, "Scenario JSON file")->required();
  add_format(validate_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the randomized property suites");
  selftest_cmd->add_option("--seed", o.seed, "Random seed");
  selftest_cmd->add_option("--trials", o.trials, "Trials per suite")->check(CLI::PositiveNumber);
  add_format(selftest_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (paper_cmd->parsed()) return cmd_paper_example(o, out);
    if (export_cmd->parsed()) return cmd_export_example(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    return cmd_selftest(o, out);
  } catch (const Error& e) {
    return report_error(e, o, out, err);
  }
}

}  // namespace qcorr::cli
