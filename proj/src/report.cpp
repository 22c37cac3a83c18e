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

#include "qcorr/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/json_format.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

using json = nlohmann::ordered_json;

namespace {

constexpr int kLabelWidth = 24;
constexpr int kCellWidth = 14;

std::optional<std::size_t> dirac_point(const DiscreteMeasure& m) {
  for (std::size_t i = 0; i < m.weights().size(); ++i)
    if (m.weight(i) >= 1.0 - kEps) return i;
  return std::nullopt;
}

void add_concentration_note(ReportDocument& r) {
  const auto& s = r.primary();
  auto a = dirac_point(s.joint);
  auto b = dirac_point(s.marginal_product);
  if (a && b && *a == *b)
    r.notes.push_back("joint measure and product of marginals are both concentrated at " +
                      s.joint.space().label(*a) + "; densities are defined only there");
}

void add_missing_notes(ReportDocument& r) {
  for (const auto& d : r.decompositions) {
    if (d.split.rho_c_error) r.notes.push_back("decomposition '" + d.name + "': rho_c does not exist: " + *d.split.rho_c_error);
    if (d.split.rho_e_error) r.notes.push_back("decomposition '" + d.name + "': rho_e does not exist: " + *d.split.rho_e_error);
  }
}

ReportDocument run_quantum(const Scenario& s, const QuantumModel& q, const std::optional<std::string>& only) {
  std::vector<NamedDecomposition> selected;
  if (only) {
    auto it = std::find_if(q.decompositions.begin(), q.decompositions.end(),
                           [&](const NamedDecomposition& d) { return d.name == *only; });
    if (it != q.decompositions.end()) {
      selected.push_back(*it);
    } else if (*only == "spectral") {
      selected.push_back({"spectral", std::nullopt});
    } else {
      throw Error(ErrorCode::kValidationError, "scenario has no decomposition named '" + *only + "'");
    }
  } else {
    selected = q.decompositions;
  }

  const Povm joint = q.resolved_joint();
  ReportDocument r{s.name,
                   s.description,
                   "quantum",
                   s.params,
                   outcome_measure(q.a1, q.state),
                   outcome_measure(q.a2, q.state),
                   {},
                   check_joint(joint, q.a1, q.a2),
                   std::nullopt,
                   std::nullopt,
                   {}};
  for (const auto& nd : selected) {
    const ConvexDecomposition dec = nd.is_spectral() ? spectral_decompose(q.state) : *nd.decomposition;
    auto rep = correlation_report(joint, q.a1, q.a2, dec);
    std::vector<double> weights;
    for (const auto& c : dec.components()) weights.push_back(c.weight);
    r.decompositions.push_back({nd.name, nd.is_spectral(), dec.size(), std::move(weights), std::move(rep.split)});
    if (nd.is_spectral())
      r.notes.push_back("decomposition '" + nd.name + "': spectral (one of many)");
  }
  r.notes.push_back("rho_c and rho_e are relative to the stated decomposition; rho_t is not");
  add_concentration_note(r);
  add_missing_notes(r);
  return r;
}

ReportDocument run_classical(const Scenario& s, const ClassicalModel& c, const std::optional<std::string>& only) {
  if (only && *only != "phase-space")
    throw Error(ErrorCode::kValidationError, "classical scenarios have the single decomposition 'phase-space'");
  const auto joint = c.resolved_joint();
  ReportDocument r{s.name,
                   s.description,
                   "classical",
                   s.params,
                   classical::apply(c.a1, c.state),
                   classical::apply(c.a2, c.state),
                   {},
                   classical::marginally_consistent(joint, c.a1, c.a2),
                   classical::is_deterministic(c.a1),
                   classical::is_deterministic(c.a2),
                   {}};
  std::size_t support = 0;
  for (double w : c.state.weights())
    if (w > 0.0) ++support;
  r.decompositions.push_back(
      {"phase-space", false, support, c.state.weights(), classical::classical_split(joint, c.a1, c.a2, c.state)});
  add_concentration_note(r);
  add_missing_notes(r);
  return r;
}

json values_json(const std::vector<double>& w) { return w; }

json density_json(const std::optional<DensityFunction>& rho) {
  if (!rho) return nullptr;
  json out = json::array();
  for (const auto& v : rho->values()) out.push_back(v ? json(*v) : json(nullptr));
  return out;
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? " " + s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s + " " : s + std::string(width - w, ' ');
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void table_row(std::ostringstream& os, const std::string& label, const std::vector<std::optional<double>>& cells) {
  os << pad_right(label, kLabelWidth);
  for (const auto& c : cells) os << pad_left(format_cell(c), kCellWidth);
  os << '\n';
}

std::vector<std::optional<double>> cells_of(const std::vector<double>& w) {
  return {w.begin(), w.end()};
}

void table_header(std::ostringstream& os, const std::string& title, const OutcomeSpace& space) {
  os << pad_right(title, kLabelWidth);
  for (const auto& l : space.labels()) os << pad_left(l, kCellWidth);
  os << '\n';
}

std::string residual_line(const DecompositionResult& d) {
  const auto& s = d.split;
  std::ostringstream os;
  os << "product_rule_residual: ";
  if (!s.product_rule_residual) {
    os << "n/a (" << (s.rho_c ? "rho_e" : "rho_c") << " does not exist)";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", *s.product_rule_residual);
    os << "<1e-7: " << (s.product_rule_holds() ? "PASS" : "FAIL") << " (max |rho_c*rho_e - rho_t| = " << buf << ")";
  }
  return os.str();
}

}  // namespace

std::string format_cell(const std::optional<double>& v) { return v ? format_number(*v) : "—"; }

ReportDocument run_scenario(const Scenario& s, const std::optional<std::string>& only) {
  if (const auto* q = std::get_if<QuantumModel>(&s.model)) return run_quantum(s, *q, only);
  return run_classical(s, std::get<ClassicalModel>(s.model), only);
}

json report_to_json(const ReportDocument& r) {
  const auto& p = r.primary();
  json flags = {{"joint_consistent", r.joint_consistent}, {"decomposition_relative", r.mode == "quantum"}};
  if (r.a1_deterministic) flags["a1_deterministic"] = *r.a1_deterministic;
  if (r.a2_deterministic) flags["a2_deterministic"] = *r.a2_deterministic;

  json decs = json::array();
  for (const auto& d : r.decompositions) {
    const auto& s = d.split;
    json entry = {{"name", d.name},
                  {"spectral", d.spectral},
                  {"components", d.components},
                  {"weights", d.weights},
                  {"classical_product", values_json(s.classical_product.weights())},
                  {"rho_c", density_json(s.rho_c)},
                  {"rho_e", density_json(s.rho_e)},
                  {"product_rule_residual", s.product_rule_residual ? json(*s.product_rule_residual) : json(nullptr)},
                  {"product_rule", !s.product_rule_residual ? "n/a" : (s.product_rule_holds() ? "PASS" : "FAIL")}};
    if (s.rho_c_error) entry["rho_c_error"] = *s.rho_c_error;
    if (s.rho_e_error) entry["rho_e_error"] = *s.rho_e_error;
    decs.push_back(std::move(entry));
  }

  json doc = {{"schema", "qcorr-report/1"},
              {"scenario", r.scenario},
              {"mode", r.mode},
              {"flags", std::move(flags)},
              {"outcomes", p.joint.space().labels()},
              {"a1", {{"outcomes", r.a1_measure.space().labels()}, {"weights", r.a1_measure.weights()}}},
              {"a2", {{"outcomes", r.a2_measure.space().labels()}, {"weights", r.a2_measure.weights()}}},
              {"joint", values_json(p.joint.weights())},
              {"marginal_product", values_json(p.marginal_product.weights())},
              {"rho_t", density_json(p.rho_t)},
              {"decompositions", std::move(decs)},
              {"notes", r.notes}};
  if (!r.description.empty()) doc["description"] = r.description;
  if (!r.params.empty()) doc["params"] = r.params;
  return doc;
}

std::string emit_report(const ReportDocument& r, ReportFormat format) {
  if (format == ReportFormat::kJson) return pretty_json(report_to_json(r));

  const auto& p = r.primary();
  std::ostringstream os;
  os << "scenario: " << r.scenario << " (" << r.mode << ")\n";
  if (!r.description.empty()) os << "  " << r.description << '\n';
  if (!r.params.empty()) {
    os << "params:";
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << format_number(v);
    os << '\n';
  }
  os << "flags: joint " << (r.joint_consistent ? "consistent" : "NOT marginally consistent");
  if (r.a1_deterministic) os << ", A1 " << (*r.a1_deterministic ? "deterministic" : "fuzzy");
  if (r.a2_deterministic) os << ", A2 " << (*r.a2_deterministic ? "deterministic" : "fuzzy");
  if (r.mode == "quantum") os << ", split is decomposition-relative";
  os << "\n\n";

  table_header(os, "marginals", r.a1_measure.space());
  table_row(os, "A1(D)", cells_of(r.a1_measure.weights()));
  if (r.a2_measure.space() == r.a1_measure.space()) {
    table_row(os, "A2(D)", cells_of(r.a2_measure.weights()));
  } else {
    table_header(os, "", r.a2_measure.space());
    table_row(os, "A2(D)", cells_of(r.a2_measure.weights()));
  }
  os << '\n';

  table_header(os, "", p.joint.space());
  table_row(os, "J(A1,A2)(D)", cells_of(p.joint.weights()));
  table_row(os, "A1(D) x A2(D)", cells_of(p.marginal_product.weights()));
  table_row(os, "rho_t", p.rho_t.values());

  for (const auto& d : r.decompositions) {
    os << "\ndecomposition: " << d.name << (d.spectral ? " [spectral (one of many)]" : "") << " (" << d.components
       << (d.components == 1 ? " component" : " components") << ")\n";
    table_header(os, "", p.joint.space());
    table_row(os, "sum w A1(P) x A2(P)", cells_of(d.split.classical_product.weights()));
    if (d.split.rho_c) {
      table_row(os, "rho_c", d.split.rho_c->values());
    } else {
      os << pad_right("rho_c", kLabelWidth) << "does not exist\n";
    }
    if (d.split.rho_e) {
      table_row(os, "rho_e", d.split.rho_e->values());
    } else {
      os << pad_right("rho_e", kLabelWidth) << "does not exist\n";
    }
    os << residual_line(d) << '\n';
  }

  if (!r.notes.empty()) {
    os << "\nnotes:\n";
    for (const auto& n : r.notes) os << "  - " << n << '\n';
  }
  return os.str();
}

}  // namespace qcorr
