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

#include "qcorr/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/json_format.hpp"

namespace qcorr {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, "field '" + path + "': " + what);
}

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kValidationError, path + ": " + what);
}

// Runs `fn`, re-labelling any validation-class engine error with `path`.
template <typename Fn>
auto validated(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kValidationError) throw;
    invalid(path, e.what());
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) parse_fail(path, "expected a number");
  return j.get<double>();
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

Complex complex_value(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  parse_fail(path, "expected a complex number [re, im] or a real number");
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(string(j[i], index(path, i)));
  return out;
}

std::vector<double> number_list(const json& j, const std::string& path) {
  std::vector<double> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(number(j[i], index(path, i)));
  return out;
}

ComplexVector complex_vector(const json& j, const std::string& path) {
  ComplexVector v;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) v.push_back(complex_value(j[i], index(path, i)));
  return v;
}

ComplexMatrix complex_matrix(const json& j, const std::string& path, std::size_t dim) {
  if (array(j, path).size() != dim) parse_fail(path, "expected " + std::to_string(dim) + " rows");
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto row_path = index(path, r);
    const auto row = complex_vector(j[r], row_path);
    if (row.size() != dim) parse_fail(row_path, "expected " + std::to_string(dim) + " entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return validated(path, [&] { return ComplexMatrix(dim, std::move(entries)); });
}

std::vector<ConvexDecomposition::Component> components(const json& j, const std::string& path) {
  std::vector<ConvexDecomposition::Component> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto p = index(path, i);
    const double w = number(field(j[i], "weight", p), join(p, "weight"));
    auto v = complex_vector(field(j[i], "vector", p), join(p, "vector"));
    if (w < 0.0) invalid(join(p, "weight"), "negative weight");
    if (w == 0.0) continue;  // contributes nothing
    out.push_back({w, validated(join(p, "vector"), [&] { return PureState(std::move(v)); })});
  }
  if (out.empty()) invalid(path, "no component with positive weight");
  return out;
}

Povm parse_povm(const json& j, const std::string& path, std::size_t dim) {
  if (j.contains("operator")) {
    const auto op = complex_matrix(j["operator"], join(path, "operator"), dim);
    std::optional<std::vector<std::string>> labels;
    if (j.contains("labels")) labels = string_list(j["labels"], join(path, "labels"));
    return validated(path, [&] { return pvm_from_operator(op, labels); });
  }
  const auto labels = string_list(field(j, "labels", path), join(path, "labels"));
  const auto& effects_json = array(field(j, "effects", path), join(path, "effects"));
  std::vector<ComplexMatrix> effects;
  for (std::size_t i = 0; i < effects_json.size(); ++i)
    effects.push_back(complex_matrix(effects_json[i], index(join(path, "effects"), i), dim));
  return validated(path, [&] { return Povm(OutcomeSpace(labels), std::move(effects)); });
}

QuantumModel parse_quantum(const json& doc) {
  const double dim_value = number(field(doc, "dim", ""), "dim");
  if (dim_value < 1 || dim_value != static_cast<double>(static_cast<std::size_t>(dim_value)))
    invalid("dim", "must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_value);

  const auto& state_json = field(doc, "state", "");
  std::optional<DensityOperator> state;
  if (state_json.contains("matrix")) {
    auto m = complex_matrix(state_json["matrix"], "state.matrix", dim);
    state = validated("state", [&] { return DensityOperator(std::move(m)); });
  } else if (state_json.contains("mixture")) {
    auto comps = components(state_json["mixture"], "state.mixture");
    for (const auto& c : comps)
      if (c.state.dim() != dim) invalid("state.mixture", "vector length does not match dim");
    state = validated("state", [&] { return DensityOperator(mixture_matrix(comps)); });
  } else {
    parse_fail("state", "expected 'matrix' or 'mixture'");
  }

  const auto& obs = array(field(doc, "observables", ""), "observables");
  if (obs.size() != 2) parse_fail("observables", "expected exactly two observables");
  Povm a1 = parse_povm(obs[0], "observables[0]", dim);
  Povm a2 = parse_povm(obs[1], "observables[1]", dim);

  std::optional<Povm> joint;
  const json joint_json = doc.value("joint", json("auto-commuting"));
  if (joint_json.is_string()) {
    if (joint_json.get<std::string>() != "auto-commuting")
      parse_fail("joint", "expected \"auto-commuting\" or an object with 'effects'");
    validated("joint", [&] { return joint_from_commuting(a1, a2); });
  } else {
    const auto& effects_json = array(field(joint_json, "effects", "joint"), "joint.effects");
    std::vector<ComplexMatrix> effects;
    for (std::size_t i = 0; i < effects_json.size(); ++i)
      effects.push_back(complex_matrix(effects_json[i], index("joint.effects", i), dim));
    joint = validated("joint", [&] { return Povm(OutcomeSpace::product(a1.space(), a2.space()), std::move(effects)); });
    if (!check_joint(*joint, a1, a2)) invalid("joint", "marginals do not reproduce the two observables");
  }

  std::vector<NamedDecomposition> decs;
  std::set<std::string> names;
  const json decs_json = doc.value("decompositions", json::array({{{"name", "spectral"}, {"components", "spectral"}}}));
  for (std::size_t i = 0; i < array(decs_json, "decompositions").size(); ++i) {
    const auto p = index("decompositions", i);
    auto name = string(field(decs_json[i], "name", p), join(p, "name"));
    if (!names.insert(name).second) invalid(join(p, "name"), "duplicate decomposition name '" + name + "'");
    const auto& comps_json = field(decs_json[i], "components", p);
    if (comps_json.is_string()) {
      if (comps_json.get<std::string>() != "spectral") parse_fail(join(p, "components"), "expected \"spectral\" or an array");
      decs.push_back({std::move(name), std::nullopt});
      continue;
    }
    auto comps = components(comps_json, join(p, "components"));
    decs.push_back({std::move(name), validated(p, [&] { return ConvexDecomposition(std::move(comps), *state); })});
  }
  if (decs.empty()) invalid("decompositions", "at least one decomposition is required");

  return QuantumModel{std::move(*state), std::move(a1), std::move(a2), std::move(joint), std::move(decs)};
}

ClassicalModel parse_classical(const json& doc) {
  auto omega = validated("phase_space", [&] {
    return classical::PhaseSpace(string_list(field(doc, "phase_space", ""), "phase_space"));
  });
  const auto& state_json = field(doc, "state", "");
  auto weights = number_list(field(state_json, "weights", "state"), "state.weights");
  auto state = validated("state", [&] { return DiscreteMeasure(omega, std::move(weights)); });

  auto kernel_rows = [](const json& j, const std::string& path) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) rows.push_back(number_list(j[i], index(path, i)));
    return rows;
  };

  const auto& obs = array(field(doc, "observables", ""), "observables");
  if (obs.size() != 2) parse_fail("observables", "expected exactly two observables");
  std::vector<classical::ClassicalObservable> parsed;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto p = index("observables", k);
    auto outcomes = string_list(field(obs[k], "outcomes", p), join(p, "outcomes"));
    auto rows = kernel_rows(field(obs[k], "kernel", p), join(p, "kernel"));
    parsed.push_back(validated(p, [&] {
      return classical::ClassicalObservable::from_rows(omega, OutcomeSpace(outcomes), rows);
    }));
  }

  std::optional<classical::ClassicalJoint> joint;
  const json joint_json = doc.value("joint", json("classical-product"));
  if (joint_json.is_string()) {
    if (joint_json.get<std::string>() != "classical-product")
      parse_fail("joint", "expected \"classical-product\" or an object with 'kernel'");
  } else {
    auto rows = kernel_rows(field(joint_json, "kernel", "joint"), "joint.kernel");
    joint = validated("joint", [&] {
      return classical::ClassicalObservable::from_rows(
          omega, OutcomeSpace::product(parsed[0].codomain(), parsed[1].codomain()), rows);
    });
  }
  return ClassicalModel{std::move(omega), std::move(state), std::move(parsed[0]), std::move(parsed[1]),
                        std::move(joint)};
}

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson vector_json(const ComplexVector& v) {
  ojson out = ojson::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

ojson matrix_json(const ComplexMatrix& m) {
  ojson out = ojson::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ojson povm_json(const Povm& a) {
  ojson effects = ojson::array();
  for (const auto& e : a.effects()) effects.push_back(matrix_json(e));
  return {{"labels", a.space().labels()}, {"effects", std::move(effects)}};
}

ojson kernel_json(const classical::ClassicalObservable& a) {
  ojson rows = ojson::array();
  for (const auto& r : a.rows()) rows.push_back(r.weights());
  return rows;
}

}  // namespace

Povm QuantumModel::resolved_joint() const { return joint ? *joint : joint_from_commuting(a1, a2); }

classical::ClassicalJoint ClassicalModel::resolved_joint() const {
  return joint ? *joint : classical::classical_joint(a1, a2);
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) parse_fail("", "scenario must be a JSON object");
  const auto schema = string(field(doc, "schema", ""), "schema");
  if (schema != kSchemaVersion) invalid("schema", "unsupported schema '" + schema + "', expected " + kSchemaVersion);

  auto name = string(field(doc, "name", ""), "name");
  auto description = doc.contains("description") ? string(doc["description"], "description") : std::string();
  std::map<std::string, double> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) parse_fail("params", "expected an object");
    for (const auto& [k, v] : doc["params"].items()) params[k] = number(v, "params." + k);
  }
  const auto mode = string(field(doc, "mode", ""), "mode");
  auto model = [&]() -> std::variant<QuantumModel, ClassicalModel> {
    if (mode == "quantum") return parse_quantum(doc);
    if (mode == "classical") return parse_classical(doc);
    parse_fail("mode", "expected \"quantum\" or \"classical\"");
  }();
  Scenario s{std::move(name), std::move(description), std::move(params), std::move(model)};
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open scenario file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ojson scenario_to_json(const Scenario& s) {
  ojson doc = {{"schema", kSchemaVersion}, {"name", s.name}};
  if (!s.description.empty()) doc["description"] = s.description;
  if (!s.params.empty()) doc["params"] = s.params;

  if (const auto* q = std::get_if<QuantumModel>(&s.model)) {
    doc["mode"] = "quantum";
    doc["dim"] = q->state.dim();
    doc["state"] = {{"matrix", matrix_json(q->state.matrix())}};
    doc["observables"] = ojson::array({povm_json(q->a1), povm_json(q->a2)});
    if (q->joint) {
      doc["joint"] = {{"effects", povm_json(*q->joint)["effects"]}};
    } else {
      doc["joint"] = "auto-commuting";
    }
    ojson decs = ojson::array();
    for (const auto& d : q->decompositions) {
      if (d.is_spectral()) {
        decs.push_back({{"name", d.name}, {"components", "spectral"}});
        continue;
      }
      ojson comps = ojson::array();
      for (const auto& c : d.decomposition->components())
        comps.push_back({{"weight", c.weight}, {"vector", vector_json(c.state.vector())}});
      decs.push_back({{"name", d.name}, {"components", std::move(comps)}});
    }
    doc["decompositions"] = std::move(decs);
  } else {
    const auto& c = std::get<ClassicalModel>(s.model);
    doc["mode"] = "classical";
    doc["phase_space"] = c.phase_space.labels();
    doc["state"] = {{"weights", c.state.weights()}};
    doc["observables"] = ojson::array({{{"outcomes", c.a1.codomain().labels()}, {"kernel", kernel_json(c.a1)}},
                                      {{"outcomes", c.a2.codomain().labels()}, {"kernel", kernel_json(c.a2)}}});
    if (c.joint) {
      doc["joint"] = {{"kernel", kernel_json(*c.joint)}};
    } else {
      doc["joint"] = "classical-product";
    }
  }
  return doc;
}

Scenario parse_scenario(const ojson& doc) { return parse_scenario(json::parse(doc.dump())); }

std::string scenario_to_text(const Scenario& s) { return pretty_json(scenario_to_json(s)); }

}  // namespace qcorr
