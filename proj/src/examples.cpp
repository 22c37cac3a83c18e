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

#include "qcorr/examples.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/qubit.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr::examples {

namespace {

using Components = std::vector<ConvexDecomposition::Component>;

struct Spec {
  std::string id;
  std::string name;
  std::string description;
  Params defaults;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all = {
      {"i", "separable", "separable mixture of the four spin-z product states",
       {{"w1", 0.4}, {"w2", 0.3}, {"w3", 0.2}, {"w4", 0.1}}},
      {"ii", "bell-diagonal", "Bell diagonal state", {{"w1", 0.4}, {"w2", 0.3}, {"w3", 0.2}, {"w4", 0.1}}},
      {"iii", "degenerate", "degenerate state a(P++ + P--) + b(P+- + P-+) under three decompositions",
       {{"a", 0.25}, {"b", 0.25}}},
      {"iii-mixed", "degenerate-mixed", "degenerate state under the mixed product/Bell decomposition",
       {{"a", 0.25}, {"b", 0.25}}},
      {"appendix", "separable-general", "separable mixture of three non-aligned product states",
       {{"w1", 0.5}, {"w2", 0.3}, {"w3", 0.2}}},
      {"appendix-px", "separable-px", "w P+ (x) P+ + (1-w) Px (x) Px", {{"w", 0.5}}},
  };
  return all;
}

const Spec& find(const std::string& id) {
  for (const auto& s : specs())
    if (s.id == id) return s;
  std::string known;
  for (const auto& s : specs()) known += (known.empty() ? "" : ", ") + s.id;
  throw Error(ErrorCode::kUnknownExample, "unknown example '" + id + "' (known: " + known + ")");
}

void require_probability_vector(const std::vector<double>& w, const std::string& what) {
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw Error(ErrorCode::kValidationError, what + ": weights must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > validation_eps()) {
    std::ostringstream os;
    os << what << ": weights sum to " << sum;
    throw Error(ErrorCode::kValidationError, os.str());
  }
}

// Zero-weight terms are dropped; decomposition weights are strictly positive.
Components mixture(const std::vector<double>& w, const std::vector<PureState>& states) {
  Components out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) out.push_back({w[i], states[i]});
  return out;
}

std::vector<PureState> product_basis() {
  using namespace qubit;
  // Ordered ++, --, +-, -+ to line up with the weight names.
  return {product(up(), up()), product(down(), down()), product(up(), down()), product(down(), up())};
}

std::vector<PureState> bell_basis() { return {qubit::bell(1), qubit::bell(2), qubit::bell(3), qubit::bell(4)}; }

// An empty component list stands for the spectral decomposition.
NamedDecomposition named(std::string name, Components comps, const DensityOperator& state) {
  if (comps.empty()) return {std::move(name), std::nullopt};
  return {std::move(name), ConvexDecomposition(std::move(comps), state)};
}

QuantumModel spin_model(const Components& state_mixture, std::vector<std::pair<std::string, Components>> decs) {
  DensityOperator state(mixture_matrix(state_mixture));
  auto pair = spin_z_pair();
  std::vector<NamedDecomposition> named_decs;
  for (auto& [name, comps] : decs) named_decs.push_back(named(name, std::move(comps), state));
  return QuantumModel{std::move(state), std::move(pair.a1), std::move(pair.a2), std::nullopt, std::move(named_decs)};
}

}  // namespace

const std::vector<std::string>& ids() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.push_back(s.id);
    return v;
  }();
  return all;
}

Params default_params(const std::string& id) { return find(id).defaults; }

std::string file_name(const std::string& id) { return find(id).name + ".json"; }

Scenario build(const std::string& id, const Params& overrides) {
  const Spec& spec = find(id);
  Params p = spec.defaults;
  for (const auto& [k, v] : overrides) {
    if (!p.contains(k)) throw Error(ErrorCode::kValidationError, "example '" + id + "' has no parameter '" + k + "'");
    if (!std::isfinite(v)) throw Error(ErrorCode::kValidationError, "parameter '" + k + "' is not finite");
    p[k] = v;
  }

  QuantumModel model = [&]() {
    if (id == "i" || id == "ii") {
      const std::vector<double> w = {p["w1"], p["w2"], p["w3"], p["w4"]};
      require_probability_vector(w, "w1..w4");
      if (id == "i") {
        auto comps = mixture(w, product_basis());
        return spin_model(comps, {{"product", comps}});
      }
      auto comps = mixture(w, bell_basis());
      return spin_model(comps, {{"bell", comps}});
    }
    if (id == "iii" || id == "iii-mixed") {
      // A lone override of a or b fixes the other through a + b = 1/2.
      if (overrides.contains("a") && !overrides.contains("b")) p["b"] = 0.5 - p["a"];
      if (overrides.contains("b") && !overrides.contains("a")) p["a"] = 0.5 - p["b"];
      const double a = p["a"], b = p["b"];
      require_probability_vector({a, a, b, b}, "a, a, b, b");
      const auto prod = product_basis();
      const auto bell = bell_basis();
      auto product_dec = mixture({a, a, b, b}, prod);
      auto bell_dec = mixture({a, a, b, b}, bell);
      auto mixed_dec = mixture({a, a, b, b}, {prod[0], prod[1], bell[2], bell[3]});
      if (id == "iii-mixed") return spin_model(product_dec, {{"mixed", mixed_dec}});
      return spin_model(product_dec,
                        {{"product-basis", product_dec}, {"bell-basis", bell_dec}, {"mixed", mixed_dec}});
    }
    if (id == "appendix") {
      const std::vector<double> w = {p["w1"], p["w2"], p["w3"]};
      require_probability_vector(w, "w1..w3");
      using qubit::bloch;
      const std::vector<PureState> states = {
          qubit::product(bloch(0.3, 0.0), bloch(1.1, 0.4)),
          qubit::product(bloch(2.0, 1.0), bloch(0.7, 2.5)),
          qubit::product(bloch(1.4, -0.8), bloch(2.6, 0.2)),
      };
      auto comps = mixture(w, states);
      return spin_model(comps, {{"product", comps}, {"spectral", {}}});
    }
    // appendix-px
    const double w = p["w"];
    require_probability_vector({w, 1.0 - w}, "w, 1-w");
    auto comps = mixture({w, 1.0 - w}, {qubit::product(qubit::up(), qubit::up()),
                                        qubit::product(qubit::x_up(), qubit::x_up())});
    return spin_model(comps, {{"product", comps}});
  }();

  return Scenario{spec.name, spec.description, std::move(p), std::move(model)};
}

ReportDocument run(const std::string& id, const Params& overrides) { return run_scenario(build(id, overrides)); }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::kValidationError, "parameter '" + item + "' is not of the form key=value");
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      out[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kValidationError, "parameter '" + key + "' has non-numeric value '" + value + "'");
    }
  }
  return out;
}

}  // namespace qcorr::examples
