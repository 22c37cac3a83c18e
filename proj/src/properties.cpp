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

#include "qcorr/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "qcorr/correlation.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr::properties {

namespace {

Rng stream(std::uint64_t seed, std::uint64_t suite) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite)};
  return Rng(seq);
}

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ComplexVector gaussian_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> n01;
  ComplexVector v(dim);
  for (auto& z : v) z = {n01(rng), n01(rng)};
  return v;
}

// Runs `trial` `trials` times, tracking the worst deviation and the first
// failure. Engine errors inside a trial count as failures.
SuiteResult run_suite(std::string name, double bound, int trials, const std::function<double(int)>& trial) {
  SuiteResult r{std::move(name), trials, 0.0, bound, {}};
  for (int t = 0; t < trials; ++t) {
    try {
      const double dev = trial(t);
      r.worst = std::max(r.worst, dev);
      if (!(dev < bound) && r.failure.empty()) {
        std::ostringstream os;
        os << "trial " << t << ": deviation " << dev;
        r.failure = os.str();
      }
    } catch (const Error& e) {
      if (r.failure.empty()) r.failure = "trial " + std::to_string(t) + ": " + e.what();
    }
  }
  return r;
}

double deviation_from_one(const DensityFunction& rho) {
  double m = 0.0;
  for (const auto& v : rho.values())
    if (v) m = std::max(m, std::abs(*v - 1.0));
  return m;
}

}  // namespace

PureState random_pure_state(std::size_t dim, Rng& rng) { return PureState::normalized(gaussian_vector(dim, rng)); }

std::vector<double> random_weights(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (auto& x : w) s += (x = e(rng) + 1e-3);
  for (auto& x : w) x /= s;
  return w;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  std::vector<ComplexVector> cols;
  while (cols.size() < dim) {
    auto v = gaussian_vector(dim, rng);
    for (const auto& c : cols) {
      const Complex p = inner(c, v);
      for (std::size_t k = 0; k < dim; ++k) v[k] -= p * c[k];
    }
    const double n = norm(v);
    if (n < 1e-8) continue;
    for (auto& z : v) z /= n;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
  return u;
}

ConvexDecomposition random_mixture(std::size_t dim, std::size_t terms, Rng& rng) {
  const auto w = random_weights(terms, rng);
  std::vector<ConvexDecomposition::Component> comps;
  for (double x : w) comps.push_back({x, random_pure_state(dim, rng)});
  return ConvexDecomposition::of_mixture(std::move(comps));
}

ConvexDecomposition remix(const ConvexDecomposition& dec, std::size_t out_terms, Rng& rng) {
  const std::size_t n = dec.size();
  const std::size_t dim = dec.target().dim();
  out_terms = std::max(out_terms, n);
  const ComplexMatrix u = random_unitary(out_terms, rng);
  std::vector<ConvexDecomposition::Component> comps;
  for (std::size_t j = 0; j < out_terms; ++j) {
    ComplexVector phi(dim);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = dec.components()[i];
      const Complex coeff = u(j, i) * std::sqrt(c.weight);
      for (std::size_t k = 0; k < dim; ++k) phi[k] += coeff * c.state.vector()[k];
    }
    const double p = std::pow(norm(phi), 2);
    if (p < 1e-14) continue;
    comps.push_back({p, PureState::normalized(std::move(phi))});
  }
  double total = 0.0;
  for (const auto& c : comps) total += c.weight;
  for (auto& c : comps) c.weight /= total;
  return ConvexDecomposition(std::move(comps), dec.target());
}

Povm random_local_qubit_pvm(Side side, Rng& rng) {
  const ComplexMatrix u = random_unitary(2, rng);
  const auto id = ComplexMatrix::identity(2);
  std::vector<ComplexMatrix> effects;
  for (std::size_t k = 0; k < 2; ++k) {
    const ComplexVector col = {u(0, k), u(1, k)};
    const auto p = ComplexMatrix::outer(col, col);
    effects.push_back(side == Side::kLeft ? tensor(p, id) : tensor(id, p));
  }
  return Povm(spin_half_space(), std::move(effects));
}

classical::ClassicalObservable random_fuzzy_observable(const classical::PhaseSpace& omega,
                                                       const OutcomeSpace& outcomes, Rng& rng) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < omega.size(); ++k) rows.push_back(random_weights(outcomes.size(), rng));
  return classical::ClassicalObservable::from_rows(omega, outcomes, rows);
}

classical::ClassicalJoint random_consistent_joint(const classical::ClassicalObservable& a1,
                                                  const classical::ClassicalObservable& a2, Rng& rng) {
  const auto base = classical::classical_joint(a1, a2);
  const auto& space = base.codomain();
  const std::size_t n1 = a1.codomain().size(), n2 = a2.codomain().size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> rows;
  for (const auto& row : base.rows()) {
    auto w = row.weights();
    // A ±c pattern on a 2x2 sub-grid leaves both marginals unchanged.
    const std::size_t x1 = uniform_int(rng, 0, n1 - 1), y1 = uniform_int(rng, 0, n2 - 1);
    std::size_t x2 = uniform_int(rng, 0, n1 - 2), y2 = uniform_int(rng, 0, n2 - 2);
    if (x2 >= x1) ++x2;
    if (y2 >= y1) ++y2;
    const std::size_t p11 = space.point_index(x1, y1), p22 = space.point_index(x2, y2);
    const std::size_t p12 = space.point_index(x1, y2), p21 = space.point_index(x2, y1);
    const double up = std::min(w[p12], w[p21]);
    const double down = std::min(w[p11], w[p22]);
    const double c = 0.9 * (unit(rng) * (up + down) - down);
    w[p11] += c;
    w[p22] += c;
    w[p12] -= c;
    w[p21] -= c;
    rows.push_back(std::move(w));
  }
  return classical::ClassicalObservable::from_rows(base.domain(), space, rows);
}

SuiteResult quantum_product_rule(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 1);
  return run_suite("quantum product rule |rho_c*rho_e - rho_t|", kProductRuleTol, trials, [&](int) {
    const Povm a1 = random_local_qubit_pvm(Side::kLeft, rng);
    const Povm a2 = random_local_qubit_pvm(Side::kRight, rng);
    const Povm j = joint_from_commuting(a1, a2);
    const auto dec = random_mixture(4, uniform_int(rng, 1, 6), rng);
    const auto rep = correlation_report(j, a1, a2, dec);
    if (!rep.split.product_rule_residual) throw Error(ErrorCode::kAbsoluteContinuityViolation, "a factor is missing");
    return *rep.split.product_rule_residual;
  });
}

SuiteResult classical_product_rule(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 2);
  return run_suite("classical product rule |rho_c*rho_e - rho_t|", kProductRuleTol, trials, [&](int t) {
    std::vector<std::string> points, xs, ys;
    for (std::size_t k = 0, n = uniform_int(rng, 1, 4); k < n; ++k) points.push_back("w" + std::to_string(k));
    for (std::size_t k = 0, n = uniform_int(rng, 2, 3); k < n; ++k) xs.push_back("x" + std::to_string(k));
    for (std::size_t k = 0, n = uniform_int(rng, 2, 3); k < n; ++k) ys.push_back("y" + std::to_string(k));
    const classical::PhaseSpace omega(points);
    const auto a1 = random_fuzzy_observable(omega, OutcomeSpace(xs), rng);
    const auto a2 = random_fuzzy_observable(omega, OutcomeSpace(ys), rng);
    const auto jo = random_consistent_joint(a1, a2, rng);
    if (!classical::marginally_consistent(jo, a1, a2))
      throw Error(ErrorCode::kValidationError, "generated joint is not marginally consistent");
    // Every fourth trial sits at a Dirac state.
    const auto mu = t % 4 == 0 ? dirac(omega, points[uniform_int(rng, 0, points.size() - 1)])
                               : DiscreteMeasure(omega, random_weights(points.size(), rng));
    const auto split = classical::classical_split(jo, a1, a2, mu);
    if (!split.product_rule_residual) throw Error(ErrorCode::kAbsoluteContinuityViolation, "a factor is missing");
    return *split.product_rule_residual;
  });
}

SuiteResult total_correlation_invariance(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 3);
  return run_suite("rho_t invariance across decompositions", kProductRuleTol, trials, [&](int t) {
    const auto spin = spin_z_pair();
    const auto first = random_mixture(4, uniform_int(rng, 2, 6), rng);
    // Alternate between a unitary remix and the spectral decomposition.
    const auto second = t % 2 == 0 ? remix(first, first.size() + uniform_int(rng, 0, 3), rng)
                                   : spectral_decompose(first.target());
    // Each side rebuilds D from its own components.
    const auto d1 = ConvexDecomposition::of_mixture(first.components());
    const auto d2 = ConvexDecomposition::of_mixture(second.components());
    const auto r1 = total_correlation(spin.joint, spin.a1, spin.a2, d1.target());
    const auto r2 = total_correlation(spin.joint, spin.a1, spin.a2, d2.target());
    if (r1.support() != r2.support()) throw Error(ErrorCode::kValidationError, "supports differ");
    return r1.max_abs_diff(r2);
  });
}

SuiteResult separable_no_entanglement(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 4);
  return run_suite("separable states: |rho_e - 1| under product decomposition", kProductRuleTol, trials, [&](int) {
    const auto spin = spin_z_pair();
    const std::size_t n = uniform_int(rng, 1, 8);
    const auto w = random_weights(n, rng);
    std::vector<ConvexDecomposition::Component> comps;
    for (double x : w) comps.push_back({x, tensor(random_pure_state(2, rng), random_pure_state(2, rng))});
    const auto dec = ConvexDecomposition::of_mixture(std::move(comps));
    return deviation_from_one(entanglement(spin.joint, spin.a1, spin.a2, dec));
  });
}

SuiteResult marginal_consistency(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 5);
  return run_suite("marginal(J(D)) = A_i(D)", kEps, trials, [&](int) {
    const Povm a1 = random_local_qubit_pvm(Side::kLeft, rng);
    const Povm a2 = random_local_qubit_pvm(Side::kRight, rng);
    const Povm j = joint_from_commuting(a1, a2);
    const DensityOperator d = random_mixture(4, uniform_int(rng, 1, 6), rng).target();
    const auto joint_measure = outcome_measure(j, d);
    double dev = 0.0;
    dev = std::max(dev, marginal(joint_measure, Side::kLeft).max_abs_diff(outcome_measure(a1, d)));
    dev = std::max(dev, marginal(joint_measure, Side::kRight).max_abs_diff(outcome_measure(a2, d)));
    dev = std::max(dev, outcome_measure(marginal_observable(j, Side::kLeft), d).max_abs_diff(outcome_measure(a1, d)));
    return dev;
  });
}

SuiteResult classical_dirac_no_correlation(std::uint64_t seed, int trials) {
  Rng rng = stream(seed, 6);
  return run_suite("classical frame: rho_c = 1 at Dirac states", kEps, trials, [&](int) {
    std::vector<std::string> points;
    for (std::size_t k = 0, n = uniform_int(rng, 1, 5); k < n; ++k) points.push_back("w" + std::to_string(k));
    const classical::PhaseSpace omega(points);
    const auto a1 = random_fuzzy_observable(omega, OutcomeSpace({"x0", "x1", "x2"}), rng);
    const auto a2 = random_fuzzy_observable(omega, OutcomeSpace({"y0", "y1"}), rng);
    const auto mu = dirac(omega, points[uniform_int(rng, 0, points.size() - 1)]);
    return deviation_from_one(classical::classical_rho_c(a1, a2, mu));
  });
}

std::vector<SuiteResult> run_all(std::uint64_t seed, int trials) {
  using Suite = SuiteResult (*)(std::uint64_t, int);
  const Suite suites[] = {quantum_product_rule,      classical_product_rule, total_correlation_invariance,
                          separable_no_entanglement, marginal_consistency,   classical_dirac_no_correlation};
  std::vector<std::future<SuiteResult>> running;
  for (Suite s : suites) running.push_back(std::async(std::launch::async, s, seed, trials));
  std::vector<SuiteResult> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace qcorr::properties
