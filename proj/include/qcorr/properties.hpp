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

// Seeded randomized property suites behind `qcorr selftest`. Each suite
// returns the worst deviation it saw so reports can show the margin.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcorr/classical_frame.hpp"
#include "qcorr/hilbert.hpp"
#include "qcorr/observable.hpp"

namespace qcorr::properties {

using Rng = std::mt19937_64;

struct SuiteResult {
  std::string name;
  int trials = 0;
  double worst = 0.0;  // largest observed deviation
  double bound = 0.0;  // pass iff worst < bound
  std::string failure; // first failing trial, if any

  bool passed() const { return failure.empty() && worst < bound; }
};

// Random objects. States are Haar-like (normalized complex Gaussians).
PureState random_pure_state(std::size_t dim, Rng& rng);
std::vector<double> random_weights(std::size_t n, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// Random mixture of `terms` random pure states.
ConvexDecomposition random_mixture(std::size_t dim, std::size_t terms, Rng& rng);
/// A second decomposition of the same state: components
/// sqrt(p_j) phi_j = Σ_i U_ji sqrt(w_i) psi_i for a random unitary U of size
/// `out_terms` >= dec.size().
ConvexDecomposition remix(const ConvexDecomposition& dec, std::size_t out_terms, Rng& rng);
/// PVM of a random orthonormal qubit basis, embedded on the left or right
/// factor of two qubits. Labels "+1/2", "-1/2".
Povm random_local_qubit_pvm(Side side, Rng& rng);
classical::ClassicalObservable random_fuzzy_observable(const classical::PhaseSpace& omega,
                                                       const OutcomeSpace& outcomes, Rng& rng);
/// A joint kernel whose rows have the same marginals as a1, a2 but are
/// perturbed away from the product rows.
classical::ClassicalJoint random_consistent_joint(const classical::ClassicalObservable& a1,
                                                  const classical::ClassicalObservable& a2, Rng& rng);

SuiteResult quantum_product_rule(std::uint64_t seed, int trials);
SuiteResult classical_product_rule(std::uint64_t seed, int trials);
SuiteResult total_correlation_invariance(std::uint64_t seed, int trials);
SuiteResult separable_no_entanglement(std::uint64_t seed, int trials);
SuiteResult marginal_consistency(std::uint64_t seed, int trials);
SuiteResult classical_dirac_no_correlation(std::uint64_t seed, int trials);

/// All suites, run concurrently; each suite draws from its own seeded stream.
std::vector<SuiteResult> run_all(std::uint64_t seed, int trials);

}  // namespace qcorr::properties
