// Copyright 2026 The pst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pst/density.hpp"
#include "pst/pauli.hpp"

namespace pst {

enum class StateFamily { GHZ, Zero, Gibbs };

std::string to_string(StateFamily family);
StateFamily state_family_from_string(const std::string& name);

/** Sum of Pauli terms with real coefficients; labels are distinct. */
struct PauliHamiltonian {
  std::vector<std::pair<PauliLabel, double>> terms;
  int qubits = 0;
};

struct TestStateSpec {
  StateFamily family = StateFamily::Gibbs;
  int qubits = 0;
  std::uint64_t k = 0;  // Gibbs term count; ignored for stabilizer families
  std::uint64_t seed = 0;
};

/** GHZ (|0..0> + |1..1>)/sqrt(2) or the computational zero state, as a
 *  rank-1 density operator. Requires 2 <= n <= 12. */
DensityOperator make_stabilizer_state(StateFamily family, int qubits);

/**
 * The benchmark grid of Hamiltonian term counts: floor(k_max^{j/m}) for
 * j = 1..m, deduplicated and ascending, with k_max = 2^{2n-1} for
 * n in {2,3,4} and 2^{n+3} for n in {5,6,7}. Other n require the explicit
 * k_max overload.
 */
std::vector<std::uint64_t> k_grid(int qubits, int m = 100);
std::vector<std::uint64_t> k_grid_with_max(std::uint64_t k_max, int m);

/**
 * k distinct labels drawn uniformly without replacement from all 4^n,
 * each with coefficient 1; deterministic in the seed. Terms are returned
 * in ascending label-index order. The identity label is eligible unless
 * allow_identity is false.
 */
PauliHamiltonian sample_pauli_hamiltonian(int qubits, std::uint64_t k,
                                          std::uint64_t seed,
                                          bool allow_identity = true);

Eigen::MatrixXcd dense_hamiltonian(const PauliHamiltonian& h);

/**
 * exp(-beta H)/tr(exp(-beta H)) through a Hermitian eigendecomposition,
 * with the largest exponent shifted out before exponentiation so large
 * ||H|| cannot overflow. Throws validation_error for non-Hermitian input
 * or eigensolver failure.
 */
DensityOperator gibbs_state(const Eigen::MatrixXcd& hamiltonian, double beta);
DensityOperator gibbs_state(const PauliHamiltonian& hamiltonian, double beta);

struct TestState {
  DensityOperator rho;
  PauliHamiltonian hamiltonian;  // empty for stabilizer families
  /** Set when ||H|| = 0 forced the maximally mixed fallback. */
  bool degenerate = false;
};

/**
 * Generate a benchmark state. Gibbs instances are exp(-H/||H||)/Z with
 * H a sum of k uniformly sampled distinct Pauli terms and ||H|| the
 * spectral norm (unit inverse temperature after normalization).
 */
TestState make_test_state(const TestStateSpec& spec);

}  // namespace pst
