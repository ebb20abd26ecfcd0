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

#include "pst/states.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "pst/errors.hpp"
#include "pst/rng.hpp"

namespace pst {

std::string to_string(StateFamily family) {
  switch (family) {
    case StateFamily::GHZ:
      return "GHZ";
    case StateFamily::Zero:
      return "Zero";
    case StateFamily::Gibbs:
      return "Gibbs";
  }
  return "?";
}

StateFamily state_family_from_string(const std::string& name) {
  if (name == "GHZ" || name == "ghz") return StateFamily::GHZ;
  if (name == "Zero" || name == "zero") return StateFamily::Zero;
  if (name == "Gibbs" || name == "gibbs") return StateFamily::Gibbs;
  throw usage_error("unknown state family '" + name + "'");
}

DensityOperator make_stabilizer_state(StateFamily family, int qubits) {
  if (qubits < 2 || qubits > PauliLabel::kMaxQubits) {
    throw usage_error("stabilizer test states require 2 <= n <= 12");
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t(1) << qubits);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  switch (family) {
    case StateFamily::Zero:
      psi(0) = 1.0;
      break;
    case StateFamily::GHZ:
      psi(0) = 1.0 / std::sqrt(2.0);
      psi(dim - 1) = 1.0 / std::sqrt(2.0);
      break;
    case StateFamily::Gibbs:
      throw usage_error("Gibbs is not a stabilizer family");
  }
  return DensityOperator::pure(psi, qubits);
}

std::vector<std::uint64_t> k_grid_with_max(std::uint64_t k_max, int m) {
  if (k_max < 1 || m < 1) throw usage_error("k_grid requires k_max, m >= 1");
  std::vector<std::uint64_t> grid;
  grid.reserve(static_cast<std::size_t>(m));
  const double log_kmax = std::log(static_cast<double>(k_max));
  for (int j = 1; j <= m; ++j) {
    const double v = std::exp(log_kmax * static_cast<double>(j) /
                              static_cast<double>(m));
    auto k = static_cast<std::uint64_t>(std::floor(v));
    // floor can land one off the exact power at j = m; clamp to the range
    k = std::clamp<std::uint64_t>(k, 1, k_max);
    grid.push_back(k);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<std::uint64_t> k_grid(int qubits, int m) {
  std::uint64_t k_max = 0;
  if (qubits >= 2 && qubits <= 4) {
    k_max = std::uint64_t(1) << (2 * qubits - 1);
  } else if (qubits >= 5 && qubits <= 7) {
    k_max = std::uint64_t(1) << (qubits + 3);
  } else {
    throw usage_error("k_grid has preset k_max only for n in {2..7}; use "
                      "k_grid_with_max");
  }
  return k_grid_with_max(k_max, m);
}

PauliHamiltonian sample_pauli_hamiltonian(int qubits, std::uint64_t k,
                                          std::uint64_t seed,
                                          bool allow_identity) {
  const std::uint64_t pool = label_count(qubits) - (allow_identity ? 0 : 1);
  if (k < 1 || k > pool) {
    throw usage_error("term count k=" + std::to_string(k) +
                      " out of range for n=" + std::to_string(qubits));
  }
  auto rng = make_rng(seed);
  // Floyd's k-subset sampling: uniform over subsets, O(k) memory.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k) * 2);
  for (std::uint64_t j = pool - k; j < pool; ++j) {
    const std::uint64_t t = uniform_index(rng, j + 1);
    chosen.insert(chosen.contains(t) ? j : t);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());
  PauliHamiltonian h;
  h.qubits = qubits;
  h.terms.reserve(indices.size());
  const std::uint64_t offset = allow_identity ? 0 : 1;
  for (std::uint64_t idx : indices) {
    h.terms.emplace_back(PauliLabel::from_index(idx + offset, qubits), 1.0);
  }
  return h;
}

Eigen::MatrixXcd dense_hamiltonian(const PauliHamiltonian& h) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t(1) << h.qubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [label, coeff] : h.terms) add_pauli(m, label, coeff);
  return m;
}

DensityOperator gibbs_state(const Eigen::MatrixXcd& hamiltonian, double beta) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw usage_error("Hamiltonian must be square");
  }
  const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
  if (hermiticity_defect(hamiltonian) > 1e-10 * scale) {
    throw validation_error("Gibbs map requires a Hermitian Hamiltonian");
  }
  const auto dim = hamiltonian.rows();
  int qubits = 0;
  while ((Eigen::Index(1) << qubits) < dim) ++qubits;
  if ((Eigen::Index(1) << qubits) != dim) {
    throw usage_error("Hamiltonian dimension is not a power of 2");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian);
  if (es.info() != Eigen::Success) {
    throw validation_error("Hermitian eigendecomposition did not converge");
  }
  // Shift the largest exponent to zero before exponentiating.
  Eigen::VectorXd exponents = -beta * es.eigenvalues().array();
  const double shift = exponents.maxCoeff();
  Eigen::VectorXd weights = (exponents.array() - shift).exp();
  const double z = weights.sum();
  Eigen::MatrixXcd sigma = es.eigenvectors() *
                           (weights / z).asDiagonal() *
                           es.eigenvectors().adjoint();
  // Symmetrize away the last bits of round-off.
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  return DensityOperator(std::move(sigma), qubits);
}

DensityOperator gibbs_state(const PauliHamiltonian& hamiltonian, double beta) {
  return gibbs_state(dense_hamiltonian(hamiltonian), beta);
}

TestState make_test_state(const TestStateSpec& spec) {
  TestState out;
  switch (spec.family) {
    case StateFamily::GHZ:
    case StateFamily::Zero:
      out.rho = make_stabilizer_state(spec.family, spec.qubits);
      return out;
    case StateFamily::Gibbs:
      break;
  }
  out.hamiltonian = sample_pauli_hamiltonian(spec.qubits, spec.k, spec.seed);
  Eigen::MatrixXcd h = dense_hamiltonian(out.hamiltonian);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw validation_error("spectral norm computation did not converge");
  }
  const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  if (norm <= 0.0) {
    out.rho = DensityOperator::maximally_mixed(spec.qubits);
    out.degenerate = true;
    return out;
  }
  out.rho = gibbs_state(Eigen::MatrixXcd(h / norm), 1.0);
  return out;
}

}  // namespace pst
