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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pst/pauli.hpp"

namespace pst {

/**
 * Real coefficient table r_a = tr(P_a rho) over all 4^n labels, indexed by
 * PauliLabel::index(). For a density operator the identity entry is 1 and
 * every entry lies in [-1, 1].
 */
struct PauliVector {
  std::vector<double> coeffs;
  int qubits = 0;

  PauliVector() = default;
  PauliVector(int n, double fill = 0.0)
      : coeffs(label_count(n), fill), qubits(n) {}

  double operator[](std::uint64_t index) const { return coeffs[index]; }
  double& operator[](std::uint64_t index) { return coeffs[index]; }
  std::uint64_t size() const { return coeffs.size(); }
};

/**
 * Dense 2^n x 2^n Hermitian PSD unit-trace matrix. Construction checks the
 * dimension only; validate() runs the full (eigenvalue) check and is the
 * gate every generated state must pass.
 */
class DensityOperator {
 public:
  DensityOperator() = default;
  DensityOperator(Eigen::MatrixXcd matrix, int qubits);

  static DensityOperator maximally_mixed(int qubits);
  /** Rank-1 projector onto a (normalized) state vector. */
  static DensityOperator pure(const Eigen::VectorXcd& psi, int qubits);

  int qubits() const { return qubits_; }
  std::uint64_t dim() const { return std::uint64_t(1) << qubits_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }

  /** tr(P rho); exact up to the real-part extraction tolerance. */
  double expectation(const PauliLabel& p) const;

  /**
   * Hermitian to 1e-10, eigenvalues >= -1e-10, trace = 1 +- 1e-10.
   * Throws validation_error on the first failed check.
   */
  void validate() const;

 private:
  Eigen::MatrixXcd matrix_;
  int qubits_ = 0;
};

/** max_ij |m - m^dagger|; cheap hermiticity measure. */
double hermiticity_defect(const Eigen::MatrixXcd& m);

}  // namespace pst
