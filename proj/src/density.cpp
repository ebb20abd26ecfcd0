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

#include "pst/density.hpp"

#include <Eigen/Eigenvalues>

#include "pst/errors.hpp"

namespace pst {

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix, int qubits)
    : matrix_(std::move(matrix)), qubits_(qubits) {
  if (qubits < 1 || qubits > PauliLabel::kMaxQubits) {
    throw usage_error("qubit count " + std::to_string(qubits) +
                      " outside supported range");
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t(1) << qubits);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw usage_error("matrix dimension does not match 2^n for n=" +
                      std::to_string(qubits));
  }
}

DensityOperator DensityOperator::maximally_mixed(int qubits) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t(1) << qubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) /
                       static_cast<double>(dim);
  return DensityOperator(std::move(m), qubits);
}

DensityOperator DensityOperator::pure(const Eigen::VectorXcd& psi, int qubits) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t(1) << qubits);
  if (psi.size() != dim) {
    throw usage_error("state vector dimension does not match 2^n");
  }
  const double norm = psi.norm();
  if (norm <= 0.0) throw usage_error("cannot project onto the zero vector");
  Eigen::VectorXcd unit = psi / norm;
  return DensityOperator(unit * unit.adjoint(), qubits);
}

double DensityOperator::expectation(const PauliLabel& p) const {
  if (p.qubits != qubits_) {
    throw usage_error("Pauli label qubit count does not match the state");
  }
  return pauli_trace(matrix_, p).real();
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void DensityOperator::validate() const {
  constexpr double kTol = 1e-10;
  if (hermiticity_defect(matrix_) > kTol) {
    throw validation_error("density operator is not Hermitian to 1e-10");
  }
  const double trace_err = std::abs(matrix_.trace() - std::complex<double>(1.0));
  if (trace_err > kTol) {
    throw validation_error("density operator trace deviates from 1 by " +
                           std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw validation_error("eigenvalue check did not converge");
  }
  if (es.eigenvalues().minCoeff() < -kTol) {
    throw validation_error("density operator has eigenvalue below -1e-10");
  }
}

}  // namespace pst
