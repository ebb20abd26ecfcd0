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

#include "pst/pauli.hpp"

#include <bit>

#include "pst/errors.hpp"

namespace pst {

namespace {

void check_same_qubits(const PauliLabel& a, const PauliLabel& b) {
  if (a.qubits != b.qubits) {
    throw usage_error("Pauli labels act on different qubit counts: " +
                      std::to_string(a.qubits) + " vs " +
                      std::to_string(b.qubits));
  }
}

// i^k for k in {0,1,2,3}
constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

PauliLabel::PauliLabel(std::uint32_t x, std::uint32_t z, int n)
    : x_bits(x), z_bits(z), qubits(n) {
  if (n < 1 || n > kMaxQubits) {
    throw usage_error("qubit count " + std::to_string(n) +
                      " outside supported range [1, " +
                      std::to_string(kMaxQubits) + "]");
  }
  const std::uint32_t mask = (std::uint32_t(1) << n) - 1;
  if ((x & ~mask) != 0 || (z & ~mask) != 0) {
    throw usage_error("Pauli label bits exceed " + std::to_string(n) +
                      " qubits");
  }
}

PauliLabel PauliLabel::from_index(std::uint64_t index, int n) {
  if (index >= label_count(n)) {
    throw usage_error("label index " + std::to_string(index) +
                      " out of range for n=" + std::to_string(n));
  }
  const std::uint32_t mask = (std::uint32_t(1) << n) - 1;
  return PauliLabel(static_cast<std::uint32_t>(index) & mask,
                    static_cast<std::uint32_t>(index >> n) & mask, n);
}

std::string PauliLabel::to_string() const {
  static constexpr char kKind[4] = {'I', 'X', 'Z', 'Y'};  // indexed by (z<<1)|x
  std::string s(static_cast<std::size_t>(qubits), 'I');
  for (int q = 0; q < qubits; ++q) {
    const int x = (x_bits >> q) & 1;
    const int z = (z_bits >> q) & 1;
    s[static_cast<std::size_t>(q)] = kKind[(z << 1) | x];
  }
  return s;
}

int symplectic_product(const PauliLabel& a, const PauliLabel& b) {
  check_same_qubits(a, b);
  return (std::popcount(a.x_bits & b.z_bits) ^
          std::popcount(a.z_bits & b.x_bits)) &
         1;
}

int pauli_weight(const PauliLabel& a) {
  return std::popcount(a.x_bits | a.z_bits);
}

int y_count(const PauliLabel& a) { return std::popcount(a.x_bits & a.z_bits); }

int transpose_sign(const PauliLabel& a) { return (y_count(a) & 1) ? -1 : 1; }

Eigen::MatrixXcd dense_pauli(const PauliLabel& a) {
  if (a.qubits > PauliLabel::kMaxQubits) {
    throw resource_error("dense Pauli for n=" + std::to_string(a.qubits) +
                         " exceeds the supported size");
  }
  const std::uint64_t dim = std::uint64_t(1) << a.qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  // Entry (r, r^x) = (-1)^{|z & r|} (-i)^{|x & z|}; everything else vanishes.
  const std::complex<double> base = kIPow[(4 - (y_count(a) & 3)) & 3];
  for (std::uint64_t r = 0; r < dim; ++r) {
    const double sign = (std::popcount(a.z_bits & r) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(r),
      static_cast<Eigen::Index>(r ^ a.x_bits)) = sign * base;
  }
  return m;
}

std::complex<double> pauli_trace(const Eigen::MatrixXcd& m,
                                 const PauliLabel& a) {
  const std::uint64_t dim = std::uint64_t(1) << a.qubits;
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows()) {
    throw usage_error("matrix dimension does not match the Pauli label");
  }
  const std::complex<double> base = kIPow[(4 - (y_count(a) & 3)) & 3];
  std::complex<double> acc = 0.0;
  for (std::uint64_t r = 0; r < dim; ++r) {
    const double sign = (std::popcount(a.z_bits & r) & 1) ? -1.0 : 1.0;
    acc += sign * m(static_cast<Eigen::Index>(r ^ a.x_bits),
                    static_cast<Eigen::Index>(r));
  }
  return base * acc;
}

void add_pauli(Eigen::MatrixXcd& m, const PauliLabel& a, double coeff) {
  const std::uint64_t dim = std::uint64_t(1) << a.qubits;
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows()) {
    throw usage_error("matrix dimension does not match the Pauli label");
  }
  const std::complex<double> base = coeff * kIPow[(4 - (y_count(a) & 3)) & 3];
  for (std::uint64_t r = 0; r < dim; ++r) {
    const double sign = (std::popcount(a.z_bits & r) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ a.x_bits)) +=
        sign * base;
  }
}

}  // namespace pst
