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

#include <bit>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace pst {

/**
 * An n-qubit Pauli string in the binary symplectic encoding: qubit q carries
 * X iff bit q of x_bits is set, Z iff bit q of z_bits is set, Y iff both.
 *
 * Labels are serialized into flat tables of size 4^n via
 * index = (z_bits << n) | x_bits, which is the layout every transform in
 * this library assumes.
 */
struct PauliLabel {
  std::uint32_t x_bits = 0;
  std::uint32_t z_bits = 0;
  int qubits = 0;

  static constexpr int kMaxQubits = 12;

  PauliLabel() = default;
  PauliLabel(std::uint32_t x, std::uint32_t z, int n);

  static PauliLabel identity(int n) { return PauliLabel(0, 0, n); }
  static PauliLabel from_index(std::uint64_t index, int n);

  std::uint64_t index() const {
    return (static_cast<std::uint64_t>(z_bits) << qubits) | x_bits;
  }
  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  /** "IXYZ" characters, qubit 0 first. */
  std::string to_string() const;

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

/** Number of labels on n qubits. */
inline std::uint64_t label_count(int n) { return std::uint64_t(1) << (2 * n); }

/**
 * Parity of the symplectic form <a, b> = a.x·b.z + a.z·b.x over GF(2).
 * 0 means the dense operators commute, 1 means they anticommute.
 */
int symplectic_product(const PauliLabel& a, const PauliLabel& b);

/** Index-level variant used by inner loops: indices in the (z<<n)|x layout. */
inline int symplectic_product_index(std::uint64_t a, std::uint64_t b, int n) {
  const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
  const std::uint64_t ax = a & mask, az = a >> n;
  const std::uint64_t bx = b & mask, bz = b >> n;
  return static_cast<int>((std::popcount(ax & bz) ^ std::popcount(az & bx)) & 1);
}

/** Number of non-identity tensor factors. */
int pauli_weight(const PauliLabel& a);

/** Number of Y factors; P^T = (-1)^{y_count} P. */
int y_count(const PauliLabel& a);

/** +1 or -1, the sign relating a Pauli string to its transpose. */
int transpose_sign(const PauliLabel& a);

inline int y_count_index(std::uint64_t a, int n) {
  const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
  return std::popcount((a & mask) & (a >> n));
}

/**
 * Dense 2^n x 2^n matrix of the Pauli string, qubit 0 on the least
 * significant index bit. Per-qubit factors are the textbook I, X, Y, Z;
 * the composite carries no extra global phase.
 */
Eigen::MatrixXcd dense_pauli(const PauliLabel& a);

/**
 * tr(P·m) for a single label, in O(2^n) via the generalized diagonal
 * m(r ^ x, r). Returns the full complex trace; callers that know m is
 * Hermitian read the real part.
 */
std::complex<double> pauli_trace(const Eigen::MatrixXcd& m, const PauliLabel& a);

/** m += coeff * P without materializing the dense Pauli. */
void add_pauli(Eigen::MatrixXcd& m, const PauliLabel& a, double coeff);

}  // namespace pst
