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
#include <span>
#include <vector>

#include "pst/density.hpp"
#include "pst/pauli.hpp"

namespace pst {

/**
 * In-place symplectic Walsh transform on a length-4^n table in the
 * (z<<n)|x index layout:
 *
 *   out[a] = sum_b (-1)^{<a,b>} v[b]
 *
 * where <a,b> is the symplectic product. The symplectic form is full rank
 * over GF(2), so this is a Walsh-Hadamard transform with the x/z index
 * halves cross-paired; it runs as n radix-4 butterfly passes in O(4^n n).
 * Applying it twice multiplies the input by 4^n.
 *
 * OpenMP-parallel for large tables; butterflies write disjoint elements,
 * so results are bit-identical for any thread count.
 */
void symplectic_walsh_inplace(std::span<double> v, int qubits);

std::vector<double> symplectic_walsh(std::span<const double> v, int qubits);

/** Plain Walsh-Hadamard transform over 2^k complex entries, in place. */
void walsh_hadamard_inplace(std::span<std::complex<double>> v);

/**
 * Full Pauli coefficient table of a dense Hermitian matrix in O(4^n n):
 * coeffs[(z<<n)|x] = tr(P_{x,z} m). Imaginary residue (below 1e-10 for any
 * Hermitian input) is discarded. Throws validation_error when the input is
 * not Hermitian to 1e-10.
 */
PauliVector to_pauli_vector(const DensityOperator& rho);

/** Same kernel for matrices that are not density operators (e.g. H). */
PauliVector pauli_decompose(const Eigen::MatrixXcd& m, int qubits);

/**
 * Inverse map: m = 2^{-n} sum_a coeffs[a] P_a, also O(4^n n).
 * Requires coeffs[identity] = 1 to 1e-9 (unit trace).
 */
DensityOperator from_pauli_vector(const PauliVector& v);

}  // namespace pst
