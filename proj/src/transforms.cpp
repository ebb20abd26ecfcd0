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

#include "pst/transforms.hpp"

#include <bit>
#include <cmath>

#include "pst/errors.hpp"

namespace pst {

namespace {

// Tables at or above this size get an OpenMP team per butterfly pass.
constexpr std::size_t kParallelThreshold = std::size_t(1) << 14;

// i^k
constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int qubits_from_table(std::size_t len) {
  if (len == 0 || (len & (len - 1)) != 0 ||
      (std::countr_zero(len) & 1) != 0) {
    throw usage_error("table length " + std::to_string(len) +
                      " is not a power of 4");
  }
  return std::countr_zero(len) / 2;
}

// Index with bits q and q+n inserted as zeros, from a compact 4^n/4 index.
inline std::size_t expand_pair(std::size_t t, std::size_t mx, std::size_t mz,
                               int shift_hi) {
  const std::size_t lo = t & (mx - 1);
  const std::size_t mid = t & ((mz >> 1) - mx);
  const std::size_t hi = t >> shift_hi;
  return lo | (mid << 1) | (hi << (shift_hi + 2));
}

}  // namespace

void symplectic_walsh_inplace(std::span<double> v, int qubits) {
  const std::size_t len = v.size();
  if (qubits_from_table(len) != qubits) {
    throw usage_error("table length does not match qubit count");
  }
  double* data = v.data();
  const std::size_t quarter = len >> 2;
  for (int q = 0; q < qubits; ++q) {
    const std::size_t mx = std::size_t(1) << q;
    const std::size_t mz = std::size_t(1) << (q + qubits);
    const int shift_hi = q + qubits - 1;
    // Radix-4 kernel over the (x_q, z_q) bit pair. The output bit roles are
    // crossed relative to a plain two-bit Hadamard: x couples to z.
#pragma omp parallel for schedule(static) if (len >= kParallelThreshold)
    for (std::size_t t = 0; t < quarter; ++t) {
      const std::size_t c = expand_pair(t, mx, mz, shift_hi);
      const double v00 = data[c];
      const double v10 = data[c | mx];
      const double v01 = data[c | mz];
      const double v11 = data[c | mx | mz];
      data[c] = v00 + v10 + v01 + v11;
      data[c | mx] = v00 + v10 - v01 - v11;
      data[c | mz] = v00 - v10 + v01 - v11;
      data[c | mx | mz] = v00 - v10 - v01 + v11;
    }
  }
}

std::vector<double> symplectic_walsh(std::span<const double> v, int qubits) {
  std::vector<double> out(v.begin(), v.end());
  symplectic_walsh_inplace(out, qubits);
  return out;
}

void walsh_hadamard_inplace(std::span<std::complex<double>> v) {
  const std::size_t len = v.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw usage_error("Walsh-Hadamard input length must be a power of 2");
  }
  std::complex<double>* data = v.data();
  for (std::size_t mb = 1; mb < len; mb <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * mb) {
      for (std::size_t i = base; i < base + mb; ++i) {
        const std::complex<double> a = data[i];
        const std::complex<double> b = data[i | mb];
        data[i] = a + b;
        data[i | mb] = a - b;
      }
    }
  }
}

namespace detail {

// coeffs[(z<<n)|x] = tr(P_{x,z} m), no structural checks.
//
// tr(P_{x,z} m) = (-i)^{|x&z|} sum_r (-1)^{|z&r|} m(r^x, r): for each x the
// z-sweep is a Walsh-Hadamard transform of the generalized diagonal, giving
// O(4^n n) overall instead of O(8^n) per-label traces.
PauliVector pauli_table(const Eigen::MatrixXcd& m, int qubits) {
  const std::size_t dim = std::size_t(1) << qubits;
  PauliVector out(qubits);
#pragma omp parallel if (dim * dim >= kParallelThreshold)
  {
    std::vector<std::complex<double>> diag(dim);
#pragma omp for schedule(static)
    for (std::size_t x = 0; x < dim; ++x) {
      for (std::size_t r = 0; r < dim; ++r) {
        diag[r] = m(static_cast<Eigen::Index>(r ^ x),
                    static_cast<Eigen::Index>(r));
      }
      walsh_hadamard_inplace(diag);
      for (std::size_t z = 0; z < dim; ++z) {
        const int y = std::popcount(x & z) & 3;
        const std::complex<double> val = kIPow[(4 - y) & 3] * diag[z];
        out.coeffs[(z << qubits) | x] = val.real();
      }
    }
  }
  return out;
}

}  // namespace detail

PauliVector to_pauli_vector(const DensityOperator& rho) {
  if (hermiticity_defect(rho.matrix()) > 1e-10) {
    throw validation_error("Pauli decomposition requires a Hermitian matrix");
  }
  return detail::pauli_table(rho.matrix(), rho.qubits());
}

DensityOperator from_pauli_vector(const PauliVector& v) {
  const int qubits = v.qubits;
  if (v.coeffs.size() != label_count(qubits)) {
    throw usage_error("coefficient table length does not match qubit count");
  }
  if (std::abs(v.coeffs[0] - 1.0) > 1e-9) {
    throw usage_error("identity coefficient must be 1 (unit trace)");
  }
  const std::size_t dim = std::size_t(1) << qubits;
  const double scale = 1.0 / static_cast<double>(dim);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim),
                     static_cast<Eigen::Index>(dim));
#pragma omp parallel if (dim * dim >= kParallelThreshold)
  {
    std::vector<std::complex<double>> slice(dim);
#pragma omp for schedule(static)
    for (std::size_t x = 0; x < dim; ++x) {
      for (std::size_t z = 0; z < dim; ++z) {
        const int y = std::popcount(x & z) & 3;
        slice[z] = kIPow[(4 - y) & 3] * v.coeffs[(z << qubits) | x];
      }
      walsh_hadamard_inplace(slice);
      for (std::size_t r = 0; r < dim; ++r) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ x)) =
            scale * slice[r];
      }
    }
  }
  return DensityOperator(std::move(m), qubits);
}

}  // namespace pst
