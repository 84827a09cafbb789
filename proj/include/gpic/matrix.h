// Copyright 2026 The gpic Authors
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

#ifndef GPIC_MATRIX_H
#define GPIC_MATRIX_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gpic {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Every entry is finite.
///
/// Sized for verification work (at most 32x32 in practice), so there is no
/// blocking, no sparsity and no expression templates.
class ComplexMatrix {
   public:
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    Complex &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

/// Standard matrix product. Throws std::invalid_argument if a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product: kron(a,b)(i*b.rows()+k, j*b.cols()+l) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// Sum of the diagonal. Throws std::invalid_argument for non-square input.
Complex trace(const ComplexMatrix &a);

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tensor product of single-qubit Paulis; index 0..3 selects I, X, Y, Z.
ComplexMatrix pauli_string(std::span<const int> indices);
ComplexMatrix pauli_string(std::initializer_list<int> indices);

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix phase_s();
ComplexMatrix t_gate();
/// Controlled R_k: diag(1, 1, 1, exp(2*pi*i / 2^k)).
ComplexMatrix controlled_rk(int k);
}  // namespace gates

/// Maximum entrywise deviation of U^dagger U from the identity accepted for a Unitary.
inline constexpr double kUnitarityTolerance = 1e-10;

/// A square matrix of dimension 2^n that is unitary to kUnitarityTolerance.
class Unitary {
   public:
    /// Throws std::invalid_argument when the matrix is not square, has a
    /// dimension that is not a power of two, or fails the unitarity check.
    explicit Unitary(ComplexMatrix matrix);

    static Unitary identity(size_t num_qubits);

    const ComplexMatrix &matrix() const { return matrix_; }
    size_t dim() const { return matrix_.rows(); }
    size_t num_qubits() const { return num_qubits_; }

    /// Returns exp(i*phi) * U.
    Unitary with_global_phase(double phi) const;

   private:
    ComplexMatrix matrix_;
    size_t num_qubits_;
};

Unitary operator*(const Unitary &a, const Unitary &b);
Unitary tensor(const Unitary &a, const Unitary &b);

/// Largest qubit count accepted by random_unitary.
inline constexpr size_t kMaxRandomQubits = 5;

/// Haar-random unitary on n_qubits, deterministic in seed.
///
/// An N x N matrix of i.i.d. standard complex Gaussians is QR-factored and
/// each column of Q is rescaled by the phase of the matching diagonal entry of R.
Unitary random_unitary(size_t n_qubits, uint64_t seed);

/// Returns U = V * (cos(theta) I + i sin(theta) P) with cos(theta) = 1 - eps^2
/// and P a uniformly random non-identity Pauli string drawn from seed.
///
/// Tr(V^dagger U) = N cos(theta), so the global-phase-invariant distance
/// between U and V is exactly eps. Requires 0 <= eps < 1.
Unitary perturb_unitary(const Unitary &v, double eps, uint64_t seed);

}  // namespace gpic

#endif
