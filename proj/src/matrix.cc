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

#include "gpic/matrix.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "gpic/rng.h"

namespace gpic {

namespace {

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(std::span<const Complex> entries) {
    for (const auto &c : entries) {
        if (!is_finite(c)) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

// Returns log2(dim) if dim is a power of two, otherwise -1.
int exact_log2(size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((size_t{1} << n) != dim) {
        n++;
    }
    return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw std::invalid_argument(
            "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    require_finite(m.data_);
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &c : data_) {
        c *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument(
            "trace of non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
    }
    Complex t = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        t += a(i, i);
    }
    return t;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

namespace gates {

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
ComplexMatrix pauli_y() { return {{0, Complex(0, -1)}, {Complex(0, 1), 0}}; }
ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }
ComplexMatrix hadamard() {
    const double h = std::numbers::sqrt2 / 2;
    return {{h, h}, {h, -h}};
}
ComplexMatrix phase_s() { return {{1, 0}, {0, Complex(0, 1)}}; }
ComplexMatrix t_gate() { return {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}}; }

ComplexMatrix controlled_rk(int k) {
    if (k < 1) {
        throw std::invalid_argument("controlled_rk: k must be >= 1");
    }
    const double theta = 2 * std::numbers::pi / std::ldexp(1.0, k);
    const Complex diag[] = {1, 1, 1, std::polar(1.0, theta)};
    return ComplexMatrix::diagonal(diag);
}

}  // namespace gates

ComplexMatrix pauli_string(std::span<const int> indices) {
    if (indices.empty()) {
        throw std::invalid_argument("pauli_string: empty index sequence");
    }
    auto single = [](int idx) -> ComplexMatrix {
        switch (idx) {
            case 0:
                return ComplexMatrix::identity(2);
            case 1:
                return gates::pauli_x();
            case 2:
                return gates::pauli_y();
            case 3:
                return gates::pauli_z();
            default:
                throw std::invalid_argument("pauli_string: index " + std::to_string(idx) + " outside {0,1,2,3}");
        }
    };
    ComplexMatrix out = single(indices[0]);
    for (size_t q = 1; q < indices.size(); q++) {
        out = kron(out, single(indices[q]));
    }
    return out;
}

ComplexMatrix pauli_string(std::initializer_list<int> indices) {
    return pauli_string(std::span<const int>(indices.begin(), indices.size()));
}

Unitary::Unitary(ComplexMatrix matrix) : matrix_(std::move(matrix)), num_qubits_(0) {
    if (!matrix_.is_square()) {
        throw std::invalid_argument("unitary must be square");
    }
    int n = exact_log2(matrix_.rows());
    if (n < 0) {
        throw std::invalid_argument("unitary dimension " + std::to_string(matrix_.rows()) + " is not a power of two");
    }
    num_qubits_ = static_cast<size_t>(n);
    double dev = max_abs_diff(matmul(dagger(matrix_), matrix_), ComplexMatrix::identity(matrix_.rows()));
    if (!(dev <= kUnitarityTolerance)) {
        throw std::invalid_argument("matrix is not unitary: max |U^dagger U - I| = " + std::to_string(dev));
    }
}

Unitary Unitary::identity(size_t num_qubits) { return Unitary(ComplexMatrix::identity(size_t{1} << num_qubits)); }

Unitary Unitary::with_global_phase(double phi) const { return Unitary(std::polar(1.0, phi) * matrix_); }

Unitary operator*(const Unitary &a, const Unitary &b) { return Unitary(matmul(a.matrix(), b.matrix())); }

Unitary tensor(const Unitary &a, const Unitary &b) { return Unitary(kron(a.matrix(), b.matrix())); }

Unitary random_unitary(size_t n_qubits, uint64_t seed) {
    if (n_qubits == 0 || n_qubits > kMaxRandomQubits) {
        throw std::invalid_argument(
            "random_unitary: n_qubits must be in [1, " + std::to_string(kMaxRandomQubits) + "], got " +
            std::to_string(n_qubits));
    }
    const size_t dim = size_t{1} << n_qubits;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::numbers::sqrt2 / 2);

    // Work on columns; a[j][i] is entry (i, j).
    std::vector<std::vector<Complex>> a(dim, std::vector<Complex>(dim));
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            double re = gauss(rng);
            double im = gauss(rng);
            a[j][i] = Complex(re, im);
        }
    }

    // Householder QR. Reflectors are stored so Q can be rebuilt afterwards.
    std::vector<std::vector<Complex>> reflectors;
    std::vector<Complex> r_diag(dim);
    for (size_t k = 0; k < dim; k++) {
        double norm_sq = 0;
        for (size_t i = k; i < dim; i++) {
            norm_sq += std::norm(a[k][i]);
        }
        double norm = std::sqrt(norm_sq);
        Complex x0 = a[k][k];
        Complex phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Complex(1);
        Complex alpha = -phase * norm;
        std::vector<Complex> v(dim, 0);
        for (size_t i = k; i < dim; i++) {
            v[i] = a[k][i];
        }
        v[k] -= alpha;
        double v_norm_sq = 0;
        for (size_t i = k; i < dim; i++) {
            v_norm_sq += std::norm(v[i]);
        }
        if (v_norm_sq > 0) {
            // Apply H = I - 2 v v^dagger / (v^dagger v) to the remaining columns.
            for (size_t j = k; j < dim; j++) {
                Complex dot = 0;
                for (size_t i = k; i < dim; i++) {
                    dot += std::conj(v[i]) * a[j][i];
                }
                Complex scale = 2.0 * dot / v_norm_sq;
                for (size_t i = k; i < dim; i++) {
                    a[j][i] -= scale * v[i];
                }
            }
        }
        r_diag[k] = a[k][k];
        reflectors.push_back(std::move(v));
    }

    // Q = H_0 H_1 ... H_{dim-1}, built by applying the reflectors to I in reverse.
    std::vector<std::vector<Complex>> q(dim, std::vector<Complex>(dim, 0));
    for (size_t j = 0; j < dim; j++) {
        q[j][j] = 1;
    }
    for (size_t kk = dim; kk-- > 0;) {
        const auto &v = reflectors[kk];
        double v_norm_sq = 0;
        for (size_t i = kk; i < dim; i++) {
            v_norm_sq += std::norm(v[i]);
        }
        if (v_norm_sq == 0) {
            continue;
        }
        for (size_t j = 0; j < dim; j++) {
            Complex dot = 0;
            for (size_t i = kk; i < dim; i++) {
                dot += std::conj(v[i]) * q[j][i];
            }
            Complex scale = 2.0 * dot / v_norm_sq;
            for (size_t i = kk; i < dim; i++) {
                q[j][i] -= scale * v[i];
            }
        }
    }

    ComplexMatrix out(dim, dim);
    for (size_t j = 0; j < dim; j++) {
        Complex phase = std::abs(r_diag[j]) > 0 ? r_diag[j] / std::abs(r_diag[j]) : Complex(1);
        for (size_t i = 0; i < dim; i++) {
            out(i, j) = q[j][i] * phase;
        }
    }
    return Unitary(std::move(out));
}

Unitary perturb_unitary(const Unitary &v, double eps, uint64_t seed) {
    if (!(eps >= 0 && eps < 1)) {
        throw std::invalid_argument("perturb_unitary: eps must lie in [0, 1), got " + std::to_string(eps));
    }
    if (eps == 0) {
        return v;
    }
    const size_t n = v.num_qubits();
    if (n == 0) {
        throw std::invalid_argument("perturb_unitary: needs at least one qubit");
    }
    std::mt19937_64 rng(seed);
    // Non-identity Pauli strings are the codes 1 .. 4^n - 1 in base 4.
    std::uniform_int_distribution<uint64_t> pick(1, (uint64_t{1} << (2 * n)) - 1);
    uint64_t code = pick(rng);
    std::vector<int> indices(n);
    for (size_t q = n; q-- > 0;) {
        indices[q] = static_cast<int>(code & 3);
        code >>= 2;
    }
    ComplexMatrix pauli = pauli_string(indices);

    // cos(theta) = 1 - eps^2, sin(theta) = eps * sqrt(2 - eps^2), evaluated
    // without forming theta so small eps keeps full relative precision.
    const double cos_t = 1 - eps * eps;
    const double sin_t = eps * std::sqrt(2 - eps * eps);
    ComplexMatrix kick = Complex(0, sin_t) * pauli;
    for (size_t i = 0; i < kick.rows(); i++) {
        kick(i, i) += cos_t;
    }
    return Unitary(matmul(v.matrix(), kick));
}

}  // namespace gpic
