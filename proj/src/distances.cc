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

#include "gpic/distances.h"

#include <algorithm>
#include <cmath>

namespace gpic {

namespace {

constexpr double kPowerIterationTolerance = 1e-12;
constexpr int kPowerIterationCap = 10000;
constexpr int kSquaringSteps = 40;

void require_same_dim(const Unitary &u, const Unitary &v, const char *op) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch (" + std::to_string(u.dim()) + " vs " + std::to_string(v.dim()) +
            ")");
    }
}

// Tr(A^dagger B) without materializing the product.
Complex trace_of_adjoint_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    Complex t = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        t += std::conj(ea[i]) * eb[i];
    }
    return t;
}

double operator_norm_2x2(const ComplexMatrix &a) {
    // Largest eigenvalue of the Hermitian G = A^dagger A in the form
    // (g00 + g11)/2 + sqrt(((g00 - g11)/2)^2 + |g01|^2), which stays accurate
    // when the two singular values coincide.
    const double g00 = std::norm(a(0, 0)) + std::norm(a(1, 0));
    const double g11 = std::norm(a(0, 1)) + std::norm(a(1, 1));
    const Complex g01 = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
    const double half_diff = (g00 - g11) / 2;
    return std::sqrt((g00 + g11) / 2 + std::hypot(half_diff, std::abs(g01)));
}

// Largest eigenvalue of the Hermitian PSD matrix g, starting from `start`.
double power_iteration(const ComplexMatrix &g, std::vector<Complex> v) {
    const size_t n = g.rows();
    std::vector<Complex> w(n);
    double estimate = 0;
    for (int iter = 0; iter < kPowerIterationCap; iter++) {
        for (size_t i = 0; i < n; i++) {
            Complex acc = 0;
            for (size_t j = 0; j < n; j++) {
                acc += g(i, j) * v[j];
            }
            w[i] = acc;
        }
        double rayleigh = 0;
        double w_norm_sq = 0;
        for (size_t i = 0; i < n; i++) {
            rayleigh += (std::conj(v[i]) * w[i]).real();
            w_norm_sq += std::norm(w[i]);
        }
        if (w_norm_sq == 0) {
            return 0;
        }
        double w_norm = std::sqrt(w_norm_sq);
        for (size_t i = 0; i < n; i++) {
            v[i] = w[i] / w_norm;
        }
        if (iter > 0 && std::abs(rayleigh - estimate) <= kPowerIterationTolerance * std::abs(rayleigh)) {
            return rayleigh;
        }
        estimate = rayleigh;
    }
    throw ConvergenceError("operator_norm: power iteration did not converge", std::sqrt(std::max(0.0, estimate)));
}

}  // namespace

std::string_view to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::Gpi:
            return "gpi";
        case DistanceKind::OperatorNorm:
            return "opnorm";
        case DistanceKind::Frobenius:
            return "frobenius";
    }
    return "?";
}

DistanceKind parse_distance_kind(std::string_view name) {
    if (name == "gpi") {
        return DistanceKind::Gpi;
    }
    if (name == "opnorm" || name == "operator") {
        return DistanceKind::OperatorNorm;
    }
    if (name == "frobenius") {
        return DistanceKind::Frobenius;
    }
    throw std::invalid_argument("unknown distance '" + std::string(name) + "' (expected gpi, opnorm or frobenius)");
}

double dist_gpi(const Unitary &u, const Unitary &v) {
    require_same_dim(u, v, "dist_gpi");
    // With phi = arg Tr(U^dagger V), |Tr(U^dagger V)| = Re Tr(U^dagger e^{-i phi} V), so for unitaries
    // 1 - |t|/N = ||e^{-i phi} V - U||_F^2 / (2N). The right side has no cancellation near zero.
    const Complex t = trace_of_adjoint_product(u.matrix(), v.matrix());
    const double mag = std::abs(t);
    const Complex align = mag > 0 ? std::conj(t) / mag : Complex(1);
    double sum_sq = 0;
    auto eu = u.matrix().entries();
    auto ev = v.matrix().entries();
    for (size_t i = 0; i < eu.size(); i++) {
        sum_sq += std::norm(align * ev[i] - eu[i]);
    }
    const double radicand = sum_sq / (2 * static_cast<double>(u.dim()));
    return std::min(1.0, std::sqrt(radicand));
}

double frobenius_norm(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &c : a.entries()) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

double dist_frobenius(const Unitary &u, const Unitary &v) {
    require_same_dim(u, v, "dist_frobenius");
    return frobenius_norm(v.matrix() - u.matrix());
}

double operator_norm(const ComplexMatrix &a) {
    if (a.rows() == 2 && a.cols() == 2) {
        return operator_norm_2x2(a);
    }
    const ComplexMatrix gram = matmul(dagger(a), a);
    const size_t n = gram.rows();
    const double tr = trace(gram).real();
    if (tr == 0) {
        return 0;
    }

    // Plain power iteration stalls when the top two eigenvalues of the Gram
    // matrix nearly coincide. Repeated squaring of G / Tr(G) drives it towards
    // the projector onto the dominant eigenspace; its heaviest column is then
    // a start vector with negligible weight outside that space.
    ComplexMatrix p = (1 / tr) * gram;
    for (int s = 0; s < kSquaringSteps; s++) {
        p = matmul(p, p);
        const double t = trace(p).real();
        if (!(t > 0)) {
            break;
        }
        p *= 1 / t;
    }
    size_t heaviest = 0;
    for (size_t j = 1; j < n; j++) {
        if (p(j, j).real() > p(heaviest, heaviest).real()) {
            heaviest = j;
        }
    }
    std::vector<Complex> start(n);
    double norm_sq = 0;
    for (size_t i = 0; i < n; i++) {
        start[i] = p(i, heaviest);
        norm_sq += std::norm(start[i]);
    }
    if (!(norm_sq > 0)) {
        start.assign(n, Complex(1 / std::sqrt(static_cast<double>(n))));
    } else {
        for (auto &x : start) {
            x /= std::sqrt(norm_sq);
        }
    }
    return std::sqrt(std::max(0.0, power_iteration(gram, start)));
}

double dist_operator(const Unitary &u, const Unitary &v) {
    require_same_dim(u, v, "dist_operator");
    return operator_norm(v.matrix() - u.matrix());
}

double frobenius_relation_margin(const Unitary &u, const Unitary &v) {
    require_same_dim(u, v, "frobenius_relation_margin");
    const double n = static_cast<double>(u.dim());
    return dist_frobenius(u, v) / std::sqrt(2 * n) - dist_gpi(u, v);
}

}  // namespace gpic
