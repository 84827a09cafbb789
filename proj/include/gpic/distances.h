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

#ifndef GPIC_DISTANCES_H
#define GPIC_DISTANCES_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "gpic/matrix.h"

namespace gpic {

enum class DistanceKind { Gpi, OperatorNorm, Frobenius };

/// "gpi", "opnorm" or "frobenius".
std::string_view to_string(DistanceKind kind);
/// Inverse of to_string. Also accepts "operator" for OperatorNorm.
DistanceKind parse_distance_kind(std::string_view name);

/// Raised by operator_norm when power iteration hits its iteration cap.
class ConvergenceError : public std::runtime_error {
   public:
    ConvergenceError(const std::string &what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}
    double last_estimate() const { return last_estimate_; }

   private:
    double last_estimate_;
};

/// Global phase invariant distance sqrt(1 - |Tr(U^dagger V)| / N).
///
/// Lies in [0, 1], is symmetric, and ignores a global phase on either side.
/// Evaluated as min over phases of ||e^{i phi} V - U||_F / sqrt(2N), which is the same
/// quantity for unitaries and stays exact at zero.
double dist_gpi(const Unitary &u, const Unitary &v);

/// ||V - U||_F.
double dist_frobenius(const Unitary &u, const Unitary &v);

/// sqrt(Tr(A^dagger A)).
double frobenius_norm(const ComplexMatrix &a);

/// Largest singular value.
///
/// 2x2 inputs use the closed form. Larger inputs run power iteration on
/// A^dagger A, stopping when the Rayleigh quotient changes by at most 1e-12
/// relative, capped at 10000 iterations (ConvergenceError past the cap). The
/// start vector is taken from a high power of A^dagger A so that nearly
/// degenerate top singular values still converge.
double operator_norm(const ComplexMatrix &a);

/// operator_norm(V - U). Unlike dist_gpi this sees global phase.
double dist_operator(const Unitary &u, const Unitary &v);

/// D_F(U,V) / sqrt(2N) - D_P(U,V). Never below -1e-12; zero exactly when
/// Tr(V^dagger U) is real and nonnegative.
double frobenius_relation_margin(const Unitary &u, const Unitary &v);

}  // namespace gpic

#endif
