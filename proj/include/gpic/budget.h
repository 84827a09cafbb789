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

#ifndef GPIC_BUDGET_H
#define GPIC_BUDGET_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpic/composition.h"
#include "gpic/distances.h"

namespace gpic {

/// The error budget cannot be met: nothing is left to distribute, or the
/// constraint has no solution with per-gate errors in (0, 1).
class InfeasibleBudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class CostModelName { Kmm15, Selinger15, RossSelinger16 };

/// Empirical T-count law for one R_z rotation: k * log_b(1/eps) + k2.
struct CostModel {
    CostModelName name = CostModelName::Kmm15;
    double k = 3.067;
    double k2 = -4.322;
    double log_base = 2;

    /// k = 3.067, k2 = -4.322.
    static CostModel kmm15(double log_base = 2);
    /// k = 4, k2 = 10.
    static CostModel selinger15(double log_base = 2);
    /// k = 3, k2 = 0. The true law has an extra O(log log(1/eps)) term with
    /// no published constant; only the leading order is modelled.
    static CostModel ross_selinger16(double log_base = 2);

    bool leading_order_only() const { return name == CostModelName::RossSelinger16; }
};

/// "kmm15", "selinger15", "rs16".
std::string_view to_string(CostModelName name);
CostModel parse_cost_model(std::string_view name, double log_base = 2);

/// max{0, k * log_b(1/eps) + k2}. Requires 0 < eps < 1.
double tcount_rz(double eps, const CostModel &model);

/// Sum of tcount_rz over an allocation.
double allocation_tcount(std::span<const double> eps, const CostModel &model);

struct BudgetParams {
    int n_r = 1;
    double eps = 0.01;
    double delta = 0;
    double c = kDefaultApprox2C;
};

struct BudgetSolution {
    double per_gate_eps = 0;
    double per_gate_tcount = 0;
    double total_tcount = 0;
    /// n_r * ceil(per_gate_tcount).
    uint64_t total_tcount_int = 0;
    DistanceKind regime = DistanceKind::Gpi;
    BudgetParams params;
    CostModel model;
};

/// Minimum-T allocation of eps over n_r rotations composed in product, with
/// errors measured in the global phase invariant distance and the constraint
/// c^2 (1 - prod(1 - eps_i^2)) = (eps - delta)^2. Every rotation receives
///     eps_r = sqrt(1 - (1 - (eps - delta)^2 / c^2)^(1 / n_r)).
/// Throws InfeasibleBudgetError when delta >= eps or eps - delta >= c.
BudgetSolution equal_split_gpi(const BudgetParams &params, const CostModel &model);

/// Same problem under the operator norm with the sum-of-errors constraint;
/// every rotation receives eps / n_r. The returned params carry delta = 0, c = 1.
BudgetSolution equal_split_opnorm(int n_r, double eps, const CostModel &model);

/// Operator-norm optimum minus GPI optimum, both costed with `model`.
double cost_delta(const BudgetParams &params, const CostModel &model);

/// Operator-norm optimum costed with Selinger15 minus the GPI optimum costed
/// with KMM15 (both on the given log base).
double cost_delta_selinger(const BudgetParams &params, double log_base = 2);

/// c^2 / (1 - delta/eps)^2. cost_delta is positive for n_r at or above this.
double gpi_advantage_threshold(double eps, double delta, double c);

struct OptimalityReport {
    double best_found_cost = 0;
    double equal_split_cost = 0;
    bool violated = false;
    std::vector<double> best_allocation;
};

/// Largest n_r accepted by verify_equal_split_optimality.
inline constexpr int kMaxOptimalityRotations = 5;

/// Samples `trials` allocations on the constraint surface
/// prod(1 - eps_i^2) = 1 - (eps - delta)^2 / c^2 and compares their T-count
/// with the equal split. violated is set when a sample is cheaper by more
/// than 1e-9.
OptimalityReport verify_equal_split_optimality(
    const BudgetParams &params, const CostModel &model, int trials, uint64_t seed);

}  // namespace gpic

#endif
