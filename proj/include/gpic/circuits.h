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

#ifndef GPIC_CIRCUITS_H
#define GPIC_CIRCUITS_H

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "gpic/budget.h"
#include "gpic/distances.h"

namespace gpic {

/// QFT on n qubits. Each controlled-R_k is costed as rz_per_crk approximable
/// R_z rotations plus fixed_tcount_per_crk exact T gates.
struct QftSpec {
    int n = 2;
    int rz_per_crk = 3;
    int fixed_tcount_per_crk = 7;
};

struct RotationCensus {
    int total = 0;
    std::map<int, int> per_k;  // k -> number of controlled-R_k gates
};

/// Controlled rotations in the textbook QFT: per_k[k] = n - k + 1 for k = 2..n.
RotationCensus qft_rotation_census(int n);

/// D_P(cR_k, I) = sqrt(1 - sqrt(1 + 3 cos^2(theta_k / 2)) / 2), theta_k = 2 pi / 2^k.
double prune_error_gpi(int k);

/// ||cR_k - I|| = 2 sin(theta_k / 2).
double prune_error_opnorm(int k);

/// Partition of {2..n} into kept and pruned rotation orders.
class PruningPlan {
   public:
    /// Keeps k <= k_max, prunes the rest.
    static PruningPlan keep_up_to(int n, int k_max);
    static PruningPlan from_pruned(int n, std::set<int> pruned);
    static PruningPlan none(int n) { return keep_up_to(n, n); }

    int n() const { return n_; }
    const std::set<int> &kept() const { return kept_; }
    const std::set<int> &pruned() const { return pruned_; }

   private:
    PruningPlan(int n, std::set<int> kept, std::set<int> pruned);

    int n_;
    std::set<int> kept_;
    std::set<int> pruned_;
};

/// Error from replacing the pruned controlled rotations with identity.
///
/// Gpi: approximation-I composition of the multiset {eps'_k repeated N_k
/// times : k pruned}, listed in ascending k. OperatorNorm: sum_k N_k 2 sin(theta_k/2).
double aqft_pruning_error(int n, const PruningPlan &plan, DistanceKind dist);

/// Knobs of the GPI budget solver used inside the estimators.
struct AllocationOptions {
    double delta = 0;
    double c = kDefaultApprox2C;
};

struct AqftReport {
    int n = 0;
    DistanceKind distance = DistanceKind::Gpi;
    std::set<int> kept;
    std::set<int> pruned;
    std::map<int, double> per_k_error_gpi;
    std::map<int, double> per_k_error_opnorm;
    std::map<int, int> per_k_count;
    double eps_budget = 0;
    double eps_qft_gpi = 0;
    double eps_qft_opnorm = 0;
    /// Budget left for synthesis. Gpi: sqrt(eps^2 - eps_qft^2). OperatorNorm: eps - eps_qft.
    double remaining_budget = 0;
    int kept_rotations = 0;
    /// Rotations outside the QFT that share the budget (used by QPE).
    int additional_leaves = 0;
    int approximable_leaves = 0;
    double per_leaf_eps = 0;
    double rotation_tcount = 0;
    int64_t fixed_tcount = 0;
    double total_tcount = 0;
    uint64_t total_tcount_int = 0;
};

/// T-count of an approximate QFT: the pruning error is taken out of
/// eps_budget and the rest is split equally over the R_z leaves of the kept
/// rotations. Throws InfeasibleBudgetError when pruning alone exhausts the budget.
AqftReport aqft_tcount(
    const QftSpec &spec, const PruningPlan &plan, double eps_budget, const CostModel &model, DistanceKind dist,
    const AllocationOptions &options = {});

/// t = n + ceil(log2(2 + 1 / (2 (1 - p)))).
int qpe_bits(int n, double p);

struct QpeSpec {
    int n = 1;
    double p = 0.5;
    double eps_qpe = 0;
};

struct QpeReport {
    int t = 0;
    double eps_total = 0;
    double eps_qpe = 0;
    double synthesis_budget = 0;
    int target_rotations = 0;
    /// Inverse QFT on t qubits; its leaf count includes the target rotations.
    AqftReport circuit;
};

struct QpeOptions {
    std::optional<PruningPlan> plan;  // defaults to no pruning on t qubits
    int rz_per_crk = 3;
    int fixed_tcount_per_crk = 7;
    AllocationOptions allocation;
};

/// Phase estimation: eps_total - eps_qpe is split over the inverse-QFT leaves
/// and `target_rotations` controlled-U rotations.
QpeReport qpe_tcount(
    const QpeSpec &spec, double eps_total, const CostModel &model, DistanceKind dist, int target_rotations,
    const QpeOptions &options = {});

}  // namespace gpic

#endif
