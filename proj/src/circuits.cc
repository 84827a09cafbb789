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

#include "gpic/circuits.h"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gpic/composition.h"

namespace gpic {

namespace {

double half_angle(int k) { return std::numbers::pi / std::ldexp(1.0, k); }

void require_k(int k) {
    if (k < 2) {
        throw std::invalid_argument("rotation order k must be >= 2, got " + std::to_string(k));
    }
}

void require_distance(DistanceKind dist) {
    if (dist == DistanceKind::Frobenius) {
        throw std::invalid_argument("estimators support the gpi and opnorm distances only");
    }
}

AqftReport estimate(
    const QftSpec &spec, const PruningPlan &plan, double eps_budget, const CostModel &model, DistanceKind dist,
    const AllocationOptions &options, int additional_leaves) {
    require_distance(dist);
    if (spec.rz_per_crk < 1 || spec.fixed_tcount_per_crk < 0) {
        throw std::invalid_argument("rz_per_crk must be positive and fixed_tcount_per_crk nonnegative");
    }
    if (plan.n() != spec.n) {
        throw std::invalid_argument(
            "pruning plan is for " + std::to_string(plan.n()) + " qubits, circuit has " + std::to_string(spec.n));
    }
    if (!(eps_budget > 0 && eps_budget < 1)) {
        throw std::invalid_argument("error budget must lie in (0, 1)");
    }
    const auto census = qft_rotation_census(spec.n);

    AqftReport r;
    r.n = spec.n;
    r.distance = dist;
    r.kept = plan.kept();
    r.pruned = plan.pruned();
    r.per_k_count = census.per_k;
    for (const auto &[k, count] : census.per_k) {
        r.per_k_error_gpi[k] = prune_error_gpi(k);
        r.per_k_error_opnorm[k] = prune_error_opnorm(k);
    }
    r.eps_budget = eps_budget;
    r.eps_qft_gpi = aqft_pruning_error(spec.n, plan, DistanceKind::Gpi);
    r.eps_qft_opnorm = aqft_pruning_error(spec.n, plan, DistanceKind::OperatorNorm);

    const double pruning = dist == DistanceKind::Gpi ? r.eps_qft_gpi : r.eps_qft_opnorm;
    if (pruning >= eps_budget) {
        throw InfeasibleBudgetError(
            "pruning error " + std::to_string(pruning) + " exhausts the error budget " + std::to_string(eps_budget));
    }
    r.remaining_budget = dist == DistanceKind::Gpi ? std::sqrt(eps_budget * eps_budget - pruning * pruning)
                                                   : eps_budget - pruning;

    for (int k : plan.kept()) {
        r.kept_rotations += census.per_k.at(k);
    }
    r.additional_leaves = additional_leaves;
    r.approximable_leaves = r.kept_rotations * spec.rz_per_crk + additional_leaves;
    r.fixed_tcount = static_cast<int64_t>(spec.fixed_tcount_per_crk) * r.kept_rotations;

    if (r.approximable_leaves > 0) {
        BudgetSolution split =
            dist == DistanceKind::Gpi
                ? equal_split_gpi(BudgetParams{r.approximable_leaves, r.remaining_budget, options.delta, options.c}, model)
                : equal_split_opnorm(r.approximable_leaves, r.remaining_budget, model);
        r.per_leaf_eps = split.per_gate_eps;
        r.rotation_tcount = split.total_tcount;
        r.total_tcount_int = split.total_tcount_int;
    }
    r.total_tcount = r.rotation_tcount + static_cast<double>(r.fixed_tcount);
    r.total_tcount_int += static_cast<uint64_t>(r.fixed_tcount);
    return r;
}

}  // namespace

RotationCensus qft_rotation_census(int n) {
    if (n < 2) {
        throw std::invalid_argument("QFT needs n >= 2 qubits, got " + std::to_string(n));
    }
    RotationCensus census;
    for (int k = 2; k <= n; k++) {
        census.per_k[k] = n - k + 1;
        census.total += n - k + 1;
    }
    return census;
}

double prune_error_gpi(int k) {
    require_k(k);
    // 1 - sqrt(1 + 3 cos^2(x)) / 2 = a / (1 + sqrt(1 - a)) with a = 3 sin^2(x) / 4,
    // which avoids cancellation for large k.
    const double s = std::sin(half_angle(k));
    const double a = 0.75 * s * s;
    return std::sqrt(a / (1 + std::sqrt(1 - a)));
}

double prune_error_opnorm(int k) {
    require_k(k);
    return 2 * std::sin(half_angle(k));
}

PruningPlan::PruningPlan(int n, std::set<int> kept, std::set<int> pruned)
    : n_(n), kept_(std::move(kept)), pruned_(std::move(pruned)) {}

PruningPlan PruningPlan::keep_up_to(int n, int k_max) {
    if (n < 2) {
        throw std::invalid_argument("pruning plan needs n >= 2");
    }
    std::set<int> kept;
    std::set<int> pruned;
    for (int k = 2; k <= n; k++) {
        (k <= k_max ? kept : pruned).insert(k);
    }
    return PruningPlan(n, std::move(kept), std::move(pruned));
}

PruningPlan PruningPlan::from_pruned(int n, std::set<int> pruned) {
    if (n < 2) {
        throw std::invalid_argument("pruning plan needs n >= 2");
    }
    std::set<int> kept;
    for (int k : pruned) {
        if (k < 2 || k > n) {
            throw std::invalid_argument("pruned order " + std::to_string(k) + " outside {2.." + std::to_string(n) + "}");
        }
    }
    for (int k = 2; k <= n; k++) {
        if (!pruned.contains(k)) {
            kept.insert(k);
        }
    }
    return PruningPlan(n, std::move(kept), std::move(pruned));
}

double aqft_pruning_error(int n, const PruningPlan &plan, DistanceKind dist) {
    require_distance(dist);
    if (plan.n() != n) {
        throw std::invalid_argument("pruning plan does not match n");
    }
    if (plan.pruned().empty()) {
        return 0;
    }
    const auto census = qft_rotation_census(n);
    if (dist == DistanceKind::OperatorNorm) {
        double total = 0;
        for (int k : plan.pruned()) {
            total += census.per_k.at(k) * prune_error_opnorm(k);
        }
        return total;
    }
    std::vector<double> errors;
    for (int k : plan.pruned()) {
        errors.insert(errors.end(), static_cast<size_t>(census.per_k.at(k)), prune_error_gpi(k));
    }
    return mult_bound_approx1(ErrorList(std::move(errors)));
}

AqftReport aqft_tcount(
    const QftSpec &spec, const PruningPlan &plan, double eps_budget, const CostModel &model, DistanceKind dist,
    const AllocationOptions &options) {
    return estimate(spec, plan, eps_budget, model, dist, options, 0);
}

int qpe_bits(int n, double p) {
    if (n < 1) {
        throw std::invalid_argument("qpe_bits: n must be >= 1");
    }
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("qpe_bits: success probability must lie in [0, 1)");
    }
    const double target = 2 + 1 / (2 * (1 - p));
    int extra = 0;
    while (std::ldexp(1.0, extra) < target) {
        extra++;
    }
    return n + extra;
}

QpeReport qpe_tcount(
    const QpeSpec &spec, double eps_total, const CostModel &model, DistanceKind dist, int target_rotations,
    const QpeOptions &options) {
    if (target_rotations < 1) {
        throw std::invalid_argument("target_rotations must be positive");
    }
    if (!(spec.eps_qpe >= 0)) {
        throw std::invalid_argument("eps_qpe must be nonnegative");
    }
    if (!(eps_total > 0 && eps_total < 1)) {
        throw std::invalid_argument("eps_total must lie in (0, 1)");
    }
    if (spec.eps_qpe >= eps_total) {
        throw InfeasibleBudgetError(
            "phase-approximation error " + std::to_string(spec.eps_qpe) + " leaves no synthesis budget out of " +
            std::to_string(eps_total));
    }
    QpeReport r;
    r.t = qpe_bits(spec.n, spec.p);
    r.eps_total = eps_total;
    r.eps_qpe = spec.eps_qpe;
    r.synthesis_budget = eps_total - spec.eps_qpe;
    r.target_rotations = target_rotations;
    QftSpec qft{r.t, options.rz_per_crk, options.fixed_tcount_per_crk};
    PruningPlan plan = options.plan.value_or(PruningPlan::none(r.t));
    r.circuit = estimate(qft, plan, r.synthesis_budget, model, dist, options.allocation, target_rotations);
    return r;
}

}  // namespace gpic
