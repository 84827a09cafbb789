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

#include "gpic/budget.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gpic/rng.h"

namespace gpic {

namespace {

constexpr double kOptimalitySlack = 1e-9;

CostModel make_model(CostModelName name, double k, double k2, double log_base) {
    if (!(log_base > 1) || !std::isfinite(log_base)) {
        throw std::invalid_argument("log base must be a finite value > 1");
    }
    return CostModel{name, k, k2, log_base};
}

void check_gpi_params(const BudgetParams &p) {
    if (p.n_r < 1) {
        throw std::invalid_argument("n_r must be positive");
    }
    if (!(p.eps > 0 && p.eps < 1)) {
        throw std::invalid_argument("eps must lie in (0, 1), got " + std::to_string(p.eps));
    }
    if (!(p.delta >= 0) || !std::isfinite(p.delta)) {
        throw std::invalid_argument("delta must be nonnegative");
    }
    if (!(p.c > 0) || !std::isfinite(p.c)) {
        throw std::invalid_argument("c must be positive");
    }
    if (p.delta >= p.eps) {
        throw InfeasibleBudgetError(
            "delta " + std::to_string(p.delta) + " leaves no budget out of eps " + std::to_string(p.eps));
    }
    if ((p.eps - p.delta) / p.c >= 1) {
        throw InfeasibleBudgetError("(eps - delta) / c must be below 1");
    }
}

// log(1 - (eps - delta)^2 / c^2): the right-hand side of the constraint in log form.
double constraint_log(const BudgetParams &p) {
    const double x = (p.eps - p.delta) / p.c;
    return std::log1p(-x * x);
}

BudgetSolution finish(double per_gate_eps, DistanceKind regime, const BudgetParams &params, const CostModel &model) {
    BudgetSolution s;
    s.per_gate_eps = per_gate_eps;
    s.per_gate_tcount = tcount_rz(per_gate_eps, model);
    s.total_tcount = params.n_r * s.per_gate_tcount;
    s.total_tcount_int = static_cast<uint64_t>(params.n_r) * static_cast<uint64_t>(std::ceil(s.per_gate_tcount));
    s.regime = regime;
    s.params = params;
    s.model = model;
    return s;
}

}  // namespace

CostModel CostModel::kmm15(double log_base) { return make_model(CostModelName::Kmm15, 3.067, -4.322, log_base); }
CostModel CostModel::selinger15(double log_base) { return make_model(CostModelName::Selinger15, 4, 10, log_base); }
CostModel CostModel::ross_selinger16(double log_base) {
    return make_model(CostModelName::RossSelinger16, 3, 0, log_base);
}

std::string_view to_string(CostModelName name) {
    switch (name) {
        case CostModelName::Kmm15:
            return "kmm15";
        case CostModelName::Selinger15:
            return "selinger15";
        case CostModelName::RossSelinger16:
            return "rs16";
    }
    return "?";
}

CostModel parse_cost_model(std::string_view name, double log_base) {
    if (name == "kmm15") {
        return CostModel::kmm15(log_base);
    }
    if (name == "selinger15" || name == "s15") {
        return CostModel::selinger15(log_base);
    }
    if (name == "rs16" || name == "rossselinger16") {
        return CostModel::ross_selinger16(log_base);
    }
    throw std::invalid_argument("unknown cost model '" + std::string(name) + "' (expected kmm15, selinger15 or rs16)");
}

double tcount_rz(double eps, const CostModel &model) {
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("tcount_rz: eps must lie in (0, 1), got " + std::to_string(eps));
    }
    const double bits = -std::log(eps) / std::log(model.log_base);
    return std::max(0.0, model.k * bits + model.k2);
}

double allocation_tcount(std::span<const double> eps, const CostModel &model) {
    double total = 0;
    for (double e : eps) {
        total += tcount_rz(e, model);
    }
    return total;
}

BudgetSolution equal_split_gpi(const BudgetParams &params, const CostModel &model) {
    check_gpi_params(params);
    // (1 - eps_r^2)^n_r = 1 - (eps - delta)^2 / c^2.
    const double per_gate_sq = -std::expm1(constraint_log(params) / params.n_r);
    return finish(std::sqrt(per_gate_sq), DistanceKind::Gpi, params, model);
}

BudgetSolution equal_split_opnorm(int n_r, double eps, const CostModel &model) {
    if (n_r < 1) {
        throw std::invalid_argument("n_r must be positive");
    }
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("eps must lie in (0, 1), got " + std::to_string(eps));
    }
    return finish(eps / n_r, DistanceKind::OperatorNorm, BudgetParams{n_r, eps, 0, 1}, model);
}

double cost_delta(const BudgetParams &params, const CostModel &model) {
    const auto gpi = equal_split_gpi(params, model);
    const auto op = equal_split_opnorm(params.n_r, params.eps, model);
    return op.total_tcount - gpi.total_tcount;
}

double cost_delta_selinger(const BudgetParams &params, double log_base) {
    const auto gpi = equal_split_gpi(params, CostModel::kmm15(log_base));
    const auto op = equal_split_opnorm(params.n_r, params.eps, CostModel::selinger15(log_base));
    return op.total_tcount - gpi.total_tcount;
}

double gpi_advantage_threshold(double eps, double delta, double c) {
    const double ratio = 1 - delta / eps;
    return c * c / (ratio * ratio);
}

OptimalityReport verify_equal_split_optimality(
    const BudgetParams &params, const CostModel &model, int trials, uint64_t seed) {
    check_gpi_params(params);
    if (params.n_r > kMaxOptimalityRotations) {
        throw std::invalid_argument(
            "verify_equal_split_optimality: n_r must be at most " + std::to_string(kMaxOptimalityRotations));
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be positive");
    }
    const auto equal = equal_split_gpi(params, model);
    OptimalityReport report;
    report.equal_split_cost = equal.total_tcount;
    report.best_found_cost = std::numeric_limits<double>::infinity();

    // Any point on the surface is sum_i log(1 - eps_i^2) = L with each share
    // w_i = log(1 - eps_i^2) / L in (0, 1) and sum w_i = 1, so sampling the
    // simplex covers it. Odd trials sample near the centre, even trials anywhere.
    const double log_target = constraint_log(params);
    const size_t n = static_cast<size_t>(params.n_r);
    std::vector<double> weights(n);
    std::vector<double> alloc(n);
    for (int t = 0; t < trials; t++) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(t)));
        if (t % 2 == 0) {
            std::exponential_distribution<double> expo(1.0);
            for (auto &w : weights) {
                w = expo(rng);
            }
        } else {
            std::uniform_real_distribution<double> log_scale(std::log(1e-6), std::log(0.5));
            std::uniform_real_distribution<double> unit(-1.0, 1.0);
            const double spread = std::exp(log_scale(rng));
            for (auto &w : weights) {
                w = 1 + spread * unit(rng);
            }
        }
        double total = 0;
        for (double w : weights) {
            total += w;
        }
        for (size_t i = 0; i < n; i++) {
            alloc[i] = std::sqrt(-std::expm1(weights[i] / total * log_target));
        }
        if (std::any_of(alloc.begin(), alloc.end(), [](double e) { return !(e > 0 && e < 1); })) {
            continue;
        }
        const double cost = allocation_tcount(alloc, model);
        if (cost < report.best_found_cost) {
            report.best_found_cost = cost;
            report.best_allocation = alloc;
        }
        if (cost < report.equal_split_cost - kOptimalitySlack) {
            report.violated = true;
        }
    }
    return report;
}

}  // namespace gpic
