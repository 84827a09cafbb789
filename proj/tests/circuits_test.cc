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

#include "gtest/gtest.h"
#include "gpic/composition.h"
#include "gpic/distances.h"
#include "gpic/matrix.h"

namespace gpic {
namespace {

TEST(Census, SmallCases) {
    auto c2 = qft_rotation_census(2);
    EXPECT_EQ(c2.total, 1);
    EXPECT_EQ(c2.per_k, (std::map<int, int>{{2, 1}}));
    auto c4 = qft_rotation_census(4);
    EXPECT_EQ(c4.total, 6);
    EXPECT_EQ(c4.per_k, (std::map<int, int>{{2, 3}, {3, 2}, {4, 1}}));
    EXPECT_THROW(qft_rotation_census(1), std::invalid_argument);
}

TEST(Census, MatchesGateEnumeration) {
    // Qubit j (1-based) receives controlled-R_k for k = 2..n-j+1.
    for (int n = 2; n <= 64; n++) {
        std::map<int, int> counted;
        for (int j = 1; j <= n; j++) {
            for (int k = 2; k <= n - j + 1; k++) {
                counted[k]++;
            }
        }
        auto c = qft_rotation_census(n);
        EXPECT_EQ(c.per_k, counted);
        EXPECT_EQ(c.total, n * (n - 1) / 2);
    }
}

TEST(PruneError, GpiExamples) {
    EXPECT_NEAR(prune_error_gpi(2), std::sqrt(1 - std::sqrt(2.5) / 2), 1e-15);
    EXPECT_NEAR(prune_error_gpi(2), 0.4576359, 1e-6);
    EXPECT_LT(prune_error_gpi(20), 3e-6);
    EXPECT_GT(prune_error_gpi(20), 0);
    EXPECT_THROW(prune_error_gpi(1), std::invalid_argument);
}

TEST(PruneError, OpnormExamples) {
    EXPECT_NEAR(prune_error_opnorm(2), std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(prune_error_opnorm(3), 0.765367, 1e-6);
    EXPECT_THROW(prune_error_opnorm(0), std::invalid_argument);
}

TEST(PruneError, MatrixOracles) {
    const Unitary id = Unitary::identity(2);
    for (int k = 2; k <= 20; k++) {
        Unitary crk(gates::controlled_rk(k));
        EXPECT_NEAR(prune_error_gpi(k), dist_gpi(crk, id), 1e-12) << "k=" << k;
        EXPECT_NEAR(prune_error_opnorm(k), operator_norm(crk.matrix() - id.matrix()), 1e-10) << "k=" << k;
    }
}

TEST(PruneError, OpnormDominates) {
    for (int k = 2; k <= 30; k++) {
        EXPECT_GE(prune_error_opnorm(k), prune_error_gpi(k)) << "k=" << k;
    }
}

TEST(PruningPlan, Construction) {
    auto p = PruningPlan::keep_up_to(8, 5);
    EXPECT_EQ(p.kept(), (std::set<int>{2, 3, 4, 5}));
    EXPECT_EQ(p.pruned(), (std::set<int>{6, 7, 8}));
    EXPECT_TRUE(PruningPlan::none(5).pruned().empty());
    auto q = PruningPlan::from_pruned(5, {3, 5});
    EXPECT_EQ(q.kept(), (std::set<int>{2, 4}));
    EXPECT_THROW(PruningPlan::from_pruned(5, {6}), std::invalid_argument);
    EXPECT_THROW(PruningPlan::from_pruned(5, {1}), std::invalid_argument);
    EXPECT_THROW(PruningPlan::keep_up_to(1, 1), std::invalid_argument);
}

TEST(AqftPruning, EmptyAndSingle) {
    for (auto d : {DistanceKind::Gpi, DistanceKind::OperatorNorm}) {
        EXPECT_EQ(aqft_pruning_error(6, PruningPlan::none(6), d), 0.0);
    }
    // n=4, pruning k=4 removes exactly one gate.
    EXPECT_EQ(aqft_pruning_error(4, PruningPlan::keep_up_to(4, 3), DistanceKind::Gpi), prune_error_gpi(4));
    EXPECT_THROW(aqft_pruning_error(4, PruningPlan::none(5), DistanceKind::Gpi), std::invalid_argument);
    EXPECT_THROW(aqft_pruning_error(4, PruningPlan::none(4), DistanceKind::Frobenius), std::invalid_argument);
}

TEST(AqftPruning, EightQubitsKeepFive) {
    auto plan = PruningPlan::keep_up_to(8, 5);
    double op = aqft_pruning_error(8, plan, DistanceKind::OperatorNorm);
    double expected = 3 * 2 * std::sin(std::numbers::pi / 64) + 2 * 2 * std::sin(std::numbers::pi / 128) +
                      2 * std::sin(std::numbers::pi / 256);
    EXPECT_NEAR(op, expected, 1e-15);
    EXPECT_NEAR(op, 0.417, 1e-3);
    double gpi = aqft_pruning_error(8, plan, DistanceKind::Gpi);
    std::vector<double> multiset = {prune_error_gpi(6), prune_error_gpi(6), prune_error_gpi(6), prune_error_gpi(7),
                                    prune_error_gpi(7), prune_error_gpi(8)};
    EXPECT_EQ(gpi, mult_bound_approx1(ErrorList(multiset)));
    EXPECT_LT(gpi, op);
}

TEST(AqftPruning, GpiBelowOpnormForEverySubset) {
    const int n = 8;
    for (int mask = 1; mask < (1 << (n - 1)); mask++) {
        std::set<int> pruned;
        for (int b = 0; b < n - 1; b++) {
            if (mask & (1 << b)) {
                pruned.insert(b + 2);
            }
        }
        auto plan = PruningPlan::from_pruned(n, pruned);
        EXPECT_LT(aqft_pruning_error(n, plan, DistanceKind::Gpi), aqft_pruning_error(n, plan, DistanceKind::OperatorNorm))
            << "mask " << mask;
    }
}

TEST(AqftTcount, NoPruningFourQubits) {
    auto r = aqft_tcount({4}, PruningPlan::none(4), 0.01, CostModel::kmm15(), DistanceKind::Gpi);
    EXPECT_EQ(r.kept_rotations, 6);
    EXPECT_EQ(r.approximable_leaves, 18);
    EXPECT_EQ(r.fixed_tcount, 42);
    EXPECT_EQ(r.remaining_budget, 0.01);
    auto split = equal_split_gpi({18, 0.01, 0, 7.5}, CostModel::kmm15());
    EXPECT_EQ(r.per_leaf_eps, split.per_gate_eps);
    EXPECT_NEAR(r.total_tcount, split.total_tcount + 42, 1e-9);
    EXPECT_EQ(r.total_tcount_int, split.total_tcount_int + 42);
}

TEST(AqftTcount, BudgetSubtraction) {
    auto plan = PruningPlan::keep_up_to(10, 7);
    auto g = aqft_tcount({10}, plan, 0.3, CostModel::kmm15(), DistanceKind::Gpi);
    EXPECT_NEAR(g.remaining_budget * g.remaining_budget + g.eps_qft_gpi * g.eps_qft_gpi, 0.3 * 0.3, 1e-15);
    auto o = aqft_tcount({10}, plan, 0.3, CostModel::kmm15(), DistanceKind::OperatorNorm);
    EXPECT_NEAR(o.remaining_budget + o.eps_qft_opnorm, 0.3, 1e-15);
    EXPECT_GT(g.remaining_budget, o.remaining_budget);
}

TEST(AqftTcount, OpnormCostsMoreAboveThreshold) {
    // 12 qubits: 66 rotations, 198 leaves > 56.25.
    auto g = aqft_tcount({12}, PruningPlan::none(12), 0.01, CostModel::kmm15(), DistanceKind::Gpi);
    auto o = aqft_tcount({12}, PruningPlan::none(12), 0.01, CostModel::kmm15(), DistanceKind::OperatorNorm);
    EXPECT_GE(o.total_tcount, g.total_tcount);
}

TEST(AqftTcount, MorePruningFewerGates) {
    double prev_fixed = INFINITY;
    int prev_leaves = 1 << 30;
    int steps = 0;
    for (int k_max = 10; k_max >= 2; k_max--) {
        auto plan = PruningPlan::keep_up_to(10, k_max);
        if (aqft_pruning_error(10, plan, DistanceKind::Gpi) >= 0.9) {
            break;
        }
        steps++;
        auto r = aqft_tcount({10}, plan, 0.9, CostModel::kmm15(), DistanceKind::Gpi);
        EXPECT_LT(r.approximable_leaves, prev_leaves);
        EXPECT_LT(static_cast<double>(r.fixed_tcount), prev_fixed);
        prev_leaves = r.approximable_leaves;
        prev_fixed = static_cast<double>(r.fixed_tcount);
    }
    EXPECT_GE(steps, 5);
}

TEST(AqftTcount, Errors) {
    auto kmm = CostModel::kmm15();
    EXPECT_THROW(aqft_tcount({8}, PruningPlan::keep_up_to(8, 3), 0.01, kmm, DistanceKind::Gpi), InfeasibleBudgetError);
    EXPECT_THROW(aqft_tcount({8}, PruningPlan::none(7), 0.01, kmm, DistanceKind::Gpi), std::invalid_argument);
    EXPECT_THROW(aqft_tcount({8}, PruningPlan::none(8), 0.01, kmm, DistanceKind::Frobenius), std::invalid_argument);
    EXPECT_THROW(aqft_tcount({8, 0, 7}, PruningPlan::none(8), 0.01, kmm, DistanceKind::Gpi), std::invalid_argument);
    EXPECT_THROW(aqft_tcount({8}, PruningPlan::none(8), 0, kmm, DistanceKind::Gpi), std::invalid_argument);
    try {
        aqft_tcount({8}, PruningPlan::keep_up_to(8, 3), 0.01, kmm, DistanceKind::OperatorNorm);
    } catch (const InfeasibleBudgetError &e) {
        EXPECT_NE(std::string(e.what()).find("0.010000"), std::string::npos);
    }
}

TEST(QpeBits, Examples) {
    EXPECT_EQ(qpe_bits(8, 0.75), 10);
    EXPECT_EQ(qpe_bits(1, 0), 3);
    int prev = 0;
    for (double p : {0.0, 0.5, 0.9, 0.99, 0.999, 0.9999}) {
        int t = qpe_bits(4, p);
        EXPECT_GE(t, prev);
        prev = t;
    }
    EXPECT_GT(qpe_bits(4, 0.9999), qpe_bits(4, 0.5));
    EXPECT_EQ(qpe_bits(4, 0.9999), 4 + static_cast<int>(std::ceil(std::log2(2 + 1 / (2 * 1e-4)))));
    EXPECT_THROW(qpe_bits(4, 1.0), std::invalid_argument);
    EXPECT_THROW(qpe_bits(0, 0.5), std::invalid_argument);
}

TEST(QpeTcount, InverseQftOnTQubits) {
    auto r = qpe_tcount({8, 0.75, 0.001}, 0.01, CostModel::kmm15(), DistanceKind::Gpi, 4);
    EXPECT_EQ(r.t, 10);
    EXPECT_EQ(r.circuit.kept_rotations, 45);
    EXPECT_EQ(r.circuit.approximable_leaves, 45 * 3 + 4);
    EXPECT_NEAR(r.synthesis_budget, 0.009, 1e-15);
    EXPECT_EQ(r.circuit.additional_leaves, 4);
}

TEST(QpeTcount, OrderedByThreshold) {
    auto kmm = CostModel::kmm15();
    auto g = qpe_tcount({8, 0.75, 0}, 0.01, kmm, DistanceKind::Gpi, 1);
    auto o = qpe_tcount({8, 0.75, 0}, 0.01, kmm, DistanceKind::OperatorNorm, 1);
    ASSERT_GT(g.circuit.approximable_leaves, 56.25);
    EXPECT_GT(o.circuit.total_tcount, g.circuit.total_tcount);
}

TEST(QpeTcount, Errors) {
    auto kmm = CostModel::kmm15();
    EXPECT_THROW(qpe_tcount({8, 0.75, 0.01}, 0.01, kmm, DistanceKind::Gpi, 1), InfeasibleBudgetError);
    EXPECT_THROW(qpe_tcount({8, 0.75, 0}, 0.01, kmm, DistanceKind::Gpi, 0), std::invalid_argument);
    EXPECT_THROW(qpe_tcount({8, 1.0, 0}, 0.01, kmm, DistanceKind::Gpi, 1), std::invalid_argument);
    QpeOptions opts;
    opts.plan = PruningPlan::none(8);
    EXPECT_THROW(qpe_tcount({8, 0.75, 0}, 0.01, kmm, DistanceKind::Gpi, 1, opts), std::invalid_argument);
}

}  // namespace
}  // namespace gpic
