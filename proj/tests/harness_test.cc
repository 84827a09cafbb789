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

#include "gpic/harness.h"

#include <cmath>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "gpic/distances.h"
#include "gpic/matrix.h"
#include "gpic/rng.h"

namespace gpic {
namespace {

TEST(Csv, NumberFormat) {
    EXPECT_EQ(format_csv_number(0.1), "0.1");
    EXPECT_EQ(format_csv_number(1.0 / 3), "0.333333333");
    EXPECT_EQ(format_csv_number(12345678901.0), "1.23456789e+10");
    EXPECT_EQ(format_csv_number(7), "7");
}

TEST(Table, WriteAndLookup) {
    Table t{{"m", "sum"}, {{1, 0.5}, {2, 1}}};
    std::ostringstream ss;
    t.write_csv(ss);
    EXPECT_EQ(ss.str(), "m,sum\n1,0.5\n2,1\n");
    EXPECT_EQ(t.column("sum"), 1u);
    EXPECT_TRUE(t.has_column("m"));
    EXPECT_FALSE(t.has_column("exact"));
    EXPECT_THROW(t.column("exact"), std::out_of_range);
}

TEST(Sweep, ProductColumns) {
    SweepConfig cfg;
    cfg.eps = 0.01;
    cfg.m_max = 5;
    cfg.methods = {BoundMethod::Kind::SumOfError, BoundMethod::Kind::ApproxII, BoundMethod::Kind::ExactIterative,
                   BoundMethod::Kind::ApproxI};
    Table t = sweep_product(cfg);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"m", "exact", "approx1", "approx2", "sum"}));
    ASSERT_EQ(t.rows.size(), 5u);
    EXPECT_EQ(t.rows[2][0], 3);
    EXPECT_EQ(t.rows[2][1], mult_bound_exact(ErrorList::uniform(0.01, 3)));
    EXPECT_EQ(t.rows[2][2], mult_bound_approx1(ErrorList::uniform(0.01, 3)));
    EXPECT_EQ(t.rows[2][3], mult_bound_approx2(ErrorList::uniform(0.01, 3), 7.5));
    EXPECT_NEAR(t.rows[2][4], 0.03, 1e-15);
}

TEST(Sweep, DefaultMethods) {
    Table t = sweep_product({});
    EXPECT_EQ(t.columns, (std::vector<std::string>{"m", "exact", "approx1", "sum"}));
    EXPECT_EQ(t.rows.size(), 101u);
}

TEST(Sweep, TensorAndApprox2) {
    SweepConfig cfg;
    cfg.eps = 0.1;
    cfg.m_max = 4;
    Table t = sweep_tensor(cfg);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"m", "tensor", "sum"}));
    EXPECT_NEAR(t.rows[1][1], 0.141067, 1e-6);
    Table a = sweep_approx2(cfg);
    EXPECT_EQ(a.columns, (std::vector<std::string>{"m", "exact", "approx2", "difference"}));
    EXPECT_EQ(a.rows[0][2], 0.75);
    EXPECT_EQ(a.rows[0][3], a.rows[0][1] - a.rows[0][2]);
    cfg.eps = 0;
    EXPECT_THROW(sweep_tensor(cfg), std::invalid_argument);
    cfg.eps = 0.1;
    cfg.m_max = 0;
    EXPECT_THROW(sweep_product(cfg), std::invalid_argument);
}

TEST(Figures, TwelveFilesWithExpectedShapes) {
    auto figs = appendix_figures();
    ASSERT_EQ(figs.size(), 12u);
    std::set<std::string> names;
    for (const auto &f : figs) {
        names.insert(f.name);
    }
    EXPECT_EQ(names.size(), 12u);
    EXPECT_TRUE(names.contains("fig3_eps0.1.csv"));
    EXPECT_TRUE(names.contains("fig3_eps0.0001.csv"));
    EXPECT_TRUE(names.contains("fig4_eps1e-08.csv"));
    EXPECT_TRUE(names.contains("fig5_eps0.001.csv"));
    for (const auto &f : figs) {
        ASSERT_FALSE(f.table.rows.empty()) << f.name;
        for (const auto &row : f.table.rows) {
            for (double v : row) {
                EXPECT_TRUE(std::isfinite(v)) << f.name;
            }
        }
    }
}

TEST(Figures, SumDominatesEveryBound) {
    for (const auto &f : appendix_figures()) {
        const Table &t = f.table;
        if (!t.has_column("sum")) {
            continue;
        }
        const size_t sum = t.column("sum");
        for (const auto &row : t.rows) {
            for (size_t c = 1; c < row.size(); c++) {
                if (c != sum) {
                    EXPECT_GE(row[sum], row[c] - 1e-15) << f.name << " m=" << row[0] << " col=" << t.columns[c];
                    EXPECT_GE(row[c], 0);
                }
            }
        }
    }
}

TEST(Rng, DeriveSeedIsStableAndSpreads) {
    EXPECT_EQ(derive_seed(42, 0), derive_seed(42, 0));
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < 1000; i++) {
        seen.insert(derive_seed(42, i));
    }
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    // Reference splitmix64 output for state 0.
    uint64_t state = 0;
    EXPECT_EQ(splitmix64(state), 0xe220a8397b1dcdafULL);
}

TEST(MonteCarlo, ProductTrialsAreSound) {
    MonteCarloConfig cfg;
    cfg.n_qubits = 2;
    cfg.m = 5;
    cfg.eps = {0.02};
    cfg.trials = 200;
    auto r = monte_carlo_validate(cfg);
    EXPECT_EQ(r.violations, 0);
    ASSERT_EQ(r.records.size(), 200u);
    for (size_t i = 0; i < r.records.size(); i++) {
        EXPECT_EQ(r.records[i].trial_id, static_cast<int>(i));
        EXPECT_LE(r.records[i].measured_dp, r.records[i].bound_values.at("exact") + kViolationSlack);
        EXPECT_LE(r.records[i].measured_dp, r.records[i].bound_values.at("sum"));
    }
    EXPECT_GT(r.max_ratio, 0);
    EXPECT_LE(r.max_ratio, 1 + 1e-9);
}

TEST(MonteCarlo, TensorTrialsMeetTheBoundExactly) {
    MonteCarloConfig cfg;
    cfg.kind = CompositionKind::Tensor;
    cfg.n_qubits = 1;
    cfg.m = 3;
    cfg.eps = {0.05, 0.1, 0.2};
    cfg.trials = 100;
    auto r = monte_carlo_validate(cfg);
    EXPECT_EQ(r.violations, 0);
    for (const auto &rec : r.records) {
        EXPECT_NEAR(rec.measured_dp, rec.bound_values.at("tensor"), 1e-12);
    }
}

TEST(MonteCarlo, IndependentReconstructionOfOneTrial) {
    MonteCarloConfig cfg;
    cfg.n_qubits = 1;
    cfg.m = 3;
    cfg.eps = {0.1};
    cfg.trials = 4;
    cfg.seed = 99;
    auto r = monte_carlo_validate(cfg);
    const uint64_t ts = derive_seed(99, 2);
    Unitary v0 = random_unitary(1, derive_seed(ts, 0));
    Unitary v1 = random_unitary(1, derive_seed(ts, 2));
    Unitary v2 = random_unitary(1, derive_seed(ts, 4));
    Unitary u0 = perturb_unitary(v0, 0.1, derive_seed(ts, 1));
    Unitary u1 = perturb_unitary(v1, 0.1, derive_seed(ts, 3));
    Unitary u2 = perturb_unitary(v2, 0.1, derive_seed(ts, 5));
    double dp = dist_gpi(u2 * u1 * u0, v2 * v1 * v0);
    EXPECT_NEAR(r.records[2].measured_dp, dp, 1e-14);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
    MonteCarloConfig cfg;
    cfg.n_qubits = 2;
    cfg.m = 3;
    cfg.eps = {0.05};
    cfg.trials = 64;
    cfg.threads = 1;
    auto a = monte_carlo_validate(cfg);
    cfg.threads = 7;
    auto b = monte_carlo_validate(cfg);
    std::ostringstream sa, sb;
    write_trial_csv(sa, a);
    write_trial_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')),
              "trial_id,n_qubits,m,eps_list,measured_dp,approx1,approx2,exact,sum,violation");
}

TEST(MonteCarlo, RejectsBadConfigs) {
    MonteCarloConfig cfg;
    cfg.kind = CompositionKind::Tensor;
    cfg.n_qubits = 2;
    cfg.m = 3;
    EXPECT_THROW(monte_carlo_validate(cfg), std::invalid_argument);
    cfg.kind = CompositionKind::Product;
    cfg.n_qubits = 6;
    EXPECT_THROW(monte_carlo_validate(cfg), std::invalid_argument);
    cfg.n_qubits = 1;
    cfg.eps = {0.1, 0.2};
    EXPECT_THROW(monte_carlo_validate(cfg), std::invalid_argument);
    cfg.eps = {1.0};
    EXPECT_THROW(monte_carlo_validate(cfg), std::invalid_argument);
    cfg.eps = {0.1};
    cfg.trials = 0;
    EXPECT_THROW(monte_carlo_validate(cfg), std::invalid_argument);
}

TEST(MonteCarlo, DefaultGridHasNoViolations) {
    int violations = 0;
    for (auto cfg : default_validation_grid(42, 200)) {
        violations += monte_carlo_validate(cfg).violations;
    }
    EXPECT_EQ(violations, 0);
}

}  // namespace
}  // namespace gpic
