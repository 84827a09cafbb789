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

#ifndef GPIC_HARNESS_H
#define GPIC_HARNESS_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gpic/composition.h"

namespace gpic {

/// Numeric table with named columns, written as CSV with 9 significant digits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of `name`; throws std::out_of_range if absent.
    size_t column(std::string_view name) const;
    bool has_column(std::string_view name) const;
    void write_csv(std::ostream &out) const;
};

/// Formats a value with 9 significant digits ("%.9g").
std::string format_csv_number(double value);

enum class CompositionKind { Product, Tensor };

std::string_view to_string(CompositionKind kind);
CompositionKind parse_composition_kind(std::string_view name);

struct SweepConfig {
    double eps = 0.01;
    int m_max = 101;
    /// Columns of sweep_product; ignored by the other sweeps.
    std::vector<BoundMethod::Kind> methods = {
        BoundMethod::Kind::ExactIterative, BoundMethod::Kind::ApproxI, BoundMethod::Kind::SumOfError};
    CompositionKind kind = CompositionKind::Product;
    double c = kDefaultApprox2C;
};

/// Rows (m, <requested bounds>) for m = 1..m_max on [eps] x m. Bound columns
/// appear in the order exact, approx1, approx2, sum.
Table sweep_product(const SweepConfig &cfg);

/// Rows (m, tensor, sum).
Table sweep_tensor(const SweepConfig &cfg);

/// Rows (m, exact, approx2, difference) with difference = exact - approx2.
Table sweep_approx2(const SweepConfig &cfg);

struct FigureFile {
    std::string name;  // e.g. "fig3_eps0.01.csv"
    Table table;
};

/// The twelve appendix data sets: fig3 (product bounds), fig4 (approx2 vs
/// exact, c = 7.5) and fig5 (tensor bound), four eps values each.
std::vector<FigureFile> appendix_figures();

/// Slack on the exact-bound comparison.
inline constexpr double kViolationSlack = 1e-10;

/// Largest matrix dimension the Monte-Carlo harness will build.
inline constexpr size_t kMaxHarnessDim = 32;

struct MonteCarloConfig {
    int n_qubits = 1;  // per factor
    int m = 2;
    /// m values, or a single value used for every factor.
    std::vector<double> eps = {0.01};
    int trials = 100;
    uint64_t seed = 42;
    CompositionKind kind = CompositionKind::Product;
    double c = kDefaultApprox2C;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct TrialRecord {
    int trial_id = 0;
    int n_qubits = 0;
    int m = 0;
    std::vector<double> eps_list;
    double measured_dp = 0;
    /// Product: exact, approx1, approx2, sum. Tensor: tensor, sum.
    std::map<std::string, double> bound_values;
    /// measured_dp exceeds the exact (product) or tensor bound by more than kViolationSlack.
    bool violation = false;
};

struct MonteCarloResult {
    std::vector<TrialRecord> records;  // ordered by trial_id
    int violations = 0;
    /// Largest measured_dp / exact bound seen (0 when every bound is 0).
    double max_ratio = 0;
};

/// Draws Haar-random V_i, sets U_i = perturb_unitary(V_i, eps_i), and
/// compares D_P of the full product (U_m ... U_1) or tensor product against
/// the composition bounds. Trial seeds come from derive_seed(seed, trial_id),
/// so results do not depend on the thread count.
MonteCarloResult monte_carlo_validate(const MonteCarloConfig &cfg);

/// Writes one CSV row per trial: trial_id, n_qubits, m, eps_list (';'-joined),
/// measured_dp, one column per bound, violation.
void write_trial_csv(std::ostream &out, const MonteCarloResult &result);

/// Default grid for `gpic validate`.
std::vector<MonteCarloConfig> default_validation_grid(uint64_t seed, int trials = 1000);

}  // namespace gpic

#endif
