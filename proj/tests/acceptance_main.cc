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

// Standalone acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. Tolerances and runtime limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpic/budget.h"
#include "gpic/circuits.h"
#include "gpic/cli.h"
#include "gpic/composition.h"
#include "gpic/distances.h"
#include "gpic/harness.h"
#include "gpic/matrix.h"

namespace {

using namespace gpic;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char *f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

std::string fmt(const char *f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), f, a, b);
    return buf;
}

Outcome near(Outcome o, const char *name, double got, double want, double tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s = %.9g, expected %.9g +/- %.0e", name, got, want, tol);
    o.require(std::abs(got - want) <= tol, buf);
    return o;
}

Outcome ac1() {
    Outcome o;
    o = near(o, "pair(0.01,0.01)", mult_bound_pair(0.01, 0.01), 0.019999, 1e-6);
    o = near(o, "approx1([0.01]x2)", mult_bound_approx1({0.01, 0.01}), 0.019992, 1e-6);
    o = near(o, "exact([0.01]x3)", mult_bound_exact(ErrorList::uniform(0.01, 3)), 0.029981, 1e-6);
    o = near(o, "approx1([0.01]x3)", mult_bound_approx1(ErrorList::uniform(0.01, 3)), 0.02998, 1e-5);
    return o;
}

Outcome ac2() {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(2, 50);
    std::uniform_real_distribution<double> val(0, 0.2);
    int failures = 0;
    for (int t = 0; t < 100000; t++) {
        std::vector<double> eps(static_cast<size_t>(len(rng)));
        for (auto &e : eps) {
            e = val(rng);
        }
        if (eps[0] == 0) {
            eps[0] = 0.1;
        }
        ErrorList list(eps);
        failures += !(tensor_bound(list) < sum_bound(list));
    }
    o.require(failures == 0, std::to_string(failures) + " lists with tensor_bound >= sum_bound");
    return o;
}

Outcome ac3() {
    Outcome o;
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> val(0, 0.7);
    int failures = 0;
    for (int t = 0; t < 100000; t++) {
        double a = val(rng);
        double b = val(rng);
        if (a == 0 || b == 0) {
            t--;
            continue;
        }
        failures += !(mult_bound_pair(a, b) < a + b);
    }
    o.require(failures == 0, std::to_string(failures) + " pairs with pair bound >= e1 + e2");
    return o;
}

Outcome ac4() {
    Outcome o;
    int failures = 0;
    double worst_equal = 0;
    for (int t = 0; t < 1000; t++) {
        const size_t n = 1 + static_cast<size_t>(t % 3);
        Unitary u = random_unitary(n, 10000 + 2 * static_cast<uint64_t>(t));
        Unitary v = random_unitary(n, 10001 + 2 * static_cast<uint64_t>(t));
        const double bound = dist_frobenius(u, v) / std::sqrt(2.0 * static_cast<double>(u.dim()));
        failures += !(dist_gpi(u, v) <= bound + 1e-12);
        worst_equal = std::max(worst_equal, std::abs(frobenius_relation_margin(u, u)));
    }
    o.require(failures == 0, std::to_string(failures) + " pairs violate D_P <= D_F/sqrt(2N)");
    o.require(worst_equal <= 1e-12, fmt("equality margin %.3g", worst_equal));
    return o;
}

Outcome ac5() {
    Outcome o;
    MonteCarloConfig product;
    product.kind = CompositionKind::Product;
    product.n_qubits = 2;
    product.m = 5;
    product.eps = {0.02};
    product.trials = 1000;
    product.seed = 42;
    MonteCarloConfig tensor = product;
    tensor.kind = CompositionKind::Tensor;
    tensor.n_qubits = 1;
    tensor.m = 3;
    tensor.eps = {0.05};
    auto p = monte_carlo_validate(product);
    auto t = monte_carlo_validate(tensor);
    o.require(p.violations == 0, std::to_string(p.violations) + " product violations");
    o.require(t.violations == 0, std::to_string(t.violations) + " tensor violations");
    o.detail = fmt("max D_P/bound product %.6f, tensor %.6f", p.max_ratio, t.max_ratio) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac6() {
    Outcome o;
    const Unitary id = Unitary::identity(2);
    for (int k = 2; k <= 20; k++) {
        Unitary crk(gates::controlled_rk(k));
        const double dg = std::abs(prune_error_gpi(k) - dist_gpi(crk, id));
        const double dn = std::abs(prune_error_opnorm(k) - operator_norm(crk.matrix() - id.matrix()));
        o.require(dg <= 1e-10, "gpi k=" + std::to_string(k) + fmt(" off by %.3g", dg));
        o.require(dn <= 1e-10, "opnorm k=" + std::to_string(k) + fmt(" off by %.3g", dn));
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    const auto kmm = CostModel::kmm15();
    const BudgetParams p100{100, 0.01, 0, 7.5};
    const double gpi = equal_split_gpi(p100, kmm).total_tcount;
    const double op = equal_split_opnorm(100, 0.01, kmm).total_tcount;
    o = near(o, "GPI total", gpi, 3515.9, 0.5);
    o = near(o, "opnorm total", op, 3643.1, 0.5);
    o = near(o, "delta(100)", op - gpi, 127.3, 2);
    o.require(100 > gpi_advantage_threshold(0.01, 0, 7.5), "threshold not below 100");
    const double d10 = cost_delta({10, 0.01, 0, 7.5}, kmm);
    o.require(d10 < 0, fmt("delta(10) = %.4f, expected < 0", d10));
    return o;
}

Outcome ac8() {
    Outcome o;
    auto r = verify_equal_split_optimality({3, 0.01, 0, 1}, CostModel::kmm15(), 10000, 42);
    o.require(!r.violated, fmt("best sample %.12g beats equal split %.12g", r.best_found_cost, r.equal_split_cost));
    if (o.ok) {
        o.detail = fmt("equal split %.9g, best sample %.9g", r.equal_split_cost, r.best_found_cost);
    }
    return o;
}

Outcome ac9() {
    Outcome o;
    const int n = 8;
    int failures = 0;
    int checked = 0;
    for (int mask = 1; mask < (1 << (n - 1)); mask++) {
        std::set<int> pruned;
        for (int b = 0; b < n - 1; b++) {
            if (mask & (1 << b)) {
                pruned.insert(b + 2);
            }
        }
        auto plan = PruningPlan::from_pruned(n, pruned);
        failures += !(aqft_pruning_error(n, plan, DistanceKind::Gpi) <
                      aqft_pruning_error(n, plan, DistanceKind::OperatorNorm));
        checked++;
    }
    o.require(failures == 0, std::to_string(failures) + " of " + std::to_string(checked) + " pruning sets");
    if (o.ok) {
        o.detail = std::to_string(checked) + " pruning sets";
    }
    return o;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int col(const std::string &name) const {
        for (size_t i = 0; i < header.size(); i++) {
            if (header[i] == name) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
};

Csv read_csv(const std::filesystem::path &p) {
    Csv csv;
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    std::stringstream hs(line);
    for (std::string cell; std::getline(hs, cell, ',');) {
        csv.header.push_back(cell);
    }
    while (std::getline(f, line)) {
        std::vector<double> row;
        std::stringstream rs(line);
        for (std::string cell; std::getline(rs, cell, ',');) {
            row.push_back(std::stod(cell));
        }
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

double eps_from_name(const std::string &name) {
    const auto start = name.find("_eps") + 4;
    return std::stod(name.substr(start, name.size() - 4 - start));
}

Outcome ac10() {
    Outcome o;
    const auto dir = std::filesystem::path(GPIC_TEST_TMPDIR) / "acceptance_figures";
    std::filesystem::remove_all(dir);
    std::ostringstream out, err;
    const int code = cli::run({"figures", "--output-dir", dir.string()}, out, err);
    o.require(code == cli::kExitOk, "figures exited with " + std::to_string(code) + ": " + err.str());
    if (!o.ok) {
        return o;
    }
    int files = 0;
    int order_failures = 0;
    double worst_gap = 0;
    std::string worst_where;
    int gap_failures = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".csv") {
            continue;
        }
        files++;
        const std::string name = entry.path().filename().string();
        const Csv csv = read_csv(entry.path());
        const double eps = eps_from_name(name);
        const int m = csv.col("m");
        const int sum = csv.col("sum");
        const int exact = csv.col("exact");
        const int approx1 = csv.col("approx1");
        for (const auto &row : csv.rows) {
            if (sum >= 0 && approx1 >= 0 && !(row[sum] >= row[approx1] && row[approx1] >= 0)) {
                order_failures++;
            }
            if (sum >= 0 && exact >= 0 && !(row[sum] >= row[exact])) {
                order_failures++;
            }
            if (exact >= 0 && approx1 >= 0 && row[m] * eps <= 1 + 1e-12) {
                const double gap = std::abs(row[approx1] - row[exact]) / row[exact];
                if (gap > 0.01) {
                    gap_failures++;
                }
                if (gap > worst_gap) {
                    worst_gap = gap;
                    worst_where = name + " m=" + std::to_string(static_cast<int>(row[m]));
                }
            }
        }
    }
    o.require(files == 12, std::to_string(files) + " CSV files written");
    o.require(order_failures == 0, std::to_string(order_failures) + " rows break sum >= approx1 >= 0 / sum >= exact");
    o.require(gap_failures == 0, std::to_string(gap_failures) + " rows with approx1/exact gap > 1%, worst " +
                                     fmt("%.2f%%", 100 * worst_gap) + " at " + worst_where);
    if (o.ok) {
        o.detail = fmt("worst approx1/exact gap %.3f%%", 100 * worst_gap);
    }
    return o;
}

struct Criterion {
    int id;
    const char *title;
    double limit_ms;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "appendix composition values", 1, ac1},
        {2, "tensor bound below sum bound, 1e5 lists", 5000, ac2},
        {3, "pair bound below e1 + e2, 1e5 pairs", 1000, ac3},
        {4, "D_P <= D_F/sqrt(2N) on 1000 Haar pairs", 10000, ac4},
        {5, "Monte-Carlo soundness, 2 x 1000 trials", 30000, ac5},
        {6, "pruning errors match 4x4 matrix oracles", 1000, ac6},
        {7, "budget comparison at n_r = 100 and 10", 1, ac7},
        {8, "equal split optimal over 1e4 allocations", 2000, ac8},
        {9, "GPI pruning error below operator norm, n = 8", 1000, ac9},
        {10, "figure regeneration and column ordering", 10000, ac10},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ms >= c.limit_ms) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + fmt("runtime over the %.0f ms limit", c.limit_ms);
        }
        failed += o.ok ? 0 : 1;
        std::printf("AC%-2d %s  %-48s %9.2f ms  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, ms, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
