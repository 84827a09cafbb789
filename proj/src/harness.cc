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

#include <algorithm>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "gpic/distances.h"
#include "gpic/matrix.h"
#include "gpic/rng.h"

namespace gpic {

size_t Table::column(std::string_view name) const {
    for (size_t i = 0; i < columns.size(); i++) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named '" + std::string(name) + "'");
}

bool Table::has_column(std::string_view name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::string format_csv_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void Table::write_csv(std::ostream &out) const {
    for (size_t i = 0; i < columns.size(); i++) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            out << (i ? "," : "") << format_csv_number(row[i]);
        }
        out << '\n';
    }
}

std::string_view to_string(CompositionKind kind) { return kind == CompositionKind::Product ? "product" : "tensor"; }

CompositionKind parse_composition_kind(std::string_view name) {
    if (name == "product") {
        return CompositionKind::Product;
    }
    if (name == "tensor") {
        return CompositionKind::Tensor;
    }
    throw std::invalid_argument("unknown composition kind '" + std::string(name) + "' (expected product or tensor)");
}

namespace {

void check_sweep(const SweepConfig &cfg) {
    if (!(cfg.eps > 0 && cfg.eps < 1)) {
        throw std::invalid_argument("sweep eps must lie in (0, 1)");
    }
    if (cfg.m_max < 1) {
        throw std::invalid_argument("sweep m_max must be >= 1");
    }
}

std::vector<double> running_sum(double eps, int m_max) {
    std::vector<double> out(static_cast<size_t>(m_max));
    double s = 0;
    for (int m = 0; m < m_max; m++) {
        s += eps;
        out[static_cast<size_t>(m)] = s;
    }
    return out;
}

std::vector<double> scaled_clamped(const std::vector<double> &values, double c) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) {
        out.push_back(std::min(1.0, c * v));
    }
    return out;
}

}  // namespace

Table sweep_product(const SweepConfig &cfg) {
    check_sweep(cfg);
    const ErrorList eps = ErrorList::uniform(cfg.eps, static_cast<size_t>(cfg.m_max));
    auto wants = [&](BoundMethod::Kind k) {
        return std::find(cfg.methods.begin(), cfg.methods.end(), k) != cfg.methods.end();
    };
    Table t;
    t.columns.push_back("m");
    std::vector<std::vector<double>> cols;
    if (wants(BoundMethod::Kind::ExactIterative)) {
        t.columns.push_back("exact");
        cols.push_back(mult_bound_exact_prefix(eps));
    }
    if (wants(BoundMethod::Kind::ApproxI)) {
        t.columns.push_back("approx1");
        cols.push_back(mult_bound_approx1_prefix(eps));
    }
    if (wants(BoundMethod::Kind::ApproxII)) {
        t.columns.push_back("approx2");
        cols.push_back(scaled_clamped(tensor_bound_prefix(eps), cfg.c));
    }
    if (wants(BoundMethod::Kind::SumOfError)) {
        t.columns.push_back("sum");
        cols.push_back(running_sum(cfg.eps, cfg.m_max));
    }
    for (size_t i = 0; i < eps.size(); i++) {
        std::vector<double> row{static_cast<double>(i + 1)};
        for (const auto &col : cols) {
            row.push_back(col[i]);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table sweep_tensor(const SweepConfig &cfg) {
    check_sweep(cfg);
    const ErrorList eps = ErrorList::uniform(cfg.eps, static_cast<size_t>(cfg.m_max));
    const auto tensor = tensor_bound_prefix(eps);
    const auto sums = running_sum(cfg.eps, cfg.m_max);
    Table t{{"m", "tensor", "sum"}, {}};
    for (size_t i = 0; i < eps.size(); i++) {
        t.rows.push_back({static_cast<double>(i + 1), tensor[i], sums[i]});
    }
    return t;
}

Table sweep_approx2(const SweepConfig &cfg) {
    check_sweep(cfg);
    if (!(cfg.c > 0)) {
        throw std::invalid_argument("approx2 constant c must be positive");
    }
    const ErrorList eps = ErrorList::uniform(cfg.eps, static_cast<size_t>(cfg.m_max));
    const auto exact = mult_bound_exact_prefix(eps);
    const auto approx2 = scaled_clamped(tensor_bound_prefix(eps), cfg.c);
    Table t{{"m", "exact", "approx2", "difference"}, {}};
    for (size_t i = 0; i < eps.size(); i++) {
        t.rows.push_back({static_cast<double>(i + 1), exact[i], approx2[i], exact[i] - approx2[i]});
    }
    return t;
}

std::vector<FigureFile> appendix_figures() {
    struct Series {
        double eps;
        int m_max;
    };
    const Series wide[] = {{1e-1, 11}, {1e-2, 101}, {1e-3, 1001}, {1e-4, 10001}};
    const double narrow[] = {1e-2, 1e-4, 1e-6, 1e-8};
    auto name = [](int fig, double eps) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "fig%d_eps%g.csv", fig, eps);
        return std::string(buf);
    };

    std::vector<FigureFile> out;
    for (const auto &s : wide) {
        SweepConfig cfg;
        cfg.eps = s.eps;
        cfg.m_max = s.m_max;
        out.push_back({name(3, s.eps), sweep_product(cfg)});
    }
    for (double eps : narrow) {
        SweepConfig cfg;
        cfg.eps = eps;
        cfg.m_max = 101;
        cfg.c = kDefaultApprox2C;
        out.push_back({name(4, eps), sweep_approx2(cfg)});
    }
    for (const auto &s : wide) {
        SweepConfig cfg;
        cfg.eps = s.eps;
        cfg.m_max = s.m_max;
        cfg.kind = CompositionKind::Tensor;
        out.push_back({name(5, s.eps), sweep_tensor(cfg)});
    }
    return out;
}

namespace {

std::vector<double> expand_eps(const MonteCarloConfig &cfg) {
    if (cfg.eps.size() == 1) {
        return std::vector<double>(static_cast<size_t>(cfg.m), cfg.eps[0]);
    }
    if (cfg.eps.size() != static_cast<size_t>(cfg.m)) {
        throw std::invalid_argument(
            "eps list has " + std::to_string(cfg.eps.size()) + " entries, expected 1 or m = " + std::to_string(cfg.m));
    }
    return cfg.eps;
}

TrialRecord run_trial(const MonteCarloConfig &cfg, const std::vector<double> &eps, int trial_id) {
    const uint64_t trial_seed = derive_seed(cfg.seed, static_cast<uint64_t>(trial_id));
    const size_t n = static_cast<size_t>(cfg.n_qubits);

    std::optional<Unitary> ideal;
    std::optional<Unitary> approx;
    for (size_t i = 0; i < eps.size(); i++) {
        Unitary v = random_unitary(n, derive_seed(trial_seed, 2 * i));
        Unitary u = perturb_unitary(v, eps[i], derive_seed(trial_seed, 2 * i + 1));
        if (!ideal) {
            ideal = std::move(v);
            approx = std::move(u);
        } else if (cfg.kind == CompositionKind::Product) {
            // Factor i acts after factors 0..i-1.
            ideal = v * *ideal;
            approx = u * *approx;
        } else {
            ideal = tensor(v, *ideal);
            approx = tensor(u, *approx);
        }
    }

    TrialRecord rec;
    rec.trial_id = trial_id;
    rec.n_qubits = cfg.n_qubits;
    rec.m = cfg.m;
    rec.eps_list = eps;
    rec.measured_dp = dist_gpi(*approx, *ideal);
    const ErrorList list(eps);
    double primary;
    if (cfg.kind == CompositionKind::Product) {
        primary = mult_bound_exact(list);
        rec.bound_values["exact"] = primary;
        rec.bound_values["approx1"] = mult_bound_approx1(list);
        rec.bound_values["approx2"] = mult_bound_approx2(list, cfg.c);
    } else {
        primary = tensor_bound(list);
        rec.bound_values["tensor"] = primary;
    }
    rec.bound_values["sum"] = sum_bound(list);
    rec.violation = rec.measured_dp > primary + kViolationSlack;
    return rec;
}

}  // namespace

MonteCarloResult monte_carlo_validate(const MonteCarloConfig &cfg) {
    if (cfg.n_qubits < 1 || cfg.m < 1 || cfg.trials < 1) {
        throw std::invalid_argument("n_qubits, m and trials must be positive");
    }
    const int total_qubits = cfg.kind == CompositionKind::Product ? cfg.n_qubits : cfg.n_qubits * cfg.m;
    if (total_qubits > 5 || (size_t{1} << total_qubits) > kMaxHarnessDim) {
        throw std::invalid_argument(
            "composition acts on " + std::to_string(total_qubits) + " qubits; matrices larger than " +
            std::to_string(kMaxHarnessDim) + "x" + std::to_string(kMaxHarnessDim) + " are not supported");
    }
    const std::vector<double> eps = expand_eps(cfg);
    ErrorList check(eps);  // validates each eps in [0, 1)

    MonteCarloResult result;
    result.records.resize(static_cast<size_t>(cfg.trials));
    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials));

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (int t = static_cast<int>(w); t < cfg.trials; t += static_cast<int>(workers)) {
                        result.records[static_cast<size_t>(t)] = run_trial(cfg, eps, t);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    for (const auto &rec : result.records) {
        result.violations += rec.violation ? 1 : 0;
        const double bound = cfg.kind == CompositionKind::Product ? rec.bound_values.at("exact")
                                                                   : rec.bound_values.at("tensor");
        if (bound > 0) {
            result.max_ratio = std::max(result.max_ratio, rec.measured_dp / bound);
        }
    }
    return result;
}

void write_trial_csv(std::ostream &out, const MonteCarloResult &result) {
    std::vector<std::string> bound_names;
    if (!result.records.empty()) {
        for (const auto &[name, value] : result.records.front().bound_values) {
            bound_names.push_back(name);
        }
    }
    out << "trial_id,n_qubits,m,eps_list,measured_dp";
    for (const auto &name : bound_names) {
        out << ',' << name;
    }
    out << ",violation\n";
    for (const auto &rec : result.records) {
        out << rec.trial_id << ',' << rec.n_qubits << ',' << rec.m << ',';
        for (size_t i = 0; i < rec.eps_list.size(); i++) {
            out << (i ? ";" : "") << format_csv_number(rec.eps_list[i]);
        }
        out << ',' << format_csv_number(rec.measured_dp);
        for (const auto &name : bound_names) {
            out << ',' << format_csv_number(rec.bound_values.at(name));
        }
        out << ',' << (rec.violation ? 1 : 0) << '\n';
    }
}

std::vector<MonteCarloConfig> default_validation_grid(uint64_t seed, int trials) {
    auto make = [&](CompositionKind kind, int n, int m, std::vector<double> eps) {
        MonteCarloConfig cfg;
        cfg.kind = kind;
        cfg.n_qubits = n;
        cfg.m = m;
        cfg.eps = std::move(eps);
        cfg.trials = trials;
        return cfg;
    };
    std::vector<MonteCarloConfig> grid = {
        make(CompositionKind::Product, 1, 10, {0.05}),
        make(CompositionKind::Product, 2, 5, {0.02}),
        make(CompositionKind::Product, 2, 4, {0.2, 0.01, 0.1, 0.05}),
        make(CompositionKind::Product, 3, 3, {0.3}),
        make(CompositionKind::Tensor, 1, 3, {0.05}),
        make(CompositionKind::Tensor, 1, 5, {0.1, 0.2, 0.01, 0.3, 0.05}),
        make(CompositionKind::Tensor, 2, 2, {0.1}),
    };
    for (size_t i = 0; i < grid.size(); i++) {
        grid[i].seed = derive_seed(seed, i);
    }
    return grid;
}

}  // namespace gpic
