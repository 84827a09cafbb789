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

#include "gpic/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpic/budget.h"
#include "gpic/circuits.h"
#include "gpic/composition.h"
#include "gpic/harness.h"
#include "gpic/serialize.h"

namespace gpic::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "json";
    std::string path;
};

void add_output_options(CLI::App *cmd, OutputOptions &o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("-o,--output", o.path, "Write to this file instead of stdout");
}

void emit(const OutputOptions &o, const std::string &text, std::ostream &out) {
    if (o.path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + o.path + " for writing");
    }
    f << text;
    if (!f) {
        throw IoError("failed writing " + o.path);
    }
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    f << text;
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

void ensure_dir(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create directory " + dir.string());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::vector<DistanceKind> selected_distances(const std::string &name) {
    if (name == "both") {
        return {DistanceKind::Gpi, DistanceKind::OperatorNorm};
    }
    DistanceKind d = parse_distance_kind(name);
    if (d == DistanceKind::Frobenius) {
        throw std::invalid_argument("distance must be gpi, opnorm or both");
    }
    return {d};
}

const auto kDistanceChoices = CLI::IsMember({"gpi", "opnorm", "both"});
const auto kModelChoices = CLI::IsMember({"kmm15", "selinger15", "rs16"});

// ---------------------------------------------------------------- compose

struct ComposeArgs {
    std::string tree_path;
    std::string method = "exact";
    double c = kDefaultApprox2C;
    bool verbose = false;
    OutputOptions out;
};

int cmd_compose(const ComposeArgs &a, std::ostream &out) {
    const CompositionTree tree = parse_tree(read_file(a.tree_path));
    const BoundMethod method = parse_bound_method(a.method, a.c);
    const auto nodes = compose_tree_breakdown(tree, method);
    const double bound = nodes.back().bound;

    if (a.out.format == "csv") {
        std::ostringstream ss;
        ss << "path,kind,label,qubits,bound\n";
        for (const auto &n : nodes) {
            if (!a.verbose && n.path != "$") {
                continue;
            }
            ss << n.path << ',' << to_string(n.kind) << ',' << n.label << ',' << n.qubits << ','
               << format_csv_number(n.bound) << '\n';
        }
        emit(a.out, ss.str(), out);
        return kExitOk;
    }
    json j = {
        {"schema_version", kSchemaVersion},
        {"method", std::string(to_string(method.kind))},
        {"bound", bound},
    };
    if (method.kind == BoundMethod::Kind::ApproxII) {
        j["c"] = method.c;
    }
    if (a.verbose) {
        json arr = json::array();
        for (const auto &n : nodes) {
            arr.push_back({
                {"path", n.path},
                {"kind", std::string(to_string(n.kind))},
                {"label", n.label},
                {"qubits", n.qubits},
                {"bound", n.bound},
            });
        }
        j["nodes"] = std::move(arr);
    }
    emit(a.out, dump(j), out);
    return kExitOk;
}

// ---------------------------------------------------------------- budget

struct BudgetArgs {
    int n_r = 1;
    double eps = 0.01;
    double delta = 0;
    double c = kDefaultApprox2C;
    std::string model = "kmm15";
    std::string distance = "both";
    int verify_trials = 0;
    uint64_t seed = 42;
    OutputOptions out;
};

int cmd_budget(const BudgetArgs &a, double log_base, std::ostream &out) {
    const CostModel model = parse_cost_model(a.model, log_base);
    const BudgetParams params{a.n_r, a.eps, a.delta, a.c};
    std::vector<BudgetSolution> solutions;
    for (DistanceKind d : selected_distances(a.distance)) {
        solutions.push_back(
            d == DistanceKind::Gpi ? equal_split_gpi(params, model) : equal_split_opnorm(a.n_r, a.eps, model));
    }

    if (a.out.format == "csv") {
        std::ostringstream ss;
        ss << "regime,per_gate_eps,per_gate_tcount,total_tcount,total_tcount_int\n";
        for (const auto &s : solutions) {
            ss << to_string(s.regime) << ',' << format_csv_number(s.per_gate_eps) << ','
               << format_csv_number(s.per_gate_tcount) << ',' << format_csv_number(s.total_tcount) << ','
               << s.total_tcount_int << '\n';
        }
        emit(a.out, ss.str(), out);
        return kExitOk;
    }

    json j = {{"schema_version", kSchemaVersion}};
    for (const auto &s : solutions) {
        json sj = to_json(s);
        sj.erase("schema_version");
        j[std::string(to_string(s.regime))] = std::move(sj);
    }
    if (solutions.size() == 2) {
        const double threshold = gpi_advantage_threshold(a.eps, a.delta, a.c);
        j["comparison"] = {
            {"delta", solutions[1].total_tcount - solutions[0].total_tcount},
            {"delta_selinger", cost_delta_selinger(params, log_base)},
            {"threshold_n_r", threshold},
            {"above_threshold", static_cast<double>(a.n_r) >= threshold},
        };
    }
    if (a.verify_trials > 0) {
        json vj = to_json(verify_equal_split_optimality(params, model, a.verify_trials, a.seed));
        vj.erase("schema_version");
        vj["trials"] = a.verify_trials;
        vj["seed"] = a.seed;
        j["optimality_check"] = std::move(vj);
    }
    emit(a.out, dump(j), out);
    return kExitOk;
}

// ---------------------------------------------------------------- qft / qpe

struct CircuitArgs {
    int n = 2;
    std::optional<int> k_max;
    std::vector<int> prune;
    double eps = 0.01;
    std::string model = "kmm15";
    std::string distance = "both";
    double delta = 0;
    double c = kDefaultApprox2C;
    int rz_per_crk = 3;
    int fixed_t = 7;
    // qpe only
    double p = 0.5;
    double eps_qpe = 0;
    int rotations = 1;
    OutputOptions out;
};

std::optional<PruningPlan> plan_from(const CircuitArgs &a, int n) {
    if (a.k_max && !a.prune.empty()) {
        throw std::invalid_argument("--k-max and --prune are mutually exclusive");
    }
    if (a.k_max) {
        return PruningPlan::keep_up_to(n, *a.k_max);
    }
    if (!a.prune.empty()) {
        return PruningPlan::from_pruned(n, std::set<int>(a.prune.begin(), a.prune.end()));
    }
    return std::nullopt;
}

int cmd_qft(const CircuitArgs &a, double log_base, std::ostream &out) {
    const CostModel model = parse_cost_model(a.model, log_base);
    const QftSpec spec{a.n, a.rz_per_crk, a.fixed_t};
    const PruningPlan plan = plan_from(a, a.n).value_or(PruningPlan::none(a.n));
    const AllocationOptions alloc{a.delta, a.c};
    std::vector<AqftReport> reports;
    for (DistanceKind d : selected_distances(a.distance)) {
        reports.push_back(aqft_tcount(spec, plan, a.eps, model, d, alloc));
    }
    if (a.out.format == "csv") {
        std::ostringstream ss;
        write_aqft_csv(ss, reports.front());
        emit(a.out, ss.str(), out);
        return kExitOk;
    }
    const auto census = qft_rotation_census(a.n);
    json census_j = {{"total", census.total}, {"per_k", json::object()}};
    for (const auto &[k, count] : census.per_k) {
        census_j["per_k"][std::to_string(k)] = count;
    }
    json j = {{"schema_version", kSchemaVersion}, {"census", census_j}, {"model", to_json(model)}};
    for (const auto &r : reports) {
        json rj = to_json(r);
        rj.erase("schema_version");
        j[std::string(to_string(r.distance))] = std::move(rj);
    }
    emit(a.out, dump(j), out);
    return kExitOk;
}

int cmd_qpe(const CircuitArgs &a, double log_base, std::ostream &out) {
    const CostModel model = parse_cost_model(a.model, log_base);
    const QpeSpec spec{a.n, a.p, a.eps_qpe};
    QpeOptions options;
    options.rz_per_crk = a.rz_per_crk;
    options.fixed_tcount_per_crk = a.fixed_t;
    options.allocation = {a.delta, a.c};
    options.plan = plan_from(a, qpe_bits(a.n, a.p));
    std::vector<QpeReport> reports;
    for (DistanceKind d : selected_distances(a.distance)) {
        reports.push_back(qpe_tcount(spec, a.eps, model, d, a.rotations, options));
    }
    if (a.out.format == "csv") {
        std::ostringstream ss;
        ss << "distance,t,synthesis_budget,remaining_budget,approximable_leaves,per_leaf_eps,total_tcount,"
              "total_tcount_int\n";
        for (const auto &r : reports) {
            ss << to_string(r.circuit.distance) << ',' << r.t << ',' << format_csv_number(r.synthesis_budget) << ','
               << format_csv_number(r.circuit.remaining_budget) << ',' << r.circuit.approximable_leaves << ','
               << format_csv_number(r.circuit.per_leaf_eps) << ',' << format_csv_number(r.circuit.total_tcount) << ','
               << r.circuit.total_tcount_int << '\n';
        }
        emit(a.out, ss.str(), out);
        return kExitOk;
    }
    json j = {{"schema_version", kSchemaVersion}, {"t", reports.front().t}, {"model", to_json(model)}};
    for (const auto &r : reports) {
        json rj = to_json(r);
        rj.erase("schema_version");
        j[std::string(to_string(r.circuit.distance))] = std::move(rj);
    }
    emit(a.out, dump(j), out);
    return kExitOk;
}

// ---------------------------------------------------------------- validate / figures

struct ValidateArgs {
    std::string output_dir = "validation";
    uint64_t seed = 42;
    int trials = 1000;
    unsigned threads = 0;
    std::optional<std::string> kind;
    int n = 1;
    std::optional<int> m;
    std::vector<double> eps = {0.01};
};

int cmd_validate(const ValidateArgs &a, std::ostream &out) {
    std::vector<MonteCarloConfig> configs;
    if (a.m || a.kind) {
        MonteCarloConfig cfg;
        cfg.kind = parse_composition_kind(a.kind.value_or("product"));
        cfg.n_qubits = a.n;
        cfg.m = a.m.value_or(2);
        cfg.eps = a.eps;
        cfg.trials = a.trials;
        cfg.seed = a.seed;
        configs.push_back(cfg);
    } else {
        configs = default_validation_grid(a.seed, a.trials);
    }
    ensure_dir(a.output_dir);

    int violations = 0;
    for (size_t i = 0; i < configs.size(); i++) {
        auto cfg = configs[i];
        cfg.threads = a.threads;
        const auto result = monte_carlo_validate(cfg);
        std::ostringstream name;
        name << "validate_" << i << '_' << to_string(cfg.kind) << "_n" << cfg.n_qubits << "_m" << cfg.m << ".csv";
        std::ostringstream csv;
        write_trial_csv(csv, result);
        write_file(std::filesystem::path(a.output_dir) / name.str(), csv.str());
        out << name.str() << ": trials " << cfg.trials << ", violations " << result.violations << ", max ratio "
            << format_csv_number(result.max_ratio) << '\n';
        violations += result.violations;
    }
    out << "violations: " << violations << '\n';
    return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_figures(const std::string &output_dir, std::ostream &out) {
    ensure_dir(output_dir);
    for (const auto &fig : appendix_figures()) {
        std::ostringstream csv;
        fig.table.write_csv(csv);
        write_file(std::filesystem::path(output_dir) / fig.name, csv.str());
        out << fig.name << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Global-phase-invariant error composition and T-count budgeting", "gpic"};
    app.require_subcommand(1);
    double log_base = 2;
    app.add_option("--log-base", log_base, "Logarithm base used by the T-count cost models")->capture_default_str();

    ComposeArgs compose;
    auto *compose_cmd = app.add_subcommand("compose", "Bound the error of a composition tree (JSON)");
    compose_cmd->add_option("tree", compose.tree_path, "Tree file")->required();
    compose_cmd->add_option("--method", compose.method, "Product rule")
        ->check(CLI::IsMember({"exact", "approx1", "approx2", "sum"}))
        ->capture_default_str();
    compose_cmd->add_option("--c", compose.c, "Approximation-II constant")->capture_default_str();
    compose_cmd->add_flag("-v,--verbose", compose.verbose, "Report every node");
    add_output_options(compose_cmd, compose.out);

    BudgetArgs budget;
    auto *budget_cmd = app.add_subcommand("budget", "Optimal error split over N_R rotations");
    budget_cmd->add_option("--n-r", budget.n_r, "Number of R_z rotations")->required();
    budget_cmd->add_option("--eps", budget.eps, "Total error budget")->capture_default_str();
    budget_cmd->add_option("--delta", budget.delta, "Slack subtracted from eps (GPI regime)")->capture_default_str();
    budget_cmd->add_option("--c", budget.c, "Approximation-II constant")->capture_default_str();
    budget_cmd->add_option("--model", budget.model, "Cost model")->check(kModelChoices)->capture_default_str();
    budget_cmd->add_option("--distance", budget.distance, "Regime")->check(kDistanceChoices)->capture_default_str();
    budget_cmd->add_option("--verify-trials", budget.verify_trials, "Also sample this many constrained allocations");
    budget_cmd->add_option("--seed", budget.seed, "Seed for --verify-trials")->capture_default_str();
    add_output_options(budget_cmd, budget.out);

    CircuitArgs qft;
    auto *qft_cmd = app.add_subcommand("qft", "T-count of an (approximate) QFT");
    CircuitArgs qpe;
    auto *qpe_cmd = app.add_subcommand("qpe", "T-count of quantum phase estimation");
    for (auto [cmd, a] : {std::pair{qft_cmd, &qft}, std::pair{qpe_cmd, &qpe}}) {
        cmd->add_option("--n", a->n, cmd == qft_cmd ? "Qubits" : "Bits of accuracy")->required();
        cmd->add_option("--k-max", a->k_max, "Keep controlled-R_k only for k <= k-max");
        cmd->add_option("--prune", a->prune, "Rotation orders to prune")->delimiter(',');
        cmd->add_option("--eps", a->eps, "Total error budget")->capture_default_str();
        cmd->add_option("--model", a->model, "Cost model")->check(kModelChoices)->capture_default_str();
        cmd->add_option("--distance", a->distance, "Regime")->check(kDistanceChoices)->capture_default_str();
        cmd->add_option("--delta", a->delta, "GPI solver slack")->capture_default_str();
        cmd->add_option("--c", a->c, "GPI solver constant")->capture_default_str();
        cmd->add_option("--rz-per-crk", a->rz_per_crk, "Approximable R_z per controlled rotation")
            ->capture_default_str();
        cmd->add_option("--fixed-t", a->fixed_t, "Exact T gates per controlled rotation")->capture_default_str();
        add_output_options(cmd, a->out);
    }
    qpe_cmd->add_option("--p", qpe.p, "Success probability")->required();
    qpe_cmd->add_option("--eps-qpe", qpe.eps_qpe, "Phase-approximation error")->capture_default_str();
    qpe_cmd->add_option("--rotations", qpe.rotations, "Controlled-U rotations to cost")->capture_default_str();

    ValidateArgs validate;
    auto *validate_cmd = app.add_subcommand(
        "validate", "Monte-Carlo check of the bounds against brute-force matrices (exit 1 on violations)");
    validate_cmd->add_option("--output-dir", validate.output_dir, "Directory for trial CSVs")->capture_default_str();
    validate_cmd->add_option("--seed", validate.seed, "Master seed")->capture_default_str();
    validate_cmd->add_option("--trials", validate.trials, "Trials per configuration")->capture_default_str();
    validate_cmd->add_option("--threads", validate.threads, "Worker threads (0 = all cores)");
    validate_cmd->add_option("--kind", validate.kind, "Run one configuration: product or tensor")
        ->check(CLI::IsMember({"product", "tensor"}));
    validate_cmd->add_option("--n", validate.n, "Qubits per factor")->capture_default_str();
    validate_cmd->add_option("--m", validate.m, "Number of factors");
    validate_cmd->add_option("--eps", validate.eps, "Per-factor errors (one value or m values)")->delimiter(',');

    std::string figures_dir = "figures";
    auto *figures_cmd = app.add_subcommand("figures", "Write the twelve appendix CSV data sets");
    figures_cmd->add_option("--output-dir", figures_dir, "Destination directory")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (*compose_cmd) {
            return cmd_compose(compose, out);
        }
        if (*budget_cmd) {
            return cmd_budget(budget, log_base, out);
        }
        if (*qft_cmd) {
            return cmd_qft(qft, log_base, out);
        }
        if (*qpe_cmd) {
            return cmd_qpe(qpe, log_base, out);
        }
        if (*validate_cmd) {
            return cmd_validate(validate, out);
        }
        if (*figures_cmd) {
            return cmd_figures(figures_dir, out);
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const InfeasibleBudgetError &e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace gpic::cli
