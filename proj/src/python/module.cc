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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "gpic/budget.h"
#include "gpic/circuits.h"
#include "gpic/composition.h"
#include "gpic/distances.h"
#include "gpic/harness.h"
#include "gpic/matrix.h"
#include "gpic/serialize.h"

namespace py = pybind11;

namespace {

using namespace gpic;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray &arr) {
    if (arr.ndim() != 2) {
        throw std::invalid_argument("expected a 2-D array");
    }
    const auto rows = static_cast<size_t>(arr.shape(0));
    const auto cols = static_cast<size_t>(arr.shape(1));
    std::vector<Complex> data(arr.data(), arr.data() + rows * cols);
    return ComplexMatrix(rows, cols, std::move(data));
}

ComplexArray to_array(const ComplexMatrix &m) {
    ComplexArray out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

Unitary to_unitary(const ComplexArray &arr) { return Unitary(to_matrix(arr)); }

py::object from_json(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict table_dict(const Table &t) {
    py::dict d;
    for (size_t c = 0; c < t.columns.size(); c++) {
        std::vector<double> col;
        col.reserve(t.rows.size());
        for (const auto &row : t.rows) {
            col.push_back(row[c]);
        }
        d[py::str(t.columns[c])] = std::move(col);
    }
    return d;
}

ErrorList errors(const std::vector<double> &eps) { return ErrorList(eps); }

}  // namespace

PYBIND11_MODULE(_gpic, m) {
    m.doc() = "Global-phase-invariant error composition and T-count budgeting";

    py::register_exception<TreeError>(m, "TreeError", PyExc_ValueError);
    py::register_exception<InfeasibleBudgetError>(m, "InfeasibleBudgetError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    // Matrices and distances.
    m.def("random_unitary", [](size_t n, uint64_t seed) { return to_array(random_unitary(n, seed).matrix()); },
          py::arg("n_qubits"), py::arg("seed"));
    m.def("perturb_unitary",
          [](const ComplexArray &v, double eps, uint64_t seed) {
              return to_array(perturb_unitary(to_unitary(v), eps, seed).matrix());
          },
          py::arg("v"), py::arg("eps"), py::arg("seed"));
    m.def("dist_gpi", [](const ComplexArray &u, const ComplexArray &v) { return dist_gpi(to_unitary(u), to_unitary(v)); });
    m.def("dist_operator",
          [](const ComplexArray &u, const ComplexArray &v) { return dist_operator(to_unitary(u), to_unitary(v)); });
    m.def("dist_frobenius",
          [](const ComplexArray &u, const ComplexArray &v) { return dist_frobenius(to_unitary(u), to_unitary(v)); });
    m.def("operator_norm", [](const ComplexArray &a) { return operator_norm(to_matrix(a)); });

    // Composition bounds.
    m.def("tensor_bound", [](const std::vector<double> &eps) { return tensor_bound(errors(eps)); });
    m.def("mult_bound_pair", &mult_bound_pair, py::arg("e1"), py::arg("e2"));
    m.def("mult_bound_exact", [](const std::vector<double> &eps) { return mult_bound_exact(errors(eps)); });
    m.def("mult_bound_approx1", [](const std::vector<double> &eps) { return mult_bound_approx1(errors(eps)); });
    m.def("mult_bound_approx2",
          [](const std::vector<double> &eps, double c) { return mult_bound_approx2(errors(eps), c); }, py::arg("eps"),
          py::arg("c") = kDefaultApprox2C);
    m.def("sum_bound", [](const std::vector<double> &eps) { return sum_bound(errors(eps)); });
    m.def("compose_tree",
          [](const std::string &tree_json, const std::string &method, double c, bool verbose) -> py::object {
              const CompositionTree tree = parse_tree(tree_json);
              const BoundMethod bm = parse_bound_method(method, c);
              if (!verbose) {
                  return py::float_(compose_tree_bound(tree, bm));
              }
              py::list nodes;
              for (const auto &n : compose_tree_breakdown(tree, bm)) {
                  py::dict d;
                  d["path"] = n.path;
                  d["kind"] = std::string(to_string(n.kind));
                  d["label"] = n.label;
                  d["qubits"] = n.qubits;
                  d["bound"] = n.bound;
                  nodes.append(d);
              }
              return nodes;
          },
          py::arg("tree_json"), py::arg("method") = "exact", py::arg("c") = kDefaultApprox2C,
          py::arg("verbose") = false);

    // Budgets.
    m.def("tcount_rz",
          [](double eps, const std::string &model, double log_base) {
              return tcount_rz(eps, parse_cost_model(model, log_base));
          },
          py::arg("eps"), py::arg("model") = "kmm15", py::arg("log_base") = 2.0);
    m.def("equal_split",
          [](int n_r, double eps, const std::string &distance, double delta, double c, const std::string &model,
             double log_base) {
              const CostModel cm = parse_cost_model(model, log_base);
              const DistanceKind d = parse_distance_kind(distance);
              if (d == DistanceKind::Gpi) {
                  return from_json(to_json(equal_split_gpi({n_r, eps, delta, c}, cm)));
              }
              if (d == DistanceKind::OperatorNorm) {
                  return from_json(to_json(equal_split_opnorm(n_r, eps, cm)));
              }
              throw std::invalid_argument("distance must be gpi or opnorm");
          },
          py::arg("n_r"), py::arg("eps"), py::arg("distance") = "gpi", py::arg("delta") = 0.0,
          py::arg("c") = kDefaultApprox2C, py::arg("model") = "kmm15", py::arg("log_base") = 2.0);
    m.def("cost_delta",
          [](int n_r, double eps, double delta, double c, const std::string &model, double log_base) {
              return cost_delta({n_r, eps, delta, c}, parse_cost_model(model, log_base));
          },
          py::arg("n_r"), py::arg("eps"), py::arg("delta") = 0.0, py::arg("c") = kDefaultApprox2C,
          py::arg("model") = "kmm15", py::arg("log_base") = 2.0);
    m.def("gpi_advantage_threshold", &gpi_advantage_threshold, py::arg("eps"), py::arg("delta"), py::arg("c"));

    // Circuits.
    m.def("qft_rotation_census", [](int n) { return qft_rotation_census(n).per_k; });
    m.def("prune_error_gpi", &prune_error_gpi);
    m.def("prune_error_opnorm", &prune_error_opnorm);
    m.def("aqft_tcount",
          [](int n, std::optional<int> k_max, double eps, const std::string &distance, const std::string &model,
             double delta, double c, int rz_per_crk, int fixed_t, double log_base) {
              const PruningPlan plan = PruningPlan::keep_up_to(n, k_max.value_or(n));
              return from_json(to_json(aqft_tcount({n, rz_per_crk, fixed_t}, plan, eps,
                                                   parse_cost_model(model, log_base), parse_distance_kind(distance),
                                                   {delta, c})));
          },
          py::arg("n"), py::arg("k_max") = py::none(), py::arg("eps") = 0.01, py::arg("distance") = "gpi",
          py::arg("model") = "kmm15", py::arg("delta") = 0.0, py::arg("c") = kDefaultApprox2C,
          py::arg("rz_per_crk") = 3, py::arg("fixed_t") = 7, py::arg("log_base") = 2.0);
    m.def("qpe_bits", &qpe_bits, py::arg("n"), py::arg("p"));
    m.def("qpe_tcount",
          [](int n, double p, double eps, double eps_qpe, int rotations, const std::string &distance,
             const std::string &model, double log_base) {
              return from_json(to_json(qpe_tcount({n, p, eps_qpe}, eps, parse_cost_model(model, log_base),
                                                  parse_distance_kind(distance), rotations)));
          },
          py::arg("n"), py::arg("p"), py::arg("eps"), py::arg("eps_qpe") = 0.0, py::arg("rotations") = 1,
          py::arg("distance") = "gpi", py::arg("model") = "kmm15", py::arg("log_base") = 2.0);

    // Harness.
    m.def("sweep",
          [](const std::string &kind, double eps, int m_max, double c) {
              SweepConfig cfg;
              cfg.eps = eps;
              cfg.m_max = m_max;
              cfg.c = c;
              if (kind == "product") {
                  cfg.methods = {BoundMethod::Kind::ExactIterative, BoundMethod::Kind::ApproxI,
                                 BoundMethod::Kind::ApproxII, BoundMethod::Kind::SumOfError};
                  return table_dict(sweep_product(cfg));
              }
              if (kind == "tensor") {
                  return table_dict(sweep_tensor(cfg));
              }
              if (kind == "approx2") {
                  return table_dict(sweep_approx2(cfg));
              }
              throw std::invalid_argument("kind must be product, tensor or approx2");
          },
          py::arg("kind"), py::arg("eps"), py::arg("m_max"), py::arg("c") = kDefaultApprox2C);
    m.def("monte_carlo_validate",
          [](const std::string &kind, int n_qubits, int m, std::vector<double> eps, int trials, uint64_t seed,
             unsigned threads) {
              MonteCarloConfig cfg;
              cfg.kind = parse_composition_kind(kind);
              cfg.n_qubits = n_qubits;
              cfg.m = m;
              cfg.eps = std::move(eps);
              cfg.trials = trials;
              cfg.seed = seed;
              cfg.threads = threads;
              MonteCarloResult r;
              {
                  py::gil_scoped_release release;
                  r = monte_carlo_validate(cfg);
              }
              std::vector<double> measured;
              for (const auto &rec : r.records) {
                  measured.push_back(rec.measured_dp);
              }
              py::dict d;
              d["violations"] = r.violations;
              d["max_ratio"] = r.max_ratio;
              d["measured_dp"] = measured;
              return d;
          },
          py::arg("kind"), py::arg("n_qubits"), py::arg("m"), py::arg("eps"), py::arg("trials") = 100,
          py::arg("seed") = 42, py::arg("threads") = 0);
}
