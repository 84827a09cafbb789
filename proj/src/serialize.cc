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

#include "gpic/serialize.h"

#include <ostream>
#include <string>

#include "gpic/harness.h"

namespace gpic {

using nlohmann::json;

namespace {

CompositionTree node_from_json(const json &j, const std::string &path) {
    if (!j.is_object()) {
        throw TreeError(path, "expected an object");
    }
    auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
        throw TreeError(path, "missing string field \"kind\"");
    }
    const std::string kind = kind_it->get<std::string>();
    if (kind == "leaf") {
        auto eps = j.find("eps");
        auto qubits = j.find("qubits");
        if (eps == j.end() || !eps->is_number()) {
            throw TreeError(path, "leaf needs a numeric \"eps\"");
        }
        if (qubits == j.end() || !qubits->is_number_integer()) {
            throw TreeError(path, "leaf needs an integer \"qubits\"");
        }
        std::string label;
        if (auto l = j.find("label"); l != j.end()) {
            if (!l->is_string()) {
                throw TreeError(path, "\"label\" must be a string");
            }
            label = l->get<std::string>();
        }
        return CompositionTree::leaf(eps->get<double>(), qubits->get<int>(), std::move(label));
    }
    if (kind != "product" && kind != "tensor") {
        throw TreeError(path, "unknown kind \"" + kind + "\" (expected leaf, product or tensor)");
    }
    auto children_it = j.find("children");
    if (children_it == j.end() || !children_it->is_array()) {
        throw TreeError(path, kind + " needs a \"children\" array");
    }
    std::vector<CompositionTree> children;
    for (size_t i = 0; i < children_it->size(); i++) {
        children.push_back(node_from_json((*children_it)[i], path + ".children[" + std::to_string(i) + "]"));
    }
    return kind == "product" ? CompositionTree::product(std::move(children))
                             : CompositionTree::tensor(std::move(children));
}

json budget_params_json(const BudgetParams &p) {
    return {{"n_r", p.n_r}, {"eps", p.eps}, {"delta", p.delta}, {"c", p.c}};
}

template <typename V>
json int_keyed(const std::map<int, V> &m) {
    json out = json::object();
    for (const auto &[k, v] : m) {
        out[std::to_string(k)] = v;
    }
    return out;
}

}  // namespace

CompositionTree tree_from_json(const json &j) {
    CompositionTree tree = node_from_json(j, "$");
    validate_tree(tree);
    return tree;
}

CompositionTree parse_tree(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw TreeError("$", std::string("invalid JSON: ") + e.what());
    }
    return tree_from_json(j);
}

json to_json(const CompositionTree &tree) {
    if (tree.kind() == CompositionTree::Kind::Leaf) {
        json j = {{"kind", "leaf"}, {"eps", tree.eps()}, {"qubits", tree.total_qubits()}};
        if (!tree.label().empty()) {
            j["label"] = tree.label();
        }
        return j;
    }
    json children = json::array();
    for (const auto &c : tree.children()) {
        children.push_back(to_json(c));
    }
    return {{"kind", std::string(to_string(tree.kind()))}, {"children", std::move(children)}};
}

json to_json(const CostModel &model) {
    json j = {
        {"name", std::string(to_string(model.name))},
        {"k", model.k},
        {"k2", model.k2},
        {"log_base", model.log_base},
    };
    if (model.leading_order_only()) {
        j["warning"] = "leading-order model: the O(log log(1/eps)) term is not included";
    }
    return j;
}

json to_json(const BudgetSolution &s) {
    return {
        {"schema_version", kSchemaVersion},
        {"regime", std::string(to_string(s.regime))},
        {"per_gate_eps", s.per_gate_eps},
        {"per_gate_tcount", s.per_gate_tcount},
        {"total_tcount", s.total_tcount},
        {"total_tcount_int", s.total_tcount_int},
        {"params", budget_params_json(s.params)},
        {"model", to_json(s.model)},
    };
}

json to_json(const OptimalityReport &r) {
    return {
        {"schema_version", kSchemaVersion},
        {"best_found_cost", r.best_found_cost},
        {"equal_split_cost", r.equal_split_cost},
        {"violated", r.violated},
        {"best_allocation", r.best_allocation},
    };
}

json to_json(const AqftReport &r) {
    return {
        {"schema_version", kSchemaVersion},
        {"n", r.n},
        {"distance", std::string(to_string(r.distance))},
        {"kept", r.kept},
        {"pruned", r.pruned},
        {"per_k_count", int_keyed(r.per_k_count)},
        {"per_k_error_gpi", int_keyed(r.per_k_error_gpi)},
        {"per_k_error_opnorm", int_keyed(r.per_k_error_opnorm)},
        {"eps_budget", r.eps_budget},
        {"eps_qft_gpi", r.eps_qft_gpi},
        {"eps_qft_opnorm", r.eps_qft_opnorm},
        {"remaining_budget", r.remaining_budget},
        {"kept_rotations", r.kept_rotations},
        {"additional_leaves", r.additional_leaves},
        {"approximable_leaves", r.approximable_leaves},
        {"per_leaf_eps", r.per_leaf_eps},
        {"rotation_tcount", r.rotation_tcount},
        {"fixed_tcount", r.fixed_tcount},
        {"total_tcount", r.total_tcount},
        {"total_tcount_int", r.total_tcount_int},
    };
}

json to_json(const QpeReport &r) {
    json circuit = to_json(r.circuit);
    circuit.erase("schema_version");
    return {
        {"schema_version", kSchemaVersion},
        {"t", r.t},
        {"eps_total", r.eps_total},
        {"eps_qpe", r.eps_qpe},
        {"synthesis_budget", r.synthesis_budget},
        {"target_rotations", r.target_rotations},
        {"distance", std::string(to_string(r.circuit.distance))},
        {"total_tcount", r.circuit.total_tcount},
        {"total_tcount_int", r.circuit.total_tcount_int},
        {"inverse_qft", std::move(circuit)},
    };
}

void write_aqft_csv(std::ostream &out, const AqftReport &r) {
    out << "k,count,kept,error_gpi,error_opnorm\n";
    for (const auto &[k, count] : r.per_k_count) {
        out << k << ',' << count << ',' << (r.kept.contains(k) ? 1 : 0) << ','
            << format_csv_number(r.per_k_error_gpi.at(k)) << ',' << format_csv_number(r.per_k_error_opnorm.at(k))
            << '\n';
    }
}

}  // namespace gpic
