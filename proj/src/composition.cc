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

#include "gpic/composition.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpic {

namespace {

void require_unit_interval(double e, const char *what) {
    if (!(e >= 0 && e < 1)) {
        throw std::invalid_argument(std::string(what) + ": error " + std::to_string(e) + " outside [0, 1)");
    }
}

// 1 - prod(1 - eps_i^2), accurate when the eps are tiny.
double one_minus_product(const std::vector<double> &eps) {
    double log_sum = 0;
    for (double e : eps) {
        log_sum += std::log1p(-e * e);
    }
    return -std::expm1(log_sum);
}

}  // namespace

ErrorList::ErrorList(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("ErrorList must be nonempty");
    }
    for (double e : values_) {
        require_unit_interval(e, "ErrorList");
    }
}

ErrorList ErrorList::uniform(double eps, size_t m) { return ErrorList(std::vector<double>(m, eps)); }

BoundMethod BoundMethod::approx2(double c) {
    if (!(c > 0) || !std::isfinite(c)) {
        throw std::invalid_argument("approx2 constant c must be positive");
    }
    return {Kind::ApproxII, c};
}

std::string_view to_string(BoundMethod::Kind kind) {
    switch (kind) {
        case BoundMethod::Kind::ExactIterative:
            return "exact";
        case BoundMethod::Kind::ApproxI:
            return "approx1";
        case BoundMethod::Kind::ApproxII:
            return "approx2";
        case BoundMethod::Kind::SumOfError:
            return "sum";
    }
    return "?";
}

BoundMethod parse_bound_method(std::string_view name, double c) {
    if (name == "exact") {
        return BoundMethod::exact_iterative();
    }
    if (name == "approx1") {
        return BoundMethod::approx1();
    }
    if (name == "approx2") {
        return BoundMethod::approx2(c);
    }
    if (name == "sum") {
        return BoundMethod::sum_of_error();
    }
    throw std::invalid_argument(
        "unknown bound method '" + std::string(name) + "' (expected exact, approx1, approx2 or sum)");
}

double tensor_bound(const ErrorList &eps) { return std::min(1.0, std::sqrt(one_minus_product(eps.values()))); }

double mult_bound_pair(double e1, double e2) {
    require_unit_interval(e1, "mult_bound_pair");
    require_unit_interval(e2, "mult_bound_pair");
    // 1 - (1-e1^2)(1-e2^2) expanded so that small errors do not cancel.
    const double a = e1 * e1;
    const double b = e2 * e2;
    const double radicand = a + b - a * b + 2 * e1 * e2 * std::sqrt((1 - a / 2) * (1 - b / 2));
    return std::min(1.0, std::sqrt(radicand));
}

double mult_bound_exact(const ErrorList &eps) { return mult_bound_exact_prefix(eps).back(); }

double mult_bound_approx1(const ErrorList &eps) { return mult_bound_approx1_prefix(eps).back(); }

double mult_bound_approx2(const ErrorList &eps, double c) {
    if (!(c > 0) || !std::isfinite(c)) {
        throw std::invalid_argument("mult_bound_approx2: c must be positive");
    }
    return std::min(1.0, c * tensor_bound(eps));
}

double sum_bound(const ErrorList &eps) {
    return std::accumulate(eps.values().begin(), eps.values().end(), 0.0);
}

double product_bound(const ErrorList &eps, const BoundMethod &method) {
    switch (method.kind) {
        case BoundMethod::Kind::ExactIterative:
            return mult_bound_exact(eps);
        case BoundMethod::Kind::ApproxI:
            return mult_bound_approx1(eps);
        case BoundMethod::Kind::ApproxII:
            return mult_bound_approx2(eps, method.c);
        case BoundMethod::Kind::SumOfError:
            return sum_bound(eps);
    }
    throw std::logic_error("unhandled bound method");
}

std::vector<double> mult_bound_exact_prefix(const ErrorList &eps) {
    std::vector<double> out;
    out.reserve(eps.size());
    double b = eps[0];
    out.push_back(b);
    for (size_t i = 1; i < eps.size(); i++) {
        // Once saturated the bound stays at 1, the largest possible distance.
        b = b >= 1 ? 1.0 : mult_bound_pair(b, eps[i]);
        out.push_back(b);
    }
    return out;
}

std::vector<double> mult_bound_approx1_prefix(const ErrorList &eps) {
    std::vector<double> out;
    out.reserve(eps.size());
    double sum_sq = eps[0] * eps[0];
    double cross = 0;
    double prefix = eps[0];
    out.push_back(std::min(1.0, eps[0]));
    for (size_t i = 1; i < eps.size(); i++) {
        const double e = eps[i];
        sum_sq += e * e;
        cross += 2 * e * prefix * std::sqrt(std::max(0.0, 1 - e * e - prefix * prefix));
        prefix += e;
        out.push_back(std::min(1.0, std::sqrt(sum_sq + cross)));
    }
    return out;
}

std::vector<double> tensor_bound_prefix(const ErrorList &eps) {
    std::vector<double> out;
    out.reserve(eps.size());
    double log_sum = 0;
    for (double e : eps.values()) {
        log_sum += std::log1p(-e * e);
        out.push_back(std::min(1.0, std::sqrt(-std::expm1(log_sum))));
    }
    return out;
}

CompositionTree::CompositionTree(
    Kind kind, double eps, int qubits, std::string label, std::vector<CompositionTree> children)
    : kind_(kind), eps_(eps), qubits_(qubits), label_(std::move(label)), children_(std::move(children)) {}

CompositionTree CompositionTree::leaf(double eps, int qubits, std::string label) {
    return CompositionTree(Kind::Leaf, eps, qubits, std::move(label), {});
}

CompositionTree CompositionTree::product(std::vector<CompositionTree> children) {
    return CompositionTree(Kind::Product, 0, 0, {}, std::move(children));
}

CompositionTree CompositionTree::tensor(std::vector<CompositionTree> children) {
    return CompositionTree(Kind::Tensor, 0, 0, {}, std::move(children));
}

CompositionTree CompositionTree::uniform_product(double eps, size_t m, int qubits) {
    std::vector<CompositionTree> children;
    for (size_t i = 0; i < m; i++) {
        children.push_back(leaf(eps, qubits, "U" + std::to_string(i + 1)));
    }
    return m == 1 ? std::move(children[0]) : product(std::move(children));
}

CompositionTree CompositionTree::uniform_tensor(double eps, size_t m, int qubits_per_factor) {
    std::vector<CompositionTree> children;
    for (size_t i = 0; i < m; i++) {
        children.push_back(leaf(eps, qubits_per_factor, "U" + std::to_string(i + 1)));
    }
    return m == 1 ? std::move(children[0]) : tensor(std::move(children));
}

int CompositionTree::total_qubits() const {
    switch (kind_) {
        case Kind::Leaf:
            return qubits_;
        case Kind::Product:
            return children_.empty() ? 0 : children_.front().total_qubits();
        case Kind::Tensor: {
            int total = 0;
            for (const auto &c : children_) {
                total += c.total_qubits();
            }
            return total;
        }
    }
    return 0;
}

std::string_view to_string(CompositionTree::Kind kind) {
    switch (kind) {
        case CompositionTree::Kind::Leaf:
            return "leaf";
        case CompositionTree::Kind::Product:
            return "product";
        case CompositionTree::Kind::Tensor:
            return "tensor";
    }
    return "?";
}

TreeError::TreeError(std::string path, const std::string &message)
    : std::invalid_argument(path + ": " + message), path_(std::move(path)) {}

namespace {

std::string child_path(const std::string &parent, size_t index) {
    return parent + ".children[" + std::to_string(index) + "]";
}

void validate_node(const CompositionTree &node, const std::string &path) {
    using Kind = CompositionTree::Kind;
    if (node.kind() == Kind::Leaf) {
        if (!(node.eps() >= 0 && node.eps() < 1)) {
            throw TreeError(path, "leaf eps " + std::to_string(node.eps()) + " outside [0, 1)");
        }
        if (node.total_qubits() < 1) {
            throw TreeError(path, "leaf qubits must be positive");
        }
        return;
    }
    if (node.children().size() < 2) {
        throw TreeError(path, std::string(to_string(node.kind())) + " node needs at least 2 children");
    }
    for (size_t i = 0; i < node.children().size(); i++) {
        validate_node(node.children()[i], child_path(path, i));
    }
    if (node.kind() == Kind::Product) {
        const int expected = node.children()[0].total_qubits();
        for (size_t i = 1; i < node.children().size(); i++) {
            const int got = node.children()[i].total_qubits();
            if (got != expected) {
                throw TreeError(
                    child_path(path, i),
                    "product operand acts on " + std::to_string(got) + " qubits, expected " + std::to_string(expected));
            }
        }
    }
}

double combine(CompositionTree::Kind kind, const std::vector<double> &child_bounds, const BoundMethod &method) {
    if (method.kind == BoundMethod::Kind::SumOfError) {
        return std::accumulate(child_bounds.begin(), child_bounds.end(), 0.0);
    }
    for (double b : child_bounds) {
        if (b >= 1) {
            return 1.0;
        }
    }
    ErrorList list(child_bounds);
    if (kind == CompositionTree::Kind::Tensor) {
        return tensor_bound(list);
    }
    return product_bound(list, method);
}

double evaluate(
    const CompositionTree &node, const BoundMethod &method, const std::string &path, std::vector<NodeBound> *sink) {
    double bound;
    if (node.kind() == CompositionTree::Kind::Leaf) {
        bound = node.eps();
    } else {
        std::vector<double> child_bounds;
        child_bounds.reserve(node.children().size());
        for (size_t i = 0; i < node.children().size(); i++) {
            child_bounds.push_back(evaluate(node.children()[i], method, child_path(path, i), sink));
        }
        bound = combine(node.kind(), child_bounds, method);
    }
    if (sink != nullptr) {
        sink->push_back(NodeBound{path, node.kind(), node.label(), node.total_qubits(), bound});
    }
    return bound;
}

}  // namespace

void validate_tree(const CompositionTree &tree) { validate_node(tree, "$"); }

double compose_tree_bound(const CompositionTree &tree, const BoundMethod &method) {
    validate_tree(tree);
    return evaluate(tree, method, "$", nullptr);
}

std::vector<NodeBound> compose_tree_breakdown(const CompositionTree &tree, const BoundMethod &method) {
    validate_tree(tree);
    std::vector<NodeBound> out;
    evaluate(tree, method, "$", &out);
    return out;
}

}  // namespace gpic
