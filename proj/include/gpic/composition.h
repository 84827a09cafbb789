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

#ifndef GPIC_COMPOSITION_H
#define GPIC_COMPOSITION_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpic {

/// Nonempty list of per-component errors, each in [0, 1).
class ErrorList {
   public:
    explicit ErrorList(std::vector<double> values);
    ErrorList(std::initializer_list<double> values) : ErrorList(std::vector<double>(values)) {}

    /// m copies of eps.
    static ErrorList uniform(double eps, size_t m);

    const std::vector<double> &values() const { return values_; }
    size_t size() const { return values_.size(); }
    double operator[](size_t i) const { return values_[i]; }

   private:
    std::vector<double> values_;
};

inline constexpr double kDefaultApprox2C = 7.5;

/// How error composes across a product of unitaries.
struct BoundMethod {
    enum class Kind { ExactIterative, ApproxI, ApproxII, SumOfError };

    Kind kind = Kind::ExactIterative;
    double c = kDefaultApprox2C;  // only read for ApproxII

    static BoundMethod exact_iterative() { return {Kind::ExactIterative}; }
    static BoundMethod approx1() { return {Kind::ApproxI}; }
    static BoundMethod approx2(double c = kDefaultApprox2C);
    static BoundMethod sum_of_error() { return {Kind::SumOfError}; }

    bool operator==(const BoundMethod &) const = default;
};

/// "exact", "approx1", "approx2", "sum".
std::string_view to_string(BoundMethod::Kind kind);
BoundMethod parse_bound_method(std::string_view name, double c = kDefaultApprox2C);

/// Tensor-product bound sqrt(1 - prod(1 - eps_i^2)).
double tensor_bound(const ErrorList &eps);

/// Product of two unitaries with component errors e1, e2:
/// min{1, sqrt(1 - (1-e1^2)(1-e2^2) + 2 e1 e2 sqrt((1-e1^2/2)(1-e2^2/2)))}.
double mult_bound_pair(double e1, double e2);

/// Left fold of mult_bound_pair in execution order (eps[0] applied first).
double mult_bound_exact(const ErrorList &eps);

/// Closed-form surrogate for the fold:
/// min{1, sqrt(sum eps_i^2 + 2 sum_{i>=2} eps_i S_i sqrt(max{0, 1 - eps_i^2 - S_i^2}))}, S_i = sum_{j<i} eps_j.
double mult_bound_approx1(const ErrorList &eps);

/// min{1, c * tensor_bound(eps)}.
///
/// Only a good stand-in for the exact fold once m is comparable to c^2; for
/// fewer factors it overshoots.
double mult_bound_approx2(const ErrorList &eps, double c = kDefaultApprox2C);

/// Plain sum of errors, the operator-norm composition rule. Not clamped.
double sum_bound(const ErrorList &eps);

/// Dispatches to the product rule selected by `method`.
double product_bound(const ErrorList &eps, const BoundMethod &method);

// Bounds for every prefix eps[0..m), m = 1..size(). Linear time; used by the sweeps.
std::vector<double> mult_bound_exact_prefix(const ErrorList &eps);
std::vector<double> mult_bound_approx1_prefix(const ErrorList &eps);
std::vector<double> tensor_bound_prefix(const ErrorList &eps);

/// Nested product / tensor structure over error-annotated leaves.
///
/// Children are stored in execution order: children[0] is applied first.
/// Instances are not validated on construction; compose_tree_bound validates.
class CompositionTree {
   public:
    enum class Kind { Leaf, Product, Tensor };

    static CompositionTree leaf(double eps, int qubits, std::string label = {});
    static CompositionTree product(std::vector<CompositionTree> children);
    static CompositionTree tensor(std::vector<CompositionTree> children);

    static CompositionTree uniform_product(double eps, size_t m, int qubits);
    static CompositionTree uniform_tensor(double eps, size_t m, int qubits_per_factor);

    Kind kind() const { return kind_; }
    double eps() const { return eps_; }
    const std::string &label() const { return label_; }
    const std::vector<CompositionTree> &children() const { return children_; }

    /// Leaf: its own qubits. Product: the first child's. Tensor: the sum.
    int total_qubits() const;

   private:
    CompositionTree(Kind kind, double eps, int qubits, std::string label, std::vector<CompositionTree> children);

    Kind kind_;
    double eps_;
    int qubits_;
    std::string label_;
    std::vector<CompositionTree> children_;
};

std::string_view to_string(CompositionTree::Kind kind);

/// Malformed tree. path() names the node, e.g. "$.children[1].children[0]".
class TreeError : public std::invalid_argument {
   public:
    TreeError(std::string path, const std::string &message);
    const std::string &path() const { return path_; }

   private:
    std::string path_;
};

/// Throws TreeError for the first offending node found in preorder.
void validate_tree(const CompositionTree &tree);

struct NodeBound {
    std::string path;
    CompositionTree::Kind kind;
    std::string label;
    int qubits;
    double bound;
};

/// Bound on the distance of the whole tree given its leaf errors.
///
/// Leaves yield their eps; tensor nodes combine children with tensor_bound;
/// product nodes use `method`. SumOfError sums at every node and is not
/// clamped; every other result is clamped to [0, 1].
double compose_tree_bound(const CompositionTree &tree, const BoundMethod &method);

/// Every node's bound in postorder (root last).
std::vector<NodeBound> compose_tree_breakdown(const CompositionTree &tree, const BoundMethod &method);

}  // namespace gpic

#endif
