// Copyright 2026 The Tripartite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIPARTITE_LHV_H_
#define TRIPARTITE_LHV_H_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tripartite/inequalities.h"

namespace tripartite {

/// Deterministic local response: outputs[party][choice] in {+1, -1}.
struct LocalStrategy {
    static constexpr int kCount = 64;

    std::array<std::array<int, 2>, kNumParties> outputs{};

    /// Bit (5 - 2*party - choice) of index set means output -1.
    static LocalStrategy from_index(int index);
    int index() const;

    friend bool operator==(const LocalStrategy &, const LocalStrategy &) = default;
};

/// Which two parties share the nonlocal box; the third responds locally.
enum class Partition { kAB_C, kAC_B, kBC_A };

std::string_view partition_name(Partition p);
/// (first, second, solo) party indices.
std::array<int, 3> partition_parties(Partition p);

/// A pair of parties answering jointly (arbitrary function of both setting
/// choices) and a third answering from its own choice only.
struct HybridStrategy {
    static constexpr int kCountPerPartition = 1024;

    Partition partition = Partition::kAB_C;
    /// pair_response[2*x + y] = outputs of (first, second) for choices (x, y).
    std::array<std::array<int, 2>, 4> pair_response{};
    std::array<int, 2> solo_response{};

    /// index in [0, 1024): low 8 bits encode pair_response, high 2 bits solo_response.
    static HybridStrategy from_index(Partition partition, int index);
    int index() const;

    friend bool operator==(const HybridStrategy &, const HybridStrategy &) = default;
};

using Strategy = std::variant<LocalStrategy, HybridStrategy>;

enum class Model { kLocal, kHybrid };

std::string_view model_name(Model m);
Model parse_model(std::string_view name);

/// Every LocalStrategy, in index order.
std::vector<LocalStrategy> enumerate_local();
/// Every HybridStrategy: partitions AB|C, AC|B, BC|A, each in index order.
std::vector<HybridStrategy> enumerate_hybrid();

/// Product of the three deterministic outputs for each setting choice.
CorrelationTensor strategy_tensor(const Strategy &s);

struct LhvMaxResult {
    Functional functional = Functional::kMermin;
    Model model = Model::kLocal;
    /// max |functional| over the model class.
    double max_value = 0;
    /// Signed functional value of the witness.
    double witness_value = 0;
    Strategy witness;
    std::size_t strategies_enumerated = 0;
};

/// Exact maximum over all deterministic strategies of the class. The
/// witness is the first maximizer in enumeration order.
LhvMaxResult lhv_max(Functional functional, Model model);

/// Convex combination of strategy tensors. Weights must be non-negative and
/// sum to 1 within 1e-12; otherwise RangeError.
CorrelationTensor mixture_tensor(std::span<const std::pair<double, Strategy>> weights);

}  // namespace tripartite

#endif  // TRIPARTITE_LHV_H_
