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

#include "tripartite/lhv.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace tripartite {

namespace {

constexpr int sign_of_bit(int bit) { return bit ? -1 : 1; }
constexpr int bit_of_sign(int sign) { return sign == -1 ? 1 : 0; }

void check_sign(int s) {
    if (s != 1 && s != -1) {
        throw RangeError("strategy outputs must be +1 or -1");
    }
}

std::array<int, kNumParties> outputs_for(const LocalStrategy &s, const std::array<int, kNumParties> &choice) {
    return {s.outputs[0][choice[0]], s.outputs[1][choice[1]], s.outputs[2][choice[2]]};
}

std::array<int, kNumParties> outputs_for(const HybridStrategy &s, const std::array<int, kNumParties> &choice) {
    auto [first, second, solo] = partition_parties(s.partition);
    std::array<int, kNumParties> out{};
    const auto &pair = s.pair_response[2 * choice[first] + choice[second]];
    out[first] = pair[0];
    out[second] = pair[1];
    out[solo] = s.solo_response[choice[solo]];
    return out;
}

}  // namespace

LocalStrategy LocalStrategy::from_index(int index) {
    if (index < 0 || index >= kCount) {
        throw RangeError("local strategy index out of range: " + std::to_string(index));
    }
    LocalStrategy s;
    for (int party = 0; party < kNumParties; ++party) {
        for (int choice = 0; choice < 2; ++choice) {
            s.outputs[party][choice] = sign_of_bit((index >> (5 - 2 * party - choice)) & 1);
        }
    }
    return s;
}

int LocalStrategy::index() const {
    int idx = 0;
    for (int party = 0; party < kNumParties; ++party) {
        for (int choice = 0; choice < 2; ++choice) {
            check_sign(outputs[party][choice]);
            idx |= bit_of_sign(outputs[party][choice]) << (5 - 2 * party - choice);
        }
    }
    return idx;
}

std::string_view partition_name(Partition p) {
    switch (p) {
        case Partition::kAB_C:
            return "AB|C";
        case Partition::kAC_B:
            return "AC|B";
        case Partition::kBC_A:
            return "BC|A";
    }
    return "?";
}

std::array<int, 3> partition_parties(Partition p) {
    switch (p) {
        case Partition::kAB_C:
            return {0, 1, 2};
        case Partition::kAC_B:
            return {0, 2, 1};
        case Partition::kBC_A:
            return {1, 2, 0};
    }
    return {0, 1, 2};
}

HybridStrategy HybridStrategy::from_index(Partition partition, int index) {
    if (index < 0 || index >= kCountPerPartition) {
        throw RangeError("hybrid strategy index out of range: " + std::to_string(index));
    }
    HybridStrategy s;
    s.partition = partition;
    for (int input = 0; input < 4; ++input) {
        int bits = (index >> (2 * (3 - input))) & 3;
        s.pair_response[input] = {sign_of_bit((bits >> 1) & 1), sign_of_bit(bits & 1)};
    }
    s.solo_response = {sign_of_bit((index >> 9) & 1), sign_of_bit((index >> 8) & 1)};
    return s;
}

int HybridStrategy::index() const {
    int idx = 0;
    for (int input = 0; input < 4; ++input) {
        check_sign(pair_response[input][0]);
        check_sign(pair_response[input][1]);
        int bits = (bit_of_sign(pair_response[input][0]) << 1) | bit_of_sign(pair_response[input][1]);
        idx |= bits << (2 * (3 - input));
    }
    check_sign(solo_response[0]);
    check_sign(solo_response[1]);
    idx |= bit_of_sign(solo_response[0]) << 9;
    idx |= bit_of_sign(solo_response[1]) << 8;
    return idx;
}

std::string_view model_name(Model m) { return m == Model::kLocal ? "local" : "hybrid"; }

Model parse_model(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "local") {
        return Model::kLocal;
    }
    if (lower == "hybrid") {
        return Model::kHybrid;
    }
    throw RangeError("unknown model '" + std::string(name) + "'");
}

std::vector<LocalStrategy> enumerate_local() {
    std::vector<LocalStrategy> out;
    out.reserve(LocalStrategy::kCount);
    for (int i = 0; i < LocalStrategy::kCount; ++i) {
        out.push_back(LocalStrategy::from_index(i));
    }
    return out;
}

std::vector<HybridStrategy> enumerate_hybrid() {
    std::vector<HybridStrategy> out;
    out.reserve(3 * HybridStrategy::kCountPerPartition);
    for (Partition p : {Partition::kAB_C, Partition::kAC_B, Partition::kBC_A}) {
        for (int i = 0; i < HybridStrategy::kCountPerPartition; ++i) {
            out.push_back(HybridStrategy::from_index(p, i));
        }
    }
    return out;
}

CorrelationTensor strategy_tensor(const Strategy &s) {
    std::array<double, kDim> e{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                auto out = std::visit([&](const auto &st) { return outputs_for(st, {i, j, k}); }, s);
                e[CorrelationTensor::index(i, j, k)] = static_cast<double>(out[0] * out[1] * out[2]);
            }
        }
    }
    return CorrelationTensor(e);
}

namespace {

template <typename S>
LhvMaxResult scan(Functional functional, Model model, const std::vector<S> &strategies) {
    LhvMaxResult best;
    best.functional = functional;
    best.model = model;
    best.max_value = -1;
    best.strategies_enumerated = strategies.size();
    for (const auto &s : strategies) {
        double v = functional_value(functional, strategy_tensor(s));
        // Strict comparison keeps the first maximizer.
        if (std::abs(v) > best.max_value) {
            best.max_value = std::abs(v);
            best.witness_value = v;
            best.witness = s;
        }
    }
    return best;
}

}  // namespace

LhvMaxResult lhv_max(Functional functional, Model model) {
    if (model == Model::kLocal) {
        return scan(functional, model, enumerate_local());
    }
    return scan(functional, model, enumerate_hybrid());
}

CorrelationTensor mixture_tensor(std::span<const std::pair<double, Strategy>> weights) {
    if (weights.empty()) {
        throw RangeError("mixture needs at least one strategy");
    }
    double total = 0;
    std::array<double, kDim> e{};
    for (const auto &[w, s] : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw RangeError("mixture weights must be finite and non-negative");
        }
        total += w;
        auto t = strategy_tensor(s);
        for (int n = 0; n < kDim; ++n) {
            e[n] += w * t.entries()[n];
        }
    }
    if (std::abs(total - 1.0) > kAlgebraicTol) {
        throw RangeError("mixture weights must sum to 1, got " + std::to_string(total));
    }
    return CorrelationTensor(e);
}

}  // namespace tripartite
