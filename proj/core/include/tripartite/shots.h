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

#ifndef TRIPARTITE_SHOTS_H_
#define TRIPARTITE_SHOTS_H_

#include <array>
#include <cstdint>

#include "tripartite/inequalities.h"

namespace tripartite {

/// Keyed, counter-based random stream: the same (seed, stream, counter)
/// always yields the same 64 bits, independent of evaluation order.
std::uint64_t keyed_random_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
/// Uniform double in [0, 1) from keyed_random_bits.
double keyed_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Outcome counts for each of the eight setting choices.
struct CountTable {
    std::uint64_t shots_per_setting = 0;
    /// counts[CorrelationTensor::index(i,j,k)][outcome index].
    std::array<std::array<std::uint64_t, kDim>, kDim> counts{};

    /// Throws RangeError unless every row sums to shots_per_setting >= 1.
    void validate() const;
};

/// Draws n_shots outcome triples per setting choice from the Born-rule
/// distribution. Shot s of choice c uses keyed_uniform(seed, c, s).
CountTable sample_counts(const DensityMatrix &state, const SettingsPairs &pairs, std::uint64_t n_shots,
                         std::uint64_t seed);

struct TensorEstimate {
    CorrelationTensor tensor;
    /// sqrt((1 - E^2) / n) per entry.
    std::array<double, kDim> std_error{};
};

TensorEstimate estimate_tensor(const CountTable &counts);

struct EstimatedReport {
    InequalityReport report;
    double std_error = 0;
    /// (|value| - bound) / std_error; +-infinity when std_error is 0 and
    /// |value| differs from the bound, 0 when equal.
    double z_score = 0;
};

/// Errors of the contributing terms are combined in quadrature, treating
/// the setting blocks as independent.
EstimatedReport estimate_inequality(const TensorEstimate &estimate, Functional functional, bool degenerate = false);
EstimatedReport estimate_inequality(const CountTable &counts, Functional functional);

/// Exact-value path: the infinite-statistics limit with zero error.
EstimatedReport exact_inequality(const CorrelationTensor &tensor, Functional functional, bool degenerate = false);

/// Smallest visibility v for which mix_with_white_noise(state, v) violates
/// the functional's bound at the given settings, by bisection on exact
/// values. Returns a value > 1 (infinity) when even v = 1 does not violate.
double critical_visibility(const DensityMatrix &state, Functional functional, const SettingsPairs &pairs,
                           double tolerance = 1e-12);

}  // namespace tripartite

#endif  // TRIPARTITE_SHOTS_H_
