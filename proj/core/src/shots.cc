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

#include "tripartite/shots.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace tripartite {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t keyed_random_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t key = mix64(seed + kGolden);
    key = mix64(key ^ (stream + 1) * kGolden);
    return mix64(key + (counter + 1) * kGolden);
}

double keyed_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(keyed_random_bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

void CountTable::validate() const {
    if (shots_per_setting == 0) {
        throw RangeError("count table needs at least one shot per setting");
    }
    for (const auto &row : counts) {
        std::uint64_t total = 0;
        for (auto c : row) {
            total += c;
        }
        if (total != shots_per_setting) {
            throw RangeError("count table row does not sum to shots_per_setting");
        }
    }
}

CountTable sample_counts(const DensityMatrix &state, const SettingsPairs &pairs, std::uint64_t n_shots,
                         std::uint64_t seed) {
    if (n_shots == 0) {
        throw RangeError("n_shots must be at least 1");
    }
    CountTable table;
    table.shots_per_setting = n_shots;

    auto sample_choice = [&](int choice) {
        int i = (choice >> 2) & 1, j = (choice >> 1) & 1, k = choice & 1;
        auto dist = outcome_distribution(state, {pairs[0][i], pairs[1][j], pairs[2][k]});
        std::array<double, kDim> cdf;
        double running = 0;
        for (int o = 0; o < kDim; ++o) {
            running += std::max(0.0, dist[o]);
            cdf[o] = running;
        }
        for (auto &c : cdf) {
            c /= running;
        }
        auto &row = table.counts[choice];
        for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
            double u = keyed_uniform(seed, static_cast<std::uint64_t>(choice), shot);
            int o = static_cast<int>(std::upper_bound(cdf.begin(), cdf.end() - 1, u) - cdf.begin());
            ++row[o];
        }
    };

    {
        // Each worker owns one row; the scope joins them before the table is returned.
        std::vector<std::jthread> workers;
        workers.reserve(kDim);
        for (int choice = 0; choice < kDim; ++choice) {
            workers.emplace_back(sample_choice, choice);
        }
    }
    return table;
}

TensorEstimate estimate_tensor(const CountTable &counts) {
    counts.validate();
    const double n = static_cast<double>(counts.shots_per_setting);
    std::array<double, kDim> e{};
    std::array<double, kDim> err{};
    for (int choice = 0; choice < kDim; ++choice) {
        std::int64_t signed_sum = 0;
        for (int o = 0; o < kDim; ++o) {
            signed_sum += OutcomeDistribution::parity_sign(o) * static_cast<std::int64_t>(counts.counts[choice][o]);
        }
        e[choice] = static_cast<double>(signed_sum) / n;
        err[choice] = std::sqrt(std::max(0.0, 1.0 - e[choice] * e[choice]) / n);
    }
    return {CorrelationTensor(e), err};
}

EstimatedReport estimate_inequality(const TensorEstimate &estimate, Functional functional, bool degenerate) {
    EstimatedReport out;
    out.report = classify(functional_value(functional, estimate.tensor), functional, degenerate);
    double var = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                if (functional_coefficient(functional, i, j, k) != 0) {
                    double s = estimate.std_error[CorrelationTensor::index(i, j, k)];
                    var += s * s;
                }
            }
        }
    }
    out.std_error = std::sqrt(var);
    const double excess = out.report.abs_value() - out.report.bound;
    if (out.std_error > 0) {
        out.z_score = excess / out.std_error;
    } else if (excess != 0) {
        out.z_score = std::copysign(std::numeric_limits<double>::infinity(), excess);
    }
    return out;
}

EstimatedReport estimate_inequality(const CountTable &counts, Functional functional) {
    return estimate_inequality(estimate_tensor(counts), functional);
}

EstimatedReport exact_inequality(const CorrelationTensor &tensor, Functional functional, bool degenerate) {
    return estimate_inequality(TensorEstimate{tensor, {}}, functional, degenerate);
}

double critical_visibility(const DensityMatrix &state, Functional functional, const SettingsPairs &pairs,
                           double tolerance) {
    const double bound = classical_bound(functional);
    auto value_at = [&](double v) {
        return std::abs(functional_value(functional, correlation_tensor(mix_with_white_noise(state, Visibility(v)), pairs)));
    };
    if (!(value_at(1.0) > bound)) {
        return std::numeric_limits<double>::infinity();
    }
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (value_at(mid) > bound) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace tripartite
