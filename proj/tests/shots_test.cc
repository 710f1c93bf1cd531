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

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace tripartite;

namespace {

const SettingsPairs kCriticized = uniform_pairs_degrees(90.0, 0.0);
const SettingsPairs kOptimal = uniform_pairs_degrees(35.264, 144.736);

const DensityMatrix &w_state() {
    static const DensityMatrix rho = pure_to_density(make_w());
    return rho;
}

CountTable single_outcome_table(std::uint64_t n, int outcome) {
    CountTable c;
    c.shots_per_setting = n;
    for (auto &row : c.counts) {
        row[outcome] = n;
    }
    return c;
}

}  // namespace

TEST(shots, keyed_stream_is_stable_and_spread) {
    EXPECT_EQ(keyed_random_bits(1, 2, 3), keyed_random_bits(1, 2, 3));
    EXPECT_NE(keyed_random_bits(1, 2, 3), keyed_random_bits(1, 2, 4));
    EXPECT_NE(keyed_random_bits(1, 2, 3), keyed_random_bits(1, 3, 3));
    EXPECT_NE(keyed_random_bits(1, 2, 3), keyed_random_bits(2, 2, 3));
    double mean = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = keyed_uniform(7, 0, i);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        mean += u;
    }
    EXPECT_NEAR(mean / n, 0.5, 5 * std::sqrt(1.0 / 12.0 / n));
}

TEST(shots, rejects_zero_shots) {
    EXPECT_THROW(sample_counts(w_state(), kCriticized, 0, 1), RangeError);
    CountTable empty;
    EXPECT_THROW(estimate_tensor(empty), RangeError);
    CountTable uneven = single_outcome_table(10, 0);
    uneven.counts[3][1] = 1;
    EXPECT_THROW(estimate_tensor(uneven), RangeError);
}

TEST(shots, deterministic_under_fixed_seed) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto a = sample_counts(w_state(), kOptimal, 200, seed);
        auto b = sample_counts(w_state(), kOptimal, 200, seed);
        ASSERT_EQ(a.counts, b.counts);
        auto ra = estimate_inequality(a, Functional::kSvetlichny);
        auto rb = estimate_inequality(b, Functional::kSvetlichny);
        ASSERT_EQ(ra.report.value, rb.report.value);
        ASSERT_EQ(ra.std_error, rb.std_error);
        ASSERT_EQ(ra.z_score, rb.z_score);
    }
    EXPECT_NE(sample_counts(w_state(), kOptimal, 1000, 1).counts, sample_counts(w_state(), kOptimal, 1000, 2).counts);
}

TEST(shots, rows_sum_to_shots) {
    auto c = sample_counts(w_state(), kOptimal, 1234, 5);
    EXPECT_NO_THROW(c.validate());
}

TEST(shots, w_criticized_all_primed_entry) {
    const std::uint64_t n = 100000;
    auto est = estimate_tensor(sample_counts(w_state(), kCriticized, n, 2024));
    EXPECT_NEAR(est.tensor(1, 1, 1), -1.0, 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST(shots, maximally_mixed_frequencies_are_uniform) {
    const std::uint64_t n = 10000;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto c = sample_counts(maximally_mixed(), uniform_pairs_degrees(10, 200), n, seed);
        for (const auto &row : c.counts) {
            for (auto count : row) {
                EXPECT_NEAR(static_cast<double>(count) / n, 1.0 / 8.0, 0.02);
            }
        }
    }
}

TEST(shots, estimator_edge_cases) {
    auto all_plus = estimate_tensor(single_outcome_table(50, 0));
    for (int n = 0; n < kDim; ++n) {
        EXPECT_EQ(all_plus.tensor.entries()[n], 1.0);
        EXPECT_EQ(all_plus.std_error[n], 0.0);
    }
    CountTable uniform;
    uniform.shots_per_setting = 800;
    for (auto &row : uniform.counts) {
        row.fill(100);
    }
    auto u = estimate_tensor(uniform);
    for (int n = 0; n < kDim; ++n) {
        EXPECT_EQ(u.tensor.entries()[n], 0.0);
        EXPECT_NEAR(u.std_error[n], 1.0 / std::sqrt(800.0), 1e-15);
    }
    auto rep = estimate_inequality(uniform, Functional::kMermin);
    EXPECT_NEAR(rep.std_error, std::sqrt(4.0 / 800.0), 1e-15);
    EXPECT_NEAR(rep.z_score, (0.0 - 2.0) / rep.std_error, 1e-12);
    auto srep = estimate_inequality(uniform, Functional::kSvetlichny);
    EXPECT_NEAR(srep.std_error, std::sqrt(8.0 / 800.0), 1e-15);
}

TEST(shots, single_entry_close_to_oracle) {
    const std::uint64_t n = 1000000;
    auto est = estimate_tensor(sample_counts(w_state(), kCriticized, n, 77));
    double exact = oracle::correlation(oracle::outer(oracle::w_ket()), std::numbers::pi / 2, std::numbers::pi / 2, 0);
    EXPECT_NEAR(exact, 2.0 / 3.0, 1e-12);
    EXPECT_LT(std::abs(est.tensor(0, 0, 1) - exact), 5 * est.std_error[CorrelationTensor::index(0, 0, 1)]);
}

TEST(shots, exact_injection_path) {
    auto t = correlation_tensor(w_state(), kCriticized);
    auto r = exact_inequality(t, Functional::kSvetlichny);
    EXPECT_NEAR(r.report.value, 3.0, 1e-12);
    EXPECT_FALSE(r.report.violated);
    EXPECT_EQ(r.std_error, 0.0);
    EXPECT_TRUE(std::isinf(r.z_score) && r.z_score < 0);

    auto opt = exact_inequality(correlation_tensor(w_state(), kOptimal), Functional::kSvetlichny);
    EXPECT_TRUE(opt.report.violated);
    EXPECT_TRUE(std::isinf(opt.z_score) && opt.z_score > 0);
}

TEST(shots, w_optimal_finite_statistics) {
    const std::uint64_t n = 1000000;
    auto r = estimate_inequality(sample_counts(w_state(), kOptimal, n, 12345), Functional::kSvetlichny);
    EXPECT_LT(std::abs(r.report.value - 4.354), 5 * r.std_error);
    EXPECT_GT(r.z_score, 3.0);
    EXPECT_EQ(r.report.classification, Classification::kRulesOutHybrid);
}

TEST(shots, half_visibility_w_is_not_violating) {
    const std::uint64_t n = 1000000;
    auto noisy = mix_with_white_noise(w_state(), Visibility(0.5));
    auto r = estimate_inequality(sample_counts(noisy, kOptimal, n, 9), Functional::kSvetlichny);
    EXPECT_LT(std::abs(r.report.value - 0.5 * 4.354), 5 * r.std_error);
    EXPECT_FALSE(r.report.violated);
}

TEST(shots, svetlichny_linear_in_visibility) {
    const double full = svetlichny_value(correlation_tensor(w_state(), kOptimal));
    for (int n = 0; n <= 9; ++n) {
        double v = 0.05 + 0.1 * n;
        auto rho = mix_with_white_noise(w_state(), Visibility(v));
        EXPECT_NEAR(svetlichny_value(correlation_tensor(rho, kOptimal)), v * full, 1e-10);
    }
}

TEST(shots, critical_visibility) {
    double v = critical_visibility(w_state(), Functional::kSvetlichny, kOptimal);
    EXPECT_NEAR(v, 4.0 / 4.354, 1e-3);
    double exact = svetlichny_value(correlation_tensor(w_state(), kOptimal));
    EXPECT_NEAR(v, 4.0 / exact, 1e-10);
    EXPECT_TRUE(std::isinf(critical_visibility(w_state(), Functional::kSvetlichny, kCriticized)));
}

TEST(shots, estimator_concentrates_with_n) {
    auto t = correlation_tensor(w_state(), kOptimal);
    for (std::uint64_t n : {1000u, 10000u, 100000u}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto est = estimate_tensor(sample_counts(w_state(), kOptimal, n, 1000 + seed));
            for (int e = 0; e < kDim; ++e) {
                // Per-entry binomial error is at most 1/sqrt(n).
                EXPECT_LT(std::abs(est.tensor.entries()[e] - t.entries()[e]), 4.0 / std::sqrt(static_cast<double>(n)));
            }
        }
    }
}
