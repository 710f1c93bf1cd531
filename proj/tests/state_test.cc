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

#include "tripartite/state.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace tripartite;

TEST(state, basis_labels) {
    EXPECT_EQ(basis_index("HHH"), 0);
    EXPECT_EQ(basis_index("HHV"), 1);
    EXPECT_EQ(basis_index("HVH"), 2);
    EXPECT_EQ(basis_index("VHH"), 4);
    EXPECT_EQ(basis_index("VVV"), 7);
    for (int i = 0; i < kDim; ++i) {
        EXPECT_EQ(basis_index(basis_label(i)), i);
    }
    EXPECT_THROW(basis_index("HH"), StateError);
    EXPECT_THROW(basis_index("HRV"), StateError);
}

TEST(state, make_w) {
    auto w = make_w();
    EXPECT_NEAR(w.amplitude("HHV").real(), 0.5773502691896258, 1e-15);
    EXPECT_NEAR(w.amplitude("HVH").real(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(w.amplitude("VHH").real(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(w.amplitude("HHH"), Complex(0, 0));
    EXPECT_EQ(w.amplitude("VVV"), Complex(0, 0));
    EXPECT_NEAR(w.squared_norm(), 1.0, 1e-12);
}

TEST(state, make_ghz) {
    auto hv = make_ghz(GhzBasis::kLinearHV);
    EXPECT_NEAR(hv.amplitude("HHH").real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(hv.amplitude("VVV").real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(hv.amplitude("HHV"), Complex(0, 0));

    auto rl = make_ghz(GhzBasis::kCircularRL);
    EXPECT_NEAR(rl.squared_norm(), 1.0, 1e-12);
    // (|RRR> + |LLL>)/sqrt2 has even-V components with real amplitude
    // (+-1/2) and odd-V components zero.
    EXPECT_NEAR(rl.amplitude("HHH").real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(rl.amplitude("HHV")), 0.0, 1e-15);
    EXPECT_NEAR(rl.amplitude("HVV").real(), -0.5, 1e-15);
}

TEST(state, rejects_unnormalized) {
    std::array<Complex, kDim> amps{};
    amps[0] = 1.0;
    amps[1] = 1.0;
    EXPECT_THROW(PureState{amps}, StateError);
    amps[1] = 1e-5;
    EXPECT_THROW(PureState{amps}, StateError);
    std::array<Complex, kDim> zero{};
    EXPECT_THROW(PureState::normalized(zero), StateError);
}

TEST(state, pure_to_density) {
    auto rho = pure_to_density(make_w());
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    // Outer product of the 1/sqrt3 amplitudes by hand.
    EXPECT_NEAR(rho.entry("HHV", "HVH").real(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(rho.entry("HHV", "HHH").real(), 0.0, 1e-15);
    Matrix8 sq = rho.matrix() * rho.matrix();
    EXPECT_LT((sq - rho.matrix()).cwiseAbs().maxCoeff(), 1e-10);

    auto ghz = pure_to_density(make_ghz(GhzBasis::kLinearHV));
    EXPECT_NEAR(ghz.entry("HHH", "VVV").real(), 0.5, 1e-15);
}

TEST(state, density_validation) {
    Matrix8 m = Matrix8::Identity() / 8.0;
    m(0, 1) = 0.1;  // not Hermitian
    EXPECT_THROW(DensityMatrix{m}, StateError);

    Matrix8 t = Matrix8::Identity() / 7.0;
    EXPECT_THROW(DensityMatrix{t}, StateError);

    Matrix8 neg = Matrix8::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{neg}, StateError);
}

TEST(state, white_noise) {
    auto rho = pure_to_density(make_w());
    auto same = mix_with_white_noise(rho, Visibility(1.0));
    EXPECT_LT((same.matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-15);

    auto flat = mix_with_white_noise(rho, Visibility(0.0));
    EXPECT_LT((flat.matrix() - maximally_mixed().matrix()).cwiseAbs().maxCoeff(), 1e-15);

    auto half = mix_with_white_noise(rho, Visibility(0.5));
    EXPECT_NEAR(half.entry("HHV", "HHV").real(), 0.5 / 3.0 + 0.5 / 8.0, 1e-15);
    EXPECT_NEAR(half.entry("HHV", "HHV").real(), 0.22916666666666666, 1e-15);

    EXPECT_THROW(Visibility(-0.01), RangeError);
    EXPECT_THROW(Visibility(1.01), RangeError);
    EXPECT_THROW(Visibility(std::nan("")), RangeError);
}

TEST(state, property_invariants_random) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        auto psi = gen::random_pure(rng);
        EXPECT_NEAR(psi.squared_norm(), 1.0, 1e-12);
        auto rho = pure_to_density(psi);
        EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
        EXPECT_LT((rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        auto ev = rho.eigenvalues();
        EXPECT_NEAR(ev[kDim - 1], 1.0, 1e-10);
        for (int i = 0; i < kDim - 1; ++i) {
            EXPECT_NEAR(ev[i], 0.0, 1e-10);
        }
    }
}

TEST(state, white_noise_is_affine_in_visibility) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        auto rho = gen::random_state(rng);
        double v1 = u(rng), v2 = u(rng);
        auto m1 = mix_with_white_noise(rho, Visibility(v1)).matrix();
        auto m2 = mix_with_white_noise(rho, Visibility(v2)).matrix();
        auto mid = mix_with_white_noise(rho, Visibility(0.5 * (v1 + v2))).matrix();
        EXPECT_LT((mid - 0.5 * (m1 + m2)).cwiseAbs().maxCoeff(), 1e-12);
        auto ev = mix_with_white_noise(rho, Visibility(v1)).eigenvalues();
        EXPECT_GE(ev[0], -1e-10);
    }
}
