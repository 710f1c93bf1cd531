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

#include "tripartite/polarimetry.h"

#include <cmath>
#include <numbers>

namespace tripartite {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double radians) {
    double w = std::fmod(radians, kTwoPi);
    if (w < 0) {
        w += kTwoPi;
    }
    // fmod of a value just below 0 can round up to exactly 2*pi.
    if (w >= kTwoPi) {
        w = 0.0;
    }
    return w;
}

using Ket2 = Eigen::Vector2cd;

Ket2 ket_r() { return Ket2(Complex(1, 0), Complex(0, -1)) / std::sqrt(2.0); }
Ket2 ket_l() { return Ket2(Complex(1, 0), Complex(0, 1)) / std::sqrt(2.0); }

// Under the fixed R/L convention every equatorial analyzer is a real matrix in
// the H/V basis, so only Re(rho) contributes to the trace.
using Real2 = std::array<std::array<double, 2>, 2>;

Real2 real_part(const Matrix2 &m) {
    return {{{m(0, 0).real(), m(0, 1).real()}, {m(1, 0).real(), m(1, 1).real()}}};
}

// tr(rho (A (x) B (x) C)) for real 2x2 single-party operators.
double expectation(const Matrix8 &rho, const Real2 &a, const Real2 &b, const Real2 &c) {
    double total = 0;
    for (int row = 0; row < kDim; ++row) {
        int ra = (row >> 2) & 1, rb = (row >> 1) & 1, rc = row & 1;
        for (int col = 0; col < kDim; ++col) {
            int ca = (col >> 2) & 1, cb = (col >> 1) & 1, cc = col & 1;
            double op = a[ca][ra] * b[cb][rb] * c[cc][rc];
            if (op != 0.0) {
                total += rho(row, col).real() * op;
            }
        }
    }
    return total;
}

}  // namespace

AnalyzerSetting::AnalyzerSetting(double radians) {
    if (!std::isfinite(radians)) {
        throw RangeError("analyzer phase must be finite");
    }
    phi_ = wrap_angle(radians);
}

AnalyzerSetting AnalyzerSetting::from_degrees(double degrees) {
    return AnalyzerSetting(degrees * std::numbers::pi / 180.0);
}

double AnalyzerSetting::degrees() const { return phi_ * 180.0 / std::numbers::pi; }

bool operator==(const AnalyzerSetting &a, const AnalyzerSetting &b) {
    return circular_distance(a.phi_, b.phi_) <= kAlgebraicTol;
}

double circular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

ProjectorPair analyzer_projectors(AnalyzerSetting phi) {
    const Complex phase = std::polar(1.0, phi.radians());
    Ket2 plus = (ket_r() + phase * ket_l()) / std::sqrt(2.0);
    Ket2 minus = (ket_r() - phase * ket_l()) / std::sqrt(2.0);
    return {plus * plus.adjoint(), minus * minus.adjoint()};
}

Matrix2 analyzer_observable(AnalyzerSetting phi) {
    auto p = analyzer_projectors(phi);
    return p.plus - p.minus;
}

OutcomeDistribution::OutcomeDistribution(const std::array<double, kDim> &probs) : probs_(probs) {
    double total = 0;
    for (double p : probs_) {
        if (!(p >= -kAlgebraicTol && p <= 1.0 + kAlgebraicTol)) {
            throw StateError("outcome probability outside [0, 1]: " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kEigenTol) {
        throw StateError("outcome probabilities do not sum to 1");
    }
}

int OutcomeDistribution::outcome_index(int sa, int sb, int sc) {
    auto bit = [](int s) {
        if (s != 1 && s != -1) {
            throw RangeError("outcome sign must be +1 or -1");
        }
        return s == 1 ? 0 : 1;
    };
    return (bit(sa) << 2) | (bit(sb) << 1) | bit(sc);
}

double OutcomeDistribution::prob(int sa, int sb, int sc) const { return probs_[outcome_index(sa, sb, sc)]; }

std::string OutcomeDistribution::label(int index) {
    std::string out(kNumParties, '+');
    for (int party = 0; party < kNumParties; ++party) {
        if ((index >> (kNumParties - 1 - party)) & 1) {
            out[party] = '-';
        }
    }
    return out;
}

int OutcomeDistribution::parity_sign(int index) {
    int ones = ((index >> 2) & 1) + ((index >> 1) & 1) + (index & 1);
    return (ones % 2 == 0) ? 1 : -1;
}

OutcomeDistribution outcome_distribution(const DensityMatrix &state, const Settings3 &settings) {
    std::array<std::array<Real2, 2>, kNumParties> proj;
    for (int party = 0; party < kNumParties; ++party) {
        auto p = analyzer_projectors(settings[party]);
        proj[party][0] = real_part(p.plus);
        proj[party][1] = real_part(p.minus);
    }
    std::array<double, kDim> probs;
    for (int outcome = 0; outcome < kDim; ++outcome) {
        probs[outcome] = expectation(state.matrix(), proj[0][(outcome >> 2) & 1], proj[1][(outcome >> 1) & 1],
                                     proj[2][outcome & 1]);
    }
    return OutcomeDistribution(probs);
}

double correlation(const DensityMatrix &state, const Settings3 &settings) {
    return expectation(state.matrix(), real_part(analyzer_observable(settings[0])),
                       real_part(analyzer_observable(settings[1])), real_part(analyzer_observable(settings[2])));
}

}  // namespace tripartite
