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

#ifndef TRIPARTITE_POLARIMETRY_H_
#define TRIPARTITE_POLARIMETRY_H_

#include <array>
#include <string>

#include <Eigen/Dense>

#include "tripartite/state.h"

namespace tripartite {

using Matrix2 = Eigen::Matrix2cd;

/// Analyzer phase phi in radians, wrapped to [0, 2*pi).
class AnalyzerSetting {
   public:
    AnalyzerSetting() = default;
    /// Throws RangeError for non-finite input.
    explicit AnalyzerSetting(double radians);
    static AnalyzerSetting from_degrees(double degrees);

    double radians() const { return phi_; }
    double degrees() const;

    /// Circular comparison: phi and phi + 2*pi are equal.
    friend bool operator==(const AnalyzerSetting &a, const AnalyzerSetting &b);

   private:
    double phi_ = 0.0;
};

/// Smallest absolute angular separation on the circle, in [0, pi].
double circular_distance(double a, double b);

/// sigma(phi) = |phi+><phi+| - |phi-><phi-| with
/// |phi+-> = (|R> +- e^{i phi}|L>)/sqrt(2), expressed in the H/V basis.
/// Equals cos(phi) Z - sin(phi) X.
Matrix2 analyzer_observable(AnalyzerSetting phi);

struct ProjectorPair {
    Matrix2 plus;   ///< detection in the |phi+> port, outcome +1
    Matrix2 minus;  ///< detection in the |phi-> port, outcome -1
};

ProjectorPair analyzer_projectors(AnalyzerSetting phi);

using Settings3 = std::array<AnalyzerSetting, kNumParties>;

/// Probabilities of the eight outcome triples. Index bits follow the basis
/// convention: party a is the most significant bit, bit 0 = outcome +1,
/// bit 1 = outcome -1. Index 1 is therefore (+,+,-).
class OutcomeDistribution {
   public:
    explicit OutcomeDistribution(const std::array<double, kDim> &probs);

    const std::array<double, kDim> &probs() const { return probs_; }
    double operator[](int index) const { return probs_[index]; }
    /// Signs must be +1 or -1.
    double prob(int sa, int sb, int sc) const;

    /// "+++", "++-", ... for outcome index 0..7.
    static std::string label(int index);
    static int outcome_index(int sa, int sb, int sc);
    /// Product s_a * s_b * s_c for an outcome index.
    static int parity_sign(int index);

   private:
    std::array<double, kDim> probs_;
};

OutcomeDistribution outcome_distribution(const DensityMatrix &state, const Settings3 &settings);

/// E = tr(rho sigma_a (x) sigma_b (x) sigma_c).
double correlation(const DensityMatrix &state, const Settings3 &settings);

}  // namespace tripartite

#endif  // TRIPARTITE_POLARIMETRY_H_
