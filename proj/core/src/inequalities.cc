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

#include "tripartite/inequalities.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace tripartite {

std::string_view functional_name(Functional f) {
    return f == Functional::kMermin ? "mermin" : "svetlichny";
}

Functional parse_functional(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "mermin") {
        return Functional::kMermin;
    }
    if (lower == "svetlichny") {
        return Functional::kSvetlichny;
    }
    throw RangeError("unknown functional '" + std::string(name) + "'");
}

SettingsPairs uniform_pairs_degrees(double phi_deg, double phi_prime_deg) {
    SettingsPair p{AnalyzerSetting::from_degrees(phi_deg), AnalyzerSetting::from_degrees(phi_prime_deg)};
    return {p, p, p};
}

bool any_degenerate(const SettingsPairs &pairs) {
    return std::any_of(pairs.begin(), pairs.end(), [](const SettingsPair &p) { return p.degenerate(); });
}

CorrelationTensor::CorrelationTensor(const std::array<double, kDim> &entries) : e_(entries) {
    for (double e : e_) {
        if (!(std::abs(e) <= 1.0 + kEigenTol)) {
            throw RangeError("correlation entry outside [-1, 1]: " + std::to_string(e));
        }
    }
}

CorrelationTensor correlation_tensor(const DensityMatrix &state, const SettingsPairs &pairs) {
    std::array<double, kDim> e;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                e[CorrelationTensor::index(i, j, k)] = correlation(state, {pairs[0][i], pairs[1][j], pairs[2][k]});
            }
        }
    }
    return CorrelationTensor(e);
}

int functional_coefficient(Functional f, int i, int j, int k) {
    const int primes = i + j + k;
    if (f == Functional::kMermin) {
        if (primes == 1) {
            return 1;
        }
        return primes == 3 ? -1 : 0;
    }
    return primes <= 1 ? 1 : -1;
}

double mermin_value(const CorrelationTensor &t) { return t(0, 0, 1) + t(0, 1, 0) + t(1, 0, 0) - t(1, 1, 1); }

double mermin_partner_value(const CorrelationTensor &t) {
    return t(1, 1, 0) + t(1, 0, 1) + t(0, 1, 1) - t(0, 0, 0);
}

double svetlichny_value(const CorrelationTensor &t) {
    return t(0, 0, 0) + t(0, 0, 1) + t(0, 1, 0) + t(1, 0, 0) - t(0, 1, 1) - t(1, 0, 1) - t(1, 1, 0) - t(1, 1, 1);
}

double functional_value(Functional f, const CorrelationTensor &t) {
    return f == Functional::kMermin ? mermin_value(t) : svetlichny_value(t);
}

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::kConsistentWithLocal:
            return "consistent_with_local";
        case Classification::kRulesOutLocalOnly:
            return "rules_out_local_only";
        case Classification::kRulesOutHybrid:
            return "rules_out_hybrid";
    }
    return "unknown";
}

double InequalityReport::abs_value() const { return std::abs(value); }

InequalityReport classify(double value, Functional functional, bool degenerate) {
    InequalityReport r;
    r.functional = functional;
    r.value = value;
    r.bound = classical_bound(functional);
    r.algebraic_max = algebraic_max(functional);
    r.violated = std::abs(value) > r.bound;
    r.degenerate = degenerate;
    if (r.violated) {
        r.classification = functional == Functional::kMermin ? Classification::kRulesOutLocalOnly
                                                             : Classification::kRulesOutHybrid;
    }
    return r;
}

}  // namespace tripartite
