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

#ifndef TRIPARTITE_INEQUALITIES_H_
#define TRIPARTITE_INEQUALITIES_H_

#include <array>
#include <string_view>

#include "tripartite/polarimetry.h"

namespace tripartite {

enum class Functional { kMermin, kSvetlichny };

std::string_view functional_name(Functional f);
/// Accepts "mermin" / "svetlichny" (case-insensitive). Throws RangeError otherwise.
Functional parse_functional(std::string_view name);

/// Unprimed (choice 0) and primed (choice 1) analyzer phases for one party.
struct SettingsPair {
    AnalyzerSetting phi;
    AnalyzerSetting phi_prime;

    const AnalyzerSetting &operator[](int choice) const { return choice == 0 ? phi : phi_prime; }
    bool degenerate() const { return phi == phi_prime; }
};

using SettingsPairs = std::array<SettingsPair, kNumParties>;

/// Same pair for all three parties, given in degrees.
SettingsPairs uniform_pairs_degrees(double phi_deg, double phi_prime_deg);
bool any_degenerate(const SettingsPairs &pairs);

/// The eight correlations E(i,j,k), i/j/k = 0 for unprimed, 1 for primed.
class CorrelationTensor {
   public:
    CorrelationTensor() = default;
    /// Entries in flat order index(i,j,k) = 4i + 2j + k. Throws RangeError
    /// when any |E| exceeds 1 + 1e-10.
    explicit CorrelationTensor(const std::array<double, kDim> &entries);

    static constexpr int index(int i, int j, int k) { return 4 * i + 2 * j + k; }

    double operator()(int i, int j, int k) const { return e_[index(i, j, k)]; }
    const std::array<double, kDim> &entries() const { return e_; }

   private:
    std::array<double, kDim> e_{};
};

CorrelationTensor correlation_tensor(const DensityMatrix &state, const SettingsPairs &pairs);

/// E001 + E010 + E100 - E111.
double mermin_value(const CorrelationTensor &t);
/// Mermin expression with primed and unprimed roles exchanged:
/// E110 + E101 + E011 - E000.
double mermin_partner_value(const CorrelationTensor &t);
/// E000 + E001 + E010 + E100 - E011 - E101 - E110 - E111.
double svetlichny_value(const CorrelationTensor &t);
double functional_value(Functional f, const CorrelationTensor &t);

/// Coefficient (+1/-1/0) of E(i,j,k) in the functional.
int functional_coefficient(Functional f, int i, int j, int k);

/// Bound for local (Mermin) or hybrid local-nonlocal (Svetlichny) models.
constexpr double classical_bound(Functional f) { return f == Functional::kMermin ? 2.0 : 4.0; }
constexpr double algebraic_max(Functional f) { return f == Functional::kMermin ? 4.0 : 8.0; }

enum class Classification { kConsistentWithLocal, kRulesOutLocalOnly, kRulesOutHybrid };

std::string_view classification_name(Classification c);

struct InequalityReport {
    Functional functional = Functional::kMermin;
    double value = 0;
    double bound = 0;
    double algebraic_max = 0;
    bool violated = false;
    Classification classification = Classification::kConsistentWithLocal;
    /// Some party measured with phi == phi'; violation claims are meaningless.
    bool degenerate = false;

    double abs_value() const;
};

/// Violation is judged on |value|. A Mermin violation only excludes fully
/// local models; only a Svetlichny violation excludes hybrid models.
InequalityReport classify(double value, Functional functional, bool degenerate = false);

}  // namespace tripartite

#endif  // TRIPARTITE_INEQUALITIES_H_
