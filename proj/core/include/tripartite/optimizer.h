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

#ifndef TRIPARTITE_OPTIMIZER_H_
#define TRIPARTITE_OPTIMIZER_H_

#include <array>
#include <cstdint>
#include <numbers>
#include <vector>

#include "tripartite/inequalities.h"

namespace tripartite {

/// Six analyzer phases in the order (a, a', b, b', c, c'), radians.
using PhaseVector = std::array<double, 2 * kNumParties>;

PhaseVector to_phases(const SettingsPairs &pairs);
SettingsPairs from_phases(const PhaseVector &phases);

struct OptimizationConfig {
    /// Coarse grid spacing; must divide 2*pi into an integer number of cells.
    double grid_step = 15.0 * std::numbers::pi / 180.0;
    /// Pattern search stops once its step falls below this.
    double refine_tolerance = 1e-8;
    int max_refine_iterations = 2000;
    /// Drives the extra random restarts; the grid stage is seed-independent.
    std::uint64_t seed = 0;
    int random_restarts = 4;
    /// Number of best grid points refined.
    int grid_seeds = 10;

    /// Throws ConfigError.
    void validate() const;
};

struct TracePoint {
    int iteration;
    double value;
};

struct OptimizationResult {
    double best_value = 0;
    SettingsPairs best_settings{};
    /// Accepted moves of the winning refinement run.
    std::vector<TracePoint> trace;
    /// Local refinement runs performed (grid seeds plus random restarts).
    int restarts_used = 0;
};

/// |functional| of the correlation tensor at the given settings.
double objective(const DensityMatrix &state, Functional functional, const SettingsPairs &pairs);

/// Maximizes |functional| over the six phases: exhaustive scan of the
/// party-symmetric plane (phi_j = phi, phi'_j = phi') at grid_step, then
/// compass search in all six dimensions from the best grid points and from
/// seeded random starts. Runs whose values agree within refine_tolerance are
/// tied; the lexicographically smallest phase vector wins.
OptimizationResult optimize(const DensityMatrix &state, Functional functional, const OptimizationConfig &config = {});

/// Compass search maximizing |functional| from one start. Exposed for tests.
struct RefineOutcome {
    double value;
    PhaseVector phases;
    std::vector<TracePoint> trace;
};
RefineOutcome refine(const DensityMatrix &state, Functional functional, const PhaseVector &start,
                     double initial_step, const OptimizationConfig &config);

/// Settings that give the same |S_M| and |S_V| on the W state. Generated by
/// the global sign flip phi -> -phi, permutations of the parties, and
/// quarter turns (phi, phi') -> (phi', phi + pi) applied to the parties an
/// even number of times in total (two quarter turns on one party shift both
/// of its phases by pi). All outputs are wrapped to [0, 2*pi) and
/// de-duplicated; the input itself comes first.
std::vector<SettingsPairs> objective_symmetries(const SettingsPairs &settings);

/// Largest per-phase circular distance between two settings (radians).
double settings_distance(const SettingsPairs &a, const SettingsPairs &b);

/// min over objective_symmetries(candidate) of settings_distance to reference.
double distance_modulo_symmetries(const SettingsPairs &candidate, const SettingsPairs &reference);

}  // namespace tripartite

#endif  // TRIPARTITE_OPTIMIZER_H_
