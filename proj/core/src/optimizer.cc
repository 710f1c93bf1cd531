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

#include "tripartite/optimizer.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

namespace tripartite {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x) { return AnalyzerSetting(x).radians(); }

PhaseVector wrapped(PhaseVector p) {
    for (auto &x : p) {
        x = wrap(x);
    }
    return p;
}

double evaluate(const DensityMatrix &state, Functional functional, const PhaseVector &phases) {
    return objective(state, functional, from_phases(phases));
}

}  // namespace

PhaseVector to_phases(const SettingsPairs &pairs) {
    PhaseVector out;
    for (int party = 0; party < kNumParties; ++party) {
        out[2 * party] = pairs[party].phi.radians();
        out[2 * party + 1] = pairs[party].phi_prime.radians();
    }
    return out;
}

SettingsPairs from_phases(const PhaseVector &phases) {
    SettingsPairs out;
    for (int party = 0; party < kNumParties; ++party) {
        out[party] = {AnalyzerSetting(phases[2 * party]), AnalyzerSetting(phases[2 * party + 1])};
    }
    return out;
}

void OptimizationConfig::validate() const {
    if (!(grid_step > 0) || !std::isfinite(grid_step) || grid_step > kTwoPi) {
        throw ConfigError("grid_step must be in (0, 2*pi]");
    }
    double cells = std::round(kTwoPi / grid_step);
    if (std::abs(cells * grid_step - kTwoPi) > 1e-12) {
        throw ConfigError("grid_step must divide 2*pi into an integer number of cells");
    }
    if (!(refine_tolerance > 0) || !std::isfinite(refine_tolerance)) {
        throw ConfigError("refine_tolerance must be positive");
    }
    if (max_refine_iterations < 1) {
        throw ConfigError("max_refine_iterations must be at least 1");
    }
    if (random_restarts < 0) {
        throw ConfigError("random_restarts must be non-negative");
    }
    if (grid_seeds < 1) {
        throw ConfigError("grid_seeds must be at least 1");
    }
}

double objective(const DensityMatrix &state, Functional functional, const SettingsPairs &pairs) {
    return std::abs(functional_value(functional, correlation_tensor(state, pairs)));
}

RefineOutcome refine(const DensityMatrix &state, Functional functional, const PhaseVector &start,
                     double initial_step, const OptimizationConfig &config) {
    RefineOutcome out{0, wrapped(start), {}};
    out.value = evaluate(state, functional, out.phases);
    double step = initial_step;
    int iteration = 0;
    while (step >= config.refine_tolerance && iteration < config.max_refine_iterations) {
        ++iteration;
        bool moved = false;
        for (int axis = 0; axis < 2 * kNumParties && !moved; ++axis) {
            for (double direction : {1.0, -1.0}) {
                PhaseVector trial = out.phases;
                trial[axis] = wrap(trial[axis] + direction * step);
                double v = evaluate(state, functional, trial);
                if (v > out.value) {
                    out.value = v;
                    out.phases = trial;
                    out.trace.push_back({iteration, v});
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) {
            step *= 0.5;
        }
    }
    return out;
}

OptimizationResult optimize(const DensityMatrix &state, Functional functional, const OptimizationConfig &config) {
    config.validate();

    const int cells = static_cast<int>(std::round(kTwoPi / config.grid_step));
    struct GridPoint {
        double value;
        int p;
        int q;
    };
    std::vector<GridPoint> grid;
    grid.reserve(static_cast<std::size_t>(cells) * cells);
    for (int p = 0; p < cells; ++p) {
        for (int q = 0; q < cells; ++q) {
            double phi = p * config.grid_step;
            double phi_prime = q * config.grid_step;
            PhaseVector x{phi, phi_prime, phi, phi_prime, phi, phi_prime};
            grid.push_back({evaluate(state, functional, x), p, q});
        }
    }
    std::stable_sort(grid.begin(), grid.end(), [](const GridPoint &a, const GridPoint &b) { return a.value > b.value; });

    std::vector<PhaseVector> starts;
    const int n_grid = std::min<int>(config.grid_seeds, static_cast<int>(grid.size()));
    for (int n = 0; n < n_grid; ++n) {
        double phi = grid[n].p * config.grid_step;
        double phi_prime = grid[n].q * config.grid_step;
        starts.push_back({phi, phi_prime, phi, phi_prime, phi, phi_prime});
    }
    std::mt19937_64 rng(config.seed);
    for (int r = 0; r < config.random_restarts; ++r) {
        PhaseVector x;
        for (auto &v : x) {
            // 53 random bits -> [0, 1); portable across standard libraries.
            v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;
        }
        starts.push_back(x);
    }

    std::vector<std::future<RefineOutcome>> jobs;
    jobs.reserve(starts.size());
    for (const auto &s : starts) {
        jobs.push_back(std::async(std::launch::async, [&state, functional, &config, s] {
            return refine(state, functional, s, config.grid_step / 2, config);
        }));
    }
    std::vector<RefineOutcome> runs;
    runs.reserve(jobs.size());
    for (auto &j : jobs) {
        runs.push_back(j.get());
    }

    double top = -1;
    for (const auto &r : runs) {
        top = std::max(top, r.value);
    }
    const RefineOutcome *chosen = nullptr;
    for (const auto &r : runs) {
        if (r.value >= top - config.refine_tolerance && (chosen == nullptr || r.phases < chosen->phases)) {
            chosen = &r;
        }
    }

    OptimizationResult result;
    result.best_value = chosen->value;
    result.best_settings = from_phases(chosen->phases);
    result.trace = chosen->trace;
    result.restarts_used = static_cast<int>(runs.size());
    return result;
}

std::vector<SettingsPairs> objective_symmetries(const SettingsPairs &settings) {
    const PhaseVector base = wrapped(to_phases(settings));
    std::vector<PhaseVector> seen;
    auto add = [&](const PhaseVector &p) {
        PhaseVector w = wrapped(p);
        for (const auto &s : seen) {
            if (settings_distance(from_phases(s), from_phases(w)) <= kAlgebraicTol) {
                return;
            }
        }
        seen.push_back(w);
    };
    add(base);

    // Quarter turn of one party's setting pair: (phi, phi') -> (phi', phi + pi),
    // i.e. A0 + iA1 -> -i(A0 + iA1). Both functionals are Im/Re parts of the
    // product over parties of (A0 + iA1), so an even total number of quarter
    // turns only flips the overall sign.
    auto quarter_turns = [](double phi, double phi_prime, int turns) {
        for (int t = 0; t < turns; ++t) {
            double next_prime = phi + std::numbers::pi;
            phi = phi_prime;
            phi_prime = next_prime;
        }
        return std::array<double, 2>{phi, phi_prime};
    };

    std::array<int, kNumParties> perm{0, 1, 2};
    do {
        for (int flip = 0; flip < 2; ++flip) {
            for (int code = 0; code < 64; ++code) {
                std::array<int, kNumParties> turns{(code >> 4) & 3, (code >> 2) & 3, code & 3};
                if ((turns[0] + turns[1] + turns[2]) % 2 != 0) {
                    continue;
                }
                PhaseVector p;
                for (int party = 0; party < kNumParties; ++party) {
                    double phi = base[2 * perm[party]];
                    double phi_prime = base[2 * perm[party] + 1];
                    if (flip) {
                        phi = -phi;
                        phi_prime = -phi_prime;
                    }
                    auto turned = quarter_turns(phi, phi_prime, turns[party]);
                    p[2 * party] = turned[0];
                    p[2 * party + 1] = turned[1];
                }
                add(p);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<SettingsPairs> out;
    out.reserve(seen.size());
    for (const auto &p : seen) {
        out.push_back(from_phases(p));
    }
    return out;
}

double settings_distance(const SettingsPairs &a, const SettingsPairs &b) {
    PhaseVector pa = to_phases(a), pb = to_phases(b);
    double d = 0;
    for (int n = 0; n < 2 * kNumParties; ++n) {
        d = std::max(d, circular_distance(pa[n], pb[n]));
    }
    return d;
}

double distance_modulo_symmetries(const SettingsPairs &candidate, const SettingsPairs &reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &s : objective_symmetries(candidate)) {
        best = std::min(best, settings_distance(s, reference));
    }
    return best;
}

}  // namespace tripartite
