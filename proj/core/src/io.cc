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

#include "tripartite/io.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace tripartite::io {

namespace {

const char *const kPartyNames[kNumParties] = {"a", "b", "c"};

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

bool is_complex_pair(const json &j) {
    return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

Complex parse_complex(const json &j) {
    if (!is_complex_pair(j)) {
        throw StateError("expected a [re, im] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::array<Complex, kDim> parse_amplitudes(const json &j) {
    if (!j.is_array() || j.size() != kDim) {
        throw StateError("pure state must be a list of 8 [re, im] pairs");
    }
    std::array<Complex, kDim> amps;
    for (int i = 0; i < kDim; ++i) {
        amps[i] = parse_complex(j[i]);
    }
    return amps;
}

json setting_json(const SettingsPair &p, int party) {
    return {{"party", kPartyNames[party]},
            {"phi_deg", p.phi.degrees()},
            {"phi_prime_deg", p.phi_prime.degrees()},
            {"phi_rad", p.phi.radians()},
            {"phi_prime_rad", p.phi_prime.radians()}};
}

// Non-finite doubles have no JSON literal; emit null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

json to_json(const PureState &s) {
    json out = json::array();
    for (const auto &a : s.amplitudes()) {
        out.push_back(complex_pair(a));
    }
    return out;
}

json to_json(const DensityMatrix &rho) {
    json out = json::array();
    for (int r = 0; r < kDim; ++r) {
        json row = json::array();
        for (int c = 0; c < kDim; ++c) {
            row.push_back(complex_pair(rho(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

PureState pure_from_json(const json &j) { return PureState(parse_amplitudes(j)); }

DensityMatrix density_from_json(const json &j) {
    if (!j.is_array() || j.size() != kDim) {
        throw StateError("state must be a list of 8 amplitudes or an 8x8 matrix");
    }
    if (is_complex_pair(j[0])) {
        return pure_to_density(pure_from_json(j));
    }
    Matrix8 m;
    for (int r = 0; r < kDim; ++r) {
        if (!j[r].is_array() || j[r].size() != kDim) {
            throw StateError("density matrix rows must hold 8 [re, im] pairs");
        }
        for (int c = 0; c < kDim; ++c) {
            m(r, c) = parse_complex(j[r][c]);
        }
    }
    return DensityMatrix(m);
}

json to_json(const OutcomeDistribution &d) {
    json out = json::object();
    for (int o = 0; o < kDim; ++o) {
        out[OutcomeDistribution::label(o)] = d[o];
    }
    return out;
}

json to_json(const SettingsPairs &pairs) {
    json out = json::array();
    for (int party = 0; party < kNumParties; ++party) {
        out.push_back(setting_json(pairs[party], party));
    }
    return out;
}

json to_json(const CorrelationTensor &t) {
    json out = json::array();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out.push_back({{"i", i}, {"j", j}, {"k", k}, {"E", t(i, j, k)}});
            }
        }
    }
    return out;
}

std::string to_csv(const CorrelationTensor &t) {
    std::ostringstream ss;
    ss << "i,j,k,E\n";
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                ss << i << ',' << j << ',' << k << ',' << format_double(t(i, j, k)) << '\n';
            }
        }
    }
    return ss.str();
}

json to_json(const InequalityReport &r) {
    return {{"functional", functional_name(r.functional)},
            {"value", r.value},
            {"abs_value", r.abs_value()},
            {"bound", r.bound},
            {"algebraic_max", r.algebraic_max},
            {"violated", r.violated},
            {"classification", classification_name(r.classification)},
            {"degenerate", r.degenerate}};
}

json to_json(const EstimatedReport &r) {
    json out = to_json(r.report);
    out["std_error"] = r.std_error;
    out["z_score"] = number_or_null(r.z_score);
    return out;
}

json to_json(const Strategy &s) {
    if (const auto *local = std::get_if<LocalStrategy>(&s)) {
        json table = json::array();
        for (int party = 0; party < kNumParties; ++party) {
            for (int choice = 0; choice < 2; ++choice) {
                table.push_back(
                    {{"party", kPartyNames[party]}, {"input", choice}, {"output", local->outputs[party][choice]}});
            }
        }
        return {{"type", "local"}, {"index", local->index()}, {"table", table}};
    }
    const auto &hybrid = std::get<HybridStrategy>(s);
    auto parties = partition_parties(hybrid.partition);
    json pair_table = json::array();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const auto &o = hybrid.pair_response[2 * x + y];
            pair_table.push_back({{"inputs", {x, y}}, {"outputs", {o[0], o[1]}}});
        }
    }
    json solo_table = json::array();
    for (int x = 0; x < 2; ++x) {
        solo_table.push_back({{"input", x}, {"output", hybrid.solo_response[x]}});
    }
    return {{"type", "hybrid"},
            {"partition", partition_name(hybrid.partition)},
            {"index", hybrid.index()},
            {"pair", {kPartyNames[parties[0]], kPartyNames[parties[1]]}},
            {"solo", kPartyNames[parties[2]]},
            {"pair_table", pair_table},
            {"solo_table", solo_table}};
}

json to_json(const LhvMaxResult &r) {
    return {{"functional", functional_name(r.functional)},
            {"model", model_name(r.model)},
            {"max", r.max_value},
            {"witness_value", r.witness_value},
            {"strategies_enumerated", r.strategies_enumerated},
            {"witness", to_json(r.witness)}};
}

json to_json(const OptimizationResult &r, Functional functional, bool include_trace) {
    json out = {{"functional", functional_name(functional)},
                {"value", r.best_value},
                {"settings", to_json(r.best_settings)},
                {"restarts_used", r.restarts_used}};
    if (include_trace) {
        json trace = json::array();
        for (const auto &p : r.trace) {
            trace.push_back({{"iteration", p.iteration}, {"value", p.value}});
        }
        out["trace"] = trace;
    }
    return out;
}

std::string trace_to_csv(const OptimizationResult &r) {
    std::ostringstream ss;
    ss << "iteration,value\n";
    for (const auto &p : r.trace) {
        ss << p.iteration << ',' << format_double(p.value) << '\n';
    }
    return ss.str();
}

json to_json(const CountTable &c) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                json counts = json::object();
                for (int o = 0; o < kDim; ++o) {
                    counts[OutcomeDistribution::label(o)] = c.counts[CorrelationTensor::index(i, j, k)][o];
                }
                rows.push_back({{"i", i}, {"j", j}, {"k", k}, {"counts", counts}});
            }
        }
    }
    return {{"shots_per_setting", c.shots_per_setting}, {"settings", rows}};
}

CountTable counts_from_json(const json &j) {
    CountTable c;
    try {
        c.shots_per_setting = j.at("shots_per_setting").get<std::uint64_t>();
        const auto &rows = j.at("settings");
        if (!rows.is_array() || rows.size() != kDim) {
            throw RangeError("count table needs 8 setting rows");
        }
        for (const auto &row : rows) {
            int idx = CorrelationTensor::index(row.at("i").get<int>(), row.at("j").get<int>(), row.at("k").get<int>());
            if (idx < 0 || idx >= kDim) {
                throw RangeError("setting choice index out of range");
            }
            for (int o = 0; o < kDim; ++o) {
                c.counts[idx][o] = row.at("counts").at(OutcomeDistribution::label(o)).get<std::uint64_t>();
            }
        }
    } catch (const json::exception &e) {
        throw RangeError(std::string("malformed count table: ") + e.what());
    }
    c.validate();
    return c;
}

std::string to_csv(const CountTable &c) {
    std::ostringstream ss;
    ss << "i,j,k,outcome,count\n";
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int o = 0; o < kDim; ++o) {
                    ss << i << ',' << j << ',' << k << ',' << OutcomeDistribution::label(o) << ','
                       << c.counts[CorrelationTensor::index(i, j, k)][o] << '\n';
                }
            }
        }
    }
    return ss.str();
}

}  // namespace tripartite::io
