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

#ifndef TRIPARTITE_IO_H_
#define TRIPARTITE_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "tripartite/lhv.h"
#include "tripartite/optimizer.h"
#include "tripartite/shots.h"
#include "tripartite/state.h"

// JSON and CSV encodings for every value the library hands to the outside
// world. Complex numbers are [re, im] pairs in canonical basis order.

namespace tripartite::io {

using nlohmann::json;

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

json to_json(const PureState &s);
json to_json(const DensityMatrix &rho);
/// Accepts a list of 8 [re, im] pairs (pure) or an 8x8 nested list of pairs
/// (density matrix). Throws StateError on malformed or invalid input.
DensityMatrix density_from_json(const json &j);
PureState pure_from_json(const json &j);

json to_json(const OutcomeDistribution &d);
json to_json(const SettingsPairs &pairs);
json to_json(const CorrelationTensor &t);
/// Header "i,j,k,E", then 8 rows.
std::string to_csv(const CorrelationTensor &t);

json to_json(const InequalityReport &r);
json to_json(const EstimatedReport &r);

json to_json(const Strategy &s);
json to_json(const LhvMaxResult &r);

/// include_trace adds the accepted-move list.
json to_json(const OptimizationResult &r, Functional functional, bool include_trace = false);
/// Header "iteration,value".
std::string trace_to_csv(const OptimizationResult &r);

json to_json(const CountTable &c);
CountTable counts_from_json(const json &j);
/// Header "i,j,k,outcome,count"; outcome as "+-+".
std::string to_csv(const CountTable &c);

}  // namespace tripartite::io

#endif  // TRIPARTITE_IO_H_
