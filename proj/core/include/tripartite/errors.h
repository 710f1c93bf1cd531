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

#ifndef TRIPARTITE_ERRORS_H_
#define TRIPARTITE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tripartite {

/// A state failed validation: bad normalization, non-Hermitian, not PSD, or wrong shape.
struct StateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scalar argument fell outside its admissible range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An optimizer or sampler configuration is unusable.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace tripartite

#endif  // TRIPARTITE_ERRORS_H_
