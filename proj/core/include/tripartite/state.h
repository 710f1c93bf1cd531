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

#ifndef TRIPARTITE_STATE_H_
#define TRIPARTITE_STATE_H_

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "tripartite/errors.h"

namespace tripartite {

using Complex = std::complex<double>;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;

inline constexpr int kNumParties = 3;
inline constexpr int kDim = 8;

/// Tolerance for algebraic identities (norms, traces, Hermiticity).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for eigenvalue positivity.
inline constexpr double kEigenTol = 1e-10;

/// Canonical basis index of a three-letter H/V label, e.g. "HHV" -> 1.
///
/// Party order is a, b, c with a as the most significant bit; H = 0, V = 1.
/// Throws StateError for anything other than three H/V characters.
int basis_index(std::string_view label);

/// Inverse of basis_index.
std::string basis_label(int index);

/// Normalized pure three-qubit state in the canonical H/V product basis.
class PureState {
   public:
    /// Validates the squared norm is 1 within kAlgebraicTol.
    explicit PureState(const std::array<Complex, kDim> &amplitudes);

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    static PureState normalized(const std::array<Complex, kDim> &amplitudes);

    const std::array<Complex, kDim> &amplitudes() const { return amplitudes_; }
    Complex amplitude(int index) const;
    Complex amplitude(std::string_view label) const { return amplitude(basis_index(label)); }
    double squared_norm() const;

   private:
    std::array<Complex, kDim> amplitudes_;
};

/// 8x8 density matrix. Construction enforces Hermiticity, unit trace and
/// positive semidefiniteness; once built a DensityMatrix is always valid.
class DensityMatrix {
   public:
    explicit DensityMatrix(const Matrix8 &entries);

    const Matrix8 &matrix() const { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }
    Complex entry(std::string_view row, std::string_view col) const {
        return entries_(basis_index(row), basis_index(col));
    }
    double trace() const { return entries_.trace().real(); }

    /// Eigenvalues in ascending order.
    std::array<double, kDim> eigenvalues() const;

   private:
    Matrix8 entries_;
};

/// Weight of the ideal state in a white-noise mixture; 0 <= v <= 1.
class Visibility {
   public:
    explicit Visibility(double v);
    double value() const { return v_; }

   private:
    double v_;
};

enum class GhzBasis { kLinearHV, kCircularRL };

/// (|HHV> + |HVH> + |VHH>) / sqrt(3).
PureState make_w();

/// (|HHH> + |VVV>)/sqrt(2) or (|RRR> + |LLL>)/sqrt(2), the latter expanded in
/// H/V with |R> = (|H> - i|V>)/sqrt(2), |L> = (|H> + i|V>)/sqrt(2).
PureState make_ghz(GhzBasis basis);

/// Single basis ket, e.g. make_product("HHH").
PureState make_product(std::string_view label);

DensityMatrix pure_to_density(const PureState &s);

/// v * rho + (1 - v) * I/8.
DensityMatrix mix_with_white_noise(const DensityMatrix &rho, Visibility v);

DensityMatrix maximally_mixed();

}  // namespace tripartite

#endif  // TRIPARTITE_STATE_H_
