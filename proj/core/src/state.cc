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

#include "tripartite/state.h"

#include <cmath>
#include <sstream>

namespace tripartite {

int basis_index(std::string_view label) {
    if (label.size() != kNumParties) {
        throw StateError("basis label must have three characters, got '" + std::string(label) + "'");
    }
    int index = 0;
    for (char ch : label) {
        index <<= 1;
        if (ch == 'V' || ch == 'v') {
            index |= 1;
        } else if (ch != 'H' && ch != 'h') {
            throw StateError("basis label characters must be H or V, got '" + std::string(label) + "'");
        }
    }
    return index;
}

std::string basis_label(int index) {
    if (index < 0 || index >= kDim) {
        throw RangeError("basis index out of range: " + std::to_string(index));
    }
    std::string out(kNumParties, 'H');
    for (int party = 0; party < kNumParties; ++party) {
        if ((index >> (kNumParties - 1 - party)) & 1) {
            out[party] = 'V';
        }
    }
    return out;
}

namespace {

double squared_norm_of(const std::array<Complex, kDim> &amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

PureState::PureState(const std::array<Complex, kDim> &amplitudes) : amplitudes_(amplitudes) {
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw StateError("pure state amplitudes must be finite");
        }
    }
    double n2 = squared_norm_of(amplitudes_);
    if (std::abs(n2 - 1.0) > kAlgebraicTol) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "pure state is not normalized: squared norm = " << n2;
        throw StateError(ss.str());
    }
}

PureState PureState::normalized(const std::array<Complex, kDim> &amplitudes) {
    double n2 = squared_norm_of(amplitudes);
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw StateError("cannot normalize a zero or non-finite amplitude vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    std::array<Complex, kDim> out;
    for (int i = 0; i < kDim; ++i) {
        out[i] = amplitudes[i] * scale;
    }
    return PureState(out);
}

Complex PureState::amplitude(int index) const {
    if (index < 0 || index >= kDim) {
        throw RangeError("basis index out of range: " + std::to_string(index));
    }
    return amplitudes_[index];
}

double PureState::squared_norm() const { return squared_norm_of(amplitudes_); }

DensityMatrix::DensityMatrix(const Matrix8 &entries) : entries_(entries) {
    if (!entries_.allFinite()) {
        throw StateError("density matrix entries must be finite");
    }
    for (int r = 0; r < kDim; ++r) {
        for (int c = r; c < kDim; ++c) {
            if (std::abs(entries_(r, c) - std::conj(entries_(c, r))) > kAlgebraicTol) {
                throw StateError("density matrix is not Hermitian at (" + std::to_string(r) + "," +
                                 std::to_string(c) + ")");
            }
        }
    }
    Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kAlgebraicTol) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "density matrix trace is " << tr.real() << " + " << tr.imag() << "i, expected 1";
        throw StateError(ss.str());
    }
    auto ev = eigenvalues();
    if (ev[0] < -kEigenTol) {
        std::ostringstream ss;
        ss << "density matrix is not positive semidefinite: smallest eigenvalue " << ev[0];
        throw StateError(ss.str());
    }
}

std::array<double, kDim> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix8> solver(entries_, Eigen::EigenvaluesOnly);
    std::array<double, kDim> out;
    for (int i = 0; i < kDim; ++i) {
        out[i] = solver.eigenvalues()(i);
    }
    return out;
}

Visibility::Visibility(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw RangeError("visibility must lie in [0, 1], got " + std::to_string(v));
    }
}

PureState make_w() {
    const double a = 1.0 / std::sqrt(3.0);
    std::array<Complex, kDim> amps{};
    amps[basis_index("HHV")] = a;
    amps[basis_index("HVH")] = a;
    amps[basis_index("VHH")] = a;
    return PureState(amps);
}

PureState make_ghz(GhzBasis basis) {
    std::array<Complex, kDim> amps{};
    if (basis == GhzBasis::kLinearHV) {
        amps[0] = amps[kDim - 1] = 1.0 / std::sqrt(2.0);
        return PureState(amps);
    }
    // <H|R> = 1/sqrt2, <V|R> = -i/sqrt2; <H|L> = 1/sqrt2, <V|L> = +i/sqrt2.
    const double s = 1.0 / std::sqrt(2.0);
    const std::array<Complex, 2> r{s, Complex(0, -s)};
    const std::array<Complex, 2> l{s, Complex(0, s)};
    for (int idx = 0; idx < kDim; ++idx) {
        int a = (idx >> 2) & 1, b = (idx >> 1) & 1, c = idx & 1;
        amps[idx] = (r[a] * r[b] * r[c] + l[a] * l[b] * l[c]) * s;
    }
    return PureState(amps);
}

PureState make_product(std::string_view label) {
    std::array<Complex, kDim> amps{};
    amps[basis_index(label)] = 1.0;
    return PureState(amps);
}

DensityMatrix pure_to_density(const PureState &s) {
    Eigen::Matrix<Complex, kDim, 1> ket;
    for (int i = 0; i < kDim; ++i) {
        ket(i) = s.amplitudes()[i];
    }
    Matrix8 rho = ket * ket.adjoint();
    return DensityMatrix(rho);
}

DensityMatrix mix_with_white_noise(const DensityMatrix &rho, Visibility v) {
    Matrix8 out = v.value() * rho.matrix();
    const double noise = (1.0 - v.value()) / kDim;
    for (int i = 0; i < kDim; ++i) {
        out(i, i) += noise;
    }
    return DensityMatrix(out);
}

DensityMatrix maximally_mixed() { return DensityMatrix(Matrix8::Identity() / static_cast<double>(kDim)); }

}  // namespace tripartite
